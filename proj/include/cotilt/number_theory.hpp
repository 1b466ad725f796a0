#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cotilt::nt {

bool is_prime(std::uint64_t n);

/// Prime factorization, primes ascending, as (prime, exponent) pairs.
/// factor(1) is empty; factor(0) throws.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Polynomials over F_q (q prime) are coefficient vectors, lowest degree
// first, with no trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<std::uint64_t>;

/// Polynomial arithmetic over the prime field F_q.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }

  Poly normalize(Poly f) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly rem(Poly f, const Poly& g) const;
  Poly gcd(Poly f, Poly g) const;
  Poly make_monic(Poly f) const;
  Poly mul_mod(const Poly& f, const Poly& g, const Poly& m) const;
  Poly pow_mod(Poly base, std::uint64_t exp, const Poly& m) const;

  /// Rabin's test; f must be monic of degree >= 1.
  bool is_irreducible(const Poly& f) const;

 private:
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t q_;
};

/// Renders a polynomial as e.g. "x^2+2x+1".
std::string format_poly(const Poly& f);

/// Parses "x^3+2*x+1"; coefficients are reduced mod q, "-" negates.
/// Throws InputError on malformed text.
Poly parse_poly(std::string_view text, std::uint64_t q);

/// Advances f to the next monic polynomial of the same or the next degree,
/// in the order (degree, coefficients compared from the constant term up).
void next_monic(Poly& f, std::uint64_t q);

}  // namespace cotilt::nt
