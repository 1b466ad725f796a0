#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cotilt {

/// A prime ideal in one of the supported spectrum models.
///
/// The representation is canonical: integer primes are positive, polynomial
/// generators are monic, and synthetic primes are node indices. Equality is
/// therefore syntactic. A PrimeIdeal does not know its ring; membership is
/// checked by Ring::check_prime.
class PrimeIdeal {
 public:
  enum class Kind : std::uint8_t { Zero, Integer, Polynomial, Node };

  PrimeIdeal() = default;

  static PrimeIdeal zero() { return PrimeIdeal{}; }
  static PrimeIdeal integer(std::uint64_t p) { return PrimeIdeal(Kind::Integer, p, {}); }
  /// Monic coefficient vector, lowest degree first.
  static PrimeIdeal polynomial(std::vector<std::uint64_t> coefficients) {
    const std::uint64_t degree = coefficients.empty() ? 0 : coefficients.size() - 1;
    return PrimeIdeal(Kind::Polynomial, degree, std::move(coefficients));
  }
  static PrimeIdeal node(std::size_t id) { return PrimeIdeal(Kind::Node, id, {}); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  std::uint64_t integer_value() const { return value_; }
  std::size_t node_id() const { return static_cast<std::size_t>(value_); }
  std::uint64_t degree() const { return value_; }
  const std::vector<std::uint64_t>& coefficients() const { return coefficients_; }

  // Ordered by kind, then integer value / degree / node id, then coefficients.
  friend auto operator<=>(const PrimeIdeal&, const PrimeIdeal&) = default;
  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;

 private:
  PrimeIdeal(Kind kind, std::uint64_t value, std::vector<std::uint64_t> coefficients)
      : kind_(kind), value_(value), coefficients_(std::move(coefficients)) {}

  Kind kind_ = Kind::Zero;
  std::uint64_t value_ = 0;
  std::vector<std::uint64_t> coefficients_;
};

}  // namespace cotilt
