#include "cotilt/zhom/modules.hpp"

#include <algorithm>
#include <map>

#include "cotilt/error.hpp"
#include "cotilt/number_theory.hpp"
#include "cotilt/zhom/smith.hpp"

namespace cotilt::zhom {

namespace {

Integer power(std::uint64_t p, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p()) throw UnsupportedError("integer " + v.get_str() + " exceeds 64 bits");
  return v.get_ui();
}

std::vector<PrimaryComponent> canonical(std::vector<PrimaryComponent> parts) {
  std::map<std::pair<std::uint64_t, unsigned>, unsigned> merged;
  for (const auto& c : parts) {
    if (c.multiplicity == 0) continue;
    if (c.exponent == 0) throw InputError("torsion exponent must be positive");
    if (!nt::is_prime(c.prime)) throw InputError("torsion prime " + std::to_string(c.prime) + " is not prime");
    merged[{c.prime, c.exponent}] += c.multiplicity;
  }
  std::vector<PrimaryComponent> out;
  for (const auto& [key, mult] : merged) out.push_back({key.first, key.second, mult});
  return out;
}

std::string cyclic_name(const Integer& order, unsigned mult) {
  std::string s = "Z/" + order.get_str();
  if (mult == 1) return s;
  return "(" + s + ")^" + std::to_string(mult);
}

}  // namespace

FgZModule::FgZModule(unsigned rank, std::vector<PrimaryComponent> torsion)
    : rank_(rank), torsion_(canonical(std::move(torsion))) {}

FgZModule FgZModule::cyclic(const Integer& n) {
  if (n < 0) return cyclic(-n);
  if (n == 0) return free(1);
  std::vector<PrimaryComponent> parts;
  for (const auto& [p, e] : nt::factor(to_u64(n))) parts.push_back({p, e, 1});
  return FgZModule(0, std::move(parts));
}

FgZModule FgZModule::from_invariant_factors(unsigned rank, std::span<const Integer> factors) {
  FgZModule m = free(rank);
  for (const auto& d : factors) m = m + cyclic(d);
  return m;
}

FgZModule FgZModule::primary_part(std::uint64_t p) const {
  std::vector<PrimaryComponent> parts;
  for (const auto& c : torsion_) {
    if (c.prime == p) parts.push_back(c);
  }
  return FgZModule(0, std::move(parts));
}

Integer FgZModule::torsion_order() const {
  Integer order = 1;
  for (const auto& c : torsion_) {
    for (unsigned k = 0; k < c.multiplicity; ++k) order *= power(c.prime, c.exponent);
  }
  return order;
}

std::vector<std::uint64_t> FgZModule::support() const {
  std::vector<std::uint64_t> primes;
  for (const auto& c : torsion_) {
    if (primes.empty() || primes.back() != c.prime) primes.push_back(c.prime);
  }
  return primes;
}

std::vector<Integer> FgZModule::elementary_divisors() const {
  std::vector<Integer> out;
  for (const auto& c : torsion_) {
    for (unsigned k = 0; k < c.multiplicity; ++k) out.push_back(power(c.prime, c.exponent));
  }
  return out;
}

std::vector<Integer> FgZModule::invariant_factors() const {
  // The largest factor takes the top power of every prime, and so on down.
  std::map<std::uint64_t, std::vector<unsigned>> exponents;
  for (const auto& c : torsion_) {
    for (unsigned k = 0; k < c.multiplicity; ++k) exponents[c.prime].push_back(c.exponent);
  }
  std::size_t count = 0;
  for (auto& [p, list] : exponents) {
    std::sort(list.rbegin(), list.rend());
    count = std::max(count, list.size());
  }
  std::vector<Integer> factors(count, Integer(1));
  for (const auto& [p, list] : exponents) {
    for (std::size_t k = 0; k < list.size(); ++k) factors[count - 1 - k] *= power(p, list[k]);
  }
  return factors;
}

std::string FgZModule::format() const {
  if (is_zero()) return "0";
  std::string out;
  if (rank_ > 0) out = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  for (const auto& c : torsion_) {
    if (!out.empty()) out += " + ";
    out += cyclic_name(power(c.prime, c.exponent), c.multiplicity);
  }
  return out;
}

FgZModule operator+(const FgZModule& a, const FgZModule& b) {
  std::vector<PrimaryComponent> parts = a.torsion_;
  parts.insert(parts.end(), b.torsion_.begin(), b.torsion_.end());
  return FgZModule(a.rank_ + b.rank_, std::move(parts));
}

// ---------------------------------------------------------------------------

LocalizedModule::LocalizedModule(std::uint64_t prime, unsigned rank,
                                 std::vector<std::pair<unsigned, unsigned>> torsion)
    : prime_(prime), rank_(rank) {
  if (!nt::is_prime(prime)) throw InputError("localization prime " + std::to_string(prime) + " is not prime");
  std::map<unsigned, unsigned> merged;
  for (const auto& [e, mult] : torsion) {
    if (mult == 0) continue;
    if (e == 0) throw InputError("torsion exponent must be positive");
    merged[e] += mult;
  }
  torsion_.assign(merged.begin(), merged.end());
}

LocalizedModule LocalizedModule::localize(const FgZModule& m, std::uint64_t prime) {
  std::vector<std::pair<unsigned, unsigned>> parts;
  for (const auto& c : m.torsion()) {
    if (c.prime == prime) parts.emplace_back(c.exponent, c.multiplicity);
  }
  return LocalizedModule(prime, m.rank(), std::move(parts));
}

FgZModule LocalizedModule::lift() const {
  std::vector<PrimaryComponent> parts;
  for (const auto& [e, mult] : torsion_) parts.push_back({prime_, e, mult});
  return FgZModule(rank_, std::move(parts));
}

std::string LocalizedModule::format() const {
  if (is_zero()) return "0";
  std::string out;
  const std::string base = "Z_(" + std::to_string(prime_) + ")";
  if (rank_ > 0) out = rank_ == 1 ? base : base + "^" + std::to_string(rank_);
  for (const auto& [e, mult] : torsion_) {
    if (!out.empty()) out += " + ";
    out += cyclic_name(power(prime_, e), mult);
  }
  return out;
}

std::string MatlisModule::format() const {
  std::string out;
  if (divisible_rank > 0) {
    out = divisible_rank == 1 ? "Q/Z" : "(Q/Z)^" + std::to_string(divisible_rank);
  }
  if (!finite.is_zero()) {
    if (!out.empty()) out += " + ";
    out += finite.format();
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

FgZModule module_from_cokernel(const IntMatrix& relations) {
  const auto diagonal = smith_diagonal(relations);
  unsigned rank = static_cast<unsigned>(relations.rows());
  FgZModule m;
  for (const auto& d : diagonal) {
    if (d == 0) continue;
    --rank;
    m = m + FgZModule::cyclic(d);
  }
  return m + FgZModule::free(rank);
}

IntMatrix presentation_matrix(const FgZModule& m) {
  const auto divisors = m.elementary_divisors();
  const std::size_t n = m.rank() + divisors.size();
  IntMatrix p(n, divisors.size());
  for (std::size_t k = 0; k < divisors.size(); ++k) p(m.rank() + k, k) = divisors[k];
  return p;
}

LocalizedModule localize_module(const FgZModule& m, std::uint64_t prime) {
  if (!nt::is_prime(prime)) throw InputError("localization prime " + std::to_string(prime) + " is not prime");
  return LocalizedModule::localize(m, prime);
}

FgZModule colocalize_finite(const FgZModule& m, std::uint64_t prime) {
  if (!nt::is_prime(prime)) throw InputError("colocalization prime " + std::to_string(prime) + " is not prime");
  if (!m.is_finite()) {
    throw UnsupportedError("colocalization is only computed for finite modules, got " + m.format());
  }
  return m.primary_part(prime);
}

MatlisModule matlis_dual(const FgZModule& m) { return {m.rank(), m.torsion_part()}; }

LocalizedModule matlis_dual(const LocalizedModule& m) {
  if (m.rank() > 0) {
    throw UnsupportedError("the dual of " + m.format() + " is not finitely generated");
  }
  return m;
}

}  // namespace cotilt::zhom
