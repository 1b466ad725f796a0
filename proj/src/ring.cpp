#include "cotilt/ring.hpp"

#include <algorithm>
#include <cctype>

#include "cotilt/error.hpp"
#include "cotilt/number_theory.hpp"

namespace cotilt {

Ring Ring::integers() { return Ring{}; }

Ring Ring::poly_over_prime_field(std::uint64_t q) {
  if (!nt::is_prime(q)) throw InputError("F_q[x] needs a prime q, got " + std::to_string(q));
  Ring r;
  r.kind_ = RingKind::PolyOverPrimeField;
  r.parameter_ = q;
  return r;
}

Ring Ring::integer_quotient(std::uint64_t n) {
  if (n < 2) throw InputError("Z/n needs n >= 2, got " + std::to_string(n));
  Ring r;
  r.kind_ = RingKind::IntegerQuotient;
  r.parameter_ = n;
  for (const auto& [p, e] : nt::factor(n)) r.quotient_primes_.push_back(p);
  return r;
}

Ring Ring::synthetic(SpectrumPoset spectrum) {
  Ring r;
  r.kind_ = RingKind::Synthetic;
  r.poset_ = std::make_shared<const SpectrumPoset>(std::move(spectrum));
  return r;
}

const SpectrumPoset& Ring::poset() const {
  if (!poset_) throw InputError("ring " + describe() + " has no synthetic spectrum");
  return *poset_;
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.kind_ != b.kind_ || a.parameter_ != b.parameter_) return false;
  if (a.kind_ != RingKind::Synthetic) return true;
  return a.poset_ == b.poset_ || *a.poset_ == *b.poset_;
}

void Ring::check_prime(const PrimeIdeal& p) const {
  auto foreign = [&]() { return InputError("prime " + format(p) + " does not belong to " + describe()); };
  switch (kind_) {
    case RingKind::Integers:
      if (p.is_zero()) return;
      if (p.kind() != PrimeIdeal::Kind::Integer || !nt::is_prime(p.integer_value())) throw foreign();
      return;
    case RingKind::PolyOverPrimeField: {
      if (p.is_zero()) return;
      if (p.kind() != PrimeIdeal::Kind::Polynomial) throw foreign();
      const auto& c = p.coefficients();
      if (c.size() < 2 || c.back() != 1) throw foreign();
      for (auto v : c) {
        if (v >= parameter_) throw foreign();
      }
      if (!nt::PrimeField(parameter_).is_irreducible(c)) throw foreign();
      return;
    }
    case RingKind::IntegerQuotient:
      if (p.kind() != PrimeIdeal::Kind::Integer ||
          !std::binary_search(quotient_primes_.begin(), quotient_primes_.end(), p.integer_value())) {
        throw foreign();
      }
      return;
    case RingKind::Synthetic:
      if (p.kind() != PrimeIdeal::Kind::Node || p.node_id() >= poset_->size()) throw foreign();
      return;
  }
}

bool Ring::is_maximal(const PrimeIdeal& p) const {
  check_prime(p);
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::PolyOverPrimeField:
      return !p.is_zero();
    case RingKind::IntegerQuotient:
      return true;
    case RingKind::Synthetic:
      return (poset_->maximal() >> p.node_id()) & 1U;
  }
  return false;
}

void Ring::check_maximal(const PrimeIdeal& m) const {
  if (!is_maximal(m)) throw InputError("prime " + format(m) + " is not maximal in " + describe());
}

std::vector<PrimeIdeal> Ring::spectrum() const {
  std::vector<PrimeIdeal> out;
  switch (kind_) {
    case RingKind::IntegerQuotient:
      for (auto p : quotient_primes_) out.push_back(PrimeIdeal::integer(p));
      return out;
    case RingKind::Synthetic:
      for (std::size_t i = 0; i < poset_->size(); ++i) out.push_back(PrimeIdeal::node(i));
      return out;
    default:
      throw UnsupportedError("the spectrum of " + describe() + " is infinite");
  }
}

std::vector<PrimeIdeal> Ring::maximal_ideals() const {
  if (kind_ == RingKind::Synthetic) {
    std::vector<PrimeIdeal> out;
    for (std::size_t i = 0; i < poset_->size(); ++i) {
      if ((poset_->maximal() >> i) & 1U) out.push_back(PrimeIdeal::node(i));
    }
    return out;
  }
  return spectrum();
}

namespace {

PrimeIdeal next_maximal(RingKind kind, std::uint64_t q, const PrimeIdeal* current) {
  if (kind == RingKind::Integers) {
    return PrimeIdeal::integer(nt::next_prime(current ? current->integer_value() : 1));
  }
  const nt::PrimeField field(q);
  nt::Poly f = current ? current->coefficients() : nt::Poly{0, 1};
  if (current) nt::next_monic(f, q);
  while (!field.is_irreducible(f)) nt::next_monic(f, q);
  return PrimeIdeal::polynomial(std::move(f));
}

}  // namespace

PrimeIdeal Ring::maximal_outside(std::span<const PrimeIdeal> excluded) const {
  if (!is_dimension_one()) throw UnsupportedError("maximal_outside needs a dimension-one ring");
  PrimeIdeal candidate = next_maximal(kind_, parameter_, nullptr);
  while (std::find(excluded.begin(), excluded.end(), candidate) != excluded.end()) {
    candidate = next_maximal(kind_, parameter_, &candidate);
  }
  return candidate;
}

std::vector<PrimeIdeal> Ring::first_maximals(std::size_t count) const {
  if (!is_dimension_one()) throw UnsupportedError("first_maximals needs a dimension-one ring");
  std::vector<PrimeIdeal> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(next_maximal(kind_, parameter_, out.empty() ? nullptr : &out.back()));
  }
  return out;
}

std::string Ring::format(const PrimeIdeal& p) const {
  switch (p.kind()) {
    case PrimeIdeal::Kind::Zero:
      return "(0)";
    case PrimeIdeal::Kind::Integer:
      return "(" + std::to_string(p.integer_value()) + ")";
    case PrimeIdeal::Kind::Polynomial:
      return "(" + nt::format_poly(p.coefficients()) + ")";
    case PrimeIdeal::Kind::Node:
      if (poset_ && p.node_id() < poset_->size()) return poset_->label(p.node_id());
      return "#" + std::to_string(p.node_id());
  }
  return "?";
}

PrimeIdeal Ring::parse_prime(std::string_view text) const {
  std::string s(text);
  if (kind_ == RingKind::Synthetic) {
    if (auto idx = poset_->index_of(s)) return PrimeIdeal::node(*idx);
    throw InputError("unknown synthetic prime '" + s + "'");
  }
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s == "0") {
    PrimeIdeal zero = PrimeIdeal::zero();
    check_prime(zero);
    return zero;
  }
  PrimeIdeal result;
  if (kind_ == RingKind::PolyOverPrimeField) {
    nt::Poly f = nt::parse_poly(s, parameter_);
    if (f.empty() || f.back() != 1) throw InputError("polynomial prime '" + std::string(text) + "' must be monic");
    result = PrimeIdeal::polynomial(std::move(f));
  } else {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        s.size() > 19) {
      throw InputError("malformed integer prime '" + std::string(text) + "'");
    }
    result = PrimeIdeal::integer(std::stoull(s));
  }
  check_prime(result);
  return result;
}

std::string Ring::describe() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::PolyOverPrimeField:
      return "F_" + std::to_string(parameter_) + "[x]";
    case RingKind::IntegerQuotient:
      return "Z/" + std::to_string(parameter_);
    case RingKind::Synthetic:
      return "synthetic(" + std::to_string(poset_->size()) + " primes)";
  }
  return "?";
}

}  // namespace cotilt
