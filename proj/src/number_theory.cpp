#include "cotilt/number_theory.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cotilt/error.hpp"

namespace cotilt::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for all 64-bit inputs.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  if (n == 0) throw InputError("cannot factor 0");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> result;
  for (std::uint64_t p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  return result;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t candidate = n + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (!is_prime(q)) throw InputError("field characteristic " + std::to_string(q) + " is not prime");
}

std::uint64_t PrimeField::inv(std::uint64_t a) const { return nt::pow_mod(a, q_ - 2, q_); }

Poly PrimeField::normalize(Poly f) const {
  for (auto& c : f) c %= q_;
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly PrimeField::sub(const Poly& f, const Poly& g) const {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + q_ - g[i]) % q_;
  return normalize(std::move(r));
}

Poly PrimeField::mul(const Poly& f, const Poly& g) const {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[i + j] = (r[i + j] + nt::mul_mod(f[i], g[j], q_)) % q_;
    }
  }
  return normalize(std::move(r));
}

Poly PrimeField::rem(Poly f, const Poly& g) const {
  if (g.empty()) throw InputError("polynomial division by zero");
  const std::uint64_t lead_inv = inv(g.back());
  while (f.size() >= g.size()) {
    const std::uint64_t factor = nt::mul_mod(f.back(), lead_inv, q_);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t j = 0; j < g.size(); ++j) {
      f[shift + j] = (f[shift + j] + q_ - nt::mul_mod(factor, g[j], q_)) % q_;
    }
    f = normalize(std::move(f));
  }
  return f;
}

Poly PrimeField::gcd(Poly f, Poly g) const {
  while (!g.empty()) {
    Poly r = rem(std::move(f), g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(std::move(f));
}

Poly PrimeField::make_monic(Poly f) const {
  if (f.empty()) return f;
  const std::uint64_t lead_inv = inv(f.back());
  for (auto& c : f) c = nt::mul_mod(c, lead_inv, q_);
  return f;
}

Poly PrimeField::mul_mod(const Poly& f, const Poly& g, const Poly& m) const {
  return rem(mul(f, g), m);
}

Poly PrimeField::pow_mod(Poly base, std::uint64_t exp, const Poly& m) const {
  Poly result = rem(Poly{1}, m);
  base = rem(std::move(base), m);
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool PrimeField::is_irreducible(const Poly& f) const {
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  const Poly x{0, 1};
  // frobenius[k] = x^(q^k) mod f
  std::vector<Poly> frobenius{rem(x, f)};
  for (std::size_t k = 1; k <= degree; ++k) {
    frobenius.push_back(pow_mod(frobenius.back(), q_, f));
  }
  if (!sub(frobenius[degree], x).empty()) return false;
  for (const auto& [r, unused] : factor(degree)) {
    const Poly h = sub(frobenius[degree / r], x);
    if (gcd(f, h) != Poly{1}) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string format_poly(const Poly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const std::uint64_t c = f[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

Poly parse_poly(std::string_view text, std::uint64_t q) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw InputError("empty polynomial");
  auto fail = [&]() -> InputError { return InputError("malformed polynomial '" + std::string(text) + "'"); };
  auto read_number = [&](std::size_t& pos) {
    std::uint64_t v = 0;
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = (v * 10 + static_cast<std::uint64_t>(s[pos] - '0'));
      if (v > (1ULL << 60)) throw fail();
      ++pos;
    }
    if (pos == start) throw fail();
    return v;
  };
  Poly coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    std::uint64_t coef = 1;
    bool has_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = read_number(pos) % q;
      has_coef = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t exponent = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = read_number(pos);
        if (exponent > 4096) throw fail();
      }
    } else if (!has_coef) {
      throw fail();
    }
    if (negative) coef = (q - coef % q) % q;
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] = (coeffs[exponent] + coef) % q;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

void next_monic(Poly& f, std::uint64_t q) {
  // Least significant position is the one just below the leading 1.
  const std::size_t degree = f.size() - 1;
  for (std::size_t i = degree; i-- > 0;) {
    if (++f[i] < q) return;
    f[i] = 0;
  }
  f.assign(degree + 2, 0);
  f.back() = 1;
}

}  // namespace cotilt::nt
