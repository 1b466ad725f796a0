#pragma once

// Brute-force arithmetic on small finite abelian groups, written without the
// library's structure theory so it can serve as an independent oracle.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace testsupport {

using Tuple = std::vector<std::uint64_t>;

/// Every element of ⊕ Z/moduli[k].
inline std::vector<Tuple> elements_of(const std::vector<std::uint64_t>& moduli) {
  std::vector<Tuple> out{Tuple(moduli.size(), 0)};
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (std::uint64_t v = 0; v < moduli[k]; ++v) {
        Tuple u = t;
        u[k] = v;
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Tuple scale(const Tuple& x, std::uint64_t k, const std::vector<std::uint64_t>& moduli) {
  Tuple y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] * k) % moduli[i];
  return y;
}

inline bool is_zero(const Tuple& x) {
  for (auto v : x) {
    if (v != 0) return false;
  }
  return true;
}

/// Primary invariants {(p, e) -> multiplicity} of a finite abelian group
/// given as a list of elements with a "multiply by k" operation.
template <typename T>
std::map<std::pair<std::uint64_t, unsigned>, unsigned> invariants_by_counting(
    const std::vector<T>& group, const std::function<bool(const T&, std::uint64_t)>& killed_by) {
  std::map<std::pair<std::uint64_t, unsigned>, unsigned> result;
  std::uint64_t n = group.size();
  for (std::uint64_t p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    std::vector<unsigned> logs{0};
    std::uint64_t pk = 1;
    while (logs.back() < e) {
      pk *= p;
      std::uint64_t count = 0;
      for (const auto& x : group) count += killed_by(x, pk) ? 1 : 0;
      unsigned log = 0;
      while (count > 1) {
        count /= p;
        ++log;
      }
      logs.push_back(log);
    }
    for (std::size_t k = 1; k < logs.size(); ++k) {
      const unsigned at_least_k = logs[k] - logs[k - 1];
      const unsigned at_least_next = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      if (at_least_k > at_least_next) result[{p, static_cast<unsigned>(k)}] = at_least_k - at_least_next;
    }
  }
  return result;
}

/// Hom(⊕Z/a, ⊕Z/b) enumerated as generator images, returned as primary
/// invariants.
inline std::map<std::pair<std::uint64_t, unsigned>, unsigned> hom_by_enumeration(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const auto targets = elements_of(b);
  // Allowed images for generator k: elements killed by a[k].
  std::vector<std::vector<Tuple>> allowed;
  for (auto order : a) {
    std::vector<Tuple> ok;
    for (const auto& t : targets) {
      if (is_zero(scale(t, order, b))) ok.push_back(t);
    }
    allowed.push_back(ok);
  }
  std::vector<std::vector<Tuple>> homs{{}};
  for (const auto& choices : allowed) {
    std::vector<std::vector<Tuple>> next;
    for (const auto& h : homs) {
      for (const auto& c : choices) {
        auto g = h;
        g.push_back(c);
        next.push_back(g);
      }
    }
    homs = std::move(next);
  }
  std::function<bool(const std::vector<Tuple>&, std::uint64_t)> killed = [&](const std::vector<Tuple>& h,
                                                                            std::uint64_t k) {
    for (const auto& image : h) {
      if (!is_zero(scale(image, k, b))) return false;
    }
    return true;
  };
  return invariants_by_counting(homs, killed);
}

}  // namespace testsupport
