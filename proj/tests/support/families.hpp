#pragma once

// Brute-force enumeration of compatible families on synthetic spectra:
// every local sequence at every maximal node, then a backtracking search for
// assignments that agree on shared primes.

#include <functional>
#include <vector>

#include "cotilt/family.hpp"
#include "support/posets.hpp"

namespace testsupport {

/// Level masks chosen at each maximal node, in ascending node order.
struct FamilyMasks {
  std::vector<std::size_t> maximals;
  std::vector<std::vector<cotilt::NodeMask>> levels;  // levels[k][i] at maximals[k]
};

inline cotilt::NodeMask down_set(const std::vector<std::vector<bool>>& leq, std::size_t m) {
  cotilt::NodeMask d = 0;
  for (std::size_t p = 0; p < leq.size(); ++p) {
    if (leq[p][m]) d |= cotilt::NodeMask{1} << p;
  }
  return d;
}

/// Local sequences at m: tuples of lower subsets of down(m), nested, holding
/// the Bass data restricted to down(m).
inline std::vector<std::vector<cotilt::NodeMask>> local_sequences(const RawPoset& raw,
                                                                  const std::vector<cotilt::NodeMask>& bass,
                                                                  std::size_t m, std::size_t n) {
  const auto leq = order_closure(raw);
  const cotilt::NodeMask down = down_set(leq, m);
  std::vector<cotilt::NodeMask> local_bass;
  for (auto b : bass) local_bass.push_back(b & down);
  return brute_force_sequences(raw, local_bass, n, down);
}

inline void for_each_compatible_family(const RawPoset& raw, const std::vector<cotilt::NodeMask>& bass, std::size_t n,
                                       const std::function<void(const FamilyMasks&)>& visit) {
  const auto leq = order_closure(raw);
  FamilyMasks f;
  for (std::size_t v = 0; v < raw.size; ++v) {
    bool maximal = true;
    for (std::size_t w = 0; w < raw.size; ++w) maximal = maximal && (w == v || !leq[v][w]);
    if (maximal) f.maximals.push_back(v);
  }
  std::vector<std::vector<std::vector<cotilt::NodeMask>>> options;
  std::vector<cotilt::NodeMask> downs;
  for (auto m : f.maximals) {
    options.push_back(local_sequences(raw, bass, m, n));
    downs.push_back(down_set(leq, m));
  }
  f.levels.resize(f.maximals.size());
  std::function<void(std::size_t)> choose = [&](std::size_t k) {
    if (k == f.maximals.size()) {
      visit(f);
      return;
    }
    for (const auto& option : options[k]) {
      bool compatible = true;
      for (std::size_t j = 0; j < k && compatible; ++j) {
        const cotilt::NodeMask shared = downs[j] & downs[k];
        for (std::size_t i = 0; i < n; ++i) {
          if ((option[i] & shared) != (f.levels[j][i] & shared)) compatible = false;
        }
      }
      if (!compatible) continue;
      f.levels[k] = option;
      choose(k + 1);
    }
  };
  choose(0);
}

inline cotilt::CompatibleFamily to_family(const cotilt::Ring& ring, const FamilyMasks& f, std::size_t n) {
  std::vector<cotilt::LocalSequence> locals;
  for (std::size_t k = 0; k < f.maximals.size(); ++k) {
    std::vector<cotilt::PrimeSet> levels;
    for (std::size_t i = 0; i < n; ++i) levels.push_back(cotilt::PrimeSet::from_mask(ring, f.levels[k][i]));
    locals.emplace_back(ring, cotilt::PrimeIdeal::node(f.maximals[k]), std::move(levels));
  }
  return cotilt::CompatibleFamily(ring, n, std::nullopt, std::move(locals));
}

}  // namespace testsupport
