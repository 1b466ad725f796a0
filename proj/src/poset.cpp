#include "cotilt/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cotilt/error.hpp"

namespace cotilt {

SpectrumPoset::SpectrumPoset(std::vector<std::string> labels,
                             std::span<const std::pair<std::size_t, std::size_t>> less)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("synthetic spectrum has no primes");
  if (n > kMaxSyntheticNodes) {
    throw InputError("synthetic spectrum has " + std::to_string(n) + " primes; at most " +
                     std::to_string(kMaxSyntheticNodes) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("synthetic prime label is empty");
    if (!seen.insert(label).second) throw InputError("duplicate synthetic prime label '" + label + "'");
  }

  below_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) below_[i] = node_bit(i);
  for (const auto& [a, b] : less) {
    if (a >= n || b >= n) throw InputError("order relation refers to an unknown node");
    if (a == b) throw InputError("order relation '" + labels_[a] + " < " + labels_[a] + "' is not strict");
    below_[b] |= node_bit(a);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((below_[i] >> k) & 1U) below_[i] |= below_[k];
    }
  }
  above_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        throw InputError("order relation has a cycle through '" + labels_[i] + "' and '" + labels_[j] + "'");
      }
      if (leq(i, j)) above_[i] |= node_bit(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (above_[i] == node_bit(i)) maximal_ |= node_bit(i);
    if (below_[i] == node_bit(i)) minimal_ |= node_bit(i);
  }

  // Longest chain below each node; process nodes by size of their down-set.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(below_[a]) < std::popcount(below_[b]);
  });
  heights_.assign(n, 0);
  for (std::size_t i : order) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && leq(j, i)) heights_[i] = std::max(heights_[i], heights_[j] + 1);
    }
  }
}

void SpectrumPoset::set_heights(std::vector<unsigned> heights) {
  if (heights.size() != size()) throw InputError("height map does not cover every prime");
  for (std::size_t i = 0; i < size(); ++i) {
    if (((minimal_ >> i) & 1U) && heights[i] != 0) {
      throw InputError("minimal prime '" + labels_[i] + "' must have height 0");
    }
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && leq(i, j) && heights[i] >= heights[j]) {
        throw InputError("height is not strictly monotone from '" + labels_[i] + "' to '" + labels_[j] + "'");
      }
    }
  }
  heights_ = std::move(heights);
}

void SpectrumPoset::check_declared_maximal(NodeMask declared) const {
  if (declared != maximal_) {
    throw InputError("declared maximal primes differ from the maximal elements of the order");
  }
}

void SpectrumPoset::set_explicit_bass(std::map<std::size_t, NodeMask> bass) {
  for (const auto& [index, mask] : bass) {
    if ((mask & ~all()) != 0) throw InputError("Bass data refers to an unknown node");
  }
  explicit_bass_ = std::move(bass);
  bass_mode_ = BassMode::Explicit;
}

void SpectrumPoset::set_gorenstein_heights() {
  explicit_bass_.clear();
  bass_mode_ = BassMode::GorensteinHeights;
}

std::optional<std::size_t> SpectrumPoset::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

NodeMask SpectrumPoset::bass(std::size_t i) const {
  switch (bass_mode_) {
    case BassMode::Undeclared:
      throw ConfigError("synthetic spectrum declares neither explicit Bass data nor gorenstein_heights");
    case BassMode::Explicit: {
      const auto it = explicit_bass_.find(i);
      return it == explicit_bass_.end() ? NodeMask{0} : it->second;
    }
    case BassMode::GorensteinHeights: {
      NodeMask mask = 0;
      for (std::size_t v = 0; v < size(); ++v) {
        if (heights_[v] == i) mask |= node_bit(v);
      }
      return mask;
    }
  }
  return 0;
}

bool SpectrumPoset::is_lower(NodeMask s) const {
  for (NodeMask rest = s; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    if ((below_[v] & ~s) != 0) return false;
  }
  return true;
}

NodeMask SpectrumPoset::lower_closure(NodeMask s) const {
  NodeMask closure = 0;
  for (NodeMask rest = s; rest != 0; rest &= rest - 1) {
    closure |= below_[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return closure;
}

std::vector<std::pair<std::size_t, std::size_t>> SpectrumPoset::cover_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t b = 0; b < size(); ++b) {
    const NodeMask strictly_below = below_[b] & ~node_bit(b);
    for (NodeMask rest = strictly_below; rest != 0; rest &= rest - 1) {
      const auto a = static_cast<std::size_t>(std::countr_zero(rest));
      // a is covered by b iff no c with a < c < b.
      const NodeMask between = strictly_below & above_[a] & ~node_bit(a);
      if (between == 0) covers.emplace_back(a, b);
    }
  }
  return covers;
}

}  // namespace cotilt
