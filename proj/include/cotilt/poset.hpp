#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cotilt {

/// Bit i stands for node i of a synthetic spectrum.
using NodeMask = std::uint64_t;

inline constexpr std::size_t kMaxSyntheticNodes = 64;

inline NodeMask node_bit(std::size_t i) { return NodeMask{1} << i; }

/// A finite poset standing in for Spec R, ordered by inclusion, together with
/// heights and the Bass data Ass Ω^{-i}(R) that the poset alone cannot supply.
class SpectrumPoset {
 public:
  enum class BassMode { Undeclared, Explicit, GorensteinHeights };

  /// `less` lists pairs (a, b) meaning node a is strictly contained in node b.
  /// The transitive closure is taken; cycles throw InputError. Heights default
  /// to the length of the longest chain below each node.
  SpectrumPoset(std::vector<std::string> labels, std::span<const std::pair<std::size_t, std::size_t>> less);

  /// Replaces the default heights. Must be strictly monotone along the order
  /// and zero on minimal nodes.
  void set_heights(std::vector<unsigned> heights);
  /// Checks a user-declared maximal set against the order.
  void check_declared_maximal(NodeMask declared) const;
  void set_explicit_bass(std::map<std::size_t, NodeMask> bass);
  void set_gorenstein_heights();

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Down-set of node i, including i itself.
  NodeMask below(std::size_t i) const { return below_[i]; }
  /// Up-set of node i, including i itself.
  NodeMask above(std::size_t i) const { return above_[i]; }
  bool leq(std::size_t a, std::size_t b) const { return (below_[b] >> a) & 1U; }

  NodeMask all() const { return size() == 64 ? ~NodeMask{0} : (node_bit(size()) - 1); }
  NodeMask maximal() const { return maximal_; }
  NodeMask minimal() const { return minimal_; }
  unsigned height(std::size_t i) const { return heights_[i]; }
  const std::vector<unsigned>& heights() const { return heights_; }

  BassMode bass_mode() const { return bass_mode_; }
  const std::map<std::size_t, NodeMask>& explicit_bass() const { return explicit_bass_; }
  /// Ass Ω^{-i}(R) as a node mask. Throws ConfigError if undeclared.
  NodeMask bass(std::size_t i) const;

  /// Lower-set test by closure: every member's down-set lies inside.
  bool is_lower(NodeMask s) const;
  NodeMask lower_closure(NodeMask s) const;

  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

  friend bool operator==(const SpectrumPoset&, const SpectrumPoset&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<NodeMask> below_;
  std::vector<NodeMask> above_;
  NodeMask maximal_ = 0;
  NodeMask minimal_ = 0;
  std::vector<unsigned> heights_;
  BassMode bass_mode_ = BassMode::Undeclared;
  std::map<std::size_t, NodeMask> explicit_bass_;
};

}  // namespace cotilt
