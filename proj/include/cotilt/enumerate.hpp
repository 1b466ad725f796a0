#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cotilt/poset.hpp"
#include "cotilt/ring.hpp"
#include "cotilt/sequence.hpp"

namespace cotilt {

inline constexpr std::size_t kMaxEnumerationNodes = 20;
inline constexpr std::size_t kMaxEnumerationLength = 8;

/// All lower sets of the poset, ascending as integers.
std::vector<NodeMask> lower_sets(const SpectrumPoset& poset);

/// Streams the characteristic sequences of length n over a synthetic ring,
/// ordered lexicographically by the level bitsets (P_0 first). Single
/// consumer; independent enumerators share nothing.
class SequenceEnumerator {
 public:
  SequenceEnumerator(const Ring& ring, std::size_t n);

  std::optional<CharacteristicSequence> next();

  /// Level masks of the most recent sequence returned by next().
  const std::vector<NodeMask>& current_masks() const { return current_; }

 private:
  bool seek(std::size_t level, std::size_t start);

  Ring ring_;
  std::size_t n_;
  std::vector<NodeMask> lower_;
  std::vector<NodeMask> bass_;
  std::vector<std::size_t> index_;
  std::vector<NodeMask> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<CharacteristicSequence> enumerate_sequences(const Ring& ring, std::size_t n);

/// Number of characteristic sequences of length n, without materializing them.
std::uint64_t count_sequences(const Ring& ring, std::size_t n);

}  // namespace cotilt
