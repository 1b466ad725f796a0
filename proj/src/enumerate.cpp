#include "cotilt/enumerate.hpp"

#include "cotilt/error.hpp"

namespace cotilt {

namespace {

const SpectrumPoset& enumerable_poset(const Ring& ring, std::size_t n) {
  if (ring.kind() != RingKind::Synthetic) {
    throw UnsupportedError("cannot enumerate characteristic sequences over " + ring.describe() +
                           ": the spectrum is not a finite synthetic poset");
  }
  const SpectrumPoset& poset = ring.poset();
  if (poset.size() > kMaxEnumerationNodes) {
    throw InputError("enumeration supports at most " + std::to_string(kMaxEnumerationNodes) + " primes");
  }
  if (n > kMaxEnumerationLength) {
    throw InputError("enumeration supports length at most " + std::to_string(kMaxEnumerationLength));
  }
  return poset;
}

}  // namespace

std::vector<NodeMask> lower_sets(const SpectrumPoset& poset) {
  if (poset.size() > kMaxEnumerationNodes) {
    throw InputError("lower-set enumeration supports at most " + std::to_string(kMaxEnumerationNodes) + " primes");
  }
  std::vector<NodeMask> out;
  const NodeMask end = node_bit(poset.size());
  for (NodeMask s = 0; s < end; ++s) {
    if (poset.is_lower(s)) out.push_back(s);
  }
  return out;
}

SequenceEnumerator::SequenceEnumerator(const Ring& ring, std::size_t n) : ring_(ring), n_(n) {
  const SpectrumPoset& poset = enumerable_poset(ring, n);
  lower_ = lower_sets(poset);
  for (std::size_t i = 0; i < n; ++i) bass_.push_back(poset.bass(i));
  index_.assign(n, 0);
  current_.assign(n, 0);
}

// Moves level `level` to the first admissible lower set at or after `start`.
// The full spectrum is always admissible, so this only fails past the end.
bool SequenceEnumerator::seek(std::size_t level, std::size_t start) {
  const NodeMask required = bass_[level] | (level == 0 ? NodeMask{0} : current_[level - 1]);
  for (std::size_t j = start; j < lower_.size(); ++j) {
    if ((lower_[j] & required) == required) {
      index_[level] = j;
      current_[level] = lower_[j];
      return true;
    }
  }
  return false;
}

std::optional<CharacteristicSequence> SequenceEnumerator::next() {
  if (done_) return std::nullopt;
  std::size_t reset_from = 0;
  if (!started_) {
    started_ = true;
  } else {
    std::size_t level = n_;
    while (level > 0) {
      --level;
      if (seek(level, index_[level] + 1)) break;
      if (level == 0) {
        done_ = true;
        return std::nullopt;
      }
    }
    if (n_ == 0) {
      done_ = true;
      return std::nullopt;
    }
    reset_from = level + 1;
  }
  for (std::size_t level = reset_from; level < n_; ++level) seek(level, 0);
  std::vector<PrimeSet> levels;
  levels.reserve(n_);
  for (NodeMask m : current_) levels.push_back(PrimeSet::from_mask(ring_, m));
  return CharacteristicSequence(ring_, std::move(levels));
}

std::vector<CharacteristicSequence> enumerate_sequences(const Ring& ring, std::size_t n) {
  std::vector<CharacteristicSequence> out;
  SequenceEnumerator it(ring, n);
  while (auto seq = it.next()) out.push_back(std::move(*seq));
  return out;
}

std::uint64_t count_sequences(const Ring& ring, std::size_t n) {
  const SpectrumPoset& poset = enumerable_poset(ring, n);
  const std::size_t nodes = poset.size();
  const std::size_t full = std::size_t{1} << nodes;
  std::vector<bool> is_lower(full);
  for (std::size_t s = 0; s < full; ++s) is_lower[s] = poset.is_lower(s);

  // ways[prev] = number of completions of the remaining levels given the
  // previous level `prev`; filled from the last level backwards.
  std::vector<std::uint64_t> ways(full, 1);
  std::vector<std::uint64_t> upward(full);
  for (std::size_t level = n; level-- > 0;) {
    for (std::size_t s = 0; s < full; ++s) upward[s] = is_lower[s] ? ways[s] : 0;
    // Superset sums: upward[s] = sum of lower L ⊇ s.
    for (std::size_t b = 0; b < nodes; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t s = 0; s < full; ++s) {
        if ((s & bit) == 0) upward[s] += upward[s | bit];
      }
    }
    const std::size_t bass = poset.bass(level);
    for (std::size_t s = 0; s < full; ++s) ways[s] = upward[s | bass];
  }
  return ways[0];
}

}  // namespace cotilt
