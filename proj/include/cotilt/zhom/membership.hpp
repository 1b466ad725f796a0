#pragma once

#include <cstddef>

#include "cotilt/prime_set.hpp"
#include "cotilt/sequence.hpp"
#include "cotilt/zhom/modules.hpp"

namespace cotilt::zhom {

/// Ass of the i-th cosyzygy in the minimal injective coresolution over Z.
PrimeSet ass_cosyzygy(const FgZModule& m, std::size_t i);
PrimeSet ass_cosyzygy(const MatlisModule& m, std::size_t i);

/// Ass Ω^{-i} M ⊆ P_i for every i below the sequence length.
bool cotilting_membership(const FgZModule& m, const CharacteristicSequence& seq);
bool cotilting_membership(const MatlisModule& m, const CharacteristicSequence& seq);

/// Tor_i(N, Z/p) = 0 for every i below the sequence length and every maximal
/// (p) outside P_i.
bool tilting_membership(const FgZModule& n, const CharacteristicSequence& seq);

}  // namespace cotilt::zhom
