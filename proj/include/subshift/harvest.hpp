#pragma once

#include <span>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/substitution.hpp"

// Factor-harvest kernels. Each kernel has an OpenMP version and a serial
// reference with identical output; tests and the benchmark compare the two.
namespace subshift::kernels {

/// Factor sets indexed by length - 1, each canonically sorted and unique.
using FactorSets = std::vector<std::vector<Word>>;

/// All subwords of length 1..max_length of the source words.
FactorSets harvest_factors(std::span<const Word> sources, int max_length);
FactorSets harvest_factors_serial(std::span<const Word> sources, int max_length);

/// One step of the substitution-language fixed point: apply theta to every
/// word and keep its length-`width` windows (or the whole image when shorter).
/// Result is sorted and unique.
std::vector<Word> expand_windows(const Substitution& theta,
                                 std::span<const Word> words, int width);
std::vector<Word> expand_windows_serial(const Substitution& theta,
                                        std::span<const Word> words, int width);

/// Shrinks long sources to the distinct length-`width` windows plus each
/// source's trailing (width - 1)-suffix; the subword sets up to `width`
/// are unchanged.
std::vector<Word> reduce_sources(std::span<const Word> sources, int width);

}  // namespace subshift::kernels
