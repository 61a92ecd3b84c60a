#pragma once

#include <cstdint>
#include <vector>

#include "subshift/language.hpp"
#include "subshift/substitution.hpp"

// Brute-force oracles kept independent of the fast paths they check.
namespace subshift::reference {

/// Subword sets (lengths 1..n) of theta^k(a) over all letters a, with k the
/// first power making every image at least 4 (n + max image length) long.
std::vector<std::vector<Word>> brute_force_language(const Substitution& theta, int n);

/// Every rule table over factors(anticipation + 1), in lexicographic order,
/// whose images of all factors of length n + anticipation (n <= depth) lie in
/// the language. No pruning; cost |A|^p(anticipation + 1).
std::vector<std::vector<Letter>> naive_endomorphism_rules(const LanguageTable& table,
                                                          int anticipation, int depth,
                                                          std::uint64_t max_rules = 1u << 22);

}  // namespace subshift::reference
