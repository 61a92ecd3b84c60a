#pragma once

#include <string>
#include <vector>

#include "subshift/block_code.hpp"
#include "subshift/substitution.hpp"
#include "subshift/sturmian.hpp"

// Built-in example systems.
namespace subshift::catalog {

Substitution fibonacci();   ///< 0 -> 01, 1 -> 0
Substitution thue_morse();  ///< 0 -> 01, 1 -> 10
Substitution acb();         ///< a -> acb, b -> aba, c -> aca

ContinuedFraction fibonacci_cf();  ///< (1, 1, 1, ...)
ContinuedFraction skewed_cf();     ///< (2, 1, 1, 1, 1, 1)

/// Prefix of length >= `length` of a fixed point of theta^q (the first
/// letter c with theta^q(c) starting with c, smallest q).
Word fixed_point_prefix(const Substitution& theta, std::size_t length);

std::vector<std::string> builtin_names();

}  // namespace subshift::catalog
