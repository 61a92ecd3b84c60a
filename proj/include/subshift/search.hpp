#pragma once

#include <cstdint>
#include <vector>

#include "subshift/block_code.hpp"

namespace subshift {

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
  bool parallel = true;
};

struct SearchResult {
  std::vector<EndomorphismReport> reports;  ///< canonical code order
  std::uint64_t nodes = 0;
};

/// All one-sided codes (memory 0, anticipation <= radius) whose images of
/// factors stay in the language up to `depth`. Rule entries are assigned in
/// canonical window order; a partial rule is pruned as soon as a fully
/// determined image leaves the language. Throws BudgetExceeded when the
/// node budget runs out. Output does not depend on scheduling.
SearchResult enumerate_endomorphisms(const TablePtr& table, int radius, int depth,
                                     const SearchOptions& options = {});

/// Serial reference of the same branch-and-prune search.
SearchResult enumerate_endomorphisms_serial(const TablePtr& table, int radius, int depth,
                                            std::uint64_t node_budget = 100'000'000);

}  // namespace subshift
