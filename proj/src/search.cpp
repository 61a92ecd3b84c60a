#include "subshift/search.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

#include "subshift/error.hpp"

namespace subshift {
namespace {

// Image of one factor: windows[j] is the rule slot producing output letter j.
struct Constraint {
  std::vector<std::uint32_t> windows;
};

class Problem {
 public:
  Problem(const LanguageTable& table, int anticipation, int depth)
      : table_(table), letters_(table.alphabet().size()) {
    const int width = anticipation + 1;
    slots_ = table.factors(width).size();
    ready_.resize(slots_);
    for (int n = 1; n <= depth; ++n) {
      for (const auto& v : table.factors(n + anticipation)) {
        Constraint c;
        std::uint32_t last = 0;
        for (int j = 0; j < n; ++j) {
          auto idx = *table.index_of(v.substr(static_cast<std::size_t>(j), width));
          c.windows.push_back(idx);
          last = std::max(last, idx);
        }
        ready_[last].push_back(std::move(c));
      }
    }
  }

  std::size_t slots() const noexcept { return slots_; }
  std::size_t letters() const noexcept { return letters_; }

  /// Checks every constraint that becomes fully determined at `slot`.
  bool consistent(const std::vector<Letter>& rule, std::size_t slot) const {
    Word image;
    for (const auto& c : ready_[slot]) {
      image.resize(c.windows.size());
      for (std::size_t j = 0; j < c.windows.size(); ++j) image[j] = static_cast<char>(rule[c.windows[j]]);
      if (!table_.contains(image)) return false;
    }
    return true;
  }

 private:
  const LanguageTable& table_;
  std::size_t letters_;
  std::size_t slots_ = 0;
  std::vector<std::vector<Constraint>> ready_;
};

struct Budget {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::uint64_t limit;

  bool spend() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > limit) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

// Depth-first completion of `rule` from `slot`, appending full rules in
// lexicographic order.
void complete(const Problem& problem, std::vector<Letter>& rule, std::size_t slot, Budget& budget,
              std::vector<std::vector<Letter>>& out) {
  if (slot == problem.slots()) {
    out.push_back(rule);
    return;
  }
  for (std::size_t a = 0; a < problem.letters(); ++a) {
    if (budget.exhausted.load(std::memory_order_relaxed) || !budget.spend()) return;
    rule[slot] = static_cast<Letter>(a);
    if (problem.consistent(rule, slot)) complete(problem, rule, slot + 1, budget, out);
  }
}

// Consistent partial rules of the first `split` slots, in lexicographic order.
std::vector<std::vector<Letter>> frontier(const Problem& problem, std::size_t split, Budget& budget) {
  std::vector<std::vector<Letter>> level{std::vector<Letter>(problem.slots(), 0)};
  for (std::size_t slot = 0; slot < split; ++slot) {
    std::vector<std::vector<Letter>> next;
    for (auto& rule : level) {
      for (std::size_t a = 0; a < problem.letters(); ++a) {
        if (!budget.spend()) return {};
        rule[slot] = static_cast<Letter>(a);
        if (problem.consistent(rule, slot)) next.push_back(rule);
      }
    }
    level = std::move(next);
  }
  return level;
}

void check_arguments(const LanguageTable& table, int radius, int depth) {
  if (radius < 0) throw DomainError("radius must be >= 0");
  if (depth < radius + 1) throw DomainError("depth must be at least the largest window");
  if (depth + radius > table.max_length()) {
    throw DepthError("search needs max_length >= depth + radius = " + std::to_string(depth + radius));
  }
}

std::vector<std::vector<Letter>> search_one(const Problem& problem, Budget& budget, bool parallel) {
  std::vector<std::vector<Letter>> found;
  if (!parallel || problem.slots() == 0) {
    std::vector<Letter> rule(problem.slots(), 0);
    complete(problem, rule, 0, budget, found);
    return found;
  }
  // Enough independent subtrees to keep every thread busy.
  std::size_t split = 0;
  std::size_t tasks = 1;
  const auto wanted = static_cast<std::size_t>(8 * omp_get_max_threads());
  while (split < problem.slots() && tasks < wanted) {
    tasks *= problem.letters();
    ++split;
  }
  auto roots = frontier(problem, split, budget);
  std::vector<std::vector<std::vector<Letter>>> partial(roots.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < roots.size(); ++t) {
    complete(problem, roots[t], split, budget, partial[t]);
  }
  for (auto& part : partial) {
    found.insert(found.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return found;
}

SearchResult run_search(const TablePtr& table, int radius, int depth, std::uint64_t node_budget,
                        bool parallel) {
  if (!table) throw DomainError("search needs a language table");
  check_arguments(*table, radius, depth);
  Budget budget;
  budget.limit = node_budget;
  SearchResult result;
  for (int a = 0; a <= radius; ++a) {
    Problem problem(*table, a, depth);
    auto rules = search_one(problem, budget, parallel);
    if (budget.exhausted.load()) throw BudgetExceeded(budget.nodes.load(), node_budget);
    for (auto& rule : rules) {
      SlidingBlockCode code(table, 0, a, std::move(rule));
      auto match = shift_power_match(code);
      std::optional<std::pair<int, int>> root;
      if (match) root = std::pair{1, *match};
      result.reports.push_back(EndomorphismReport{std::move(code), depth, match, root});
    }
  }
  result.nodes = budget.nodes.load();
  return result;
}

}  // namespace

SearchResult enumerate_endomorphisms(const TablePtr& table, int radius, int depth,
                                     const SearchOptions& options) {
  return run_search(table, radius, depth, options.node_budget, options.parallel);
}

SearchResult enumerate_endomorphisms_serial(const TablePtr& table, int radius, int depth,
                                            std::uint64_t node_budget) {
  return run_search(table, radius, depth, node_budget, false);
}

}  // namespace subshift
