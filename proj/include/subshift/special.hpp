#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "subshift/language.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

struct LeftSpecialNode {
  Word word;
  std::vector<Letter> extensions;
  int parent = -1;  ///< index into the previous level, -1 at level 1
};

/// A candidate branch point seen at finite depth: the length-`depth` prefix
/// shared by one or more left-special words of length `lookahead`.
struct BranchChain {
  Word prefix;
  std::vector<Word> witnesses;     ///< left-special words at the lookahead level
  std::vector<Letter> extensions;  ///< limiting extension set (largest witness set)
  int stable_from = 1;             ///< first length from which the set no longer shrinks
  bool ambiguous() const noexcept { return witnesses.size() > 1; }
  int order() const noexcept { return static_cast<int>(extensions.size()); }
};

/// Left-special words of lengths 1..lookahead ordered by prefix. A word of
/// length `depth` is the start of a chain only if some left-special word of
/// length `lookahead` extends it: finite left-special words branch off the
/// true branch points at every scale and die out later, so the lookahead
/// filters them.
struct LeftSpecialTree {
  int depth = 0;
  int lookahead = 0;
  std::vector<std::vector<LeftSpecialNode>> levels;  ///< levels[n-1]: length n
  std::vector<BranchChain> chains;
};

/// lookahead = 0 selects the default 4 * depth.
LeftSpecialTree left_special_tree(const LanguageTable& table, int depth, int lookahead = 0);

struct PeriodicFixedPoint {
  int period = 1;
  Letter seed = 0;
};

struct CommonSuffixLimit {
  int period = 1;
  std::vector<Letter> sharing_letters;  ///< letters whose images share the suffix
  Word head;                            ///< w with w theta^period(y) = y
};

/// Algebraic evidence that a substitution shift has a branch point with the
/// given prefix and at least the listed left extensions.
struct BranchPointCertificate {
  std::variant<PeriodicFixedPoint, CommonSuffixLimit> kind;
  Word point_prefix;
  std::vector<Letter> extension_letters;
  int order() const noexcept { return static_cast<int>(extension_letters.size()); }
  bool is_periodic() const noexcept {
    return std::holds_alternative<PeriodicFixedPoint>(kind);
  }
};

/// Fixed points of theta^q (q <= max_period) seeded by a letter c with
/// theta^q(c) starting with c, where at least two letters a end theta^q(a)
/// and precede the seed in the language. Deduplicated by point prefix.
std::vector<BranchPointCertificate> certify_branch_periodic(
    const Substitution& theta, const LanguageTable& table, int max_period);

/// Limits of growing maximal proper common suffixes of theta^p(a), theta^p(b)
/// probed at p and 2p, reconstructed from w theta^p(y) = y.
std::vector<BranchPointCertificate> certify_branch_suffix(
    const Substitution& theta, const LanguageTable& table, int max_period);

/// Re-derives the certificate's defining equation on its stored prefix and
/// checks every extension letter against the table. Returns the verified
/// prefix length (0 on failure).
int replay_certificate(const BranchPointCertificate& cert, const Substitution& theta,
                       const LanguageTable& table);

struct CensusEntry {
  int count = 0;
  int certified = 0;
  bool fully_certified() const noexcept { return count > 0 && certified == count; }
};

struct BranchCensus {
  int depth = 0;
  std::map<int, CensusEntry> counts;  ///< branch order k -> M_k
  /// chain index -> matching certificate index, when matched one-to-one
  std::vector<std::optional<std::size_t>> chain_certificate;
  std::vector<std::size_t> unmatched_certificates;
  int total() const;
};

BranchCensus branch_census(const LeftSpecialTree& tree,
                           const std::vector<BranchPointCertificate>& certificates);

/// min { M_k : M_k >= 1 }. Bounds |Aut(X, sigma)| for the one-sided shift.
int aut_upper_bound(const BranchCensus& census);

struct AsymptoticCensus {
  std::map<int, int> class_size_counts;  ///< size k -> M-bar_k (or upper profile)
  int upper_bound_total = 0;             ///< sum_k k M_k, bounds right-asymptotic orbits
  int two_sided_bound = 0;               ///< min over nonzero entries
  bool exact = false;
};

AsymptoticCensus asymptotic_upper_bound(const BranchCensus& census);

/// Exact census from a user-supplied decomposition into ~-classes.
AsymptoticCensus asymptotic_census_from_classes(const std::vector<int>& class_sizes);

/// k^2 for a primitive substitution on k letters.
long long substitution_root_bound(int alphabet_size);

}  // namespace subshift
