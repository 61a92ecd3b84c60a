#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subshift/language.hpp"

namespace subshift {

using TablePtr = std::shared_ptr<const LanguageTable>;

/// A sliding block code x -> (rule(x[i-m .. i+a]))_i over the language of
/// `table`. The rule is defined on exactly the window-length factors and is
/// stored in their canonical order.
class SlidingBlockCode {
 public:
  SlidingBlockCode(TablePtr table, int memory, int anticipation, std::vector<Letter> rule);

  static SlidingBlockCode from_function(TablePtr table, int memory, int anticipation,
                                        const std::function<Letter(const Word&)>& rule);

  int memory() const noexcept { return memory_; }
  int anticipation() const noexcept { return anticipation_; }
  int window() const noexcept { return memory_ + 1 + anticipation_; }
  const TablePtr& table() const noexcept { return table_; }
  std::span<const Letter> rule() const noexcept { return rule_; }

  /// Rule value on one window; throws DomainError naming a non-factor window.
  Letter output(const Word& window_word) const;

  /// Structural equality: same table, window split and rule table.
  bool operator==(const SlidingBlockCode& other) const;
  /// Canonical order: by window, then memory, then lexicographic rule table.
  bool operator<(const SlidingBlockCode& other) const;

 private:
  TablePtr table_;
  int memory_;
  int anticipation_;
  std::vector<Letter> rule_;
};

/// Output length |w| - window + 1. A function object rather than a function
/// so that std::apply is never picked up through argument-dependent lookup
/// on Word (a std::string).
struct ApplyFn {
  Word operator()(const SlidingBlockCode& code, const Word& w) const;
};
inline constexpr ApplyFn apply{};

/// sigma^n as a one-sided code with anticipation n.
SlidingBlockCode shift_power(int n, const TablePtr& table);

/// The radius-0 code applying a letter map.
SlidingBlockCode letter_map(const TablePtr& table, const std::vector<Letter>& image);

/// outer o inner, with memory and anticipation added.
SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner);

/// codes^k for k >= 1.
SlidingBlockCode code_power(const SlidingBlockCode& code, int k);

/// Exact equality of the induced maps: both rules are padded to a common
/// window and compared on every factor of that length.
bool equals(const SlidingBlockCode& a, const SlidingBlockCode& b);

struct EndomorphismReport {
  SlidingBlockCode code;
  /// Images of all factors of length n + window - 1 are factors, n <= depth.
  int verified_depth = 0;
  std::optional<int> shift_power_equivalent;
  std::optional<std::pair<int, int>> root_relation;  ///< (k, n): code^k = sigma^n
};

struct Counterexample {
  Word factor;
  Word image;
};

struct VerifyOutcome {
  std::optional<EndomorphismReport> report;
  std::optional<Counterexample> witness;
  bool verified() const noexcept { return report.has_value(); }
};

/// Depth-bounded image containment. Containment beyond `depth` is not
/// claimed. Requires window <= depth and depth + window - 1 <= max_length.
VerifyOutcome verify_endomorphism(const SlidingBlockCode& code, int depth);

/// Least n in 0..anticipation with code == sigma^n, if any.
std::optional<int> shift_power_match(const SlidingBlockCode& code);

/// Lexicographically least (k, n), 1 <= k <= k_max, 0 <= n <= n_max, with
/// code^k == sigma^n.
std::optional<std::pair<int, int>> find_root_relation(const SlidingBlockCode& code, int k_max,
                                                      int n_max);

enum class InverseMode {
  one_sided,     ///< d o c = c o d = identity
  modulo_shift,  ///< d o c and c o d are shift powers
};

struct InverseWitness {
  SlidingBlockCode inverse;
  int left_shift = 0;   ///< inverse o code = sigma^left_shift
  int right_shift = 0;  ///< code o inverse = sigma^right_shift
};

/// Searches codes of anticipation <= max_anticipation for a two-sided
/// inverse. Sound; incomplete when too many rule entries are unconstrained.
std::optional<InverseWitness> find_inverse(const SlidingBlockCode& code, int max_anticipation,
                                           InverseMode mode);

/// Thue-Morse prefix t_i = popcount(i) mod 2 of length 2^exponent.
Word thue_morse_prefix(int exponent);

struct MorseMirror {
  TablePtr table;
  SlidingBlockCode phi;
};

/// Blockwise coding 0 -> 1001, 1 -> 1101 of a Thue-Morse prefix of length
/// 2^depth_exponent, its subword table, and the right-radius-3 rule
/// phi(1001) = 1, phi(1101) = 0, phi(xyzw) = y otherwise.
MorseMirror morse_mirror_system(int depth_exponent, int max_length = 64);

}  // namespace subshift
