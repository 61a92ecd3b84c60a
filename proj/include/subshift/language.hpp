#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

enum class SourceKind { substitution, sturmian, sequence };

std::string to_string(SourceKind kind);

/// How a LanguageTable was built. `details` is an ordered list of key/value
/// pairs that is copied verbatim into serialized reports.
struct Provenance {
  SourceKind kind = SourceKind::sequence;
  std::string description;
  std::vector<std::pair<std::string, std::string>> details;
  /// True when the table is the subword set of a finite prefix, i.e. a
  /// lower approximation of the true language.
  bool lower_approximation = false;
};

/// Factor sets of a minimal shift for lengths 1..max_length.
///
/// Each length is stored as a canonically sorted array (letter order of the
/// alphabet) with a hash index for membership and position lookups.
/// Construction verifies consistency (both length n-1 subwords of every
/// stored length-n word are stored) and bi-extendability below max_length.
/// Morse-Hedlund strict growth p(n+1) > p(n) is recorded; operations that
/// assume an infinite minimal shift reject tables without it.
class LanguageTable {
 public:
  LanguageTable(Alphabet alphabet, std::vector<std::vector<Word>> factors,
                Provenance provenance);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int max_length() const noexcept { return static_cast<int>(factors_.size()); }
  const Provenance& provenance() const noexcept { return provenance_; }

  /// Sorted factors of length n, 1 <= n <= max_length.
  std::span<const Word> factors(int n) const;
  bool contains(const Word& w) const;
  /// Position of w inside factors(|w|), if w is a factor.
  std::optional<std::uint32_t> index_of(const Word& w) const;

  /// p(n+1) > p(n) for every n < max_length.
  bool strictly_growing() const noexcept { return strictly_growing_; }

  /// Throws DomainError unless strictly_growing().
  void require_infinite(const char* operation) const;

  bool operator==(const LanguageTable& other) const {
    return alphabet_ == other.alphabet_ && factors_ == other.factors_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::vector<Word>> factors_;
  std::vector<std::unordered_map<Word, std::uint32_t>> index_;
  Provenance provenance_;
  bool strictly_growing_ = false;
};

struct BuildOptions {
  int iteration_cap = 64;
  bool parallel = true;
};

/// Exact factor sets of the shift of a primitive substitution, lengths
/// 1..n_max. Iterates the window map W -> windows_{n_max}(theta(W)) from the
/// alphabet until two consecutive iterates agree; throws CapExceeded if that
/// does not happen within options.iteration_cap steps.
LanguageTable build_language(const Substitution& theta, int n_max,
                             const BuildOptions& options = {});

/// Subword table of an explicit finite prefix (a lower approximation).
LanguageTable build_language_from_sequence(const Alphabet& alphabet,
                                           const Word& prefix, int n_max,
                                           std::string description = "explicit prefix");

int complexity(const LanguageTable& table, int n);
int complexity_diff(const LanguageTable& table, int n);

std::vector<Letter> left_extensions(const LanguageTable& table, const Word& w);
std::vector<Letter> right_extensions(const LanguageTable& table, const Word& w);

enum class Side { left, right };

struct SpecialWord {
  Word word;
  std::vector<Letter> extensions;
};

/// Length-n factors with at least two extensions on the given side.
std::vector<SpecialWord> special_words(const LanguageTable& table, int n, Side side);

struct CassaigneEstimate {
  int L_hat = 0;       ///< max s(n) over 1 <= n <= probe_depth
  int K = 0;           ///< max{L_hat, p(1)}: p(n) <= K n when s <= L_hat
  int probe_depth = 0;
  /// L_hat is only a lower bound for sup s(n) unless boundedness is known.
  bool empirical = true;
};

CassaigneEstimate cassaigne_K(const LanguageTable& table, int probe_depth);

}  // namespace subshift
