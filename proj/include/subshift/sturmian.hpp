#pragma once

#include <string_view>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/language.hpp"

namespace subshift {

/// Partial quotients (a1, a2, ..., am), all >= 1. The standard words are
/// s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{a_k} s_{k-2}; their limit is the
/// characteristic word of slope [0; a1 + 1, a2, a3, ...].
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<int> quotients);

  /// Parses "1,1,2,3"; throws DomainError on malformed input.
  static ContinuedFraction parse(std::string_view text);

  const std::vector<int>& quotients() const noexcept { return quotients_; }

  /// The same expansion with the last quotient repeated until `count` terms.
  ContinuedFraction with_periodic_tail(std::size_t count) const;

 private:
  std::vector<int> quotients_;
};

/// The binary alphabet {0, 1} used by all Sturmian words.
const Alphabet& sturmian_alphabet();

/// Length-`length` prefix of the limit standard word. Throws DomainError
/// naming the reached length when the quotients run out first.
Word characteristic_word(const ContinuedFraction& cf, std::size_t length);

struct SturmianOptions {
  int retry_cap = 8;
};

/// Factor table of the Sturmian shift, 1..n_max, certified by p(n) = n + 1.
/// The quotient list is extended by repeating its last entry, so short lists
/// such as (2,1,1) denote [0; 3, 1, 1, 1, ...]. The prefix starts at
/// 8 n_max + 64 letters and is doubled until the check passes.
LanguageTable sturmian_language(const ContinuedFraction& cf, int n_max,
                                const SturmianOptions& options = {});

}  // namespace subshift
