#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subshift/alphabet.hpp"

namespace subshift {

/// A substitution: every letter maps to a nonempty word over the same
/// alphabet, extended to words by concatenation.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images);

  /// Builds from printable rules such as {{'a', "acb"}, {'b', "aba"}}. The
  /// alphabet is the sorted set of left-hand symbols.
  static Substitution from_rules(
      const std::vector<std::pair<char, std::string>>& rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }
  std::size_t max_image_length() const noexcept;
  std::size_t min_image_length() const noexcept;

  /// Canonical rules text, one `a -> acb` line per letter.
  std::string to_text() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

/// Parses one rule per line (`a -> acb`). Whitespace is ignored, `#` starts a
/// comment. Throws ParseError carrying the offending line number.
Substitution parse_substitution(std::string_view text);

Word substitute(const Substitution& theta, const Word& w);

/// theta^k(letter); k = 0 gives the single-letter word.
Word iterate(const Substitution& theta, Letter letter, int k);

/// theta^k applied to a word.
Word iterate_word(const Substitution& theta, Word w, int k);

/// True iff some power of the 0/1 incidence matrix is entrywise positive.
/// Powers up to (k-1)^2 + 1 are examined (Wielandt's bound).
bool is_primitive(const Substitution& theta);

}  // namespace subshift
