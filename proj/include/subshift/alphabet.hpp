#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace subshift {

/// Dense letter code: index of a symbol in its Alphabet.
using Letter = std::uint8_t;

/// A finite word stored as dense letter codes (one byte per letter). The
/// empty word is the identity for concatenation. Use Alphabet::encode and
/// Alphabet::decode to move between codes and printable symbols.
using Word = std::string;

inline Letter letter_at(const Word& w, std::size_t i) {
  return static_cast<Letter>(w[i]);
}

inline Word single_letter(Letter a) { return Word(1, static_cast<char>(a)); }

/// Ordered finite set of distinct printable symbols. The declaration order is
/// the letter order used for canonical word ordering.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(Letter a) const { return symbols_.at(a); }
  std::optional<Letter> code(char c) const;

  /// Throws DomainError on a symbol outside the alphabet.
  Word encode(std::string_view text) const;
  std::string decode(const Word& w) const;

  /// True iff every code in w is a valid letter of this alphabet.
  bool admits(const Word& w) const noexcept;

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> codes_{};
};

}  // namespace subshift
