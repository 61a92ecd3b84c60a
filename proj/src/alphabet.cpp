#include "subshift/alphabet.hpp"

#include "subshift/error.hpp"

namespace subshift {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("alphabet must be nonempty");
  if (symbols_.size() > 255) throw DomainError("alphabet too large");
  codes_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto slot = static_cast<unsigned char>(symbols_[i]);
    if (codes_[slot] != -1) {
      throw DomainError(std::string("duplicate alphabet symbol '") +
                        symbols_[i] + "'");
    }
    codes_[slot] = static_cast<std::int16_t>(i);
  }
}

std::optional<Letter> Alphabet::code(char c) const {
  auto v = codes_[static_cast<unsigned char>(c)];
  if (v < 0) return std::nullopt;
  return static_cast<Letter>(v);
}

Word Alphabet::encode(std::string_view text) const {
  Word out;
  out.reserve(text.size());
  for (char c : text) {
    auto a = code(c);
    if (!a) {
      throw DomainError(std::string("symbol '") + c +
                        "' is not in alphabet {" + symbols_ + "}");
    }
    out.push_back(static_cast<char>(*a));
  }
  return out;
}

std::string Alphabet::decode(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (char c : w) out.push_back(symbols_.at(static_cast<Letter>(c)));
  return out;
}

bool Alphabet::admits(const Word& w) const noexcept {
  for (char c : w) {
    if (static_cast<Letter>(c) >= symbols_.size()) return false;
  }
  return true;
}

}  // namespace subshift
