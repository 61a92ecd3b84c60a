#include "subshift/substitution.hpp"

#include <algorithm>
#include <map>

#include "subshift/error.hpp"

namespace subshift {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) {
    throw DomainError("substitution needs exactly one image per letter");
  }
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty()) {
      throw DomainError(std::string("image of '") + alphabet_.symbol(a) +
                        "' is empty");
    }
    if (!alphabet_.admits(images_[a])) {
      throw DomainError("image symbol outside the alphabet");
    }
  }
}

Substitution Substitution::from_rules(
    const std::vector<std::pair<char, std::string>>& rules) {
  std::map<char, std::string> by_symbol;
  for (const auto& [lhs, rhs] : rules) {
    if (!by_symbol.emplace(lhs, rhs).second) {
      throw DomainError(std::string("duplicate rule for '") + lhs + "'");
    }
  }
  std::string symbols;
  for (const auto& [lhs, rhs] : by_symbol) symbols.push_back(lhs);
  Alphabet alphabet(symbols);
  std::vector<Word> images;
  for (const auto& [lhs, rhs] : by_symbol) images.push_back(alphabet.encode(rhs));
  return Substitution(std::move(alphabet), std::move(images));
}

std::size_t Substitution::max_image_length() const noexcept {
  std::size_t m = 0;
  for (const auto& w : images_) m = std::max(m, w.size());
  return m;
}

std::size_t Substitution::min_image_length() const noexcept {
  std::size_t m = images_.front().size();
  for (const auto& w : images_) m = std::min(m, w.size());
  return m;
}

std::string Substitution::to_text() const {
  std::string out;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    out += alphabet_.symbol(static_cast<Letter>(a));
    out += " -> ";
    out += alphabet_.decode(images_[a]);
    out += '\n';
  }
  return out;
}

Substitution parse_substitution(std::string_view text) {
  std::vector<std::pair<char, std::string>> rules;
  std::map<char, int> seen_at;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::string line;
    for (char c : raw) {
      if (c != ' ' && c != '\t' && c != '\r') line.push_back(c);
    }
    if (line.empty()) continue;

    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError(line_no, "expected `x -> word`");
    if (arrow != 1) throw ParseError(line_no, "left-hand side must be one symbol");
    std::string rhs = line.substr(arrow + 2);
    if (rhs.empty()) throw ParseError(line_no, "empty image");
    if (rhs.find("->") != std::string::npos) {
      throw ParseError(line_no, "more than one `->`");
    }
    if (auto [it, fresh] = seen_at.emplace(line[0], line_no); !fresh) {
      throw ParseError(line_no, std::string("duplicate rule for '") + line[0] +
                                    "' (first at line " +
                                    std::to_string(it->second) + ")");
    }
    rules.emplace_back(line[0], std::move(rhs));
  }
  if (rules.empty()) throw ParseError(line_no, "no rules found");

  for (const auto& [lhs, rhs] : rules) {
    for (char c : rhs) {
      if (!seen_at.count(c)) {
        throw ParseError(seen_at.at(lhs), std::string("symbol '") + c +
                                               "' has no rule of its own");
      }
    }
  }
  return Substitution::from_rules(rules);
}

Word substitute(const Substitution& theta, const Word& w) {
  std::size_t total = 0;
  const auto k = theta.alphabet().size();
  for (char c : w) {
    auto a = static_cast<Letter>(c);
    if (a >= k) throw DomainError("word symbol outside substitution alphabet");
    total += theta.image(a).size();
  }
  Word out;
  out.reserve(total);
  for (char c : w) out += theta.image(static_cast<Letter>(c));
  return out;
}

Word iterate(const Substitution& theta, Letter letter, int k) {
  if (letter >= theta.alphabet().size()) {
    throw DomainError("letter outside substitution alphabet");
  }
  return iterate_word(theta, single_letter(letter), k);
}

Word iterate_word(const Substitution& theta, Word w, int k) {
  if (k < 0) throw DomainError("iteration count must be >= 0");
  for (int i = 0; i < k; ++i) w = substitute(theta, w);
  return w;
}

bool is_primitive(const Substitution& theta) {
  const std::size_t k = theta.alphabet().size();
  using Matrix = std::vector<std::vector<char>>;
  Matrix m(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (char c : theta.image(static_cast<Letter>(i))) m[i][static_cast<Letter>(c)] = 1;
  }
  auto positive = [&](const Matrix& p) {
    for (const auto& row : p) {
      if (std::find(row.begin(), row.end(), 0) != row.end()) return false;
    }
    return true;
  };
  Matrix power = m;
  const std::size_t limit = (k - 1) * (k - 1) + 1;
  for (std::size_t e = 1; e <= limit; ++e) {
    if (positive(power)) return true;
    Matrix next(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (power[i][j])
          for (std::size_t l = 0; l < k; ++l)
            if (m[j][l]) next[i][l] = 1;
    power = std::move(next);
  }
  return false;
}

}  // namespace subshift
