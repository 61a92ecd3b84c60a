#include "subshift/reference.hpp"

#include <algorithm>
#include <set>

#include "subshift/error.hpp"

namespace subshift::reference {

std::vector<std::vector<Word>> brute_force_language(const Substitution& theta, int n) {
  const std::size_t needed = 4 * (static_cast<std::size_t>(n) + theta.max_image_length());
  std::vector<std::set<Word>> sets(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < theta.alphabet().size(); ++a) {
    Word w = single_letter(static_cast<Letter>(a));
    while (w.size() < needed) w = substitute(theta, w);
    for (int len = 1; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= w.size(); ++i) sets[len - 1].insert(w.substr(i, len));
    }
  }
  std::vector<std::vector<Word>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<std::vector<Letter>> naive_endomorphism_rules(const LanguageTable& table,
                                                          int anticipation, int depth,
                                                          std::uint64_t max_rules) {
  const int width = anticipation + 1;
  const auto domain = table.factors(width);
  const auto k = table.alphabet().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    total *= k;
    if (total > max_rules) throw DomainError("naive enumeration too large");
  }

  auto lookup = [&](const Word& w) {
    auto it = std::lower_bound(domain.begin(), domain.end(), w);
    return static_cast<std::size_t>(it - domain.begin());
  };
  auto in_language = [&](const Word& w) {
    auto level = table.factors(static_cast<int>(w.size()));
    return std::binary_search(level.begin(), level.end(), w);
  };

  std::vector<std::vector<Letter>> accepted;
  std::vector<Letter> rule(domain.size(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t digits = code;
    for (std::size_t i = domain.size(); i-- > 0;) {
      rule[i] = static_cast<Letter>(digits % k);
      digits /= k;
    }
    bool ok = true;
    for (int n = 1; n <= depth && ok; ++n) {
      for (const auto& v : table.factors(n + anticipation)) {
        Word image;
        for (int j = 0; j < n; ++j) image.push_back(static_cast<char>(rule[lookup(v.substr(j, width))]));
        if (!in_language(image)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) accepted.push_back(rule);
  }
  return accepted;
}

}  // namespace subshift::reference
