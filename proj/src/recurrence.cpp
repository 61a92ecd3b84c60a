#include "subshift/recurrence.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("rational needs a positive denominator");
  auto g = std::gcd(num, den);
  return {num / g, den / g};
}

namespace {

std::vector<std::size_t> occurrences(const Word& text, const Word& u) {
  std::vector<std::size_t> at;
  for (auto pos = text.find(u); pos != Word::npos; pos = text.find(u, pos + 1)) at.push_back(pos);
  return at;
}

}  // namespace

bool is_return_word(const LanguageTable& table, const Word& w, const Word& u) {
  if (u.empty() || w.size() < u.size() || w.compare(0, u.size(), u) != 0) return false;
  const Word wu = w + u;
  if (static_cast<int>(wu.size()) <= table.max_length() && !table.contains(wu)) return false;
  return occurrences(wu, u).size() == 2;
}

std::vector<Word> return_words(const LanguageTable& table, const Word& probe, const Word& u) {
  if (!table.contains(u)) {
    throw DomainError("'" + table.alphabet().decode(u) + "' is not in the language");
  }
  auto at = occurrences(probe, u);
  if (at.size() < 2) {
    throw DomainError("probe too short: fewer than two occurrences of '" +
                      table.alphabet().decode(u) + "'");
  }
  std::set<Word> found;
  for (std::size_t i = 0; i + 1 < at.size(); ++i) {
    Word w = probe.substr(at[i], at[i + 1] - at[i]);
    // Overlapping occurrences give gaps shorter than u; u is then not a
    // prefix of the gap word, so it is not a return word.
    if (is_return_word(table, w, u)) found.insert(std::move(w));
  }
  return {found.begin(), found.end()};
}

ReturnWordIndex return_word_index(const LanguageTable& table, const Word& probe,
                                  int max_u_length) {
  if (max_u_length < 1 || max_u_length > table.max_length()) {
    throw DepthError("max_u_length outside the table range");
  }
  ReturnWordIndex index;
  index.probe_length = probe.size();
  for (int n = 1; n <= max_u_length; ++n) {
    for (const auto& u : table.factors(n)) index.words.emplace(u, return_words(table, probe, u));
  }
  return index;
}

RecurrenceEstimate recurrence_constant(const LanguageTable& table, const Word& probe,
                                       int max_u_length) {
  if (max_u_length < 1 || max_u_length > table.max_length()) {
    throw DepthError("max_u_length outside the table range");
  }
  std::vector<Word> us;
  for (int n = 1; n <= max_u_length; ++n) {
    auto f = table.factors(n);
    us.insert(us.end(), f.begin(), f.end());
  }

  std::vector<std::size_t> longest(us.size(), 0);
  std::optional<std::string> failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < us.size(); ++i) {
    try {
      for (const auto& w : return_words(table, probe, us[i])) longest[i] = std::max(longest[i], w.size());
    } catch (const DomainError& e) {
#pragma omp critical(subshift_recurrence_failure)
      if (!failure) failure = e.what();
    }
  }
  if (failure) throw DomainError(*failure);

  RecurrenceEstimate est;
  est.probe_max_u = max_u_length;
  est.K_hat = Rational::make(0, 1);
  for (std::size_t i = 0; i < us.size(); ++i) {
    // Every gap between occurrences overlaps u: no return word, nothing to bound.
    if (longest[i] == 0) continue;
    auto ratio = Rational::make(static_cast<std::int64_t>(longest[i]),
                                static_cast<std::int64_t>(us[i].size()));
    if (est.K_hat < ratio) {
      est.K_hat = ratio;
      est.witness = us[i];
    }
  }
  return est;
}

std::int64_t lr_aut_bound(std::int64_t K) {
  if (K < 1) throw DomainError("recurrence constant must be >= 1");
  return 2 * (K + 1) * (2 * K + 3) * (2 * K + 3);
}

std::int64_t cassaigne_s_bound(std::int64_t K) {
  if (K < 1) throw DomainError("K must be >= 1");
  return 2 * K * (2 * K + 1) * (2 * K + 1);
}

}  // namespace subshift
