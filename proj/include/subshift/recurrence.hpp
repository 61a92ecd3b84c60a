#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "subshift/language.hpp"

namespace subshift {

/// Exact non-negative rational, kept reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  static Rational make(std::int64_t num, std::int64_t den);
  std::int64_t ceil() const { return (num + den - 1) / den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;
};

/// Return words to u observed in a probe word. A return word w has u as a
/// prefix, wu in the language, and exactly two occurrences of u in wu.
std::vector<Word> return_words(const LanguageTable& table, const Word& probe, const Word& u);

/// Checks the three defining clauses of a return word. Clause (b) is checked
/// against the table when |wu| fits, otherwise it is taken from the probe.
bool is_return_word(const LanguageTable& table, const Word& w, const Word& u);

struct ReturnWordIndex {
  std::size_t probe_length = 0;
  std::map<Word, std::vector<Word>> words;
};

ReturnWordIndex return_word_index(const LanguageTable& table, const Word& probe,
                                  int max_u_length);

struct RecurrenceEstimate {
  Rational K_hat;
  Word witness;  ///< factor u attaining K_hat
  int probe_max_u = 0;
  bool lower_bound_only = true;
};

/// max over factors u with |u| <= max_u_length of (longest return word) / |u|.
RecurrenceEstimate recurrence_constant(const LanguageTable& table, const Word& probe,
                                       int max_u_length);

/// 2(K+1)(2K+3)^2: bounds |Aut(X, sigma)|, |Aut(X-bar)/<sigma>|, and the
/// root index k of any endomorphism of a linearly recurrent shift.
std::int64_t lr_aut_bound(std::int64_t K);

/// 2K(2K+1)^2: eventual bound on s(n) when p(n) <= Kn + 1.
std::int64_t cassaigne_s_bound(std::int64_t K);

}  // namespace subshift
