#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "subshift/catalog.hpp"
#include "subshift/error.hpp"
#include "subshift/recurrence.hpp"

using namespace subshift;

namespace {

struct System {
  const char* name;
  LanguageTable table;
  Word probe;
};

const std::vector<System>& systems() {
  static const std::vector<System> all = [] {
    std::vector<System> out;
    out.push_back({"Fibonacci", build_language(catalog::fibonacci(), 40), oracle::fibonacci(20000)});
    out.push_back({"Thue-Morse", build_language(catalog::thue_morse(), 40), oracle::thue_morse(1u << 15)});
    out.push_back({"acb", build_language(catalog::acb(), 40),
                   catalog::fixed_point_prefix(catalog::acb(), 30000)});
    return out;
  }();
  return all;
}

// Largest gap between consecutive occurrences of any factor u, |u| <= m, as
// (gap, |u|) maximising gap / |u|.
Rational scan_K(const LanguageTable& t, const Word& probe, int m) {
  Rational best = Rational::make(0, 1);
  for (int n = 1; n <= m; ++n) {
    for (const auto& u : t.factors(n)) {
      std::size_t last = probe.find(u), gap = 0;
      for (auto at = probe.find(u, last + 1); at != Word::npos; at = probe.find(u, at + 1)) {
        gap = std::max(gap, at - last);
        last = at;
      }
      const auto r = Rational::make(static_cast<std::int64_t>(gap), n);
      if (best < r) best = r;
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("recurrence") {

TEST_CASE("rationals stay reduced") {
  const auto r = Rational::make(6, 4);
  CHECK(r.num == 3);
  CHECK(r.den == 2);
  CHECK(r.ceil() == 2);
  CHECK(Rational::make(4, 2).ceil() == 2);
  CHECK(Rational::make(1, 3) < Rational::make(1, 2));
  CHECK_THROWS_AS(Rational::make(1, 0), DomainError);
}

TEST_CASE("Fibonacci return words") {
  const auto& fib = systems()[0];
  const auto& ab = fib.table.alphabet();
  std::vector<std::string> words;
  for (const auto& w : return_words(fib.table, fib.probe, ab.encode("0"))) words.push_back(ab.decode(w));
  CHECK(words == std::vector<std::string>{"0", "01"});

  words.clear();
  for (const auto& w : return_words(fib.table, fib.probe, ab.encode("01"))) words.push_back(ab.decode(w));
  CHECK(words == std::vector<std::string>{"01", "010"});
}

TEST_CASE("return words match an occurrence scan") {
  for (const auto& s : systems()) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& u : s.table.factors(n)) {
        std::set<Word> want;
        std::size_t last = s.probe.find(u);
        for (auto at = s.probe.find(u, last + 1); at != Word::npos; at = s.probe.find(u, at + 1)) {
          if (at - last >= u.size()) want.insert(s.probe.substr(last, at - last));
          last = at;
        }
        const auto got = return_words(s.table, s.probe, u);
        CHECK(std::set<Word>(got.begin(), got.end()) == want);
        for (const auto& w : got) CHECK(is_return_word(s.table, w, u));
      }
    }
  }
}

TEST_CASE("return word clauses") {
  const auto& fib = systems()[0];
  const auto& ab = fib.table.alphabet();
  CHECK(is_return_word(fib.table, ab.encode("01"), ab.encode("0")));
  CHECK_FALSE(is_return_word(fib.table, ab.encode("1"), ab.encode("0")));    // u not a prefix
  CHECK_FALSE(is_return_word(fib.table, ab.encode("010"), ab.encode("0")));  // three occurrences
  CHECK_FALSE(is_return_word(fib.table, ab.encode("011"), ab.encode("0")));  // not in the language
}

TEST_CASE("short probes and foreign words are errors") {
  const auto& fib = systems()[0];
  const auto& ab = fib.table.alphabet();
  CHECK_THROWS_AS(return_words(fib.table, ab.encode("0100"), ab.encode("00")), DomainError);
  CHECK_THROWS_AS(return_words(fib.table, fib.probe, ab.encode("11")), DomainError);
}

TEST_CASE("recurrence constant matches the brute-force scan") {
  const auto& fib = systems()[0];
  const auto one = recurrence_constant(fib.table, fib.probe, 1);
  CHECK(one.K_hat == Rational::make(3, 1));
  CHECK(fib.table.alphabet().decode(one.witness) == "1");
  CHECK(one.lower_bound_only);

  for (const auto& s : systems()) {
    for (int m : {1, 4, 8}) {
      const auto est = recurrence_constant(s.table, s.probe, m);
      CHECK_MESSAGE(est.K_hat == scan_K(s.table, s.probe, m), s.name << " m=" << m);
      CHECK(est.probe_max_u == m);
    }
  }
}

TEST_CASE("recurrence constant is monotone in max_u_length") {
  for (const auto& s : systems()) {
    Rational previous = Rational::make(1, 1);
    for (int m = 1; m <= 10; ++m) {
      const auto k = recurrence_constant(s.table, s.probe, m).K_hat;
      CHECK_FALSE(k < previous);
      previous = k;
    }
  }
}

TEST_CASE("complexity stays below ceil(K) n + 1 for large n") {
  constexpr int kExempt = 5;
  for (const auto& s : systems()) {
    const auto K = recurrence_constant(s.table, s.probe, 8).K_hat.ceil();
    for (int n = 1; n <= s.table.max_length(); ++n) {
      const bool ok = complexity(s.table, n) <= K * n + 1;
      if (n <= kExempt) {
        if (!ok) MESSAGE(s.name << ": small-n exception at n=" << n);
      } else {
        CHECK_MESSAGE(ok, s.name << " n=" << n);
      }
    }
  }
}

TEST_CASE("closed-form bounds") {
  CHECK(lr_aut_bound(1) == 100);
  CHECK(lr_aut_bound(2) == 294);
  CHECK(lr_aut_bound(3) == 648);
  CHECK(cassaigne_s_bound(1) == 18);
  CHECK(cassaigne_s_bound(2) == 100);
  CHECK(cassaigne_s_bound(3) == 294);
  CHECK(cassaigne_s_bound(4) == 648);
  for (std::int64_t K = 1; K <= 100; ++K) CHECK(lr_aut_bound(K) == cassaigne_s_bound(K + 1));
  CHECK_THROWS_AS(lr_aut_bound(0), DomainError);
  CHECK_THROWS_AS(cassaigne_s_bound(0), DomainError);
}

TEST_CASE("return word index replays the definition") {
  for (const auto& s : systems()) {
    const auto index = return_word_index(s.table, s.probe, 5);
    CHECK(index.probe_length == s.probe.size());
    for (const auto& [u, words] : index.words) {
      CHECK_FALSE(words.empty());
      for (const auto& w : words) CHECK(is_return_word(s.table, w, u));
    }
  }
}

}  // TEST_SUITE
