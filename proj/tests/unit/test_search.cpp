#include <doctest.h>

#include <set>

#include "subshift/catalog.hpp"
#include "subshift/error.hpp"
#include "subshift/reference.hpp"
#include "subshift/search.hpp"
#include "subshift/special.hpp"
#include "subshift/sturmian.hpp"

using namespace subshift;

namespace {

TablePtr share(LanguageTable t) { return std::make_shared<const LanguageTable>(std::move(t)); }

std::set<std::vector<Letter>> rules_at(const SearchResult& r, int anticipation) {
  std::set<std::vector<Letter>> out;
  for (const auto& rep : r.reports) {
    if (rep.code.anticipation() == anticipation) out.emplace(rep.code.rule().begin(), rep.code.rule().end());
  }
  return out;
}

bool same_codes(const SearchResult& a, const SearchResult& b) {
  if (a.reports.size() != b.reports.size()) return false;
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    if (!(a.reports[i].code == b.reports[i].code)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("Sturmian shift: only shift powers up to radius 2") {
  const auto t = share(sturmian_language(catalog::fibonacci_cf(), 16));
  const auto found = enumerate_endomorphisms(t, 2, 12);
  std::set<int> powers;
  for (const auto& rep : found.reports) {
    REQUIRE(rep.shift_power_equivalent.has_value());
    CHECK(equals(rep.code, shift_power(*rep.shift_power_equivalent, t)));
    powers.insert(*rep.shift_power_equivalent);
    const bool invertible = find_inverse(rep.code, 4, InverseMode::one_sided).has_value();
    CHECK(invertible == (*rep.shift_power_equivalent == 0));
  }
  CHECK(powers == std::set<int>{0, 1, 2});
}

TEST_CASE("radius 0 finds the language-preserving letter maps") {
  const auto tm = share(build_language(catalog::thue_morse(), 12));
  const auto found = enumerate_endomorphisms(tm, 0, 10);
  REQUIRE(found.reports.size() == 2);
  CHECK(equals(found.reports[0].code, shift_power(0, tm)));
  CHECK(equals(found.reports[1].code, letter_map(tm, {1, 0})));

  const auto acb = share(build_language(catalog::acb(), 12));
  const auto only_id = enumerate_endomorphisms(acb, 0, 10);
  REQUIRE(only_id.reports.size() == 1);
  CHECK(only_id.reports[0].shift_power_equivalent == 0);
}

TEST_CASE("pruned search equals the unpruned oracle") {
  for (const auto& theta : {catalog::fibonacci(), catalog::thue_morse(), catalog::acb()}) {
    const auto t = share(build_language(theta, 12));
    for (int a = 0; a <= 1; ++a) {
      const auto naive = reference::naive_endomorphism_rules(*t, a, 10);
      const std::set<std::vector<Letter>> want(naive.begin(), naive.end());
      CHECK(rules_at(enumerate_endomorphisms(t, a, 10), a) == want);
      CHECK(rules_at(enumerate_endomorphisms_serial(t, a, 10), a) == want);
    }
  }
}

TEST_CASE("search output is deterministic and schedule independent") {
  const auto t = share(build_language(catalog::acb(), 16));
  const auto a = enumerate_endomorphisms(t, 2, 12);
  const auto b = enumerate_endomorphisms(t, 2, 12);
  const auto c = enumerate_endomorphisms_serial(t, 2, 12);
  SearchOptions serial;
  serial.parallel = false;
  const auto d = enumerate_endomorphisms(t, 2, 12, serial);
  CHECK(same_codes(a, b));
  CHECK(same_codes(a, c));
  CHECK(same_codes(a, d));
  for (std::size_t i = 1; i < a.reports.size(); ++i) CHECK(a.reports[i - 1].code < a.reports[i].code);
  for (const auto& rep : a.reports) CHECK(rep.shift_power_equivalent.has_value());
}

TEST_CASE("node budget is a hard error") {
  const auto t = share(build_language(catalog::acb(), 16));
  SearchOptions tiny;
  tiny.node_budget = 10;
  try {
    enumerate_endomorphisms(t, 2, 12, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes() > 10);
  }
  CHECK_THROWS_AS(enumerate_endomorphisms_serial(t, 2, 12, 10), BudgetExceeded);
}

TEST_CASE("search preconditions") {
  const auto t = share(build_language(catalog::acb(), 12));
  CHECK_THROWS_AS(enumerate_endomorphisms(t, 2, 2), DomainError);
  CHECK_THROWS_AS(enumerate_endomorphisms(t, 2, 11), DepthError);
  CHECK_THROWS_AS(enumerate_endomorphisms(t, -1, 4), DomainError);
}

TEST_CASE("invertible codes never exceed the census bound") {
  struct Case {
    TablePtr table;
    int bound;
  };
  std::vector<Case> cases;
  for (const auto& theta : {catalog::fibonacci(), catalog::thue_morse(), catalog::acb()}) {
    auto t = share(build_language(theta, 121));
    cases.push_back({t, aut_upper_bound(branch_census(left_special_tree(*t, 30), {}))});
  }
  auto sturm = share(sturmian_language(catalog::skewed_cf(), 121));
  cases.push_back({sturm, aut_upper_bound(branch_census(left_special_tree(*sturm, 30), {}))});

  for (const auto& [t, bound] : cases) {
    const int radius = 1;
    std::vector<SlidingBlockCode> invertible;
    for (const auto& rep : enumerate_endomorphisms(t, radius, 10).reports) {
      if (!find_inverse(rep.code, 2 * radius, InverseMode::one_sided)) continue;
      bool seen = false;
      for (const auto& c : invertible) seen = seen || equals(c, rep.code);
      if (!seen) invertible.push_back(rep.code);
    }
    CHECK(static_cast<int>(invertible.size()) <= bound);
    CHECK(invertible.size() >= 1);  // the identity
  }
}

}  // TEST_SUITE
