#include <doctest.h>

#include "subshift/catalog.hpp"
#include "subshift/error.hpp"
#include "subshift/special.hpp"
#include "subshift/sturmian.hpp"

using namespace subshift;

namespace {

const LanguageTable& acb_table() {
  static const LanguageTable t = build_language(catalog::acb(), 121);
  return t;
}

BranchCensus census_of(std::map<int, int> counts) {
  BranchCensus c;
  for (auto [k, m] : counts) c.counts[k].count = m;
  return c;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("left-special tree of a Sturmian shift has one chain") {
  const auto t = sturmian_language(catalog::fibonacci_cf(), 200);
  const auto tree = left_special_tree(t, 40);
  REQUIRE(tree.chains.size() == 1);
  CHECK(tree.chains[0].order() == 2);
  for (const auto& level : tree.levels) {
    REQUIRE(level.size() == 1);
    CHECK(level[0].extensions.size() == 2);
  }
}

TEST_CASE("acb tree has two order-2 chains") {
  const auto tree = left_special_tree(acb_table(), 30);
  REQUIRE(tree.chains.size() == 2);
  for (const auto& c : tree.chains) CHECK(c.order() == 2);
}

TEST_CASE("chain counts are stable in depth") {
  const auto tm = build_language(catalog::thue_morse(), 121);
  int previous = 1 << 30;
  for (int depth : {6, 10, 15, 20, 30}) {
    const auto tree = left_special_tree(tm, depth);
    const int count = static_cast<int>(tree.chains.size());
    CHECK(count <= previous);
    CHECK(count >= 1);
    previous = count;
  }
  // Thue-Morse: the two branch points are exchanged by 0 <-> 1.
  CHECK(previous == 2);
}

TEST_CASE("extension sets never grow along a chain") {
  const auto tree = left_special_tree(acb_table(), 25);
  for (std::size_t n = 1; n < tree.levels.size(); ++n) {
    for (const auto& node : tree.levels[n]) {
      const auto& parent = tree.levels[n - 1][node.parent];
      CHECK(node.extensions.size() <= parent.extensions.size());
      CHECK(parent.word == node.word.substr(0, n));
    }
  }
}

TEST_CASE("tree needs room for the lookahead") {
  CHECK_THROWS_AS(left_special_tree(acb_table(), 40), DepthError);
  CHECK_NOTHROW(left_special_tree(acb_table(), 40, 60));
}

TEST_CASE("periodic certificate for the acb fixed point") {
  const auto theta = catalog::acb();
  const auto certs = certify_branch_periodic(theta, acb_table(), 2);
  REQUIRE(certs.size() == 1);
  const auto& cert = certs[0];
  CHECK(cert.is_periodic());
  CHECK(std::get<PeriodicFixedPoint>(cert.kind).seed == 0);
  CHECK(cert.order() == 2);
  CHECK(theta.alphabet().decode(cert.point_prefix.substr(0, 9)) == "acbacaaba");
  CHECK(replay_certificate(cert, theta, acb_table()) >= 30);
}

TEST_CASE("suffix certificate for y = a theta(y)") {
  const auto theta = catalog::acb();
  const auto& ab = theta.alphabet();
  const auto certs = certify_branch_suffix(theta, acb_table(), 1);
  REQUIRE(certs.size() == 1);
  const auto& cert = certs[0];
  const auto& limit = std::get<CommonSuffixLimit>(cert.kind);
  CHECK(ab.decode(limit.head) == "a");
  CHECK(limit.sharing_letters == std::vector<Letter>{1, 2});
  CHECK(cert.order() == 2);

  // y_0 = a, y_{k+1} = a theta(y_k)
  Word y = ab.encode("a");
  for (int i = 0; i < 6; ++i) y = ab.encode("a") + substitute(theta, y);
  CHECK(cert.point_prefix.substr(0, 100) == y.substr(0, 100));
  CHECK(replay_certificate(cert, theta, acb_table()) >= 30);

  auto broken = cert;
  broken.point_prefix[5] = static_cast<char>((broken.point_prefix[5] + 1) % 3);
  CHECK(replay_certificate(broken, theta, acb_table()) == 0);
}

TEST_CASE("Fibonacci certificates") {
  const auto theta = catalog::fibonacci();
  const auto table = build_language(theta, 60);
  // theta(0) = 01 and theta(1) = 0 end in the wrong letters; theta^2(0) = 010 and
  // theta^2(1) = 01 end in 0 and 1, and both 00 and 10 are factors.
  const auto periodic = certify_branch_periodic(theta, table, 1);
  CHECK(periodic.empty());
  const auto two = certify_branch_periodic(theta, table, 2);
  REQUIRE(two.size() == 1);
  CHECK(std::get<PeriodicFixedPoint>(two[0].kind).period == 2);
  CHECK(std::get<PeriodicFixedPoint>(two[0].kind).seed == 0);
  CHECK(two[0].order() == 2);

  // Final letters of theta^q(0) and theta^q(1) always differ, so no common suffix.
  for (int q = 1; q <= 8; ++q) {
    const Word a = iterate(theta, 0, q), b = iterate(theta, 1, q);
    CHECK(a.back() != b.back());
  }
  CHECK(certify_branch_suffix(theta, table, 8).empty());
}

TEST_CASE("empty certificate lists") {
  // No letter starts its own image until the second power.
  const auto swap = Substitution::from_rules({{'a', "ba"}, {'b', "ab"}});
  const auto t = build_language(swap, 20);
  CHECK(certify_branch_periodic(swap, t, 1).empty());
  // Thue-Morse images end in distinct letters at every power.
  const auto tm = catalog::thue_morse();
  CHECK(certify_branch_suffix(tm, build_language(tm, 40), 4).empty());
}

TEST_CASE("acb census") {
  const auto theta = catalog::acb();
  auto certs = certify_branch_periodic(theta, acb_table(), 2);
  const auto suffix = certify_branch_suffix(theta, acb_table(), 2);
  certs.insert(certs.end(), suffix.begin(), suffix.end());
  const auto census = branch_census(left_special_tree(acb_table(), 30), certs);
  REQUIRE(census.counts.size() == 1);
  CHECK(census.counts.at(2).count == 2);
  CHECK(census.counts.at(2).fully_certified());
  CHECK(census.unmatched_certificates.empty());
  CHECK(aut_upper_bound(census) == 2);
  const auto asym = asymptotic_upper_bound(census);
  CHECK(asym.upper_bound_total == 4);
  CHECK(asym.two_sided_bound == 2);
  CHECK_FALSE(asym.exact);
}

TEST_CASE("Sturmian census without certificates") {
  const auto t = sturmian_language(catalog::skewed_cf(), 200);
  const auto census = branch_census(left_special_tree(t, 40), {});
  CHECK(census.counts.at(2).count == 1);
  CHECK(census.counts.at(2).certified == 0);
  CHECK(aut_upper_bound(census) == 1);
  const auto asym = asymptotic_upper_bound(census);
  CHECK(asym.upper_bound_total == 2);
  CHECK(asym.two_sided_bound == 1);
}

TEST_CASE("census bounds") {
  CHECK(aut_upper_bound(census_of({{2, 2}})) == 2);
  CHECK(aut_upper_bound(census_of({{2, 1}})) == 1);
  CHECK(aut_upper_bound(census_of({{2, 5}, {3, 1}})) == 1);
  CHECK_THROWS_AS(aut_upper_bound(census_of({})), DomainError);
  CHECK_THROWS_AS(asymptotic_upper_bound(census_of({})), DomainError);
  CHECK(asymptotic_upper_bound(census_of({{2, 5}, {3, 1}})).upper_bound_total == 13);

  const auto exact = asymptotic_census_from_classes({2, 2, 3});
  CHECK(exact.exact);
  CHECK(exact.class_size_counts == std::map<int, int>{{2, 2}, {3, 1}});
  CHECK(exact.two_sided_bound == 1);
  CHECK_THROWS_AS(asymptotic_census_from_classes({1}), DomainError);
  CHECK_THROWS_AS(asymptotic_census_from_classes({}), DomainError);
}

TEST_CASE("substitution root bound") {
  CHECK(substitution_root_bound(2) == 4);
  CHECK(substitution_root_bound(3) == 9);
  CHECK(substitution_root_bound(10) == 100);
  CHECK_THROWS_AS(substitution_root_bound(1), DomainError);
}

}  // TEST_SUITE
