#include "subshift/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "subshift/block_code.hpp"
#include "subshift/catalog.hpp"
#include "subshift/error.hpp"
#include "subshift/language.hpp"
#include "subshift/recurrence.hpp"
#include "subshift/reference.hpp"
#include "subshift/search.hpp"
#include "subshift/special.hpp"
#include "subshift/sturmian.hpp"

namespace subshift::claims {

bool CriterionResult::passed() const noexcept {
  return within_time() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

constexpr int kChainDepth = 30;
constexpr int kDeepTable = 4 * kChainDepth + 1;
constexpr int kSearchRadius = 2;
constexpr int kSearchDepth = 12;

void expect(CriterionResult& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

TablePtr share(LanguageTable table) { return std::make_shared<const LanguageTable>(std::move(table)); }

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string census_text(const BranchCensus& census) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, e] : census.counts) {
    os << (first ? "" : ", ") << k << ": " << e.count;
    first = false;
  }
  os << "}";
  return os.str();
}

// Invertible codes of a search result, counted up to equality of the maps.
int invertible_classes(const SearchResult& result, int max_inverse_anticipation) {
  std::vector<SlidingBlockCode> classes;
  for (const auto& rep : result.reports) {
    if (!find_inverse(rep.code, max_inverse_anticipation, InverseMode::one_sided)) continue;
    const bool seen = std::any_of(classes.begin(), classes.end(),
                                  [&](const SlidingBlockCode& c) { return equals(c, rep.code); });
    if (!seen) classes.push_back(rep.code);
  }
  return static_cast<int>(classes.size());
}

// Shift-power exponents of every reported code; -1 marks a code that is not
// a shift power.
std::vector<int> shift_exponents(const SearchResult& result) {
  std::vector<int> out;
  for (const auto& r : result.reports) out.push_back(r.shift_power_equivalent.value_or(-1));
  return out;
}

void sturmian_complexity(CriterionResult& r) {
  const int n_max = 201;  // one extra level so special words of length 200 are visible
  for (const auto& [label, cf] : {std::pair{"Fibonacci cf (1,1,...)", catalog::fibonacci_cf()},
                                  std::pair{"cf (2,1,1,1,1,1)", catalog::skewed_cf()}}) {
    auto table = sturmian_language(cf, n_max);
    int bad_p = 0, bad_special = 0;
    for (int n = 1; n <= 200; ++n) {
      if (complexity(table, n) != n + 1) bad_p = bad_p ? bad_p : n;
      if (special_words(table, n, Side::left).size() != 1) bad_special = bad_special ? bad_special : n;
    }
    expect(r, std::string(label) + ": p(n) = n+1 for 1 <= n <= 200", bad_p == 0,
           bad_p ? "first failure at n = " + std::to_string(bad_p) : "200 lengths exact");
    expect(r, std::string(label) + ": one left-special factor per length", bad_special == 0,
           bad_special ? "first failure at n = " + std::to_string(bad_special) : "n = 1..200");
  }
}

void sturmian_automorphisms(CriterionResult& r) {
  auto table = share(sturmian_language(catalog::fibonacci_cf(), 64));
  auto result = enumerate_endomorphisms(table, kSearchRadius, kSearchDepth);
  auto exps = shift_exponents(result);
  const bool only_shifts = std::none_of(exps.begin(), exps.end(), [](int n) { return n < 0; });
  std::set<int> distinct(exps.begin(), exps.end());
  expect(r, "radius-2 depth-12 search returns only sigma^0, sigma^1, sigma^2",
         only_shifts && distinct == std::set<int>{0, 1, 2},
         std::to_string(result.reports.size()) + " codes, shift exponents [" + join_ints(exps) + "]");

  std::vector<const EndomorphismReport*> invertible;
  for (const auto& rep : result.reports) {
    if (find_inverse(rep.code, 2 * kSearchRadius, InverseMode::one_sided)) invertible.push_back(&rep);
  }
  const bool identity_only =
      !invertible.empty() && std::all_of(invertible.begin(), invertible.end(), [](auto* rep) {
        return rep->shift_power_equivalent == 0;
      });
  expect(r, "invertible subset is {sigma^0}", identity_only,
         std::to_string(invertible.size()) + " invertible codes, all equal to the identity");

  auto deep = sturmian_language(catalog::fibonacci_cf(), kDeepTable);
  auto census = branch_census(left_special_tree(deep, kChainDepth), {});
  const int bound = aut_upper_bound(census);
  expect(r, "branch census {2: 1} gives |Aut| <= 1", census.counts.size() == 1 &&
         census.counts.count(2) && census.counts.at(2).count == 1 && bound == 1,
         "census " + census_text(census));
  const int classes = invertible_classes(result, 2 * kSearchRadius);
  expect(r, "invertible classes <= aut bound", classes <= bound,
         std::to_string(classes) + " <= " + std::to_string(bound));
}

void acb_example(CriterionResult& r) {
  const auto theta = catalog::acb();
  auto table = share(build_language(theta, kDeepTable));
  auto periodic = certify_branch_periodic(theta, *table, 2);
  auto suffix = certify_branch_suffix(theta, *table, 2);
  std::vector<BranchPointCertificate> certs = periodic;
  certs.insert(certs.end(), suffix.begin(), suffix.end());
  auto tree = left_special_tree(*table, kChainDepth);
  auto census = branch_census(tree, certs);

  const bool census_ok = census.counts.size() == 1 && census.counts.count(2) &&
                         census.counts.at(2).count == 2 && census.counts.at(2).fully_certified();
  expect(r, "branch census = {2: 2}, both certified", census_ok, "census " + census_text(census));

  const Letter a = *theta.alphabet().code('a');
  const bool periodic_ok = periodic.size() == 1 &&
                           std::get<PeriodicFixedPoint>(periodic[0].kind).seed == a &&
                           periodic[0].order() == 2 && replay_certificate(periodic[0], theta, *table) > 0;
  expect(r, "PeriodicFixedPoint certificate for the fixed point seeded by a", periodic_ok,
         periodic.empty() ? "none" : "prefix " + theta.alphabet().decode(periodic[0].point_prefix.substr(0, 12)));

  int replayed = 0;
  bool head_ok = false;
  if (suffix.size() == 1) {
    const auto& cs = std::get<CommonSuffixLimit>(suffix[0].kind);
    head_ok = cs.period == 1 && theta.alphabet().decode(cs.head) == "a";
    replayed = replay_certificate(suffix[0], theta, *table);
  }
  expect(r, "CommonSuffixLimit certificate replays a theta(y) = y to depth >= 30",
         suffix.size() == 1 && head_ok && replayed >= 30,
         "replayed to depth " + std::to_string(replayed));

  const int bound = aut_upper_bound(census);
  expect(r, "aut_upper_bound = 2", bound == 2, "bound " + std::to_string(bound));

  auto result = enumerate_endomorphisms(table, kSearchRadius, kSearchDepth);
  auto exps = shift_exponents(result);
  expect(r, "radius-2 depth-12 search finds only shift powers",
         !exps.empty() && std::none_of(exps.begin(), exps.end(), [](int n) { return n < 0; }),
         std::to_string(result.reports.size()) + " codes, shift exponents [" + join_ints(exps) + "]");
  const int classes = invertible_classes(result, 2 * kSearchRadius);
  expect(r, "invertible classes <= aut bound", classes <= bound,
         std::to_string(classes) + " <= " + std::to_string(bound));
}

void hedlund_example(CriterionResult& r) {
  auto mirror = morse_mirror_system(14);
  const auto& table = *mirror.table;
  const auto& bin = table.alphabet();
  expect(r, "phi(1001) = 1, phi(1101) = 0, phi(0110) = 1",
         table.contains(bin.encode("1001")) && table.contains(bin.encode("1101")) &&
             bin.decode(apply(mirror.phi, bin.encode("1001"))) == "1" &&
             bin.decode(apply(mirror.phi, bin.encode("1101"))) == "0" &&
             bin.decode(apply(mirror.phi, bin.encode("0110"))) == "1");

  auto outcome = verify_endomorphism(mirror.phi, 20);
  expect(r, "phi passes verify_endomorphism at depth 20", outcome.verified(),
         outcome.witness ? "counterexample " + bin.decode(outcome.witness->factor) : "");

  auto square = compose(mirror.phi, mirror.phi);
  expect(r, "Phi^2 equals sigma^2", equals(square, shift_power(2, mirror.table)));

  std::vector<int> matched;
  for (int n = 0; n <= 6; ++n) {
    if (equals(mirror.phi, shift_power(n, mirror.table))) matched.push_back(n);
  }
  expect(r, "Phi differs from sigma^n for 0 <= n <= 6", matched.empty(),
         matched.empty() ? "" : "equal to sigma^" + join_ints(matched));

  auto root = find_root_relation(mirror.phi, 3, 6);
  expect(r, "least root relation is (2, 2)", root == std::pair{2, 2},
         root ? "(" + std::to_string(root->first) + ", " + std::to_string(root->second) + ")" : "none");
}

void bound_formulas(CriterionResult& r) {
  expect(r, "lr_aut_bound(1,2,3) = 100, 294, 648",
         lr_aut_bound(1) == 100 && lr_aut_bound(2) == 294 && lr_aut_bound(3) == 648);
  // 2K(2K+1)^2 is 294 at K = 3; the hand value 648 belongs to K = 4.
  expect(r, "cassaigne_s_bound(1,2,3,4) = 18, 100, 294, 648",
         cassaigne_s_bound(1) == 18 && cassaigne_s_bound(2) == 100 && cassaigne_s_bound(3) == 294 &&
             cassaigne_s_bound(4) == 648);
  bool coherent = true;
  for (int K = 1; K <= 100; ++K) coherent = coherent && lr_aut_bound(K) == cassaigne_s_bound(K + 1);
  expect(r, "lr_aut_bound(K) = cassaigne_s_bound(K+1) for K <= 100", coherent);
  expect(r, "substitution_root_bound(3) = 9", substitution_root_bound(3) == 9);
}

std::vector<std::pair<std::string, TablePtr>> example_tables() {
  return {
      {"Sturmian (1,1,...)", share(sturmian_language(catalog::fibonacci_cf(), kDeepTable))},
      {"Sturmian (2,1,1,...)", share(sturmian_language(catalog::skewed_cf(), kDeepTable))},
      {"Fibonacci substitution", share(build_language(catalog::fibonacci(), kDeepTable))},
      {"Thue-Morse", share(build_language(catalog::thue_morse(), kDeepTable))},
      {"acb substitution", share(build_language(catalog::acb(), kDeepTable))},
      {"Morse-mirror", morse_mirror_system(14, kDeepTable).table},
  };
}

void cassaigne_chain(CriterionResult& r) {
  for (const auto& [name, table] : example_tables()) {
    auto tree = left_special_tree(*table, kChainDepth);
    auto census = branch_census(tree, {});
    int max_s = 0;
    for (int n = 1; n <= kChainDepth; ++n) max_s = std::max(max_s, complexity_diff(*table, n));
    const int chains = static_cast<int>(tree.chains.size());
    expect(r, name + ": chains at depth 30 <= max s(n)", chains <= max_s,
           std::to_string(chains) + " <= " + std::to_string(max_s));
    auto asym = asymptotic_upper_bound(census);
    expect(r, name + ": order-sum bound >= census total", asym.upper_bound_total >= census.total(),
           std::to_string(asym.upper_bound_total) + " >= " + std::to_string(census.total()));
  }
}

void oracle_equivalence(CriterionResult& r) {
  const std::vector<std::pair<std::string, Substitution>> subs = {
      {"Fibonacci", catalog::fibonacci()},
      {"Thue-Morse", catalog::thue_morse()},
      {"acb", catalog::acb()}};
  for (const auto& [name, theta] : subs) {
    auto table = share(build_language(theta, kSearchDepth + 1));
    if (name != "acb") {
      for (int a = 0; a <= 1; ++a) {
        auto pruned = enumerate_endomorphisms(table, a, kSearchDepth);
        auto serial = enumerate_endomorphisms_serial(table, a, kSearchDepth);
        auto naive = reference::naive_endomorphism_rules(*table, a, kSearchDepth);
        std::set<std::vector<Letter>> fast, slow, ref(naive.begin(), naive.end());
        for (const auto& rep : pruned.reports) {
          if (rep.code.anticipation() == a) fast.emplace(rep.code.rule().begin(), rep.code.rule().end());
        }
        for (const auto& rep : serial.reports) {
          if (rep.code.anticipation() == a) slow.emplace(rep.code.rule().begin(), rep.code.rule().end());
        }
        expect(r, name + ": pruned search = naive enumeration at anticipation " + std::to_string(a),
               fast == ref && slow == ref, std::to_string(ref.size()) + " rules");
      }
    }
    auto brute = reference::brute_force_language(theta, 12);
    bool same = true;
    for (int n = 1; n <= 12; ++n) {
      auto f = table->factors(n);
      same = same && std::vector<Word>(f.begin(), f.end()) == brute[n - 1];
    }
    expect(r, name + ": build_language = brute-force subwords for n <= 12", same);
  }
}

void thue_morse_sanity(CriterionResult& r) {
  const std::vector<int> golden{2, 4, 6, 10, 12, 16, 20, 22, 24, 28};
  auto brute = reference::brute_force_language(catalog::thue_morse(), 10);
  std::vector<int> oracle;
  for (const auto& level : brute) oracle.push_back(static_cast<int>(level.size()));
  auto table = share(build_language(catalog::thue_morse(), 11));
  std::vector<int> built;
  for (int n = 1; n <= 10; ++n) built.push_back(complexity(*table, n));
  expect(r, "p(1..10) = (2,4,6,10,12,16,20,22,24,28)", oracle == golden && built == golden,
         "oracle [" + join_ints(oracle) + "], table [" + join_ints(built) + "]");

  auto result = enumerate_endomorphisms(table, 0, 10);
  const auto exchange = letter_map(table, {1, 0});
  bool found = false;
  for (const auto& rep : result.reports) found = found || equals(rep.code, exchange);
  expect(r, "0<->1 exchange found at radius 0", found && result.reports.size() == 2,
         std::to_string(result.reports.size()) + " radius-0 codes");
  auto root = find_root_relation(exchange, 4, 4);
  expect(r, "exchange root relation is (2, 0)", root == std::pair{2, 0});
}

struct Claim {
  int number;
  const char* group;
  const char* title;
  double limit;
  void (*body)(CriterionResult&);
};

const std::vector<Claim>& claim_table() {
  static const std::vector<Claim> all = {
      {1, "sturmian", "Sturmian complexity p(n) = n+1", 5.0, sturmian_complexity},
      {2, "sturmian-aut", "Sturmian automorphisms are trivial", 60.0, sturmian_automorphisms},
      {3, "acb", "acb substitution census and bound", 60.0, acb_example},
      {4, "hedlund", "Morse-mirror endomorphism with Phi^2 = sigma^2", 30.0, hedlund_example},
      {5, "bounds", "closed-form bounds", 1.0, bound_formulas},
      {6, "cassaigne", "chain count and order-sum inequalities", 10.0, cassaigne_chain},
      {7, "oracle", "pruned search and language builder match oracles", 120.0, oracle_equivalence},
      {8, "thue-morse", "Thue-Morse complexity and exchange code", 10.0, thue_morse_sanity},
  };
  return all;
}

}  // namespace

std::vector<std::string> groups() {
  std::vector<std::string> out;
  for (const auto& s : claim_table()) out.emplace_back(s.group);
  return out;
}

CriterionResult run(const std::string& group) {
  for (const auto& s : claim_table()) {
    if (group != s.group) continue;
    CriterionResult r;
    r.number = s.number;
    r.group = s.group;
    r.title = s.title;
    r.time_limit = s.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.body(r);
    } catch (const std::exception& e) {
      expect(r, "completed without error", false, e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw DomainError("unknown check group '" + group + "'");
}

std::vector<CriterionResult> run_all(const std::vector<std::string>& only) {
  for (const auto& g : only) {
    auto names = groups();
    if (std::find(names.begin(), names.end(), g) == names.end()) {
      throw DomainError("unknown check group '" + g + "'");
    }
  }
  std::vector<CriterionResult> out;
  for (const auto& s : claim_table()) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.group) == only.end()) continue;
    out.push_back(run(s.group));
  }
  return out;
}

}  // namespace subshift::claims
