#include <doctest.h>

#include "subshift/catalog.hpp"
#include "subshift/error.hpp"
#include "subshift/json_io.hpp"
#include "subshift/sturmian.hpp"

using namespace subshift;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("tables round-trip") {
  for (const auto& t : {build_language(catalog::acb(), 10), sturmian_language(catalog::skewed_cf(), 10)}) {
    const json doc = to_json(t);
    const auto back = table_from_json(json::parse(doc.dump()));
    CHECK(back == t);
    CHECK(back.provenance().kind == t.provenance().kind);
    CHECK(back.provenance().details == t.provenance().details);
    CHECK(to_json(back) == doc);
  }
}

TEST_CASE("malformed tables are rejected") {
  json doc = to_json(build_language(catalog::fibonacci(), 4));
  doc["factors"]["2"].push_back("11");
  CHECK_THROWS_AS(table_from_json(doc), DomainError);
  json missing = to_json(build_language(catalog::fibonacci(), 4));
  missing.erase("factors");
  CHECK_THROWS_AS(table_from_json(missing), DomainError);
}

TEST_CASE("codes round-trip") {
  const auto m = morse_mirror_system(12, 16);
  const json doc = to_json(m.phi);
  CHECK(doc.at("memory") == 0);
  CHECK(doc.at("anticipation") == 3);
  CHECK(doc.at("rule").size() == m.table->factors(4).size());
  CHECK(code_from_json(doc, m.table) == m.phi);

  json partial = doc;
  partial["rule"].erase(partial["rule"].begin());
  CHECK_THROWS_AS(code_from_json(partial, m.table), DomainError);
  json foreign = doc;
  foreign["rule"][0][0] = "0000";
  CHECK_THROWS_AS(code_from_json(foreign, m.table), DomainError);
}

TEST_CASE("report records") {
  const auto m = morse_mirror_system(12, 32);
  const auto out = verify_endomorphism(m.phi, 10);
  REQUIRE(out.verified());
  const json rep = to_json(*out.report);
  CHECK(rep.at("verified_depth") == 10);
  CHECK(rep.at("shift_power_equivalent").is_null());

  const json r = to_json(Rational::make(7, 2));
  CHECK(r.at("num") == 7);
  CHECK(r.at("den") == 2);

  const auto theta = catalog::acb();
  const auto t = build_language(theta, 40);
  const auto certs = certify_branch_suffix(theta, t, 1);
  REQUIRE(certs.size() == 1);
  const json c = to_json(certs[0], theta.alphabet());
  CHECK(c.at("variant") == "CommonSuffixLimit");
  CHECK(c.at("head") == "a");
  CHECK(c.at("order") == 2);
  CHECK(c.at("point_prefix").get<std::string>().rfind("aacbacbacaaba", 0) == 0);
}

}  // TEST_SUITE
