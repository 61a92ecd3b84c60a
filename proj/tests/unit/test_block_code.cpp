#include <doctest.h>

#include "subshift/block_code.hpp"
#include "subshift/catalog.hpp"
#include "subshift/error.hpp"
#include "subshift/sturmian.hpp"

using namespace subshift;

namespace {

TablePtr share(LanguageTable t) { return std::make_shared<const LanguageTable>(std::move(t)); }

const MorseMirror& mirror() {
  static const MorseMirror m = morse_mirror_system(14);
  return m;
}

const TablePtr& tm_table() {
  static const TablePtr t = share(build_language(catalog::thue_morse(), 24));
  return t;
}

const TablePtr& fib_table() {
  static const TablePtr t = share(build_language(catalog::fibonacci(), 24));
  return t;
}

// Endomorphisms of Thue-Morse: identity, exchange, sigma, exchange o sigma.
std::vector<SlidingBlockCode> tm_codes() {
  const auto& t = tm_table();
  const auto swap = letter_map(t, {1, 0});
  return {shift_power(0, t), swap, shift_power(1, t), compose(swap, shift_power(1, t))};
}

// x_i x_{i+1} -> x_i xor x_{i+1}: maps Thue-Morse onto the period-doubling
// shift, so not an endomorphism.
SlidingBlockCode tm_xor() {
  return SlidingBlockCode::from_function(tm_table(), 0, 1, [](const Word& w) {
    return static_cast<Letter>(letter_at(w, 0) ^ letter_at(w, 1));
  });
}

}  // namespace

TEST_SUITE("block-codes") {

TEST_CASE("Morse-mirror local rule") {
  const auto& [table, phi] = mirror();
  const auto& ab = table->alphabet();
  REQUIRE(table->contains(ab.encode("1001")));
  REQUIRE(table->contains(ab.encode("1101")));
  CHECK(ab.decode(apply(phi, ab.encode("1001"))) == "1");
  CHECK(ab.decode(apply(phi, ab.encode("1101"))) == "0");
  CHECK(ab.decode(apply(phi, ab.encode("0110"))) == "1");
  CHECK(phi.window() == 4);
  CHECK_THROWS_AS(apply(phi, ab.encode("011")), DomainError);
  CHECK_THROWS_AS(phi.output(ab.encode("0000")), DomainError);  // 0000 is not a factor
}

TEST_CASE("rules must cover exactly the window factors") {
  const auto& t = fib_table();
  CHECK_THROWS_AS(SlidingBlockCode(t, 0, 0, {0}), DomainError);
  CHECK_THROWS_AS(SlidingBlockCode(t, 0, 0, {0, 5}), DomainError);
  CHECK_NOTHROW(SlidingBlockCode(t, 0, 0, {0, 1}));
}

TEST_CASE("shift powers") {
  Alphabet ab("abcde");
  auto t = share(build_language_from_sequence(ab, ab.encode("abcdeabcdeabcde"), 6));
  CHECK(ab.decode(apply(shift_power(2, t), ab.encode("abcde"))) == "cde");
  CHECK(shift_power(0, t).window() == 1);

  const auto& fib = fib_table();
  CHECK(fib->alphabet().decode(apply(shift_power(1, fib), fib->alphabet().encode("0100"))) == "100");
  CHECK_THROWS_AS(shift_power(30, fib), DepthError);
  CHECK_THROWS_AS(shift_power(-1, fib), DomainError);
}

TEST_CASE("composition laws") {
  const auto& t = tm_table();
  const auto codes = tm_codes();
  const auto id = shift_power(0, t);
  for (const auto& c : codes) {
    CHECK(equals(compose(id, c), c));
    CHECK(equals(compose(c, id), c));
    CHECK(equals(c, c));
  }
  CHECK(equals(compose(shift_power(1, t), shift_power(1, t)), shift_power(2, t)));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(equals(compose(shift_power(m, t), shift_power(n, t)), shift_power(m + n, t)));

  for (const auto& f : codes)
    for (const auto& g : codes) {
      const auto fg = compose(f, g);
      for (const auto& w : t->factors(10)) CHECK(apply(fg, w) == apply(f, apply(g, w)));
      for (const auto& h : codes) CHECK(equals(compose(compose(f, g), h), compose(f, compose(g, h))));
    }
}

TEST_CASE("codes commute with the shift") {
  for (const auto& c : tm_codes()) {
    for (const auto& w : tm_table()->factors(12)) {
      CHECK(apply(c, w.substr(1)) == apply(c, w).substr(1));
    }
  }
  const auto& [table, phi] = mirror();
  for (const auto& w : table->factors(20)) CHECK(apply(phi, w.substr(1)) == apply(phi, w).substr(1));
}

TEST_CASE("Morse-mirror code is a square root of sigma^2") {
  const auto& [table, phi] = mirror();
  const auto square = compose(phi, phi);
  CHECK(equals(square, shift_power(2, table)));
  for (int n = 0; n <= 6; ++n) CHECK_FALSE(equals(phi, shift_power(n, table)));
  CHECK(find_root_relation(phi, 4, 8) == std::pair{2, 2});
  CHECK_FALSE(shift_power_match(phi).has_value());
  CHECK(code_power(phi, 2) == square);
}

TEST_CASE("root relations") {
  const auto& t = tm_table();
  CHECK(find_root_relation(shift_power(3, t), 4, 6) == std::pair{1, 3});
  CHECK(find_root_relation(letter_map(t, {1, 0}), 4, 6) == std::pair{2, 0});
  CHECK(shift_power_match(shift_power(2, t)) == 2);
  CHECK_FALSE(find_root_relation(letter_map(t, {1, 0}), 1, 6).has_value());
}

TEST_CASE("depth-bounded verification") {
  const auto& [table, phi] = mirror();
  const auto ok = verify_endomorphism(phi, 20);
  REQUIRE(ok.verified());
  CHECK(ok.report->verified_depth == 20);
  CHECK_FALSE(ok.report->shift_power_equivalent.has_value());

  for (int n = 0; n <= 3; ++n) {
    const auto out = verify_endomorphism(shift_power(n, fib_table()), 12);
    REQUIRE(out.verified());
    CHECK(out.report->shift_power_equivalent == n);
  }

  // Everything to 1: "11" is not a Fibonacci factor.
  const auto ones = letter_map(fib_table(), {1, 1});
  const auto bad = verify_endomorphism(ones, 12);
  CHECK_FALSE(bad.verified());
  REQUIRE(bad.witness.has_value());
  CHECK_FALSE(fib_table()->contains(bad.witness->image));
  CHECK(apply(ones, bad.witness->factor) == bad.witness->image);

  CHECK_THROWS_AS(verify_endomorphism(phi, 3), DomainError);
  CHECK_THROWS_AS(verify_endomorphism(phi, 70), DepthError);
}

TEST_CASE("inverses") {
  const auto& t = tm_table();
  const auto swap = letter_map(t, {1, 0});
  const auto inv = find_inverse(swap, 2, InverseMode::one_sided);
  REQUIRE(inv.has_value());
  CHECK(equals(inv->inverse, swap));

  CHECK_FALSE(find_inverse(shift_power(1, t), 2, InverseMode::one_sided).has_value());
  const auto mod = find_inverse(shift_power(1, t), 2, InverseMode::modulo_shift);
  REQUIRE(mod.has_value());
  CHECK(equals(compose(mod->inverse, shift_power(1, t)), shift_power(mod->left_shift, t)));
  CHECK(equals(compose(shift_power(1, t), mod->inverse), shift_power(mod->right_shift, t)));

  CHECK_FALSE(find_inverse(tm_xor(), 2, InverseMode::modulo_shift).has_value());
  CHECK_FALSE(verify_endomorphism(tm_xor(), 8).verified());
  // compose checks the inner image: xor images of length 3 can be 111.
  CHECK_THROWS_AS(compose(shift_power(0, t), compose(shift_power(2, t), tm_xor())), DomainError);
}

TEST_CASE("codes over different tables do not mix") {
  CHECK_THROWS_AS(equals(shift_power(0, tm_table()), shift_power(0, fib_table())), DomainError);
  CHECK_THROWS_AS(compose(shift_power(0, tm_table()), shift_power(0, fib_table())), DomainError);
}

TEST_CASE("Thue-Morse prefix") {
  const Word w = thue_morse_prefix(4);
  CHECK(Alphabet("01").decode(w) == "0110100110010110");
  CHECK_THROWS_AS(morse_mirror_system(5), DomainError);
}

}  // TEST_SUITE
