#include <random>

#include "doctest.h"

#include "hsa/free_element.hpp"
#include "hsa/json_io.hpp"
#include "hsa/random_elements.hpp"
#include "hsa/rational.hpp"
#include "hsa/word.hpp"

using namespace hsa;

namespace {
Word W(const char* s) { return Word::parse(s); }
FreeElement E(const char* s) { return FreeElement::word(W(s)); }
}  // namespace

TEST_CASE("word text format roundtrips") {
  CHECK(W("12321").str() == "12321");
  CHECK(W("e").str() == "e");
  CHECK(Word().str() == "e");
  CHECK(W("1").length() == 1);
  CHECK(W("e").length() == 0);

  // d > 9 switches to comma separation
  Word big;
  big = big.append(1).append(12).append(3);
  CHECK(big.str() == "1,12,3");
  CHECK(Word::parse("1,12,3") == big);
  CHECK(big.max_letter() == 12);
}

TEST_CASE("word parse rejects junk") {
  CHECK_THROWS(Word::parse("1a2"));
  CHECK_THROWS(Word::parse("0"));
  CHECK_THROWS(Word::parse("1,,2"));
}

TEST_CASE("concat") {
  CHECK(W("1").concat(W("2")) == W("12"));
  CHECK(W("e").concat(W("12")) == W("12"));
  CHECK(W("12").concat(W("21")) == W("1221"));
  CHECK(W("12").concat(W("21")).length() == 4);
}

TEST_CASE("prefix suffix front back") {
  const Word w = W("1221");
  CHECK(w.prefix(2) == W("12"));
  CHECK(w.suffix(1) == W("221"));
  CHECK(w.front() == 1);
  CHECK(w.back() == 1);
  CHECK(w.prefix(0) == Word());
}

TEST_CASE("canonical order is length then lex") {
  CHECK(word_canonical_less(W("2"), W("11")));
  CHECK(word_canonical_less(W("11"), W("12")));
  CHECK(word_canonical_less(Word(), W("1")));
  CHECK_FALSE(word_canonical_less(W("12"), W("12")));
  CHECK_FALSE(word_canonical_less(W("111"), W("22")));
}

TEST_CASE("all_words enumerates d^n in lex order") {
  const auto ws = all_words(2, 3);
  REQUIRE(ws.size() == 8);
  CHECK(ws.front() == W("111"));
  CHECK(ws.back() == W("222"));
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i - 1] < ws[i]);
}

TEST_CASE("rationals are exact and parse both forms") {
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat_factorial(6) == Rational(720));
  CHECK(rat_binomial(5, 2) == Rational(10));
  CHECK(rat_parse("3/6") == rat(1, 2));
  CHECK(rat_parse("-7") == Rational(-7));
  CHECK(rat_str_frac(rat(1, 2)) == "1/2");
  CHECK(rat_str_frac(Rational(3)) == "3/1");
  CHECK(rat_str_frac(rat(-1, 4)) == "-1/4");
}

TEST_CASE("pairing examples") {
  FreeElement f = E("12");
  f.add_term(W("21"), 2);
  CHECK(pairing(f, E("21")) == Rational(2));
  CHECK(pairing(FreeElement::unit(), FreeElement::unit()) == Rational(1));
  CHECK(pairing(E("12") - E("21"), E("12") + E("21")) == Rational(0));
}

TEST_CASE("pairing is bilinear and symmetric on random elements") {
  std::mt19937_64 rng(11);
  RandomElementConfig cfg;
  for (int i = 0; i < 40; ++i) {
    const FreeElement f = random_element(rng, cfg);
    const FreeElement g = random_element(rng, cfg);
    const FreeElement h = random_element(rng, cfg);
    const Rational a = rat(3, 2);
    CHECK(pairing(a * f + h, g) == a * pairing(f, g) + pairing(h, g));
    CHECK(pairing(f, g) == pairing(g, f));
  }
}

TEST_CASE("project_positive") {
  FreeElement f = FreeElement::unit() * Rational(3) + E("12");
  CHECK(project_positive(f) == E("12"));
  CHECK(project_positive(E("12")) == E("12"));
  CHECK(project_positive(FreeElement::unit() * Rational(5)).is_zero());
  CHECK(project_positive(f).empty_coeff() == Rational(0));
  CHECK(project_positive(f) + f.empty_coeff() * FreeElement::unit() == f);
}

TEST_CASE("truncate") {
  const FreeElement f = FreeElement::unit() + E("1") + E("12");
  CHECK(truncate(f, 1) == FreeElement::unit() + E("1"));
  CHECK(truncate(E("12"), 2) == E("12"));
  CHECK(truncate(E("121"), 2).is_zero());
}

TEST_CASE("canonical form drops zero coefficients") {
  FreeElement f = E("12");
  f.add_term(W("12"), -1);
  CHECK(f.is_zero());
  CHECK(f.support_size() == 0);

  FreeElement g = E("12") - E("21");
  FreeElement h = -(E("21") - E("12"));
  CHECK(g == h);
}

TEST_CASE("degree and is_positive") {
  CHECK(FreeElement().degree() == 0);
  CHECK((E("12") + E("121")).degree() == 3);
  CHECK(E("12").is_positive());
  CHECK_FALSE((E("12") + FreeElement::unit()).is_positive());
  CHECK(FreeElement().is_positive());  // zero lies in the positive part
}

TEST_CASE("human-readable str") {
  CHECK((E("12") - E("21") * Rational(2)).str() == "12 - 2*21");
  CHECK(FreeElement().str() == "0");
  CHECK(FreeElement::unit().str() == "e");
  CHECK((E("1") * rat(1, 2)).str() == "1/2*1");
}

TEST_CASE("free element JSON schema and roundtrip") {
  FreeElement f = E("12") * rat(-1, 2);
  f.add_term(W("2"), 3);
  const json j = free_element_to_json(f);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  // canonical order: length then lex, so "2" precedes "12"
  CHECK(j[0].at("word") == "2");
  CHECK(j[0].at("coeff") == "3/1");
  CHECK(j[1].at("word") == "12");
  CHECK(j[1].at("coeff") == "-1/2");
  CHECK(free_element_from_json(j) == f);

  std::mt19937_64 rng(5);
  RandomElementConfig cfg;
  for (int i = 0; i < 20; ++i) {
    const FreeElement g = random_element(rng, cfg);
    CHECK(free_element_from_json(free_element_to_json(g)) == g);
  }
}
