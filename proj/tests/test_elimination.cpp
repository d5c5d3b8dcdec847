#include <random>
#include <vector>

#include "doctest.h"

#include "hsa/elimination.hpp"
#include "hsa/hall.hpp"
#include "hsa/json_io.hpp"
#include "hsa/random_elements.hpp"

using namespace hsa;

namespace {

Word W(const char* s) { return Word::parse(s); }
FreeElement E(const char* s) { return FreeElement::word(W(s)); }

}  // namespace

TEST_CASE("x letter trees are left combs") {
  CHECK(x_letter_tree({1, 0}, 2) == Tree::leaf(1));
  CHECK(x_letter_tree({1, 2}, 2) == Tree::parse("((1,2),2)"));
  CHECK(x_letter_tree({3, 1}, 1) == Tree::parse("(3,1)"));
  CHECK_THROWS_AS(x_letter_tree({2, 1}, 2), std::invalid_argument);
}

TEST_CASE("closed forms at small heights") {
  const ClosedForms f0 = closed_forms(1, 0, 2);
  CHECK(f0.lie == E("1"));
  CHECK(f0.integral == E("1"));
  CHECK(f0.area == E("1"));

  const ClosedForms f1 = closed_forms(1, 1, 2);
  CHECK(f1.lie == E("12") - E("21"));
  CHECK(f1.integral == E("12"));
  CHECK(f1.area == E("12") - E("21"));

  const ClosedForms f2 = closed_forms(1, 2, 2);
  CHECK(f2.lie == E("122") - Rational(2) * E("212") + E("221"));
  CHECK(f2.integral == Rational(2) * E("122"));
  CHECK(f2.area == Rational(2) * (E("122") - E("212")));

  CHECK_THROWS_AS(closed_forms(2, 3, 2), std::invalid_argument);
}

TEST_CASE("closed forms match tree evaluation up to height 6") {
  for (unsigned n = 0; n <= 6; ++n)
    for (Letter a = 1; a <= 2; ++a) {
      const Letter c = a == 1 ? 2 : 1;
      const Tree t = x_letter_tree({a, n}, c);
      const ClosedForms cf = closed_forms(a, n, c);
      CHECK(cf.lie == eval_tree(t, TreeProduct::lie));
      CHECK(cf.integral == eval_tree(t, TreeProduct::half_shuffle));
      CHECK(cf.area == eval_tree(t, TreeProduct::area));
    }
}

TEST_CASE("both comb relations vanish up to height 6") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto [r1, r2] = acn_relation_check(1, n, 2);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());
  }
  CHECK_THROWS_AS(acn_relation_check(1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(acn_relation_check(2, 2, 2), std::invalid_argument);
}

TEST_CASE("Z membership") {
  CHECK(is_in_Z(E("12"), 2));
  CHECK(is_in_Z(E("122") + E("31"), 2));
  CHECK_FALSE(is_in_Z(E("21"), 2));
  CHECK_FALSE(is_in_Z(E("12") + FreeElement::unit(), 2));
  CHECK(is_in_Z(FreeElement::zero(), 2));
}

TEST_CASE("Z is closed under the half shuffle and the shuffle") {
  std::mt19937_64 rng(5);
  RandomElementConfig cfg;
  cfg.d = 3;
  cfg.max_len = 3;
  cfg.terms = 4;
  cfg.allow_empty_word = false;
  for (int rep = 0; rep < 20; ++rep) {
    const SeriesInC sf = decompose_series(random_element(rng, cfg), 3);
    const SeriesInC sg = decompose_series(random_element(rng, cfg), 3);
    const FreeElement z1 = sf.z[0], z2 = sg.z[0];
    REQUIRE(is_in_Z(z1, 3));
    REQUIRE(is_in_Z(z2, 3));
    CHECK(is_in_Z(half_shuffle(z1, z2), 3));
    CHECK(is_in_Z(shuffle(z1, z2) - shuffle(z1, z2).empty_coeff() * FreeElement::unit(), 3));
  }
}

TEST_CASE("series decomposition of single words") {
  const SeriesInC s21 = decompose_series(E("21"), 2);
  CHECK(s21.c == 2);
  REQUIRE(s21.z.size() == 2);
  CHECK(s21.z[0] == Rational(-1) * E("12"));
  CHECK(s21.z[1] == E("1"));
  CHECK(s21.scalar_slots[0] == 0);
  CHECK(s21.scalar_slots[1] == 0);

  const SeriesInC s12 = decompose_series(E("12"), 2);
  REQUIRE(s12.z.size() == 1);
  CHECK(s12.z[0] == E("12"));

  const SeriesInC s22 = decompose_series(E("22"), 2);
  REQUIRE(s22.z.size() == 3);
  CHECK(s22.z[0].is_zero());
  CHECK(s22.z[1].is_zero());
  CHECK(s22.z[2].is_zero());
  CHECK(s22.scalar_slots[2] == rat(1, 2));

  const SeriesInC se = decompose_series(FreeElement::unit(), 2);
  REQUIRE(se.z.size() == 1);
  CHECK(se.z[0].is_zero());
  CHECK(se.scalar_slots[0] == 1);
}

TEST_CASE("decomposition reconstructs every short word") {
  for (unsigned d : {2u, 3u})
    for (std::size_t n = 0; n <= 4; ++n)
      for (const Word& w : all_words(d, n)) {
        const FreeElement f = FreeElement::word(w);
        const SeriesInC s = decompose_series(f, static_cast<Letter>(d));
        CHECK(s.reconstruct() == f);
        for (const FreeElement& zk : s.z) CHECK(is_in_Z(zk, static_cast<Letter>(d)));
      }
}

TEST_CASE("decomposition reconstructs random elements") {
  std::mt19937_64 rng(17);
  RandomElementConfig cfg;
  cfg.d = 2;
  cfg.max_len = 5;
  cfg.terms = 6;
  for (int rep = 0; rep < 25; ++rep) {
    const FreeElement f = random_element(rng, cfg);
    const SeriesInC s = decompose_series(f, 2);
    CHECK(s.reconstruct() == f);
    for (const FreeElement& zk : s.z) CHECK(is_in_Z(zk, 2));
  }
}

TEST_CASE("j maps X words into Z as a right-nested half shuffle") {
  CHECK(j_c({}, 2) == FreeElement::unit());
  CHECK(j_c({{1, 0}}, 2) == E("1"));
  CHECK(j_c({{1, 1}}, 2) == E("12"));
  CHECK(j_c({{1, 2}}, 2) == E("122"));
  CHECK(j_c({XLetter{1, 1}, XLetter{3, 0}}, 2) == E("123") + E("132"));
  CHECK_THROWS_AS(j_c({{2, 1}}, 2), std::invalid_argument);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> base(0, 1);
  std::uniform_int_distribution<unsigned> height(0, 2);
  std::uniform_int_distribution<int> len(1, 3);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<XLetter> xw;
    const int m = len(rng);
    for (int i = 0; i < m; ++i)
      xw.push_back({static_cast<Letter>(base(rng) == 0 ? 1 : 3), height(rng)});
    const FreeElement img = j_c(xw, 2);
    CHECK(is_in_Z(img, 2));
    const std::vector<XLetter> rest(xw.begin() + 1, xw.end());
    CHECK(img == half_shuffle(j_c({xw.front()}, 2), j_c(rest, 2)));
  }
}

TEST_CASE("hall trees re-parse over the derived alphabet") {
  for (unsigned d : {2u, 3u}) {
    const Letter c = static_cast<Letter>(d);
    const HallSet H = HallSet::generate(d, HallOrderKind::lyndon, 5);
    for (const Tree& t : H.all_trees()) {
      if (t == Tree::leaf(c))
        CHECK_FALSE(tree_is_x_parseable(t, c));
      else
        CHECK(tree_is_x_parseable(t, c));
    }
  }
  CHECK_FALSE(tree_is_x_parseable(Tree::parse("(2,1)"), 2));
  CHECK_FALSE(tree_is_x_parseable(Tree::parse("((1,(1,2)),2)"), 2));
}

TEST_CASE("series JSON carries c, coefficients, scalar slots") {
  const SeriesInC s = decompose_series(E("21") + E("22"), 2);
  const json j = series_in_c_to_json(s);
  CHECK(j.at("c") == 2);
  REQUIRE(j.at("coefficients").size() == s.z.size());
  CHECK(j.at("coefficients")[1][0].at("word") == "1");
  CHECK(j.at("scalar_slots")[2] == "1/2");
}
