#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <vector>

#include "doctest.h"

#include "hsa/products.hpp"
#include "hsa/random_elements.hpp"
#include "hsa/sig_kernels.hpp"
#include "hsa/signature.hpp"

using namespace hsa;

namespace {

Word W(const char* s) { return Word::parse(s); }
FreeElement E(const char* s) { return FreeElement::word(W(s)); }

PiecewisePath line(std::vector<double> from, std::vector<double> to) {
  PiecewisePath p;
  p.dim = from.size();
  p.points = {std::move(from), std::move(to)};
  return p;
}

// axis staircase: first move e1, then e2
PiecewisePath staircase() {
  PiecewisePath p;
  p.dim = 2;
  p.points = {{0, 0}, {1, 0}, {1, 1}};
  return p;
}

}  // namespace

TEST_CASE("signature of one linear segment") {
  const NumericTensor s = signature(line({0, 0}, {1, 2}), 2);
  CHECK(s.levels[0][0] == 1.0);
  CHECK(s.levels[1][0] == doctest::Approx(1.0));
  CHECK(s.levels[1][1] == doctest::Approx(2.0));
  // level 2 of exp: outer(inc,inc)/2
  CHECK(s.levels[2][word_index(W("11"), 2)] == doctest::Approx(0.5));
  CHECK(s.levels[2][word_index(W("12"), 2)] == doctest::Approx(1.0));
  CHECK(s.levels[2][word_index(W("21"), 2)] == doctest::Approx(1.0));
  CHECK(s.levels[2][word_index(W("22"), 2)] == doctest::Approx(2.0));
}

TEST_CASE("staircase signature orders the letters") {
  const NumericTensor s = signature(staircase(), 3);
  CHECK(pair_numeric(FreeElement::unit(), s) == 1.0);
  CHECK(pair_numeric(E("12"), s) == doctest::Approx(1.0));
  CHECK(pair_numeric(E("21"), s) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(pair_numeric(E("112"), s) == doctest::Approx(0.5));
  CHECK(pair_numeric(E("1"), s) == doctest::Approx(1.0));
}

TEST_CASE("area functionals distinguish staircase from chord") {
  const FreeElement a = area(E("1"), E("2"));
  CHECK(pair_numeric(a, signature(staircase(), 2)) == doctest::Approx(1.0));
  CHECK(pair_numeric(a, signature(line({0, 0}, {1, 1}), 2)) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("word index is the mixed-radix position") {
  CHECK(word_index(Word(), 3) == 0);
  CHECK(word_index(W("1"), 3) == 0);
  CHECK(word_index(W("3"), 3) == 2);
  CHECK(word_index(W("12"), 3) == 1);
  CHECK(word_index(W("31"), 3) == 6);
}

TEST_CASE("pairing requires a deep enough truncation") {
  const NumericTensor s = signature(staircase(), 1);
  CHECK_THROWS(pair_numeric(E("12"), s));
}

TEST_CASE("chen consistency at every interior split") {
  std::mt19937_64 rng(3);
  const PiecewisePath p = random_path(rng, 3, 6);
  for (std::size_t split = 1; split < 6; ++split)
    CHECK(chen_consistency(p, 5, split) <= 1e-10);
}

TEST_CASE("shuffle identity holds numerically") {
  const PiecewisePath ax = staircase();
  CHECK(check_shuffle_identity(E("1"), E("2"), ax, 3) <= 1e-12);
  CHECK(check_shuffle_identity(E("12"), E("1"), ax, 4) <= 1e-12);

  std::mt19937_64 rng(9);
  RandomElementConfig cfg;
  cfg.d = 2;
  cfg.max_len = 3;
  cfg.terms = 3;
  for (int rep = 0; rep < 20; ++rep) {
    const PiecewisePath p = random_path(rng, 2, 4);
    const FreeElement f = random_element(rng, cfg);
    const FreeElement g = random_element(rng, cfg);
    CHECK(check_shuffle_identity(f, g, p, 6) <= 1e-9);
  }
}

TEST_CASE("signature is invariant under parameter refinement") {
  std::mt19937_64 rng(12);
  const PiecewisePath p = random_path(rng, 2, 4);
  PiecewisePath refined;
  refined.dim = 2;
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i) {
    const auto &a = p.points[i], &b = p.points[i + 1];
    refined.points.push_back(a);
    refined.points.push_back({(a[0] + b[0]) / 2, (a[1] + b[1]) / 2});
  }
  refined.points.push_back(p.points.back());

  const NumericTensor s1 = signature(p, 5);
  const NumericTensor s2 = signature(refined, 5);
  for (int k = 0; k <= 5; ++k)
    for (std::size_t i = 0; i < s1.levels[k].size(); ++i)
      CHECK(s1.levels[k][i] == doctest::Approx(s2.levels[k][i]).epsilon(1e-10));
}

TEST_CASE("sparse per-word coefficients match the dense tensor") {
  std::mt19937_64 rng(21);
  const PiecewisePath p = random_path(rng, 3, 5);
  const NumericTensor s = signature(p, 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Word& w : all_words(3, n)) {
      const double dense = pair_numeric(FreeElement::word(w), s);
      const double sparse = sig_word_coefficient(p, w);
      CHECK(std::fabs(dense - sparse) <= 1e-12 * std::max(1.0, std::fabs(dense)));
    }

  RandomElementConfig cfg;
  cfg.d = 3;
  cfg.max_len = 4;
  cfg.terms = 5;
  const FreeElement f = random_element(rng, cfg);
  CHECK(pair_numeric_sparse(f, p) == doctest::Approx(pair_numeric(f, s)).epsilon(1e-12));
}

TEST_CASE("half shuffle integration is exact for FTC cases") {
  std::mt19937_64 rng(31);
  const PiecewisePath p = random_path(rng, 2, 5);
  // e as integrand: e ≺ f vanishes identically
  CHECK(check_halfshuffle_integration(FreeElement::unit(), E("12"), p, 4, 7) <= 1e-12);
  // integrating against e reduces to the fundamental theorem of calculus
  CHECK(check_halfshuffle_integration(E("12"), FreeElement::unit(), p, 4, 7) <= 1e-12);
  CHECK(check_halfshuffle_integration(E("1") + E("21"), FreeElement::unit(), p, 4, 3) <= 1e-12);
}

TEST_CASE("half shuffle integration converges on refinement") {
  // generic slopes so the Riemann error is genuinely ~ C/N with C != 0
  // (on axis staircases the sum telescopes and is exact at any partition)
  PiecewisePath p;
  p.dim = 2;
  p.points = {{0, 0}, {0.6, 0.4}, {0.8, 1.0}, {1.0, 0.7}};

  const double coarse = check_halfshuffle_integration(E("1"), E("2"), p, 4, 125);
  const double fine = check_halfshuffle_integration(E("1"), E("2"), p, 4, 1000);
  CHECK(fine <= 1e-3);
  CHECK(fine < coarse);

  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  const Word words[3] = {W("1"), W("2"), W("12")};
  for (int rep = 0; rep < 5; ++rep) {
    PiecewisePath q = random_path(rng, 2, 4);
    for (auto& pt : q.points)
      for (double& v : pt) v *= 0.25;  // unit total-variation scale
    const FreeElement f = FreeElement::word(words[pick(rng)]);
    const FreeElement g = FreeElement::word(words[pick(rng)]);
    const double c = check_halfshuffle_integration(f, g, q, 5, 125);
    const double fi = check_halfshuffle_integration(f, g, q, 5, 1000);
    CHECK(fi <= 1e-3);
    CHECK(fi <= c + 1e-15);
  }
}

TEST_CASE("scalar kernel and the dispatched kernel agree bit for bit") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(7), y(13);
  for (double& v : x) v = u(rng);
  for (double& v : y) v = u(rng);
  std::vector<double> a(x.size() * y.size(), 0.25), b(x.size() * y.size(), 0.25);
  kern::outer_accumulate_scalar(a.data(), x.data(), x.size(), y.data(), y.size());
  kern::active_outer()(b.data(), x.data(), x.size(), y.data(), y.size());
  CHECK(a == b);

  const std::string name = kern::active_kernel_name();
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}

TEST_CASE("constant paths have trivial signatures") {
  PiecewisePath p;
  p.dim = 2;
  p.points = {{3, 4}, {3, 4}, {3, 4}};
  const NumericTensor s = signature(p, 3);
  CHECK(s.levels[0][0] == 1.0);
  for (int k = 1; k <= 3; ++k)
    for (double v : s.levels[k]) CHECK(v == 0.0);
  CHECK(sig_word_coefficient(p, W("12")) == 0.0);
}

TEST_CASE("csv parsing: header, comments, blank lines, errors") {
  const char* path = "test_sig_tmp.csv";
  {
    std::ofstream out(path);
    out << "# a comment\n";
    out << "x,y\n";
    out << "0,0\n";
    out << "\n";
    out << "1,0\n";
    out << "1,1\n";
  }
  const PiecewisePath p = PiecewisePath::from_csv(path);
  CHECK(p.dim == 2);
  REQUIRE(p.points.size() == 3);
  CHECK(p.points[2][1] == 1.0);
  CHECK(pair_numeric(E("12"), signature(p, 2)) == doctest::Approx(1.0));
  std::remove(path);

  {
    std::ofstream out(path);
    out << "0,0\n1,bad\n";
  }
  CHECK_THROWS(PiecewisePath::from_csv(path));
  std::remove(path);

  {
    std::ofstream out(path);
    out << "0,0\n";
  }
  CHECK_THROWS(PiecewisePath::from_csv(path));
  std::remove(path);

  CHECK_THROWS(PiecewisePath::from_csv("no_such_file.csv"));
}

TEST_CASE("worked example passes end to end") {
  const WorkedExampleReport r = worked_example(42);
  CHECK(r.pass);
  CHECK(r.duality_check);
  CHECK(r.word == W("233212222111"));
  REQUIRE(r.factors.size() == 4);
  CHECK(r.factors[0].first == W("233"));
  CHECK(r.factors[1].first == W("2"));
  CHECK(r.factors[2].first == W("12222"));
  CHECK(r.factors[3].first == W("1"));
  CHECK(r.factors[3].second == 3);
  CHECK(r.reconciled_constant == rat(1, 288));
  CHECK(r.distinct_factor_constant == rat(1, 48));
  CHECK(r.rel_error <= 1e-6);
  CHECK(r.support > 0);
  CHECK(r.support <= 13860);
  CHECK(r.seed == 42);

  const WorkedExampleReport r2 = worked_example(7);
  CHECK(r2.pass);
}
