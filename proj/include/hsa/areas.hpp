#pragma once

#include <vector>

#include "hsa/hall.hpp"
#include "hsa/products.hpp"

namespace hsa {

// A shuffle monomial in iterated areas: each factor tree t stands for 𝔄(t),
// the factors multiply with ⧢.  The empty monomial is e.  Canonical form:
// every tree is area-oriented (children sorted at every node, antisymmetry
// signs pulled out) and the factor multiset is sorted.
struct AreaMonomial {
    std::vector<Tree> factors;

    std::size_t shuffle_degree() const { return factors.size(); }
    bool operator==(const AreaMonomial& o) const;
};

bool area_monomial_less(const AreaMonomial& a, const AreaMonomial& b);

struct AreaMonomialLess {
    bool operator()(const AreaMonomial& a, const AreaMonomial& b) const {
        return area_monomial_less(a, b);
    }
};

// orient every node of an area tree: returns the canonical tree and the sign
// of 𝔄(t) relative to it; sign 0 means 𝔄(t) = 0 (some node has equal children)
std::pair<Tree, int> orient_area_tree(const Tree& t);

struct AreaPoly {
    std::map<AreaMonomial, Rational, AreaMonomialLess> terms;

    // inserts c·𝔄(f₁)⧢…⧢𝔄(f_n) after canonical orientation of the factors
    void add_monomial(const std::vector<Tree>& factors, const Rational& c);

    std::size_t shuffle_degree() const;  // max over supported monomials
    bool is_zero() const { return terms.empty(); }

    AreaPoly& operator+=(const AreaPoly& o);
    AreaPoly& operator-=(const AreaPoly& o);
    AreaPoly& operator*=(const Rational& c);
    friend AreaPoly operator+(AreaPoly a, const AreaPoly& b) { return a += b; }
    friend AreaPoly operator-(AreaPoly a, const AreaPoly& b) { return a -= b; }
    friend AreaPoly operator*(AreaPoly a, const Rational& c) { return a *= c; }
    friend AreaPoly operator*(const Rational& c, AreaPoly a) { return a *= c; }
    bool operator==(const AreaPoly& o) const { return terms == o.terms; }

    // shuffle with one more area factor: appends t to every monomial
    AreaPoly shuffled_with(const Tree& t) const;
};

// β_n = −(n−1)/(n+1), the leading coefficient of the rewriting
Rational beta(unsigned k);
Rational beta_recursive(unsigned k);  // β₁ = 0, β_k = (β_{k−1}−1)/(β_{k−1}+3)

FreeElement eval_area_poly(const AreaPoly& p);

// area(𝔄(A), 𝔄(A₁)⧢…⧢𝔄(A_n)) as β_n·(A⧢A₁⧢…⧢A_n) plus a remainder of
// shuffle-degree ≤ n; requires n ≥ 1
AreaPoly rewrite_area_of_monomial(const Tree& A, const AreaMonomial& M);

// the word as a shuffle polynomial in iterated areas (shuffle-degree = |w|)
AreaPoly word_to_area_poly(const Word& w);

struct DegreeRankReport {
    unsigned degree = 0;
    long dimension = 0;
    long rank = 0;
    // each relation: Σ coeff·𝔄_ω = 0 over the listed words
    std::vector<std::vector<std::pair<Word, Rational>>> relations;
};

// exact rank of the family {𝔄_ω : |ω| = m} per degree m ≤ n, where 𝔄_ω is the
// shuffle product of iterated Hall areas over the factorization of ω
std::vector<DegreeRankReport> hall_area_rank_report(unsigned d, unsigned n, const HallSet& H);

}  // namespace hsa
