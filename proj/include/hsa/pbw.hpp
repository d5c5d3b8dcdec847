#pragma once

#include <tuple>
#include <vector>

#include "hsa/hall.hpp"
#include "hsa/products.hpp"

namespace hsa {

// A decreasing product of Hall-tree powers; stands for the dual element
// S_ω of the word ω = f(h₁)^{k₁} ⋯ f(h_n)^{k_n}.
struct HallMonomial {
    std::vector<std::pair<Tree, int>> factors;  // strictly decreasing trees, powers ≥ 1

    unsigned total_degree() const;
    Word word() const;  // concatenation of foliages with powers
    bool operator==(const HallMonomial& o) const;
};

// monomials compare by total degree, then lexicographically by factor foliage
bool hall_monomial_less(const HallMonomial& a, const HallMonomial& b);

struct HallMonomialLess {
    bool operator()(const HallMonomial& a, const HallMonomial& b) const {
        return hall_monomial_less(a, b);
    }
};

struct HallPoly {
    std::map<HallMonomial, Rational, HallMonomialLess> terms;

    void add_term(const HallMonomial& m, const Rational& c);
    bool operator==(const HallPoly& o) const { return terms == o.terms; }
};

enum class DualStrategy { recursive_tensor, halfshuffle_recursion, direct };

const char* dual_strategy_name(DualStrategy s);
DualStrategy parse_dual_strategy(const std::string& name);

// P_ω = [h₁]^{⊗k₁} ⊗ … ⊗ [h_n]^{⊗k_n} over the decreasing factorization of w
FreeElement pbw_element(const Word& w, const HallSet& H);

// S_{f(h)} by one of three constructions that must agree:
//   recursive-tensor       S_{f(h)} = a ⊗ S_v  where f(h) = a·v
//   halfshuffle-recursion  S_{f(h)} = α_h (S_{f(h′)} ≺ S_{f(h″)})
//   direct                 S_{f(h)} = 𝒜_h · ≺(h)
FreeElement dual_of_hall_word(const Tree& h, const HallSet& H, DualStrategy s);

// S_ω = (1/(k₁!⋯k_n!)) S_{f(h₁)}^{⧢k₁} ⧢ … ⧢ S_{f(h_n)}^{⧢k_n}; S_e = e
FreeElement dual_basis_element(const Word& w, const HallSet& H);

struct IntegralsDual {
    Rational coefficient;   // 𝒜_{h₁}^{k₁} ⋯ 𝒜_{h_n}^{k_n} / (k₁!⋯k_n!)
    HallMonomial monomial;
    FreeElement value;      // coefficient · ⧢-product of Hall integrals
};

IntegralsDual dual_basis_via_integrals(const Word& w, const HallSet& H);

struct DualityReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::tuple<Word, Word, Rational>> failures;  // (u, v, pairing)
};

// ⟨S_u, P_v⟩ = δ_{u,v} over all word pairs of length ≤ n (empty word included)
DualityReport verify_duality(const HallSet& H, unsigned n);

// coefficients c_ω = ⟨f, P_ω⟩ over the support degrees of f
HallPoly expand_in_dual_basis(const FreeElement& f, const HallSet& H);

// Σ c_m · S_m with S_m from dual_basis_via_integrals
FreeElement eval_hall_poly(const HallPoly& p, const HallSet& H);

}  // namespace hsa
