#pragma once

#include <vector>

#include "hsa/magma.hpp"
#include "hsa/products.hpp"

namespace hsa {

// A letter of the derived alphabet X: (a c^n) = (…((a,c),c)…,c), the
// left-comb of a non-c letter under n copies of the eliminated letter c.
struct XLetter {
    Letter base = 0;
    unsigned height = 0;
};

Tree x_letter_tree(const XLetter& x, Letter c);

struct ClosedForms {
    FreeElement lie;       // Σ_j (−1)^j C(n,j) c^j a c^{n−j}
    FreeElement integral;  // n! · a c^n
    FreeElement area;      // n! (a c^n − c a c^{n−1}); equals a when n = 0
};

ClosedForms closed_forms(Letter a, unsigned n, Letter c);

// residuals of the two displayed (ac^n) relations, one element per relation:
//   first:  ≺f((ac^n)) − [(1/(n+1)) 𝔄((ac^n)) + (n/(n+1)) c ⧢ ≺f((ac^{n−1}))]
//   second: ≺f((ac^n)) − (1/(n+1)) Σ_{k=0}^n c^{⧢k} ⧢ 𝔄((ac^{n−k}))
std::pair<FreeElement, FreeElement> acn_relation_check(Letter a, unsigned n, Letter c);

// membership in Z: no empty-word component and no supported word starts with c
bool is_in_Z(const FreeElement& f, Letter c);

// f = Σ_k c^{⧢k} ⧢ z_k + Σ_k σ_k c^{⧢k} with z_k ∈ Z.  Pure-c words are
// housed by the scalar slots via c^{⊗k} = (1/k!) c^{⧢k} (so σ_k carries the
// 1/k!-normalized weight of the word c^k; σ₀ is the empty-word coefficient).
struct SeriesInC {
    Letter c = 0;
    std::vector<FreeElement> z;        // z[k] multiplies c^{⧢k}
    std::vector<Rational> scalar_slots;  // same length as z

    FreeElement reconstruct() const;
};

SeriesInC decompose_series(const FreeElement& f, Letter c);

// the half-shuffle homomorphism on words over X: letters map by
// (a c^n) ↦ (1/n) ≺f((a c^n)) for n > 0 and (a c^0) ↦ a; a word x₁…x_m maps
// to j(x₁) ≺ j(x₂…x_m)
FreeElement j_c(const std::vector<XLetter>& xword, Letter c);

// structural re-parse: every occurrence of c in the tree hangs off a
// right-comb over a non-c letter (the φ reading of Hall trees)
bool tree_is_x_parseable(const Tree& t, Letter c);

}  // namespace hsa
