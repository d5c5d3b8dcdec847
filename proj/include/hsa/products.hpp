#pragma once

#include "hsa/free_element.hpp"

namespace hsa {

// The bilinear products on FreeElement.  All are exact; word-level shuffle
// results are memoized per thread.

FreeElement tensor(const FreeElement& f, const FreeElement& g);
FreeElement lie_bracket(const FreeElement& f, const FreeElement& g);

// u ≺ v: for u = a·u′ this is a·(u′ ⧢ v); e ≺ f = f ≺ 0 = 0, and
// f ≺ e = f − ⟨f,e⟩e by bilinear extension.
FreeElement half_shuffle(const FreeElement& f, const FreeElement& g);

FreeElement shuffle(const FreeElement& f, const FreeElement& g);
FreeElement area(const FreeElement& f, const FreeElement& g);  // f ≺ g − g ≺ f
FreeElement shuffle_power(const FreeElement& f, unsigned k);

// word-level kernels (exposed for tests of the closed-form equivalence)
FreeElement shuffle_words(const Word& u, const Word& v);
FreeElement half_shuffle_words(const Word& u, const Word& v);

}  // namespace hsa
