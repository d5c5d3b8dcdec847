#include "hsa/elimination.hpp"

#include <stdexcept>

namespace hsa {

Tree x_letter_tree(const XLetter& x, Letter c) {
    if (x.base == c) throw std::invalid_argument("X letter base must differ from c");
    Tree t = Tree::leaf(x.base);
    for (unsigned i = 0; i < x.height; ++i) t = Tree::node(t, Tree::leaf(c));
    return t;
}

namespace {

Word acn_word(Letter a, unsigned n, Letter c, unsigned c_prefix) {
    // c^{c_prefix} a c^{n−c_prefix}
    Word w;
    for (unsigned i = 0; i < c_prefix; ++i) w = w.append(c);
    w = w.append(a);
    for (unsigned i = c_prefix; i < n; ++i) w = w.append(c);
    return w;
}

}  // namespace

ClosedForms closed_forms(Letter a, unsigned n, Letter c) {
    if (a == c) throw std::invalid_argument("closed_forms needs a != c");
    ClosedForms out;
    for (unsigned j = 0; j <= n; ++j) {
        const Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
        out.lie.add_term(acn_word(a, n, c, j), sign * rat_binomial(n, j));
    }
    const Rational fact = rat_factorial(n);
    out.integral.add_term(acn_word(a, n, c, 0), fact);
    out.area.add_term(acn_word(a, n, c, 0), fact);
    if (n >= 1) out.area.add_term(acn_word(a, n, c, 1), -fact);
    return out;
}

std::pair<FreeElement, FreeElement> acn_relation_check(Letter a, unsigned n, Letter c) {
    if (a == c) throw std::invalid_argument("acn_relation_check needs a != c");
    if (n < 1) throw std::invalid_argument("acn_relation_check needs n >= 1");
    const FreeElement cel = FreeElement::letter(c);

    auto integral = [&](unsigned m) {
        return eval_tree(x_letter_tree({a, m}, c), TreeProduct::half_shuffle);
    };
    auto area_of = [&](unsigned m) {
        return eval_tree(x_letter_tree({a, m}, c), TreeProduct::area);
    };

    const FreeElement lhs = integral(n);

    FreeElement rhs1 = rat(1, static_cast<long>(n) + 1) * area_of(n);
    rhs1 += rat(static_cast<long>(n), static_cast<long>(n) + 1) * shuffle(cel, integral(n - 1));

    FreeElement sum;
    for (unsigned k = 0; k <= n; ++k) sum += shuffle(shuffle_power(cel, k), area_of(n - k));
    const FreeElement rhs2 = rat(1, static_cast<long>(n) + 1) * sum;

    return {lhs - rhs1, lhs - rhs2};
}

bool is_in_Z(const FreeElement& f, Letter c) {
    for (const auto& [w, coeff] : f.terms()) {
        if (w.empty() || w.front() == c) return false;
    }
    return true;
}

FreeElement SeriesInC::reconstruct() const {
    FreeElement out;
    const FreeElement cel = FreeElement::letter(c);
    for (std::size_t k = 0; k < z.size(); ++k) {
        const FreeElement ck = shuffle_power(cel, static_cast<unsigned>(k));
        out += shuffle(ck, z[k]);
        if (k < scalar_slots.size()) out += scalar_slots[k] * ck;
    }
    return out;
}

SeriesInC decompose_series(const FreeElement& f, Letter c) {
    SeriesInC out;
    out.c = c;
    const std::size_t levels = f.degree() + 1;
    out.z.assign(levels, FreeElement::zero());
    out.scalar_slots.assign(levels, Rational(0));

    const FreeElement cel = FreeElement::letter(c);
    FreeElement g = f;

    // peel words by their count of leading c's, largest count first; removing
    // c^{⧢n} ⧢ v only touches words with at most n leading c's
    for (std::size_t n = levels; n-- > 0;) {
        const FreeElement snapshot = g;
        for (const auto& [w, coeff] : snapshot.terms()) {
            std::size_t lead = 0;
            while (lead < w.length() && w.at(lead) == c) ++lead;
            if (lead != n) continue;
            const Rational scaled = coeff / rat_factorial(n);
            if (lead == w.length()) {
                // pure c^n: house it in the scalar slot
                out.scalar_slots[n] += scaled;
                g.add_term(w, -coeff);
            } else {
                const Word v = w.suffix(lead);
                out.z[n].add_term(v, scaled);
                g -= scaled * shuffle(shuffle_power(cel, static_cast<unsigned>(n)),
                                      FreeElement::word(v));
            }
        }
    }
    if (!g.is_zero()) throw std::logic_error("series decomposition did not terminate");

    while (out.z.size() > 1 && out.z.back().is_zero() && out.scalar_slots.back() == 0) {
        out.z.pop_back();
        out.scalar_slots.pop_back();
    }
    return out;
}

FreeElement j_c(const std::vector<XLetter>& xword, Letter c) {
    if (xword.empty()) return FreeElement::unit();
    auto image = [&](const XLetter& x) {
        if (x.base == c) throw std::invalid_argument("X letter base must differ from c");
        if (x.height == 0) return FreeElement::letter(x.base);
        return rat(1, x.height) *
               eval_tree(x_letter_tree(x, c), TreeProduct::half_shuffle);
    };
    FreeElement out = image(xword.back());
    for (std::size_t i = xword.size() - 1; i-- > 0;) out = half_shuffle(image(xword[i]), out);
    return out;
}

namespace {

// left-comb (a c^j) with a != c, j ≥ 0
bool is_x_comb(const Tree& t, Letter c) {
    if (t.is_leaf()) return t.letter() != c;
    return t.right().is_leaf() && t.right().letter() == c && is_x_comb(t.left(), c);
}

}  // namespace

bool tree_is_x_parseable(const Tree& t, Letter c) {
    if (t.is_leaf()) return t.letter() != c;
    if (t.right().is_leaf() && t.right().letter() == c) return is_x_comb(t, c);
    return tree_is_x_parseable(t.left(), c) && tree_is_x_parseable(t.right(), c);
}

}  // namespace hsa
