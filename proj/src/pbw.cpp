#include "hsa/pbw.hpp"

#include <stdexcept>

namespace hsa {

unsigned HallMonomial::total_degree() const {
    unsigned n = 0;
    for (const auto& [t, k] : factors) n += t.degree() * static_cast<unsigned>(k);
    return n;
}

Word HallMonomial::word() const {
    Word w;
    for (const auto& [t, k] : factors) {
        const Word f = t.foliage();
        for (int i = 0; i < k; ++i) w = w.concat(f);
    }
    return w;
}

bool HallMonomial::operator==(const HallMonomial& o) const {
    if (factors.size() != o.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].second != o.factors[i].second || !(factors[i].first == o.factors[i].first))
            return false;
    }
    return true;
}

bool hall_monomial_less(const HallMonomial& a, const HallMonomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    const std::size_t n = std::min(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Word fa = a.factors[i].first.foliage();
        const Word fb = b.factors[i].first.foliage();
        if (fa != fb) return fa < fb;
        if (a.factors[i].second != b.factors[i].second) return a.factors[i].second < b.factors[i].second;
    }
    return a.factors.size() < b.factors.size();
}

void HallPoly::add_term(const HallMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

const char* dual_strategy_name(DualStrategy s) {
    switch (s) {
        case DualStrategy::recursive_tensor: return "recursive-tensor";
        case DualStrategy::halfshuffle_recursion: return "halfshuffle-recursion";
        case DualStrategy::direct: return "direct";
    }
    throw std::invalid_argument("unknown strategy");
}

DualStrategy parse_dual_strategy(const std::string& name) {
    if (name == "recursive-tensor") return DualStrategy::recursive_tensor;
    if (name == "halfshuffle-recursion") return DualStrategy::halfshuffle_recursion;
    if (name == "direct") return DualStrategy::direct;
    throw std::invalid_argument("unknown strategy: " + name);
}

namespace {

HallMonomial monomial_of_factorization(const Word& w, const HallSet& H) {
    HallMonomial m;
    for (const auto& [f, k] : H.factorize(w)) m.factors.emplace_back(H.tree_of_hall_word(f), k);
    return m;
}

}  // namespace

FreeElement pbw_element(const Word& w, const HallSet& H) {
    if (w.empty()) return FreeElement::unit();
    FreeElement out = FreeElement::unit();
    for (const auto& [f, k] : H.factorize(w)) {
        const FreeElement bracket = eval_tree(H.tree_of_hall_word(f), TreeProduct::lie);
        for (int i = 0; i < k; ++i) out = tensor(out, bracket);
    }
    return out;
}

FreeElement dual_of_hall_word(const Tree& h, const HallSet& H, DualStrategy s) {
    if (!H.contains(h)) throw std::invalid_argument("dual_of_hall_word: tree not in the Hall set");
    if (h.is_leaf()) return FreeElement::letter(h.letter());
    switch (s) {
        case DualStrategy::recursive_tensor: {
            const Word w = h.foliage();
            return tensor(FreeElement::letter(w.front()), dual_basis_element(w.suffix(1), H));
        }
        case DualStrategy::halfshuffle_recursion: {
            const LazardDecomp d = H.lazard(h);
            const FreeElement sl = dual_of_hall_word(h.left(), H, s);
            const FreeElement sr = dual_of_hall_word(h.right(), H, s);
            return d.alpha * half_shuffle(sl, sr);
        }
        case DualStrategy::direct:
            return H.accumulated_depth(h) * eval_tree(h, TreeProduct::half_shuffle);
    }
    throw std::invalid_argument("unknown strategy");
}

FreeElement dual_basis_element(const Word& w, const HallSet& H) {
    if (w.empty()) return FreeElement::unit();
    FreeElement out = FreeElement::unit();
    for (const auto& [f, k] : H.factorize(w)) {
        const FreeElement s = dual_of_hall_word(H.tree_of_hall_word(f), H, DualStrategy::direct);
        out = shuffle(out, shuffle_power(s, static_cast<unsigned>(k)));
        out *= rat(1) / rat_factorial(static_cast<unsigned long>(k));
    }
    return out;
}

IntegralsDual dual_basis_via_integrals(const Word& w, const HallSet& H) {
    IntegralsDual out;
    out.coefficient = Rational(1);
    out.value = FreeElement::unit();
    if (w.empty()) return out;
    out.monomial = monomial_of_factorization(w, H);
    for (const auto& [t, k] : out.monomial.factors) {
        Rational ak;
        mpz_class num, den;  // 𝒜^k
        const Rational a = H.accumulated_depth(t);
        mpz_pow_ui(num.get_mpz_t(), a.get_num().get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(den.get_mpz_t(), a.get_den().get_mpz_t(), static_cast<unsigned long>(k));
        ak = Rational(num, den);
        ak.canonicalize();
        out.coefficient *= ak / rat_factorial(static_cast<unsigned long>(k));
        out.value = shuffle(out.value,
                            shuffle_power(eval_tree(t, TreeProduct::half_shuffle),
                                          static_cast<unsigned>(k)));
    }
    out.value *= out.coefficient;
    return out;
}

DualityReport verify_duality(const HallSet& H, unsigned n) {
    if (n > H.max_degree()) throw std::invalid_argument("degree bound exceeds the Hall set");
    DualityReport rep;
    std::vector<Word> words;
    words.push_back(Word());
    for (unsigned m = 1; m <= n; ++m) {
        const auto level = all_words(H.alphabet(), m);
        words.insert(words.end(), level.begin(), level.end());
    }
    std::vector<FreeElement> duals, pbws;
    duals.reserve(words.size());
    pbws.reserve(words.size());
    for (const Word& w : words) {
        duals.push_back(dual_basis_element(w, H));
        pbws.push_back(pbw_element(w, H));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            const Rational p = pairing(duals[i], pbws[j]);
            const Rational want = i == j ? 1 : 0;
            ++rep.checked;
            if (p != want) {
                rep.pass = false;
                rep.failures.emplace_back(words[i], words[j], p);
            }
        }
    }
    return rep;
}

HallPoly expand_in_dual_basis(const FreeElement& f, const HallSet& H) {
    if (f.degree() > H.max_degree()) throw std::invalid_argument("degree bound exceeds the Hall set");
    HallPoly out;
    if (f.is_zero()) return out;
    std::vector<bool> seen(f.degree() + 1, false);
    for (const auto& [w, c] : f.terms()) seen[w.length()] = true;
    if (seen[0]) out.add_term(HallMonomial{}, f.empty_coeff());
    for (unsigned m = 1; m <= f.degree(); ++m) {
        if (!seen[m]) continue;
        for (const Word& w : all_words(H.alphabet(), m)) {
            const Rational c = pairing(f, pbw_element(w, H));
            if (c != 0) out.add_term(monomial_of_factorization(w, H), c);
        }
    }
    return out;
}

FreeElement eval_hall_poly(const HallPoly& p, const HallSet& H) {
    FreeElement out;
    for (const auto& [m, c] : p.terms) out += c * dual_basis_via_integrals(m.word(), H).value;
    return out;
}

}  // namespace hsa
