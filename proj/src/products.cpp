#include "hsa/products.hpp"

#include <unordered_map>
#include <utility>

namespace hsa {

namespace {

struct WordPairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const {
        return p.first.hash() * 0x9e3779b97f4a7c15ull ^ p.second.hash();
    }
};

using ShuffleMemo = std::unordered_map<std::pair<Word, Word>, FreeElement, WordPairHash>;

const FreeElement& shuffle_words_memo(const Word& u, const Word& v) {
    thread_local ShuffleMemo memo;
    // shuffle is symmetric; store one orientation
    const bool swap = v < u;
    const Word& a = swap ? v : u;
    const Word& b = swap ? u : v;
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;

    FreeElement r;
    if (a.empty()) {
        r = FreeElement::word(b);
    } else if (b.empty()) {
        r = FreeElement::word(a);
    } else {
        // recurse on the last letter of either factor
        const FreeElement& left = shuffle_words_memo(a.prefix(a.length() - 1), b);
        const FreeElement& right = shuffle_words_memo(a, b.prefix(b.length() - 1));
        for (const auto& [w, c] : left.terms()) r.add_term(w.append(a.back()), c);
        for (const auto& [w, c] : right.terms()) r.add_term(w.append(b.back()), c);
    }
    return memo.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

}  // namespace

FreeElement shuffle_words(const Word& u, const Word& v) { return shuffle_words_memo(u, v); }

FreeElement half_shuffle_words(const Word& u, const Word& v) {
    if (u.empty()) return FreeElement::zero();
    if (v.empty()) return FreeElement::word(u);
    FreeElement r;
    const Letter a = u.front();
    for (const auto& [w, c] : shuffle_words_memo(u.suffix(1), v).terms()) r.add_term(w.prepend(a), c);
    return r;
}

FreeElement tensor(const FreeElement& f, const FreeElement& g) {
    FreeElement r;
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms()) r.add_term(u.concat(v), cu * cv);
    return r;
}

FreeElement lie_bracket(const FreeElement& f, const FreeElement& g) {
    return tensor(f, g) - tensor(g, f);
}

FreeElement half_shuffle(const FreeElement& f, const FreeElement& g) {
    FreeElement r;
    for (const auto& [u, cu] : f.terms()) {
        if (u.empty()) continue;  // e ≺ · = 0
        const Letter a = u.front();
        const Word u1 = u.suffix(1);
        for (const auto& [v, cv] : g.terms()) {
            const Rational c = cu * cv;
            for (const auto& [w, cw] : shuffle_words_memo(u1, v).terms()) r.add_term(w.prepend(a), c * cw);
        }
    }
    return r;
}

FreeElement shuffle(const FreeElement& f, const FreeElement& g) {
    FreeElement r;
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms()) {
            const Rational c = cu * cv;
            for (const auto& [w, cw] : shuffle_words_memo(u, v).terms()) r.add_term(w, c * cw);
        }
    return r;
}

FreeElement area(const FreeElement& f, const FreeElement& g) {
    return half_shuffle(f, g) - half_shuffle(g, f);
}

FreeElement shuffle_power(const FreeElement& f, unsigned k) {
    FreeElement r = FreeElement::unit();
    for (unsigned i = 0; i < k; ++i) r = shuffle(r, f);
    return r;
}

}  // namespace hsa
