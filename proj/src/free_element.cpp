#include "hsa/free_element.hpp"

namespace hsa {

FreeElement FreeElement::unit() { return word(Word()); }

FreeElement FreeElement::word(const Word& w) { return term(w, Rational(1)); }

FreeElement FreeElement::letter(Letter a) { return word(Word::single(a)); }

FreeElement FreeElement::term(const Word& w, const Rational& c) {
    FreeElement f;
    f.add_term(w, c);
    return f;
}

std::size_t FreeElement::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

Rational FreeElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool FreeElement::is_positive() const { return terms_.find(Word()) == terms_.end(); }

void FreeElement::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeElement& FreeElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

FreeElement FreeElement::operator-() const {
    FreeElement f = *this;
    for (auto& [w, v] : f.terms_) v = -v;
    return f;
}

std::string FreeElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (a != 1) out += rat_str(a) + "*";
        out += w.str();
    }
    return out;
}

Rational pairing(const FreeElement& f, const FreeElement& g) {
    // walk the smaller support
    const FreeElement& small = f.support_size() <= g.support_size() ? f : g;
    const FreeElement& big = f.support_size() <= g.support_size() ? g : f;
    Rational sum(0);
    for (const auto& [w, c] : small.terms()) sum += c * big.coeff(w);
    return sum;
}

FreeElement project_positive(const FreeElement& f) {
    FreeElement g = f;
    g.add_term(Word(), -f.empty_coeff());
    return g;
}

FreeElement truncate(const FreeElement& f, std::size_t n) {
    FreeElement g;
    for (const auto& [w, c] : f.terms()) {
        if (w.length() <= n) g.add_term(w, c);
    }
    return g;
}

}  // namespace hsa
