#pragma once

#include <map>
#include <string>

#include "hsa/rational.hpp"
#include "hsa/word.hpp"

namespace hsa {

// A finitely supported linear combination of words with exact rational
// coefficients.  Kept canonical at all times: no stored coefficient is zero,
// and terms iterate in the canonical word order (length, then lex).
class FreeElement {
public:
    using Terms = std::map<Word, Rational, WordCanonicalLess>;

    FreeElement() = default;
    static FreeElement zero() { return FreeElement(); }
    static FreeElement unit();                       // the empty word e
    static FreeElement word(const Word& w);          // a single word
    static FreeElement letter(Letter a);
    static FreeElement term(const Word& w, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    std::size_t degree() const;                      // max word length, 0 if zero

    Rational coeff(const Word& w) const;
    Rational empty_coeff() const { return coeff(Word()); }

    // true when supported on nonempty words only (lies in the positive part)
    bool is_positive() const;

    void add_term(const Word& w, const Rational& c);

    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    FreeElement& operator*=(const Rational& c);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    friend FreeElement operator*(FreeElement a, const Rational& c) { return a *= c; }
    friend FreeElement operator*(const Rational& c, FreeElement a) { return a *= c; }
    FreeElement operator-() const;

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

    std::string str() const;  // deterministic human-readable form

private:
    Terms terms_;
};

Rational pairing(const FreeElement& f, const FreeElement& g);
FreeElement project_positive(const FreeElement& f);
FreeElement truncate(const FreeElement& f, std::size_t n);

}  // namespace hsa
