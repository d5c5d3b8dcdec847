#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsa {

// Exact rational scalar: arbitrary precision, always in lowest terms with
// positive denominator (GMP's canonical form).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational rat_binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

// natural form: "3", "-1/2"
inline std::string rat_str(const Rational& q) { return q.get_str(); }

// explicit fraction form used by the JSON interfaces: always "p/q"
inline std::string rat_str_frac(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// accepts "p/q" or a bare integer "p"
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline double rat_double(const Rational& q) { return q.get_d(); }

}  // namespace hsa
