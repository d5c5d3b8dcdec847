#include "hsa/random_elements.hpp"

namespace hsa {

FreeElement random_element(std::mt19937_64& rng, const RandomElementConfig& cfg) {
    std::uniform_int_distribution<unsigned> len_dist(cfg.allow_empty_word ? 0 : 1, cfg.max_len);
    std::uniform_int_distribution<unsigned> letter_dist(1, cfg.d);
    std::uniform_int_distribution<int> coeff_dist(1, cfg.coeff_bound);
    std::uniform_int_distribution<int> sign_dist(0, 1);

    FreeElement f;
    for (unsigned t = 0; t < cfg.terms; ++t) {
        const unsigned len = len_dist(rng);
        Word w;
        for (unsigned i = 0; i < len; ++i) w = w.append(letter_dist(rng));
        const int c = coeff_dist(rng) * (sign_dist(rng) ? 1 : -1);
        f.add_term(w, Rational(c));
    }
    return f;
}

}  // namespace hsa
