#include "hsa/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsa {

const std::vector<IdentityName>& all_identities() {
    static const std::vector<IdentityName> names = {
        IdentityName::chain_rule,         IdentityName::modified_zinbiel,
        IdentityName::zinbiel_positive,   IdentityName::integration_by_parts,
        IdentityName::shuffle_pullout,    IdentityName::area_jacobi,
        IdentityName::tortkara_1,         IdentityName::tortkara_2,
        IdentityName::permutation_shuffle,
    };
    return names;
}

const char* identity_name(IdentityName n) {
    switch (n) {
        case IdentityName::chain_rule: return "chain-rule";
        case IdentityName::modified_zinbiel: return "modified-zinbiel";
        case IdentityName::zinbiel_positive: return "zinbiel-positive";
        case IdentityName::integration_by_parts: return "integration-by-parts";
        case IdentityName::shuffle_pullout: return "shuffle-pullout";
        case IdentityName::area_jacobi: return "area-jacobi";
        case IdentityName::tortkara_1: return "tortkara-1";
        case IdentityName::tortkara_2: return "tortkara-2";
        case IdentityName::permutation_shuffle: return "permutation-shuffle";
    }
    throw std::invalid_argument("unknown identity");
}

IdentityName parse_identity(const std::string& name) {
    for (IdentityName n : all_identities())
        if (name == identity_name(n)) return n;
    throw std::invalid_argument("unknown identity: " + name);
}

int identity_arity(IdentityName n) {
    switch (n) {
        case IdentityName::integration_by_parts: return 2;
        case IdentityName::tortkara_2: return 4;
        case IdentityName::permutation_shuffle: return -1;
        default: return 3;
    }
}

bool identity_requires_positive(IdentityName n) {
    switch (n) {
        case IdentityName::zinbiel_positive:
        case IdentityName::tortkara_1:
        case IdentityName::tortkara_2:
        case IdentityName::permutation_shuffle:
            return true;
        default:
            return false;
    }
}

FreeElement vol(const FreeElement& f, const FreeElement& g, const FreeElement& h) {
    return area(area(f, g), h) + area(area(g, h), f) + area(area(h, f), g);
}

IdentitySides identity_sides(IdentityName n, const std::vector<FreeElement>& args) {
    const int arity = identity_arity(n);
    if (arity >= 0 && args.size() != static_cast<std::size_t>(arity))
        throw std::invalid_argument(std::string(identity_name(n)) + " takes " +
                                    std::to_string(arity) + " arguments");
    if (arity < 0 && args.size() < 2)
        throw std::invalid_argument("permutation-shuffle takes at least 2 arguments");
    if (identity_requires_positive(n)) {
        for (const FreeElement& a : args) {
            if (!a.is_positive())
                throw std::invalid_argument(std::string(identity_name(n)) +
                                            " requires arguments without empty-word component");
        }
    }

    IdentitySides s;
    switch (n) {
        case IdentityName::chain_rule: {
            const FreeElement &f = args[0], &g = args[1], &h = args[2];
            s.lhs = half_shuffle(f, shuffle(g, h));
            s.rhs = half_shuffle(half_shuffle(f, g), h);
            break;
        }
        case IdentityName::modified_zinbiel: {
            const FreeElement &f = args[0], &g = args[1], &h = args[2];
            s.lhs = half_shuffle(half_shuffle(f, g), h);
            s.rhs = half_shuffle(f, half_shuffle(g, h)) + half_shuffle(f, half_shuffle(h, g)) +
                    g.empty_coeff() * h.empty_coeff() * half_shuffle(f, FreeElement::unit());
            break;
        }
        case IdentityName::zinbiel_positive: {
            const FreeElement &f = args[0], &g = args[1], &h = args[2];
            s.lhs = half_shuffle(half_shuffle(f, g), h);
            s.rhs = half_shuffle(f, half_shuffle(g, h)) + half_shuffle(f, half_shuffle(h, g));
            break;
        }
        case IdentityName::integration_by_parts: {
            const FreeElement &f = args[0], &g = args[1];
            s.lhs = shuffle(f, g);
            s.rhs = half_shuffle(f, g) + half_shuffle(g, f) +
                    f.empty_coeff() * g.empty_coeff() * FreeElement::unit();
            break;
        }
        case IdentityName::shuffle_pullout: {
            const FreeElement &f = args[0], &g = args[1], &h = args[2];
            s.lhs = Rational(3) * area(h, shuffle(f, g));
            s.rhs = shuffle(f, area(h, g)) + shuffle(g, area(h, f)) - shuffle(shuffle(f, g), h) +
                    f.empty_coeff() * g.empty_coeff() * h.empty_coeff() * FreeElement::unit() +
                    area(area(h, g), f) + area(area(h, f), g);
            break;
        }
        case IdentityName::area_jacobi: {
            const FreeElement &f = args[0], &g = args[1], &h = args[2];
            s.lhs = area(area(f, g), h) + area(area(g, h), f) + area(area(h, f), g);
            s.rhs = -shuffle(f, area(g, h)) - shuffle(g, area(h, f)) - shuffle(h, area(f, g));
            break;
        }
        case IdentityName::tortkara_1: {
            const FreeElement &f = args[0], &g = args[1], &h = args[2];
            s.lhs = area(area(f, g), area(f, h));
            s.rhs = area(f, vol(f, g, h));
            break;
        }
        case IdentityName::tortkara_2: {
            const FreeElement &f = args[0], &g = args[1], &h = args[2], &i = args[3];
            s.lhs = area(area(f, g), area(i, h)) + area(area(h, g), area(i, f));
            s.rhs = area(f, vol(g, h, i)) + area(h, vol(g, f, i));
            break;
        }
        case IdentityName::permutation_shuffle: {
            s.lhs = FreeElement::unit();
            for (const FreeElement& a : args) s.lhs = shuffle(s.lhs, a);
            std::vector<std::size_t> idx(args.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            s.rhs = FreeElement::zero();
            do {
                // right-nested: each permutation contributes f_{σ1}≺(f_{σ2}≺(…))
                FreeElement term = args[idx.back()];
                for (std::size_t i = idx.size() - 1; i-- > 0;) term = half_shuffle(args[idx[i]], term);
                s.rhs += term;
            } while (std::next_permutation(idx.begin(), idx.end()));
            break;
        }
    }
    return s;
}

FreeElement verify(IdentityName n, const std::vector<FreeElement>& args) {
    const IdentitySides s = identity_sides(n, args);
    return s.lhs - s.rhs;
}

}  // namespace hsa
