#pragma once

#include <string>
#include <vector>

#include "hsa/products.hpp"

namespace hsa {

enum class IdentityName {
    chain_rule,
    modified_zinbiel,
    zinbiel_positive,
    integration_by_parts,
    shuffle_pullout,
    area_jacobi,
    tortkara_1,
    tortkara_2,
    permutation_shuffle,
};

const std::vector<IdentityName>& all_identities();
const char* identity_name(IdentityName n);
IdentityName parse_identity(const std::string& name);

// fixed arity, or -1 for the variadic permutation-shuffle (n ≥ 2)
int identity_arity(IdentityName n);

// true when the identity is only stated on the positive part
bool identity_requires_positive(IdentityName n);

struct IdentitySides {
    FreeElement lhs, rhs;
};

IdentitySides identity_sides(IdentityName n, const std::vector<FreeElement>& args);

// LHS − RHS; zero signals the identity holds for these arguments
FreeElement verify(IdentityName n, const std::vector<FreeElement>& args);

// vol(f,g,h) = area(area(f,g),h) + area(area(g,h),f) + area(area(h,f),g)
FreeElement vol(const FreeElement& f, const FreeElement& g, const FreeElement& h);

}  // namespace hsa
