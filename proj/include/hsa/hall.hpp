#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsa/magma.hpp"

namespace hsa {

enum class HallOrderKind { lyndon, degree_lex };

const char* hall_order_name(HallOrderKind k);
HallOrderKind parse_hall_order(const std::string& name);

// The ancestral total order on trees that defines each Hall set:
//   lyndon      — foliage words compared lexicographically (a prefix sorts
//                 before its extensions), total on trees with distinct foliage;
//   degree-lex  — higher degree sorts first (this is what makes the order
//                 ancestral), ties broken recursively on (left, right).
bool hall_tree_less(HallOrderKind k, const Tree& a, const Tree& b);

struct LazardDecomp {
    Tree h1, h2;
    int k = 0;
    Rational alpha;        // 1/k
    Rational accumulated;  // product of alphas down the recursion
};

// number of Hall trees of degree n over d letters: (1/n) Σ_{k|n} μ(k) d^{n/k}
long witt_dimension(unsigned d, unsigned n);

bool is_lyndon(const Word& w);

// Chen–Fox–Lyndon factorization by Duval's algorithm: the unique
// non-increasing sequence of Lyndon factors, grouped as (factor, multiplicity)
// with strictly decreasing factors.
std::vector<std::pair<Word, int>> lyndon_factorize(const Word& w);

class HallSet {
public:
    static HallSet generate(unsigned d, HallOrderKind order, unsigned max_degree);

    unsigned alphabet() const { return d_; }
    HallOrderKind order() const { return order_; }
    unsigned max_degree() const { return max_degree_; }

    // trees of one degree, ascending in the Hall order
    const std::vector<Tree>& trees_of_degree(unsigned n) const;
    std::vector<Tree> all_trees() const;  // ascending degree, then Hall order

    bool less(const Tree& a, const Tree& b) const { return hall_tree_less(order_, a, b); }
    bool contains(const Tree& t) const;

    const Tree* find_word(const Word& w) const;  // null when w is not a Hall word
    Tree tree_of_hall_word(const Word& w) const;  // throws when absent

    // unique decreasing factorization of w into Hall words (Hall-word
    // comparisons are comparisons of the corresponding trees)
    std::vector<std::pair<Word, int>> factorize(const Word& w) const;

    LazardDecomp lazard(const Tree& h) const;       // degree ≥ 2 members only
    Rational accumulated_depth(const Tree& h) const;  // 1 on letters

private:
    std::vector<std::pair<Word, int>> search_factorize(const Word& w) const;

    unsigned d_ = 0;
    HallOrderKind order_ = HallOrderKind::lyndon;
    unsigned max_degree_ = 0;
    std::vector<std::vector<Tree>> by_degree_;  // [n-1] = degree n
    std::map<Word, Tree> word_index_;
};

}  // namespace hsa
