#pragma once

#include <memory>
#include <string>

#include "hsa/free_element.hpp"

namespace hsa {

// Binary planar rooted tree with letter-labelled leaves (the free magma).
// Immutable; subtrees are shared.
class Tree {
public:
    Tree() = default;  // null tree; only valid as a placeholder
    static Tree leaf(Letter a);
    static Tree node(const Tree& left, const Tree& right);

    bool valid() const { return p_ != nullptr; }
    bool is_leaf() const;
    Letter letter() const;        // leaves only
    const Tree& left() const;     // nodes only
    const Tree& right() const;    // nodes only
    unsigned degree() const;
    std::size_t hash() const;

    bool operator==(const Tree& o) const;
    bool operator!=(const Tree& o) const { return !(*this == o); }

    Word foliage() const;
    std::string str() const;  // "(((1,2),2),2)"; a leaf prints as its letter
    static Tree parse(const std::string& text);

private:
    struct Node;
    std::shared_ptr<const Node> p_;
};

struct TreeHash {
    std::size_t operator()(const Tree& t) const { return t.hash(); }
};

// deterministic structural order (degree, then foliage, then shape); used for
// canonical serialization, not as a Hall order
bool tree_structural_less(const Tree& a, const Tree& b);

enum class TreeProduct { lie, half_shuffle, area };

const char* tree_product_name(TreeProduct p);

// evaluate a tree under a bilinear product: leaves become letters, nodes
// become products; memoized per thread and product
FreeElement eval_tree(const Tree& t, TreeProduct p);

}  // namespace hsa
