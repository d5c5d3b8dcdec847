#include "hsa/magma.hpp"

#include <stdexcept>
#include <unordered_map>

#include "hsa/products.hpp"

namespace hsa {

struct Tree::Node {
    Letter letter = 0;  // nonzero for leaves
    Tree left, right;
    unsigned degree = 1;
    std::size_t hash = 0;
};

Tree Tree::leaf(Letter a) {
    if (a < 1 || a > kMaxLetter) throw std::invalid_argument("leaf letter out of range");
    auto n = std::make_shared<Node>();
    n->letter = a;
    n->degree = 1;
    n->hash = 0x9e3779b97f4a7c15ull + a;
    Tree t;
    t.p_ = std::move(n);
    return t;
}

Tree Tree::node(const Tree& left, const Tree& right) {
    if (!left.valid() || !right.valid()) throw std::invalid_argument("node of null tree");
    auto n = std::make_shared<Node>();
    n->left = left;
    n->right = right;
    n->degree = left.degree() + right.degree();
    n->hash = (left.hash() * 0x100000001b3ull) ^ (right.hash() + 0x9e3779b97f4a7c15ull);
    Tree t;
    t.p_ = std::move(n);
    return t;
}

bool Tree::is_leaf() const { return p_->letter != 0; }
Letter Tree::letter() const { return p_->letter; }
const Tree& Tree::left() const { return p_->left; }
const Tree& Tree::right() const { return p_->right; }
unsigned Tree::degree() const { return p_->degree; }
std::size_t Tree::hash() const { return p_->hash; }

bool Tree::operator==(const Tree& o) const {
    if (p_ == o.p_) return true;
    if (!p_ || !o.p_) return false;
    if (p_->hash != o.p_->hash || p_->degree != o.p_->degree || p_->letter != o.p_->letter) return false;
    if (is_leaf()) return true;
    return p_->left == o.p_->left && p_->right == o.p_->right;
}

Word Tree::foliage() const {
    if (is_leaf()) return Word::single(letter());
    return left().foliage().concat(right().foliage());
}

std::string Tree::str() const {
    if (is_leaf()) return std::to_string(letter());
    return "(" + left().str() + "," + right().str() + ")";
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

Tree parse_tree_at(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw std::invalid_argument("bad tree: " + s);
    if (s[pos] == '(') {
        ++pos;
        Tree l = parse_tree_at(s, pos);
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("bad tree: " + s);
        ++pos;
        Tree r = parse_tree_at(s, pos);
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("bad tree: " + s);
        ++pos;
        return Tree::node(l, r);
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw std::invalid_argument("bad tree: " + s);
    return Tree::leaf(static_cast<Letter>(std::stoul(s.substr(start, pos - start))));
}

}  // namespace

Tree Tree::parse(const std::string& text) {
    std::size_t pos = 0;
    Tree t = parse_tree_at(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw std::invalid_argument("bad tree: " + text);
    return t;
}

bool tree_structural_less(const Tree& a, const Tree& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const Word fa = a.foliage(), fb = b.foliage();
    if (fa != fb) return fa < fb;
    if (a.is_leaf() || b.is_leaf()) return false;  // equal leaves
    if (tree_structural_less(a.left(), b.left())) return true;
    if (tree_structural_less(b.left(), a.left())) return false;
    return tree_structural_less(a.right(), b.right());
}

const char* tree_product_name(TreeProduct p) {
    switch (p) {
        case TreeProduct::lie: return "lie";
        case TreeProduct::half_shuffle: return "half-shuffle";
        case TreeProduct::area: return "area";
    }
    throw std::invalid_argument("unknown tree product");
}

FreeElement eval_tree(const Tree& t, TreeProduct p) {
    struct Key {
        Tree t;
        TreeProduct p;
        bool operator==(const Key& o) const { return p == o.p && t == o.t; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.t.hash() * 3 + static_cast<std::size_t>(k.p); }
    };
    thread_local std::unordered_map<Key, FreeElement, KeyHash> memo;

    if (t.is_leaf()) return FreeElement::letter(t.letter());
    const Key key{t, p};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const FreeElement l = eval_tree(t.left(), p);
    const FreeElement r = eval_tree(t.right(), p);
    FreeElement out;
    switch (p) {
        case TreeProduct::lie: out = lie_bracket(l, r); break;
        case TreeProduct::half_shuffle: out = half_shuffle(l, r); break;
        case TreeProduct::area: out = area(l, r); break;
    }
    return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace hsa
