#include "hsa/hall.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hsa {

const char* hall_order_name(HallOrderKind k) {
    return k == HallOrderKind::lyndon ? "lyndon" : "degree-lex";
}

HallOrderKind parse_hall_order(const std::string& name) {
    if (name == "lyndon") return HallOrderKind::lyndon;
    if (name == "degree-lex") return HallOrderKind::degree_lex;
    throw std::invalid_argument("unknown hall order: " + name);
}

bool hall_tree_less(HallOrderKind k, const Tree& a, const Tree& b) {
    if (k == HallOrderKind::lyndon) return a.foliage() < b.foliage();
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.is_leaf()) return a.letter() < b.letter();
    if (hall_tree_less(k, a.left(), b.left())) return true;
    if (hall_tree_less(k, b.left(), a.left())) return false;
    return hall_tree_less(k, a.right(), b.right());
}

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

long witt_dimension(unsigned d, unsigned n) {
    if (d < 1 || n < 1) throw std::invalid_argument("witt_dimension needs d, n >= 1");
    mpz_class sum = 0;
    for (unsigned k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        const int mu = moebius(k);
        if (mu == 0) continue;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), d, n / k);
        sum += mu * pw;
    }
    sum /= n;
    return sum.get_si();
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.length(); ++i) {
        if (!(w < w.suffix(i))) return false;
    }
    return true;
}

std::vector<std::pair<Word, int>> lyndon_factorize(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cannot factorize the empty word");
    // Duval: emit the non-increasing sequence of Lyndon factors
    std::vector<Word> factors;
    const std::size_t n = w.length();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && w.at(k) <= w.at(j)) {
            if (w.at(k) < w.at(j))
                k = i;
            else
                ++k;
            ++j;
        }
        const std::size_t len = j - k;
        while (i <= k) {
            factors.push_back(w.suffix(i).prefix(len));
            i += len;
        }
    }
    std::vector<std::pair<Word, int>> grouped;
    for (const Word& f : factors) {
        if (!grouped.empty() && grouped.back().first == f)
            ++grouped.back().second;
        else
            grouped.emplace_back(f, 1);
    }
    return grouped;
}

HallSet HallSet::generate(unsigned d, HallOrderKind order, unsigned max_degree) {
    if (d < 1 || d > kMaxLetter) throw std::invalid_argument("alphabet size out of range");
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");

    HallSet H;
    H.d_ = d;
    H.order_ = order;
    H.max_degree_ = max_degree;
    H.by_degree_.resize(max_degree);

    for (Letter a = 1; a <= d; ++a) H.by_degree_[0].push_back(Tree::leaf(a));

    for (unsigned n = 2; n <= max_degree; ++n) {
        std::vector<Tree>& level = H.by_degree_[n - 1];
        for (unsigned i = 1; i < n; ++i) {
            for (const Tree& h1 : H.by_degree_[i - 1]) {
                for (const Tree& h2 : H.by_degree_[n - i - 1]) {
                    if (!hall_tree_less(order, h1, h2)) continue;
                    // h1 a letter, or h2 ≤ h1''
                    if (!h1.is_leaf() && hall_tree_less(order, h1.right(), h2)) continue;
                    level.push_back(Tree::node(h1, h2));
                }
            }
        }
        std::sort(level.begin(), level.end(),
                  [&](const Tree& a, const Tree& b) { return hall_tree_less(order, a, b); });
    }

    for (const auto& level : H.by_degree_) {
        for (const Tree& t : level) {
            if (!H.word_index_.emplace(t.foliage(), t).second)
                throw std::logic_error("foliage collision in Hall set");
        }
    }
    return H;
}

const std::vector<Tree>& HallSet::trees_of_degree(unsigned n) const {
    if (n < 1 || n > max_degree_) throw std::out_of_range("degree outside the generated range");
    return by_degree_[n - 1];
}

std::vector<Tree> HallSet::all_trees() const {
    std::vector<Tree> out;
    for (const auto& level : by_degree_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool HallSet::contains(const Tree& t) const {
    const Tree* h = find_word(t.foliage());
    return h != nullptr && *h == t;
}

const Tree* HallSet::find_word(const Word& w) const {
    auto it = word_index_.find(w);
    return it == word_index_.end() ? nullptr : &it->second;
}

Tree HallSet::tree_of_hall_word(const Word& w) const {
    const Tree* t = find_word(w);
    if (!t) throw std::invalid_argument("not a Hall word here: " + w.str());
    return *t;
}

std::vector<std::pair<Word, int>> HallSet::factorize(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("cannot factorize the empty word");
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w.at(i) > d_) throw std::invalid_argument("letter outside the alphabet: " + w.str());
    }

    std::vector<std::pair<Word, int>> grouped;
    if (order_ == HallOrderKind::lyndon) {
        grouped = lyndon_factorize(w);
        for (const auto& [f, k] : grouped) {
            if (f.length() > max_degree_)
                throw std::out_of_range("factorization needs Hall words beyond max_degree");
        }
    } else {
        grouped = search_factorize(w);
    }

    // strictly decreasing factors, concatenation reproduces w
    for (std::size_t i = 0; i + 1 < grouped.size(); ++i) {
        const Tree a = tree_of_hall_word(grouped[i].first);
        const Tree b = tree_of_hall_word(grouped[i + 1].first);
        if (!less(b, a)) throw std::logic_error("factorization not strictly decreasing");
    }
    return grouped;
}

std::vector<std::pair<Word, int>> HallSet::search_factorize(const Word& w) const {
    // rank all Hall words by the order, ascending
    std::vector<Tree> trees = all_trees();
    std::sort(trees.begin(), trees.end(),
              [&](const Tree& a, const Tree& b) { return less(a, b); });
    std::map<Word, int> rank;
    for (std::size_t i = 0; i < trees.size(); ++i) rank[trees[i].foliage()] = static_cast<int>(i);

    const int top = static_cast<int>(trees.size());
    const std::size_t n = w.length();

    // count the non-increasing factorizations from pos with factors of rank
    // ≤ bound, clamped at 2 (only uniqueness matters)
    std::unordered_map<std::uint64_t, int> memo;
    auto key = [&](std::size_t pos, int bound) {
        return (static_cast<std::uint64_t>(pos) << 32) | static_cast<std::uint32_t>(bound);
    };
    auto count = [&](auto&& self, std::size_t pos, int bound) -> int {
        if (pos == n) return 1;
        auto it = memo.find(key(pos, bound));
        if (it != memo.end()) return it->second;
        int total = 0;
        for (std::size_t len = 1; len <= std::min<std::size_t>(max_degree_, n - pos); ++len) {
            const Word prefix = w.suffix(pos).prefix(len);
            auto rit = rank.find(prefix);
            if (rit == rank.end() || rit->second > bound) continue;
            total += self(self, pos + len, rit->second);
            if (total >= 2) break;
        }
        total = std::min(total, 2);
        memo.emplace(key(pos, bound), total);
        return total;
    };

    const int total = count(count, 0, top);
    if (total == 0) throw std::out_of_range("factorization needs Hall words beyond max_degree");
    if (total > 1) throw std::logic_error("decreasing factorization is not unique");

    std::vector<Word> factors;
    std::size_t pos = 0;
    int bound = top;
    while (pos < n) {
        for (std::size_t len = 1; len <= std::min<std::size_t>(max_degree_, n - pos); ++len) {
            const Word prefix = w.suffix(pos).prefix(len);
            auto rit = rank.find(prefix);
            if (rit == rank.end() || rit->second > bound) continue;
            if (count(count, pos + len, rit->second) >= 1) {
                factors.push_back(prefix);
                pos += len;
                bound = rit->second;
                break;
            }
        }
    }

    std::vector<std::pair<Word, int>> grouped;
    for (const Word& f : factors) {
        if (!grouped.empty() && grouped.back().first == f)
            ++grouped.back().second;
        else
            grouped.emplace_back(f, 1);
    }
    return grouped;
}

LazardDecomp HallSet::lazard(const Tree& h) const {
    if (!contains(h)) throw std::invalid_argument("lazard: tree is not in this Hall set");
    if (h.is_leaf()) throw std::invalid_argument("lazard: letters have no decomposition");

    LazardDecomp out;
    out.h2 = h.right();
    Tree t = h.left();
    out.k = 1;
    while (!t.is_leaf() && t.right() == out.h2) {
        t = t.left();
        ++out.k;
    }
    out.h1 = t;
    out.alpha = rat(1, out.k);
    out.accumulated = accumulated_depth(h);
    return out;
}

Rational HallSet::accumulated_depth(const Tree& h) const {
    if (h.is_leaf()) return Rational(1);
    // alpha of h itself, times the accumulated depths of both children
    Tree t = h.left();
    int k = 1;
    while (!t.is_leaf() && t.right() == h.right()) {
        t = t.left();
        ++k;
    }
    return rat(1, k) * accumulated_depth(h.left()) * accumulated_depth(h.right());
}

}  // namespace hsa
