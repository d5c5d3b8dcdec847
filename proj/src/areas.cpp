#include "hsa/areas.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace hsa {

bool AreaMonomial::operator==(const AreaMonomial& o) const {
    if (factors.size() != o.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (!(factors[i] == o.factors[i])) return false;
    return true;
}

bool area_monomial_less(const AreaMonomial& a, const AreaMonomial& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (tree_structural_less(a.factors[i], b.factors[i])) return true;
        if (tree_structural_less(b.factors[i], a.factors[i])) return false;
    }
    return false;
}

std::pair<Tree, int> orient_area_tree(const Tree& t) {
    if (t.is_leaf()) return {t, 1};
    auto [l, sl] = orient_area_tree(t.left());
    if (sl == 0) return {t, 0};
    auto [r, sr] = orient_area_tree(t.right());
    if (sr == 0) return {t, 0};
    if (l == r) return {t, 0};  // 𝔄((x,x)) = 0
    if (tree_structural_less(r, l)) return {Tree::node(r, l), -sl * sr};
    return {Tree::node(l, r), sl * sr};
}

void AreaPoly::add_monomial(const std::vector<Tree>& factors, const Rational& c) {
    if (c == 0) return;
    AreaMonomial m;
    m.factors.reserve(factors.size());
    int sign = 1;
    for (const Tree& t : factors) {
        auto [o, s] = orient_area_tree(t);
        if (s == 0) return;
        sign *= s;
        m.factors.push_back(o);
    }
    std::sort(m.factors.begin(), m.factors.end(), tree_structural_less);
    auto [it, inserted] = terms.emplace(std::move(m), sign * c);
    if (!inserted) {
        it->second += sign * c;
        if (it->second == 0) terms.erase(it);
    }
}

std::size_t AreaPoly::shuffle_degree() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms) n = std::max(n, m.shuffle_degree());
    return n;
}

AreaPoly& AreaPoly::operator+=(const AreaPoly& o) {
    for (const auto& [m, c] : o.terms) {
        auto [it, inserted] = terms.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

AreaPoly& AreaPoly::operator-=(const AreaPoly& o) {
    for (const auto& [m, c] : o.terms) {
        auto [it, inserted] = terms.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

AreaPoly& AreaPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

AreaPoly AreaPoly::shuffled_with(const Tree& t) const {
    AreaPoly out;
    for (const auto& [m, c] : terms) {
        std::vector<Tree> fs = m.factors;
        fs.push_back(t);
        out.add_monomial(fs, c);
    }
    return out;
}

Rational beta(unsigned k) {
    if (k < 1) throw std::invalid_argument("beta is defined for k >= 1");
    return rat(-(static_cast<long>(k) - 1), static_cast<long>(k) + 1);
}

Rational beta_recursive(unsigned k) {
    if (k < 1) throw std::invalid_argument("beta is defined for k >= 1");
    Rational b(0);
    for (unsigned i = 2; i <= k; ++i) b = (b - 1) / (b + 3);
    return b;
}

FreeElement eval_area_poly(const AreaPoly& p) {
    FreeElement out;
    for (const auto& [m, c] : p.terms) {
        FreeElement prod = FreeElement::unit();
        for (const Tree& t : m.factors) prod = shuffle(prod, eval_tree(t, TreeProduct::area));
        out += c * prod;
    }
    return out;
}

namespace {

std::string monomial_key(const AreaMonomial& m) {
    std::string s;
    for (const Tree& t : m.factors) {
        s += t.str();
        s.push_back('|');
    }
    return s;
}

// the engine works on oriented inputs and memoizes on their text form
class Rewriter {
public:
    // area(𝔄(A), monomial): general entry, handles orientation and emptiness
    AreaPoly area_with_monomial(const Tree& A, const std::vector<Tree>& factors) {
        auto [a0, sa] = orient_area_tree(A);
        if (sa == 0) return AreaPoly{};
        AreaMonomial m;
        int sign = sa;
        for (const Tree& t : factors) {
            auto [o, s] = orient_area_tree(t);
            if (s == 0) return AreaPoly{};
            sign *= s;
            m.factors.push_back(o);
        }
        std::sort(m.factors.begin(), m.factors.end(), tree_structural_less);
        if (m.factors.empty()) {
            // area(f, e) = f ≺ e − e ≺ f = f for positive f
            AreaPoly out;
            out.add_monomial({a0}, Rational(sign));
            return out;
        }
        return Rational(sign) * core(a0, m);
    }

    // Σ terms of P: area(𝔄(A), term); empty monomials contribute c·𝔄(A)
    AreaPoly area_with_poly(const Tree& A, const AreaPoly& p) {
        AreaPoly out;
        for (const auto& [m, c] : p.terms) out += c * area_with_monomial(A, m.factors);
        return out;
    }

private:
    // A and M oriented and sorted, |M| ≥ 1
    AreaPoly core(const Tree& A, const AreaMonomial& M) {
        const std::string key = A.str() + "@" + monomial_key(M);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const std::size_t n = M.factors.size();
        AreaPoly out;
        if (n == 1) {
            out.add_monomial({Tree::node(A, M.factors[0])}, Rational(1));
        } else if (n == 2) {
            // the arity-3 pullout identity, solved for area(A, A₁⧢A₂)
            const Tree &A1 = M.factors[0], &A2 = M.factors[1];
            out.add_monomial({A, A1, A2}, rat(-1, 3));
            out.add_monomial({Tree::node(A, A2), A1}, rat(1, 3));
            out.add_monomial({Tree::node(A, A1), A2}, rat(1, 3));
            out.add_monomial({Tree::node(Tree::node(A, A2), A1)}, rat(1, 3));
            out.add_monomial({Tree::node(Tree::node(A, A1), A2)}, rat(1, 3));
        } else {
            // split M = A₁ · rest, pull A₁ out, rotate the obstruction with
            // the area-Jacobi identity, divide by β_{n−1} + 3
            const Tree A1 = M.factors[0];
            const std::vector<Tree> rest(M.factors.begin() + 1, M.factors.end());
            const Rational bprev = beta(static_cast<unsigned>(n) - 1);

            AreaPoly p1 = area_with_monomial(A1, rest);  // area(A₁, rest)
            {
                std::vector<Tree> lead = rest;
                lead.push_back(A1);
                AreaPoly leading;
                leading.add_monomial(lead, bprev);
                p1 -= leading;  // P₁′, shuffle-degree ≤ n−1
            }

            std::vector<Tree> full = M.factors;
            full.push_back(A);
            out.add_monomial(full, beta(static_cast<unsigned>(n)));

            AreaPoly bracket;
            auto [t01, s01] = orient_area_tree(Tree::node(A, A1));
            if (s01 != 0) {
                std::vector<Tree> shuf = rest;
                shuf.push_back(t01);
                bracket.add_monomial(shuf, Rational(2 * s01));
                AreaMonomial mrest;
                mrest.factors = rest;
                bracket += Rational(2 * s01) * core(t01, mrest);
            }
            bracket -= area_with_poly(A, p1);
            bracket += p1.shuffled_with(A);
            out += (Rational(1) / (bprev + 3)) * bracket;
        }
        memo_.emplace(key, out);
        return out;
    }

    std::map<std::string, AreaPoly> memo_;
};

Rewriter& rewriter() {
    thread_local Rewriter r;
    return r;
}

}  // namespace

AreaPoly rewrite_area_of_monomial(const Tree& A, const AreaMonomial& M) {
    if (M.factors.empty())
        throw std::invalid_argument("rewrite_area_of_monomial needs at least one factor");
    return rewriter().area_with_monomial(A, M.factors);
}

AreaPoly word_to_area_poly(const Word& w) {
    if (w.empty()) {
        AreaPoly p;
        p.add_monomial({}, Rational(1));
        return p;
    }
    if (w.length() == 1) {
        AreaPoly p;
        p.add_monomial({Tree::leaf(w.front())}, Rational(1));
        return p;
    }
    // w = a·v = a ≺ v = ½(area(a, v) + a ⧢ v)
    const Tree a = Tree::leaf(w.front());
    const AreaPoly v = word_to_area_poly(w.suffix(1));
    AreaPoly out = rewriter().area_with_poly(a, v);
    out += v.shuffled_with(a);
    out *= rat(1, 2);
    return out;
}

namespace {

// row-reduces rows in place over the rationals; fills `relations` with the
// left-kernel combinations discovered en route
long exact_rank(std::vector<std::vector<Rational>>& rows,
                std::vector<std::vector<Rational>>* combos) {
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
    std::vector<std::vector<Rational>> id(nrows, std::vector<Rational>(nrows, Rational(0)));
    for (std::size_t i = 0; i < nrows; ++i) id[i][i] = 1;

    long rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t pivot = r;
        while (pivot < nrows && rows[pivot][c] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[pivot], rows[r]);
        std::swap(id[pivot], id[r]);
        const Rational inv = Rational(1) / rows[r][c];
        for (std::size_t j = 0; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t j = 0; j < nrows; ++j) id[r][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
            for (std::size_t j = 0; j < nrows; ++j) id[i][j] -= f * id[r][j];
        }
        ++r;
        ++rank;
    }
    if (combos) {
        for (std::size_t i = r; i < nrows; ++i) combos->push_back(id[i]);
    }
    return rank;
}

}  // namespace

std::vector<DegreeRankReport> hall_area_rank_report(unsigned d, unsigned n, const HallSet& H) {
    if (n > H.max_degree()) throw std::invalid_argument("degree bound exceeds the Hall set");
    std::vector<DegreeRankReport> out;
    for (unsigned m = 1; m <= n; ++m) {
        const std::vector<Word> words = all_words(d, m);
        DegreeRankReport rep;
        rep.degree = m;
        rep.dimension = static_cast<long>(words.size());

        std::map<Word, std::size_t> col;
        for (std::size_t j = 0; j < words.size(); ++j) col[words[j]] = j;

        std::vector<std::vector<Rational>> rows;
        rows.reserve(words.size());
        for (const Word& w : words) {
            FreeElement a = FreeElement::unit();
            for (const auto& [f, k] : H.factorize(w)) {
                a = shuffle(a, shuffle_power(eval_tree(H.tree_of_hall_word(f), TreeProduct::area),
                                             static_cast<unsigned>(k)));
            }
            std::vector<Rational> row(words.size(), Rational(0));
            for (const auto& [u, c] : a.terms()) row[col.at(u)] = c;
            rows.push_back(std::move(row));
        }

        std::vector<std::vector<Rational>> combos;
        rep.rank = exact_rank(rows, &combos);
        for (const auto& combo : combos) {
            std::vector<std::pair<Word, Rational>> rel;
            for (std::size_t i = 0; i < combo.size(); ++i) {
                if (combo[i] != 0) rel.emplace_back(words[i], combo[i]);
            }
            rep.relations.push_back(std::move(rel));
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace hsa
