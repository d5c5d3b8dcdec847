#include "hsa/signature.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hsa/hall.hpp"
#include "hsa/magma.hpp"
#include "hsa/pbw.hpp"
#include "hsa/products.hpp"
#include "hsa/sig_kernels.hpp"

namespace hsa {

PiecewisePath PiecewisePath::from_csv(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open path file: " + file);
  PiecewisePath p;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> pt;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      if (cell.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
        pt.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (p.points.empty()) continue;  // header row
      throw std::runtime_error("non-numeric row in " + file);
    }
    if (pt.empty()) continue;
    if (p.dim == 0) p.dim = pt.size();
    if (pt.size() != p.dim) throw std::runtime_error("inconsistent row width in " + file);
    p.points.push_back(std::move(pt));
  }
  if (p.points.size() < 2) throw std::runtime_error("path needs at least two points");
  return p;
}

std::vector<double> PiecewisePath::increment(std::size_t i) const {
  std::vector<double> v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = points[i + 1][k] - points[i][k];
  return v;
}

std::vector<double> PiecewisePath::at(double t) const {
  const std::size_t m = segments();
  double u = t * static_cast<double>(m);
  std::size_t s = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(u))), m - 1);
  const double lam = u - static_cast<double>(s);
  std::vector<double> v(dim);
  for (std::size_t k = 0; k < dim; ++k)
    v[k] = points[s][k] + lam * (points[s + 1][k] - points[s][k]);
  return v;
}

NumericTensor NumericTensor::unit(std::size_t dim, int level) {
  NumericTensor t;
  t.dim = dim;
  t.level = level;
  t.levels.resize(static_cast<std::size_t>(level) + 1);
  std::size_t sz = 1;
  for (int k = 0; k <= level; ++k) {
    t.levels[static_cast<std::size_t>(k)].assign(sz, 0.0);
    sz *= dim;
  }
  t.levels[0][0] = 1.0;
  return t;
}

std::size_t word_index(const Word& w, std::size_t dim) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Letter a = w.at(i);
    if (a < 1 || a > dim) throw std::out_of_range("letter outside alphabet");
    idx = idx * dim + (a - 1);
  }
  return idx;
}

NumericTensor segment_exp(const std::vector<double>& inc, int level) {
  const std::size_t d = inc.size();
  NumericTensor t = NumericTensor::unit(d, level);
  std::vector<double> scaled(d);
  for (int k = 1; k <= level; ++k) {
    for (std::size_t j = 0; j < d; ++j) scaled[j] = inc[j] / static_cast<double>(k);
    const auto& prev = t.levels[static_cast<std::size_t>(k - 1)];
    auto& cur = t.levels[static_cast<std::size_t>(k)];
    kern::active_outer()(cur.data(), prev.data(), prev.size(), scaled.data(), d);
  }
  return t;
}

NumericTensor chen(const NumericTensor& x, const NumericTensor& y) {
  if (x.dim != y.dim || x.level != y.level) throw std::invalid_argument("tensor shape mismatch");
  NumericTensor z = NumericTensor::unit(x.dim, x.level);
  z.levels[0][0] = x.levels[0][0] * y.levels[0][0];
  for (int L = 1; L <= x.level; ++L) {
    auto& out = z.levels[static_cast<std::size_t>(L)];
    for (int j = 0; j <= L; ++j) {
      const auto& xs = x.levels[static_cast<std::size_t>(j)];
      const auto& ys = y.levels[static_cast<std::size_t>(L - j)];
      kern::active_outer()(out.data(), xs.data(), xs.size(), ys.data(), ys.size());
    }
  }
  return z;
}

NumericTensor signature(const PiecewisePath& path, int level) {
  if (path.segments() == 0) throw std::invalid_argument("path needs at least one segment");
  NumericTensor s = NumericTensor::unit(path.dim, level);
  for (std::size_t i = 0; i < path.segments(); ++i)
    s = chen(s, segment_exp(path.increment(i), level));
  return s;
}

double pair_numeric(const FreeElement& f, const NumericTensor& s) {
  double acc = f.empty_coeff().get_d();
  for (const auto& [w, c] : f.terms()) {
    const std::size_t len = w.length();
    if (len == 0) continue;
    if (static_cast<int>(len) > s.level) throw std::invalid_argument("truncation level too low");
    acc += c.get_d() * s.levels[len][word_index(w, s.dim)];
  }
  return acc;
}

double sig_word_coefficient(const PiecewisePath& path, const Word& w) {
  const std::size_t L = w.length();
  if (L == 0) return 1.0;
  std::vector<double> c(L + 1, 0.0);
  c[0] = 1.0;
  for (std::size_t s = 0; s < path.segments(); ++s) {
    const std::vector<double> v = path.increment(s);
    std::vector<double> next = c;
    for (std::size_t i = 0; i < L; ++i) {
      double running = c[i];
      if (running == 0.0) continue;
      for (std::size_t j = i + 1; j <= L; ++j) {
        const Letter a = w.at(j - 1);
        if (a < 1 || a > path.dim) throw std::out_of_range("letter outside alphabet");
        running *= v[a - 1] / static_cast<double>(j - i);
        next[j] += running;
      }
    }
    c = std::move(next);
  }
  return c[L];
}

double pair_numeric_sparse(const FreeElement& f, const PiecewisePath& path) {
  double acc = f.empty_coeff().get_d();
  for (const auto& [w, coeff] : f.terms()) {
    if (w.length() == 0) continue;
    acc += coeff.get_d() * sig_word_coefficient(path, w);
  }
  return acc;
}

PiecewisePath random_path(std::mt19937_64& rng, std::size_t dim, std::size_t segments) {
  std::uniform_real_distribution<double> step(-1.0, 1.0);
  PiecewisePath p;
  p.dim = dim;
  p.points.assign(segments + 1, std::vector<double>(dim, 0.0));
  for (std::size_t i = 1; i <= segments; ++i)
    for (std::size_t k = 0; k < dim; ++k) p.points[i][k] = p.points[i - 1][k] + step(rng);
  return p;
}

double check_shuffle_identity(const FreeElement& f, const FreeElement& g,
                              const PiecewisePath& path, int level) {
  if (static_cast<int>(f.degree() + g.degree()) > level)
    throw std::invalid_argument("truncation level too low for shuffle check");
  const NumericTensor s = signature(path, level);
  return std::fabs(pair_numeric(shuffle(f, g), s) - pair_numeric(f, s) * pair_numeric(g, s));
}

double chen_consistency(const PiecewisePath& path, int level, std::size_t split) {
  if (split == 0 || split >= path.segments())
    throw std::invalid_argument("split must be interior");
  PiecewisePath a, b;
  a.dim = b.dim = path.dim;
  a.points.assign(path.points.begin(), path.points.begin() + static_cast<long>(split) + 1);
  b.points.assign(path.points.begin() + static_cast<long>(split), path.points.end());
  const NumericTensor glued = chen(signature(a, level), signature(b, level));
  const NumericTensor whole = signature(path, level);
  double worst = 0.0;
  for (int k = 0; k <= level; ++k) {
    const auto& u = glued.levels[static_cast<std::size_t>(k)];
    const auto& v = whole.levels[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::fabs(u[i] - v[i]));
  }
  return worst;
}

namespace {

// S_{t,1} for the tail of the path; exact because the path is linear inside a segment
NumericTensor tail_signature(const PiecewisePath& path,
                             const std::vector<NumericTensor>& corner_tails, double t,
                             int level) {
  const std::size_t m = path.segments();
  double u = t * static_cast<double>(m);
  std::size_t s = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(u))), m - 1);
  const double lam = u - static_cast<double>(s);
  std::vector<double> partial(path.dim);
  for (std::size_t k = 0; k < path.dim; ++k)
    partial[k] = (1.0 - lam) * (path.points[s + 1][k] - path.points[s][k]);
  return chen(segment_exp(partial, level), corner_tails[s + 1]);
}

}  // namespace

double check_halfshuffle_integration(const FreeElement& f, const FreeElement& g,
                                     const PiecewisePath& path, int level,
                                     std::size_t partitions) {
  if (static_cast<int>(f.degree() + g.degree()) > level)
    throw std::invalid_argument("truncation level too low for half shuffle check");
  if (partitions == 0) throw std::invalid_argument("need at least one partition cell");
  const std::size_t m = path.segments();
  std::vector<NumericTensor> tails(m + 1, NumericTensor::unit(path.dim, level));
  for (std::size_t i = m; i-- > 0;)
    tails[i] = chen(segment_exp(path.increment(i), level), tails[i + 1]);

  const FreeElement fg = half_shuffle(f, g);
  const double exact = pair_numeric(fg, tails[0]);

  std::vector<double> fv(partitions + 1), gv(partitions + 1);
  for (std::size_t j = 0; j <= partitions; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(partitions);
    const NumericTensor s = tail_signature(path, tails, t, level);
    fv[j] = pair_numeric(f, s);
    gv[j] = pair_numeric(g, s);
  }
  double rs = 0.0;
  for (std::size_t j = 0; j < partitions; ++j) rs += gv[j] * (fv[j + 1] - fv[j]);
  return std::fabs(exact + rs);
}

WorkedExampleReport worked_example(unsigned long long seed) {
  WorkedExampleReport rep;
  rep.seed = seed;
  rep.kernel = kern::active_kernel_name();
  rep.word = Word::parse("233212222111");

  const HallSet hall = HallSet::generate(3, HallOrderKind::lyndon, 5);
  const auto factors = hall.factorize(rep.word);
  rep.factors = factors;
  rep.reconciled_constant = Rational(1);
  rep.distinct_factor_constant = Rational(1);
  std::vector<Tree> factor_trees;
  for (const auto& [fw, power] : factors) {
    const Tree tree = hall.tree_of_hall_word(fw);
    factor_trees.push_back(tree);
    const Rational depth = hall.accumulated_depth(tree);
    Rational powered = depth;
    for (int i = 1; i < power; ++i) powered *= depth;
    rep.reconciled_constant *= powered / rat_factorial(static_cast<unsigned>(power));
    rep.distinct_factor_constant *= depth;
  }

  const IntegralsDual dual = dual_basis_via_integrals(rep.word, hall);
  rep.support = dual.value.terms().size();

  std::mt19937_64 rng(seed);
  const PiecewisePath path = random_path(rng, 3, 10);

  rep.direct = pair_numeric_sparse(dual.value, path);
  rep.product = rep.reconciled_constant.get_d();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const double alpha =
        pair_numeric_sparse(eval_tree(factor_trees[i], TreeProduct::half_shuffle), path);
    rep.alphas.push_back(alpha);
    for (int k = 0; k < factors[i].second; ++k) rep.product *= alpha;
  }
  const double scale = std::max(std::fabs(rep.direct), std::fabs(rep.product));
  rep.rel_error = scale == 0.0 ? 0.0 : std::fabs(rep.direct - rep.product) / scale;

  rep.duality_check = pairing(dual.value, pbw_element(rep.word, hall)) == Rational(1);
  rep.pass = rep.duality_check && rep.rel_error <= 1e-6;
  return rep;
}

}  // namespace hsa
