#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hsa/free_element.hpp"
#include "hsa/rational.hpp"
#include "hsa/word.hpp"

namespace hsa {

// piecewise-linear path in R^dim, parametrized uniformly over [0,1]
struct PiecewisePath {
  std::size_t dim = 0;
  std::vector<std::vector<double>> points;

  static PiecewisePath from_csv(const std::string& file);

  std::size_t segments() const { return points.size() < 2 ? 0 : points.size() - 1; }
  std::vector<double> increment(std::size_t i) const;
  std::vector<double> at(double t) const;
};

// dense truncated tensor series, levels 0..level (level k stored flat, size dim^k)
struct NumericTensor {
  std::size_t dim = 0;
  int level = 0;
  std::vector<std::vector<double>> levels;

  static NumericTensor unit(std::size_t dim, int level);
};

std::size_t word_index(const Word& w, std::size_t dim);

NumericTensor segment_exp(const std::vector<double>& inc, int level);
NumericTensor chen(const NumericTensor& x, const NumericTensor& y);
NumericTensor signature(const PiecewisePath& path, int level);

double pair_numeric(const FreeElement& f, const NumericTensor& s);

// per-word dynamic program over segments; never forms a dense tensor
double sig_word_coefficient(const PiecewisePath& path, const Word& w);
double pair_numeric_sparse(const FreeElement& f, const PiecewisePath& path);

PiecewisePath random_path(std::mt19937_64& rng, std::size_t dim, std::size_t segments);

// |<f shuffle g, S> - <f,S><g,S>|
double check_shuffle_identity(const FreeElement& f, const FreeElement& g,
                              const PiecewisePath& path, int level);

// |chen(S(first part), S(second part)) - S(whole)| over a split of the path, max abs entry
double chen_consistency(const PiecewisePath& path, int level, std::size_t split);

// Riemann–Stieltjes check of the half shuffle pairing: the functionals are
// evaluated on the remaining path t -> S_{t,1}, the left argument integrates,
// and the sum carries an overall minus sign.  Returns the absolute residual.
double check_halfshuffle_integration(const FreeElement& f, const FreeElement& g,
                                     const PiecewisePath& path, int level,
                                     std::size_t partitions);

struct WorkedExampleReport {
  Word word;
  std::vector<std::pair<Word, int>> factors;
  Rational reconciled_constant;       // depth product with multiplicity powers and factorials
  Rational distinct_factor_constant;  // depth product over distinct factors only
  std::vector<double> alphas;         // one per distinct factor, in factor order
  double direct = 0.0;
  double product = 0.0;
  double rel_error = 0.0;
  bool duality_check = false;
  bool pass = false;
  unsigned long long seed = 0;
  std::size_t support = 0;
  std::string kernel;
};

WorkedExampleReport worked_example(unsigned long long seed);

}  // namespace hsa
