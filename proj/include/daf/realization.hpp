#pragma once

#include <utility>
#include <vector>

#include "daf/polynomial.hpp"
#include "daf/products.hpp"

namespace daf {

// State-space form of a rational function with no poles on the nonnegative
// integers: f(x) = poly(x) + C (xI - A)^{-1} B.
struct Realization {
  std::vector<std::vector<GaussianRational>> a;  // dim x dim
  std::vector<GaussianRational> b;               // dim
  std::vector<GaussianRational> c;               // dim
  ExactPolynomial1 poly;                         // direct part, may be zero

  int dim() const { return static_cast<int>(a.size()); }
};

// throws PreconditionError on ragged rows or mismatched vector lengths
void check_shape(const Realization& r);

// exact evaluation by Gaussian elimination; throws when xI - A is singular
GaussianRational eval_realization(const Realization& r, const GaussianRational& x);

struct RealizationCheck {
  bool ok = true;
  long x = 0;  // first nonnegative integer making xI - A singular
};

// Scan x = 0..G for singular shifts, G a row-sum majorant of the spectrum;
// beyond G the shifted matrix is strictly diagonally dominant and safe.
RealizationCheck validate(const Realization& r);

// diagonal system for sum_j residue_j / (x - pole_j); poles on the
// nonnegative integers are refused
Realization realize_from_poles(
    const std::vector<std::pair<GaussianRational, GaussianRational>>& poles);

// Basis coefficients of the analytic extension, from exact axis values.
// Polynomial kind when there is no state space, truncated otherwise.
ExpandableFunction rational_da_extend(const Realization& r, int truncation);

// sup over n in [max(1, top/2), top] of |delta^n f(0)|^(1/n); stays below
// sqrt(2) exactly when the extension converges everywhere
double fourier_decay_check(const Realization& r, int top);

nlohmann::ordered_json realization_to_json(const Realization& r);
Realization realization_from_json(const nlohmann::json& j);

}  // namespace daf
