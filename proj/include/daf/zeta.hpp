#pragma once

#include "daf/series.hpp"

namespace daf {

/// One induction step of the analytic extension: given the extension f of the
/// derivative of the target restriction, returns the primitive h that is
/// discrete analytic with delta_x h = f and h(0,0) = 0.
CoefficientSeries2 extension_step(const CoefficientSeries2& f);

/// Discrete analytic extension of factorial-basis restriction coefficients.
CoefficientSeries2 extend_to_factorial2(const CoefficientSeries& p);

/// The unique discrete analytic polynomial agreeing with p on the real axis.
ExactPolynomial2 extend_polynomial(const ExactPolynomial1& p);

/// Basis polynomials zeta_0..zeta_N tabulated on a window, kept in three
/// forms: factorial-basis coefficients, expanded monomials, and values.
struct ZetaTable {
  int max_degree;
  Window window;
  std::vector<CoefficientSeries2> fcoeffs;
  std::vector<ExactPolynomial2> polys;
  std::vector<LatticeFunction> values;

  ZetaTable(int n, const Window& w) : max_degree(n), window(w) {}

  const GaussianRational& value(int n, long x, long y) const;
};

/// Builds the table by the extension construction, iterating
/// zeta_n = extension_step(n * zeta_{n-1}). Value tabulation can fan out
/// over threads; results are identical for any thread count.
ZetaTable zeta_by_extension(int max_degree, const Window& w, int threads = 1);

/// zeta_by_extension with a disk cache keyed by degree and window, rooted at
/// $ZETA_CACHE_DIR when set. Without the variable it just computes.
ZetaTable zeta_cached(int max_degree, const Window& w, int threads = 1);

nlohmann::ordered_json zeta_table_to_json(const ZetaTable& zt);
ZetaTable zeta_table_from_json(const nlohmann::json& j);

/// Taylor coefficients (in z, monomial basis) of
/// (1+z)^x * ((1+i+iz)/(1+i+z))^y through degree N, computed with exact
/// truncated series arithmetic. Coefficient n equals zeta_n(x,y)/n!.
CoefficientSeries exy_taylor(long x, long y, int truncation);

/// sup over N/2 <= n <= N of |coefficient n|^(1/n) for the series above; the
/// Cauchy-Hadamard estimate of the reciprocal convergence radius. Rejected on
/// the nonnegative real axis where the series terminates.
double growth_rate(long x, long y, int truncation);

}  // namespace daf
