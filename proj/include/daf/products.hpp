#pragma once

#include <optional>
#include <vector>

#include "daf/series.hpp"
#include "daf/zeta.hpp"

namespace daf {

// How much of a coefficient sequence is actually known.  A polynomial owns
// every coefficient (all later ones vanish); a truncated function only
// carries a trusted prefix and anything beyond it is unknown.
enum class SupportKind { polynomial, truncated };

struct GrowthCertificate {
  double bound = 0.0;   // claimed sup of (|c_n| n!)^(1/n)
  int checked_up_to = 0;
};

// A function determined by coefficients against the canonical basis
// zeta_0, zeta_1, ...  Its restriction to the nonnegative axis is the
// factorial series with the same coefficients.
struct ExpandableFunction {
  CoefficientSeries coeffs;
  SupportKind kind;
  std::optional<GrowthCertificate> certificate;

  ExpandableFunction(CoefficientSeries c, SupportKind k);
  static ExpandableFunction polynomial(std::vector<GaussianRational> c);
  static ExpandableFunction truncated(std::vector<GaussianRational> c);

  // highest stored index (-1 for the zero function)
  int support() const { return coeffs.degree(); }

  GaussianRational restriction_value(long x) const;
};

struct ExpandableEval {
  GaussianRational value;  // partial sum over the stored coefficients
  bool exact = false;      // true when no unknown term can contribute
  double tail_bound = 0.0; // heuristic bound on the dropped tail
};

// Evaluate through a precomputed basis table.  Throws when the table degree
// or window cannot cover the request.
ExpandableEval eval_expandable(const ExpandableFunction& f, const ZetaTable& table,
                               long x, long y);

// Sum the series against the table values over the table window.
LatticeFunction expandable_values(const ExpandableFunction& f, const ZetaTable& table);

// (Zf)(x,y) = x f(x,y) + iy (f(x,y+1) + f(x,y-1)) / 2.  Needs height >= 3;
// the result loses the top and bottom rows.
LatticeFunction z_operator(const LatticeFunction& f);

// Action of the same operator on basis coefficients: out(n) = n c(n) + c(n-1).
CoefficientSeries z_shift_coeffs(const CoefficientSeries& c);

// Coefficients of the product of basis members m and n, i.e. the transform
// of x^[m] x^[n].  Degree is exactly m+n.
CoefficientSeries ck_structure_constants(int m, int n);

// Product characterized by (f o g)|axis = f|axis * g|axis.  Exact whenever at
// least one factor is a polynomial; two truncated factors need the explicit
// truncation overload.
ExpandableFunction ck_product(const ExpandableFunction& f, const ExpandableFunction& g);
ExpandableFunction ck_product_truncated(const ExpandableFunction& f,
                                        const ExpandableFunction& g, int truncation);

// Convolution-type product: h(k) = sum_{m+n=k} f(m) g(n) m! n! / k!.
ExpandableFunction boxdot_product(const ExpandableFunction& f, const ExpandableFunction& g);

// Coefficients of p/q up to the given truncation.  The divisor must be a
// polynomial whose restriction has no zeros on the nonnegative integers;
// violations raise PreconditionError naming the offending point.
ExpandableFunction ck_quotient(const ExpandableFunction& p, const ExpandableFunction& q,
                               int truncation);

// Same quotient computed by a forward triangular solve against the structure
// constants; an independent cross-check of ck_quotient.
ExpandableFunction ck_quotient_triangular(const ExpandableFunction& p,
                                          const ExpandableFunction& q, int truncation);

// sup over n in [max(1, top/2), top] of (|c_n| n!)^(1/n), the quantity that
// must stay below sqrt(2) for the series to converge on the whole plane.
double expandability_estimate(const ExpandableFunction& f, int top);

}  // namespace daf
