#pragma once

#include <map>

#include "daf/lattice.hpp"
#include "daf/polynomial.hpp"

namespace daf {

/// Which basis a 1-d coefficient sequence refers to. Coefficients in the
/// factorial and zeta bases coincide for the restriction of a discrete
/// analytic function to the real axis; keeping the tag explicit stops
/// accidental cross-basis arithmetic.
enum class Basis { factorial_x, zeta, monomial };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

/// Finite coefficient sequence; trailing zeros are trimmed on construction.
class CoefficientSeries {
 public:
  CoefficientSeries(Basis b, std::vector<GaussianRational> c);

  Basis basis() const { return basis_; }
  /// -1 for the empty (zero) series.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  size_t size() const { return c_.size(); }
  /// Zero beyond the stored support.
  const GaussianRational& coeff(size_t n) const;
  const std::vector<GaussianRational>& coeffs() const { return c_; }

  bool operator==(const CoefficientSeries& o) const = default;

 private:
  Basis basis_;
  std::vector<GaussianRational> c_;
};

nlohmann::ordered_json series_to_json(const CoefficientSeries& c);
CoefficientSeries series_from_json(const nlohmann::json& j);

/// Value of the falling factorial x^[n] = x(x-1)...(x-n+1).
GaussianRational factorial_poly(unsigned n, const GaussianRational& x);
/// x^[n] expanded in the monomial basis.
ExactPolynomial1 factorial_poly1(unsigned n);

/// Coefficients of f in the falling-factorial basis from the values
/// f(0), ..., f(N): coefficient n is the n-th forward difference at 0
/// divided by n!. Polynomial inputs of degree d <= N are recovered exactly.
CoefficientSeries fourier_1d(const std::vector<GaussianRational>& values);

/// Sum of coeff(n) * x^[n]; finite for every integer x.
GaussianRational inverse_fourier_1d(const CoefficientSeries& c, long x);

/// Sparse 2-d coefficient table against the basis x^[m] y^[n].
class CoefficientSeries2 {
 public:
  void add(int m, int n, const GaussianRational& v);
  GaussianRational coeff(int m, int n) const;
  bool is_zero() const { return t_.empty(); }
  std::pair<int, int> max_degrees() const;
  const std::map<std::pair<int, int>, GaussianRational>& terms() const { return t_; }

  GaussianRational eval(long x, long y) const;
  ExactPolynomial2 to_monomial() const;

  CoefficientSeries2 scaled(const GaussianRational& s) const;
  CoefficientSeries2& operator+=(const CoefficientSeries2& o);
  CoefficientSeries2& operator-=(const CoefficientSeries2& o);

  bool operator==(const CoefficientSeries2& o) const = default;

 private:
  std::map<std::pair<int, int>, GaussianRational> t_;
};

/// 2-d transform on a window anchored at (0,0): the 1-d transform applied
/// along y for every column, then along x. Exact for polynomial data whose
/// degrees fit inside the window.
CoefficientSeries2 fourier_2d(const LatticeFunction& f);
LatticeFunction inverse_fourier_2d(const CoefficientSeries2& c, const Window& w);

/// Coefficient-space forward differences: delta_x maps coefficient (m,n) to
/// (m+1) * coeff(m+1,n), and delta_y likewise in n.
CoefficientSeries2 delta_x_coeffs(const CoefficientSeries2& c);
CoefficientSeries2 delta_y_coeffs(const CoefficientSeries2& c);

/// g with delta g = f and g(0) = 0, in the factorial basis.
CoefficientSeries antidifference_1d(const CoefficientSeries& f);

/// h with delta_x h = f and delta_y h = g, normalized to h(0,0) = 0.
/// Requires the mixed-difference compatibility
/// (n+1) f(m,n+1) == (m+1) g(m+1,n) for all m,n.
CoefficientSeries2 joint_primitive(const CoefficientSeries2& f, const CoefficientSeries2& g);

CoefficientSeries monomial_to_factorial(const ExactPolynomial1& p);
ExactPolynomial1 factorial_to_monomial(const CoefficientSeries& c);

}  // namespace daf
