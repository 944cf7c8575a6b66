#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "daf/products.hpp"
#include "daf/zeta.hpp"

namespace daf {

using Cplx = std::complex<double>;

/// Floating-point layer for the function space whose n-th basis member is
/// z^n/n!. Coefficients are plain Taylor coefficients; the tag records whether
/// they live on the classical square-summable side or on the transformed side.
enum class SeriesSpace { h2, entire };

struct EntireSeries {
  std::vector<Cplx> coeffs;
  SeriesSpace space = SeriesSpace::h2;
};

/// Coefficient n maps to coefficient n divided by n!. Unitary onto its range
/// by definition of the range norm.
EntireSeries t_map(const EntireSeries& f);
EntireSeries t_inv(const EntireSeries& f);

double h2_norm(const EntireSeries& f);
/// Norm in the transformed space: l2 of coeff(n) * n!.
double transported_norm(const EntireSeries& f);

/// Product carried over from pointwise multiplication:
/// (F <> G)_k = sum_{m+n=k} F_m G_n m! n! / k!.
EntireSeries diamond_product(const EntireSeries& f, const EntireSeries& g);

/// Largest singular value of the n x n lower-triangular Toeplitz matrix built
/// from the symbol coefficients. Equals the multiplier norm on truncations.
double multiplier_norm(const std::vector<Cplx>& s0, int n);

/// Taylor coefficients of (z - a)/(1 - a z) for real |a| < 1.
std::vector<Cplx> blaschke_coeffs(double a, int n);

/// State-space node [[A, B], [C, D]]. Coisometric means the block matrix times
/// its adjoint is the identity; for square finite blocks that makes it unitary.
struct CoisometryRealization {
  Eigen::MatrixXcd a;
  Eigen::VectorXcd b;
  Eigen::RowVectorXcd c;
  Cplx d = 0.0;
  int dim() const { return static_cast<int>(a.rows()); }
};

bool is_coisometric(const CoisometryRealization& r, double tol = 1e-10);

CoisometryRealization blaschke_realization(double a);

/// Series connection: transfer functions multiply.
CoisometryRealization cascade(const CoisometryRealization& r1,
                              const CoisometryRealization& r2);

/// Scaling-and-squaring matrix exponential, accurate to ~1e-13 for the modest
/// norms used here.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

/// D + z C (I - z A)^{-1} B.
Cplx classical_transfer_eval(const CoisometryRealization& r, Cplx z);

/// Transformed transfer function D + sum_n z^{n+1}/(n+1)! C A^n B. Converges
/// for every z. No coisometry requirement; callers wanting the contractivity
/// facts should check is_coisometric separately.
Cplx coisometry_realize_eval(const CoisometryRealization& r, Cplx z);

/// Kernel of the complementary space attached to the realization:
/// C e^{zA} e^{conj(w) A*} C*.
Cplx ks_kernel(const CoisometryRealization& r, Cplx z, Cplx w);

/// Same kernel from the symbol alone: P = I - L L* with L the Toeplitz
/// multiplier matrix, summed against z^m/m! conj(w)^n/n!.
Cplx kernel_from_multiplier(const std::vector<Cplx>& s0, Cplx z, Cplx w, int n);

/// Inner product against the reproducing kernel at w, computed from the
/// coefficient pairing rather than by evaluation.
Cplx reproduce_at(const EntireSeries& f, Cplx w);

struct DdReport {
  bool intertwine_ok = false;  // derivative after t_map equals t_map after shift-down
  bool ddstar_ok = false;      // d d* = I up to the last truncated index
  bool dstar_d_ok = false;     // d* d = I minus the projection onto constants
};
DdReport dd_checks(int n);

/// || Q^2 - Q || residual over the leading half block, Q = L L*. Zero for
/// inner symbols, bounded away from zero for strict contractions.
double beurling_projection_residual(const std::vector<Cplx>& s0, int n);

/// Smallest eigenvalue of I - A*A - C*C. Nonnegative for unitary nodes, which
/// is the state-space form of the norm inequality for the backward shift on
/// the complementary space.
double hs_inequality_margin(const CoisometryRealization& r);

/// Ratio of the weighted area integral of |z^n|^2 to (n!)^2. The radial weight
/// is the order-zero modified Bessel function of 2|z|, calibrated so the
/// constant has norm one. Ratios should sit at 1 for every n.
double bessel_norm_check(int n, int panels = 24);

/// Scalar value of the generating function (1+t)^x ((1+i+it)/(1+i+t))^y.
Cplx exy_point(Cplx t, long x, long y);

/// Carry a coefficient series to the lattice side: coefficient n becomes the
/// degree-n coefficient of the discrete series. Doubles convert exactly.
ExpandableFunction v_transport(const EntireSeries& f);

/// Lattice-side kernel of the complementary space by the sandwich formula
/// C e_{x1,y1}(A) (e_{x2,y2}(A))* C*, where e_{x,y}(A) substitutes the state
/// matrix into the generating function. Requires spectral norm below sqrt(2).
Cplx hda_multiplier_kernel(const CoisometryRealization& r, long x1, long y1,
                           long x2, long y2);

/// Same lattice kernel from the symbol: sum of (I - L L*)_{mn} against the
/// transported basis values at the two points.
Cplx kernel_from_multiplier_da(const std::vector<Cplx>& s0, const ZetaTable& zt,
                               std::pair<long, long> p1, std::pair<long, long> p2,
                               int n);

/// True when multiplying by the candidate polynomial kills the tail of the
/// series, i.e. the function is rational with that denominator.
bool diamond_rational_check(const EntireSeries& f, const std::vector<Cplx>& p,
                            double tol = 1e-9);

/// Coefficients of det(I - z A), the denominator of the classical transfer.
std::vector<Cplx> denominator_from_realization(const CoisometryRealization& r);

}  // namespace daf
