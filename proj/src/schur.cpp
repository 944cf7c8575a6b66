#include "daf/schur.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace daf {

namespace {

// factorials as doubles; exact through 22!, correctly rounded beyond
const std::vector<double>& fact_table() {
  static const std::vector<double> t = [] {
    std::vector<double> v(171);
    v[0] = 1.0;
    for (int n = 1; n <= 170; ++n) v[n] = v[n - 1] * n;
    return v;
  }();
  return t;
}

double fct(int n) {
  if (n < 0) return 0.0;
  if (n <= 170) return fact_table()[n];
  return std::exp(std::lgamma(n + 1.0));
}

// m! n! / (m+n)!  without overflow; the ratio never exceeds 1
double conv_weight(int m, int n) {
  if (m + n <= 170) return (fact_table()[m] / fact_table()[m + n]) * fact_table()[n];
  return std::exp(std::lgamma(m + 1.0) + std::lgamma(n + 1.0) - std::lgamma(m + n + 1.0));
}

Eigen::MatrixXcd toeplitz_lower(const std::vector<Cplx>& s0, int n) {
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (i - j < static_cast<int>(s0.size())) l(i, j) = s0[i - j];
  return l;
}

Eigen::MatrixXcd mat_ipow(const Eigen::MatrixXcd& m, long k) {
  const long n = m.rows();
  Eigen::MatrixXcd base = m;
  if (k < 0) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    if (!lu.isInvertible())
      throw PreconditionError("matrix power with negative exponent of a singular matrix");
    base = lu.inverse();
    k = -k;
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

// substitute the state matrix into the generating function
Eigen::MatrixXcd e_matrix(const Eigen::MatrixXcd& a, long x, long y) {
  const long n = a.rows();
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd out = mat_ipow(id + a, x);
  if (y != 0) {
    Eigen::MatrixXcd num = Cplx(1.0, 1.0) * id + Cplx(0.0, 1.0) * a;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(Cplx(1.0, 1.0) * id + a);
    if (!lu.isInvertible())
      throw PreconditionError("generating function undefined: shifted state matrix singular");
    out = out * mat_ipow(num * lu.inverse(), y);
  }
  return out;
}

double spectral_norm(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0);
}

// 16-point Gauss-Legendre nodes and weights on [-1, 1]
void gl16(std::array<double, 16>& x, std::array<double, 16>& w) {
  constexpr int m = 16;
  for (int i = 0; i < m / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[m - 1 - i] = t;
    w[i] = w[m - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

double gl_panel(double a, double b, const std::array<double, 16>& x,
                const std::array<double, 16>& w, const std::function<double(double)>& f) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 16; ++i) s += w[i] * f(mid + half * x[i]);
  return s * half;
}

// order-zero modified Bessel function of the second kind via its integral
// representation, adequate to ~1e-12 relative for r in (0, 60]
double bessel_k0(double r) {
  static std::array<double, 16> x, w;
  static const bool init = [] {
    gl16(x, w);
    return true;
  }();
  (void)init;
  const double tmax = std::acosh(std::max(2.0, 46.0 / r));
  double s = 0.0;
  const int panels = 10;
  for (int p = 0; p < panels; ++p) {
    double a = tmax * p / panels, b = tmax * (p + 1) / panels;
    s += gl_panel(a, b, x, w, [r](double t) { return std::exp(-r * std::cosh(t)); });
  }
  return s;
}

}  // namespace

EntireSeries t_map(const EntireSeries& f) {
  EntireSeries out{f.coeffs, SeriesSpace::entire};
  for (size_t n = 0; n < out.coeffs.size(); ++n) out.coeffs[n] /= fct(static_cast<int>(n));
  return out;
}

EntireSeries t_inv(const EntireSeries& f) {
  EntireSeries out{f.coeffs, SeriesSpace::h2};
  for (size_t n = 0; n < out.coeffs.size(); ++n) out.coeffs[n] *= fct(static_cast<int>(n));
  return out;
}

double h2_norm(const EntireSeries& f) {
  double s = 0.0;
  for (const Cplx& c : f.coeffs) s += std::norm(c);
  return std::sqrt(s);
}

double transported_norm(const EntireSeries& f) {
  double s = 0.0;
  for (size_t n = 0; n < f.coeffs.size(); ++n)
    s += std::norm(f.coeffs[n] * fct(static_cast<int>(n)));
  return std::sqrt(s);
}

EntireSeries diamond_product(const EntireSeries& f, const EntireSeries& g) {
  if (f.coeffs.empty() || g.coeffs.empty()) return EntireSeries{{}, SeriesSpace::entire};
  std::vector<Cplx> out(f.coeffs.size() + g.coeffs.size() - 1, 0.0);
  for (size_t m = 0; m < f.coeffs.size(); ++m)
    for (size_t n = 0; n < g.coeffs.size(); ++n)
      out[m + n] += f.coeffs[m] * g.coeffs[n] *
                    conv_weight(static_cast<int>(m), static_cast<int>(n));
  return EntireSeries{std::move(out), SeriesSpace::entire};
}

double multiplier_norm(const std::vector<Cplx>& s0, int n) {
  if (n < 1) throw PreconditionError("multiplier_norm needs a positive truncation size");
  return spectral_norm(toeplitz_lower(s0, n));
}

std::vector<Cplx> blaschke_coeffs(double a, int n) {
  if (std::abs(a) >= 1.0)
    throw PreconditionError("factor parameter must lie inside the unit disc");
  std::vector<Cplx> out(static_cast<size_t>(std::max(n, 1)), 0.0);
  out[0] = -a;
  double pw = 1.0;
  for (int k = 1; k < n; ++k) {
    out[k] = (1.0 - a * a) * pw;
    pw *= a;
  }
  return out;
}

bool is_coisometric(const CoisometryRealization& r, double tol) {
  const int n = r.dim();
  Eigen::MatrixXcd u(n + 1, n + 1);
  u.topLeftCorner(n, n) = r.a;
  u.topRightCorner(n, 1) = r.b;
  u.bottomLeftCorner(1, n) = r.c;
  u(n, n) = r.d;
  Eigen::MatrixXcd res = u * u.adjoint() - Eigen::MatrixXcd::Identity(n + 1, n + 1);
  return res.cwiseAbs().maxCoeff() < tol;
}

CoisometryRealization blaschke_realization(double a) {
  if (std::abs(a) >= 1.0)
    throw PreconditionError("factor parameter must lie inside the unit disc");
  const double s = std::sqrt(1.0 - a * a);
  CoisometryRealization r;
  r.a = Eigen::MatrixXcd::Constant(1, 1, a);
  r.b = Eigen::VectorXcd::Constant(1, s);
  r.c = Eigen::RowVectorXcd::Constant(1, s);
  r.d = -a;
  return r;
}

CoisometryRealization cascade(const CoisometryRealization& r1,
                              const CoisometryRealization& r2) {
  const int n1 = r1.dim(), n2 = r2.dim();
  CoisometryRealization r;
  r.a = Eigen::MatrixXcd::Zero(n1 + n2, n1 + n2);
  r.a.topLeftCorner(n1, n1) = r1.a;
  r.a.topRightCorner(n1, n2) = r1.b * r2.c;
  r.a.bottomRightCorner(n2, n2) = r2.a;
  r.b = Eigen::VectorXcd(n1 + n2);
  r.b.head(n1) = r1.b * r2.d;
  r.b.tail(n2) = r2.b;
  r.c = Eigen::RowVectorXcd(n1 + n2);
  r.c.head(n1) = r1.c;
  r.c.tail(n2) = r1.d * r2.c;
  r.d = r1.d * r2.d;
  return r;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) {
  const long n = m.rows();
  double nrm = 0.0;
  if (n > 0) nrm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  Eigen::MatrixXcd x = m / std::pow(2.0, s);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = acc;
  for (int k = 1; k <= 40; ++k) {
    term = term * x / static_cast<double>(k);
    acc += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * std::max(1.0, acc.cwiseAbs().maxCoeff()))
      break;
  }
  for (int j = 0; j < s; ++j) acc = acc * acc;
  return acc;
}

Cplx classical_transfer_eval(const CoisometryRealization& r, Cplx z) {
  if (r.dim() == 0) return r.d;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(r.dim(), r.dim()) - z * r.a;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  if (!lu.isInvertible())
    throw PreconditionError("transfer function evaluated at a pole");
  return r.d + z * (r.c * lu.solve(r.b))(0, 0);
}

Cplx coisometry_realize_eval(const CoisometryRealization& r, Cplx z) {
  if (r.dim() == 0) return r.d;
  Cplx acc = r.d;
  Eigen::VectorXcd v = r.b;
  Cplx coef = z;  // z^{n+1}/(n+1)! at n = 0
  for (int n = 0; n <= 200; ++n) {
    acc += coef * (r.c * v)(0, 0);
    v = r.a * v;
    coef *= z / static_cast<double>(n + 2);
    if (std::abs(coef) * v.norm() * r.c.norm() < 1e-18 * (1.0 + std::abs(acc))) break;
  }
  return acc;
}

Cplx ks_kernel(const CoisometryRealization& r, Cplx z, Cplx w) {
  if (r.dim() == 0) return 0.0;
  Eigen::MatrixXcd mid = expm(z * r.a) * expm(std::conj(w) * r.a.adjoint());
  return (r.c * mid * r.c.adjoint())(0, 0);
}

Cplx kernel_from_multiplier(const std::vector<Cplx>& s0, Cplx z, Cplx w, int n) {
  if (n < 1) throw PreconditionError("kernel truncation must be positive");
  Eigen::MatrixXcd l = toeplitz_lower(s0, n);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n) - l * l.adjoint();
  Eigen::VectorXcd uz(n), uw(n);
  Cplx pz = 1.0, pw = 1.0;
  for (int k = 0; k < n; ++k) {
    uz(k) = pz;
    uw(k) = pw;
    pz *= z / static_cast<double>(k + 1);
    pw *= w / static_cast<double>(k + 1);
  }
  return (uz.transpose() * p * uw.conjugate())(0, 0);
}

Cplx reproduce_at(const EntireSeries& f, Cplx w) {
  Cplx ip = 0.0;
  Cplx kn = 1.0;  // conj(w)^n / (n!)^2, conjugated back in the pairing
  for (size_t n = 0; n < f.coeffs.size(); ++n) {
    double f2 = fct(static_cast<int>(n));
    ip += f.coeffs[n] * std::conj(kn) * (f2 * f2);
    kn *= std::conj(w) / ((n + 1.0) * (n + 1.0));
  }
  return ip;
}

DdReport dd_checks(int n) {
  DdReport rep;
  if (n < 3) throw PreconditionError("dd_checks needs size at least 3");

  // coefficient route: derivative after the transform vs transform after the
  // index shift, on monomials and on a fixed dense series
  bool ok = true;
  auto check_series = [&](const std::vector<Cplx>& h2c) {
    EntireSeries f{h2c, SeriesSpace::h2};
    EntireSeries tf = t_map(f);
    std::vector<Cplx> lhs(tf.coeffs.size() - 1);
    for (size_t m = 0; m + 1 < tf.coeffs.size(); ++m)
      lhs[m] = (m + 1.0) * tf.coeffs[m + 1];
    std::vector<Cplx> shifted(h2c.begin() + 1, h2c.end());
    EntireSeries rhs = t_map(EntireSeries{shifted, SeriesSpace::h2});
    for (size_t m = 0; m < lhs.size(); ++m)
      if (std::abs(lhs[m] - rhs.coeffs[m]) > 1e-12 * (1.0 + std::abs(rhs.coeffs[m])))
        ok = false;
  };
  for (int k = 1; k < n; ++k) {
    std::vector<Cplx> mono(k + 1, 0.0);
    mono[k] = 1.0;
    check_series(mono);
  }
  std::vector<Cplx> dense(n);
  for (int k = 0; k < n; ++k)
    dense[k] = Cplx(std::cos(1.7 * k + 0.3), std::sin(2.3 * k)) / (1.0 + k);
  check_series(dense);
  rep.intertwine_ok = ok;

  // matrix route on the truncated backward shift
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) s(i, i + 1) = 1.0;
  Eigen::MatrixXcd dd = s * s.adjoint();
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Identity(n, n);
  want(n - 1, n - 1) = 0.0;
  rep.ddstar_ok = (dd - want).cwiseAbs().maxCoeff() < 1e-14;
  Eigen::MatrixXcd ds = s.adjoint() * s;
  want = Eigen::MatrixXcd::Identity(n, n);
  want(0, 0) = 0.0;
  rep.dstar_d_ok = (ds - want).cwiseAbs().maxCoeff() < 1e-14;
  return rep;
}

double beurling_projection_residual(const std::vector<Cplx>& s0, int n) {
  Eigen::MatrixXcd l = toeplitz_lower(s0, n);
  Eigen::MatrixXcd q = l * l.adjoint();
  Eigen::MatrixXcd res = q * q - q;
  const int keep = std::max(1, n / 2);
  return res.topLeftCorner(keep, keep).cwiseAbs().maxCoeff();
}

double hs_inequality_margin(const CoisometryRealization& r) {
  const int n = r.dim();
  if (n == 0) return 0.0;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(n, n) - r.a.adjoint() * r.a -
                       r.c.adjoint() * r.c;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()));
  return es.eigenvalues().minCoeff();
}

double bessel_norm_check(int n, int panels) {
  if (n < 0 || panels < 4) throw PreconditionError("invalid norm-check parameters");
  static std::array<double, 16> x, w;
  static const bool init = [] {
    gl16(x, w);
    return true;
  }();
  (void)init;

  const double rmax = 30.0;
  const double width = rmax / panels;
  auto integrand = [n](double r) {
    return std::pow(r, 2 * n + 1) * bessel_k0(2.0 * r);
  };
  double total = 0.0;
  // geometric refinement of the first panel tames the logarithmic weight at 0
  double lo = width / 256.0;
  total += gl_panel(0.0, lo, x, w, integrand);
  while (lo < width - 1e-12) {
    double hi = std::min(2.0 * lo, width);
    total += gl_panel(lo, hi, x, w, integrand);
    lo = hi;
  }
  for (int p = 1; p < panels; ++p)
    total += gl_panel(width * p, width * (p + 1), x, w, integrand);

  // calibrated weight makes the squared norm of z^n equal to (n!)^2
  const double value = 4.0 * total;
  const double f = fct(n);
  return value / (f * f);
}

Cplx exy_point(Cplx t, long x, long y) {
  auto ipow = [](Cplx base, long k) {
    if (k < 0) {
      if (std::abs(base) < 1e-300) throw PreconditionError("negative power of zero");
      base = 1.0 / base;
      k = -k;
    }
    Cplx acc = 1.0;
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  };
  const Cplx one_i(1.0, 1.0);
  if (std::abs(one_i + t) < 1e-300)
    throw PreconditionError("generating function undefined at this parameter");
  return ipow(1.0 + t, x) * ipow((one_i + Cplx(0.0, 1.0) * t) / (one_i + t), y);
}

ExpandableFunction v_transport(const EntireSeries& f) {
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(f.coeffs.size());
  for (const Cplx& c : f.coeffs)
    coeffs.emplace_back(Rational(c.real()), Rational(c.imag()));
  return ExpandableFunction::truncated(std::move(coeffs));
}

Cplx hda_multiplier_kernel(const CoisometryRealization& r, long x1, long y1,
                           long x2, long y2) {
  if (r.dim() == 0) return 0.0;
  if (spectral_norm(r.a) >= std::sqrt(2.0) - 1e-12)
    throw PreconditionError(
        "state spectrum reaches the convergence radius of the generating function");
  Eigen::MatrixXcd e1 = e_matrix(r.a, x1, y1);
  Eigen::MatrixXcd e2 = e_matrix(r.a, x2, y2);
  return (r.c * e1 * e2.adjoint() * r.c.adjoint())(0, 0);
}

Cplx kernel_from_multiplier_da(const std::vector<Cplx>& s0, const ZetaTable& zt,
                               std::pair<long, long> p1, std::pair<long, long> p2,
                               int n) {
  if (n < 1 || n > zt.max_degree + 1)
    throw PreconditionError("kernel truncation exceeds the tabulated degree");
  if (!zt.window.contains(p1.first, p1.second) ||
      !zt.window.contains(p2.first, p2.second))
    throw PreconditionError("kernel point outside the tabulated window");
  Eigen::MatrixXcd l = toeplitz_lower(s0, n);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n) - l * l.adjoint();
  Eigen::VectorXcd e1(n), e2(n);
  for (int m = 0; m < n; ++m) {
    const double f = fct(m);
    e1(m) = zt.value(m, p1.first, p1.second).to_complex() / f;
    e2(m) = zt.value(m, p2.first, p2.second).to_complex() / f;
  }
  return (e1.transpose() * p * e2.conjugate())(0, 0);
}

bool diamond_rational_check(const EntireSeries& f, const std::vector<Cplx>& p,
                            double tol) {
  if (p.empty()) throw PreconditionError("empty denominator candidate");
  const std::vector<Cplx> f0 = t_inv(f).coeffs;
  if (f0.size() < 8)
    throw PreconditionError("series too short to classify; pad polynomials with zeros");
  const int top = static_cast<int>(f0.size()) - 1;
  // convolution entries above the stored degree would need unknown
  // coefficients, so only k <= top is trusted
  std::vector<Cplx> conv(top + 1, 0.0);
  for (int k = 0; k <= top; ++k)
    for (size_t j = 0; j < p.size() && j <= static_cast<size_t>(k); ++j)
      conv[k] += p[j] * f0[k - j];
  double scale = 1.0;
  for (const Cplx& c : conv) scale = std::max(scale, std::abs(c));
  double tail = 0.0;
  for (int k = top / 2 + 1; k <= top; ++k) tail = std::max(tail, std::abs(conv[k]));
  return tail <= tol * scale;
}

std::vector<Cplx> denominator_from_realization(const CoisometryRealization& r) {
  std::vector<Cplx> p{1.0};
  if (r.dim() == 0) return p;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(r.a);
  for (int k = 0; k < r.dim(); ++k) {
    const Cplx lam = es.eigenvalues()(k);
    std::vector<Cplx> next(p.size() + 1, 0.0);
    for (size_t j = 0; j < p.size(); ++j) {
      next[j] += p[j];
      next[j + 1] -= lam * p[j];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace daf
