#include "daf/operator_alg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <sstream>

namespace daf {

OperatorMatrix OperatorMatrix::identity(int n) {
  OperatorMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& o) const {
  OperatorMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const GaussianRational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        const GaussianRational& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  return out;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& o) const {
  OperatorMatrix out = *this;
  for (size_t k = 0; k < out.e_.size(); ++k) out.e_[k] += o.e_[k];
  return out;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& o) const {
  OperatorMatrix out = *this;
  for (size_t k = 0; k < out.e_.size(); ++k) out.e_[k] -= o.e_[k];
  return out;
}

OperatorMatrix OperatorMatrix::scaled(const GaussianRational& s) const {
  OperatorMatrix out = *this;
  for (auto& v : out.e_) v *= s;
  return out;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

bool OperatorMatrix::equal_upto(const OperatorMatrix& o, int keep) const {
  for (int i = 0; i < keep; ++i)
    for (int j = 0; j < keep; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

std::pair<int, int> OperatorMatrix::band_profile() const {
  int lower = 0, upper = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!at(i, j).is_zero()) {
        lower = std::max(lower, i - j);
        upper = std::max(upper, j - i);
      }
  return {lower, upper};
}

std::string op_tag_name(OpTag t) {
  switch (t) {
    case OpTag::delta_x: return "delta_x";
    case OpTag::delta_y: return "delta_y";
    case OpTag::z_mult: return "Z";
    case OpTag::z_adj: return "Z_adj";
    case OpTag::a_re: return "A";
  }
  return "?";
}

OpTag op_tag_from_name(const std::string& s) {
  if (s == "delta_x") return OpTag::delta_x;
  if (s == "delta_y") return OpTag::delta_y;
  if (s == "Z") return OpTag::z_mult;
  if (s == "Z_adj") return OpTag::z_adj;
  if (s == "A") return OpTag::a_re;
  throw PreconditionError("unknown operator tag: " + s);
}

OperatorMatrix matrix_of(OpTag op, int n) {
  if (n < 2) throw PreconditionError("matrix_of: truncation must be at least 2");
  OperatorMatrix m(n);
  switch (op) {
    case OpTag::delta_x:
      for (int k = 0; k + 1 < n; ++k) m.at(k, k + 1) = GaussianRational(1);
      break;
    case OpTag::z_mult:
      for (int k = 0; k < n; ++k) {
        m.at(k, k) = GaussianRational(k);
        if (k + 1 < n) m.at(k + 1, k) = GaussianRational(k + 1);
      }
      break;
    case OpTag::z_adj:
      for (int k = 0; k < n; ++k) {
        m.at(k, k) = GaussianRational(k);
        if (k >= 1) m.at(k - 1, k) = GaussianRational(k);
      }
      break;
    case OpTag::a_re: {
      OperatorMatrix z = matrix_of(OpTag::z_mult, n);
      OperatorMatrix za = matrix_of(OpTag::z_adj, n);
      m = (z + za).scaled(GaussianRational(Rational(1, 2)));
      break;
    }
    case OpTag::delta_y: {
      OperatorMatrix s = matrix_of(OpTag::delta_x, n);
      OperatorMatrix pw = s;
      GaussianRational coef = GaussianRational::unit_i();
      GaussianRational ratio(Rational(-1, 2), Rational(1, 2));  // -(1-i)/2
      for (int k = 0;; ++k) {
        m = m + pw.scaled(coef);
        if (k + 2 >= n) break;  // the next shift power vanishes on the block
        pw = pw * s;
        coef *= ratio;
      }
      break;
    }
  }
  return m;
}

CoefficientSeries deltax_zeta_coeffs(const CoefficientSeries& c) {
  if (c.basis() != Basis::zeta)
    throw PreconditionError("deltax_zeta_coeffs: zeta basis required");
  if (c.size() <= 1) return CoefficientSeries(Basis::zeta, {});
  std::vector<GaussianRational> out(c.size() - 1);
  for (size_t m = 0; m + 1 < c.size(); ++m)
    out[m] = GaussianRational(Rational(static_cast<unsigned long>(m + 1))) * c.coeff(m + 1);
  return CoefficientSeries(Basis::zeta, std::move(out));
}

CoefficientSeries deltay_zeta_coeffs(const CoefficientSeries& c) {
  if (c.basis() != Basis::zeta)
    throw PreconditionError("deltay_zeta_coeffs: zeta basis required");
  GaussianRational coef = GaussianRational::unit_i();
  GaussianRational ratio(Rational(-1, 2), Rational(1, 2));
  CoefficientSeries term = deltax_zeta_coeffs(c);
  std::vector<GaussianRational> acc(term.size());
  while (term.size() > 0) {
    if (acc.size() < term.size()) acc.resize(term.size());
    for (size_t m = 0; m < term.size(); ++m) acc[m] += coef * term.coeff(m);
    term = deltax_zeta_coeffs(term);
    coef *= ratio;
  }
  return CoefficientSeries(Basis::zeta, std::move(acc));
}

namespace {

// compare two lattice functions on the intersection of their windows
bool agree_on_overlap(const LatticeFunction& a, const LatticeFunction& b, long& bad_x,
                      long& bad_y) {
  Window w = a.window().intersect(b.window());
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x)
      if (a.at(x, y) != b.at(x, y)) {
        bad_x = x;
        bad_y = y;
        return false;
      }
  return true;
}

LatticeFunction scale_add(const GaussianRational& ca, const LatticeFunction& a,
                          const GaussianRational& cb, const LatticeFunction& b) {
  return lat_add(lat_scale(a, ca), lat_scale(b, cb));
}

}  // namespace

std::vector<RelationReport> bracket_checks_lattice(const LatticeFunction& f) {
  std::vector<RelationReport> out;
  const GaussianRational i = GaussianRational::unit_i();
  const GaussianRational one(1);
  const GaussianRational half(Rational(1, 2));

  auto push = [&out](std::string name, const LatticeFunction& lhs,
                     const LatticeFunction& rhs) {
    RelationReport r{std::move(name), true, 0, 0};
    r.ok = agree_on_overlap(lhs, rhs, r.x, r.y);
    out.push_back(std::move(r));
  };

  LatticeFunction dx = delta_x(f), dy = delta_y(f), db = dbar(f);
  LatticeFunction zf = z_operator(f);

  // [delta_x, Z] = (I + delta_x)
  push("[delta_x,Z]=I+delta_x", lat_sub(delta_x(zf), z_operator(dx)), lat_add(f, dx));

  // [delta_y, Z] = i(I + delta_y + delta_y^2/2)
  LatticeFunction dyy = delta_y(dy);
  LatticeFunction rhs_y = lat_add(lat_scale(lat_add(f, dy), i), lat_scale(dyy, i * half));
  push("[delta_y,Z]=i(I+delta_y+delta_y^2/2)", lat_sub(delta_y(zf), z_operator(dy)),
       rhs_y);

  // [Dbar, Z] = ((1+i)/2 + (i/2) delta_y) Dbar
  LatticeFunction rhs_d =
      scale_add(GaussianRational(Rational(1, 2), Rational(1, 2)), db, i * half,
                delta_y(db));
  push("[Dbar,Z]=((1+i)/2+(i/2)delta_y)Dbar", lat_sub(dbar(zf), z_operator(db)), rhs_d);

  // vanishing brackets
  push("[Dbar,delta_x]=0", dbar(dx), delta_x(db));
  push("[Dbar,delta_y]=0", dbar(dy), delta_y(db));
  push("[delta_x,delta_y]=0", delta_x(dy), delta_y(dx));

  return out;
}

std::vector<RelationReport> bracket_checks_matrix(int n) {
  if (n < 4) throw PreconditionError("bracket_checks_matrix: need n >= 4");
  std::vector<RelationReport> out;
  OperatorMatrix s = matrix_of(OpTag::delta_x, n);
  OperatorMatrix dy = matrix_of(OpTag::delta_y, n);
  OperatorMatrix z = matrix_of(OpTag::z_mult, n);
  OperatorMatrix za = matrix_of(OpTag::z_adj, n);
  OperatorMatrix id = OperatorMatrix::identity(n);
  const GaussianRational i = GaussianRational::unit_i();
  const GaussianRational half(Rational(1, 2));
  int keep = n - 2;

  auto push = [&](std::string name, const OperatorMatrix& lhs,
                  const OperatorMatrix& rhs) {
    out.push_back({std::move(name), lhs.equal_upto(rhs, keep), 0, 0});
  };

  push("[delta_x,Z]=I+delta_x", s * z - z * s, id + s);
  push("[delta_y,Z]=i(I+delta_y+delta_y^2/2)", dy * z - z * dy,
       (id + dy + (dy * dy).scaled(half)).scaled(i));
  push("[delta_x,Z_adj]=delta_x+delta_x^2", s * za - za * s, s + s * s);
  push("[delta_x,delta_y]=0", s * dy - dy * s, OperatorMatrix(n));
  return out;
}

bool shift_series_bracket(const std::vector<GaussianRational>& psi, int n) {
  if (n < 3) throw PreconditionError("shift_series_bracket: need n >= 3");
  OperatorMatrix s = matrix_of(OpTag::delta_x, n);
  OperatorMatrix z = matrix_of(OpTag::z_mult, n);
  OperatorMatrix id = OperatorMatrix::identity(n);
  OperatorMatrix p(n), dp(n);
  OperatorMatrix pw = id;
  for (size_t j = 0; j < psi.size(); ++j) {
    if (!psi[j].is_zero()) p = p + pw.scaled(psi[j]);
    pw = pw * s;
  }
  // psi'(S) = sum_j j psi_j S^(j-1)
  pw = id;
  for (size_t j = 1; j < psi.size(); ++j) {
    dp = dp + pw.scaled(psi[j] * GaussianRational(Rational(static_cast<unsigned long>(j))));
    pw = pw * s;
  }
  return (p * z - z * p).equal_upto(dp * (id + s), n - 2);
}

RelationReport deltay_check(const ZetaTable& zt, int max_n) {
  RelationReport rep{"delta_y series on basis members", true, 0, 0};
  if (max_n > zt.max_degree)
    throw PreconditionError("deltay_check: max_n exceeds table degree");
  for (int n = 0; n <= max_n; ++n) {
    std::vector<GaussianRational> ind(n + 1);
    ind[n] = GaussianRational(1);
    CoefficientSeries series = deltay_zeta_coeffs(CoefficientSeries(Basis::zeta, ind));
    LatticeFunction truth = delta_y(zt.values[n]);
    LatticeFunction route =
        expandable_values(ExpandableFunction::polynomial(series.coeffs()), zt)
            .restrict_to(truth.window());
    if (!(route == truth)) {
      rep.ok = false;
      rep.x = n;
      return rep;
    }
  }
  return rep;
}

bool commutator_A_check(int n) {
  if (n < 6) throw PreconditionError("commutator_A_check: need n >= 6");
  OperatorMatrix s = matrix_of(OpTag::delta_x, n);
  OperatorMatrix a = matrix_of(OpTag::a_re, n);
  OperatorMatrix id = OperatorMatrix::identity(n);
  OperatorMatrix rhs =
      (id + s.scaled(GaussianRational(2)) + s * s).scaled(GaussianRational(Rational(1, 2)));
  return (s * a - a * s).equal_upto(rhs, n - 2);
}

KernelEval kernel_eval(const ZetaTable& zt, long x1, long y1, long x2, long y2,
                       int truncation) {
  if (truncation > zt.max_degree)
    throw PreconditionError("kernel_eval: order exceeds table degree");
  if (!zt.window.contains(x1, y1) || !zt.window.contains(x2, y2))
    throw PreconditionError("kernel_eval: point outside the table window");
  KernelEval out;
  std::vector<double> mags;
  for (int n = 0; n <= truncation; ++n) {
    GaussianRational term = zt.value(n, x1, y1) * zt.value(n, x2, y2).conj();
    if (term.is_zero()) continue;
    Rational f = factorial(n);
    term = term * GaussianRational(Rational(1) / (f * f));
    out.value += term;
    mags.push_back(term.abs());
  }
  // the series terminates when either point sits on the nonnegative axis
  bool axis1 = (y1 == 0 && x1 >= 0 && x1 <= truncation);
  bool axis2 = (y2 == 0 && x2 >= 0 && x2 <= truncation);
  if (axis1 || axis2) {
    out.exact = true;
    return out;
  }
  if (mags.empty()) return out;
  double r = 0.5;
  if (mags.size() >= 2) {
    r = 0.0;
    size_t lo = mags.size() >= 4 ? mags.size() - 3 : 1;
    for (size_t j = lo; j < mags.size(); ++j) r = std::max(r, mags[j] / mags[j - 1]);
  }
  r = std::min(r, 0.9);
  out.tail_bound = mags.back() * r / (1.0 - r);
  return out;
}

KernelMatrix kernel_gram(const ZetaTable& zt,
                         const std::vector<std::pair<long, long>>& pts, int truncation) {
  KernelMatrix km;
  km.points = pts;
  km.truncation = truncation;
  size_t n = pts.size();
  km.gram.assign(n, std::vector<std::complex<double>>(n));
  Eigen::MatrixXcd g(n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      KernelEval kv = kernel_eval(zt, pts[a].first, pts[a].second, pts[b].first,
                                  pts[b].second, truncation);
      km.gram[a][b] = kv.value.to_complex();
      g(a, b) = km.gram[a][b];
    }
  Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  km.min_eigenvalue = es.eigenvalues().minCoeff();
  return km;
}

double fock_dominance(const std::vector<std::complex<double>>& pts, int truncation) {
  size_t n = pts.size();
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::complex<double> zw = pts[a] * std::conj(pts[b]);
      std::complex<double> pw = 1.0;
      double fact = 1.0;
      for (int k = 1; k <= truncation; ++k) {
        pw *= zw;
        fact *= k;
        g(a, b) += pw * (1.0 / fact - 1.0 / (fact * fact));
      }
    }
  Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().minCoeff();
}

double scaled_shift_norm(int n) {
  OperatorMatrix s = matrix_of(OpTag::delta_x, n);
  GaussianRational c(Rational(-1, 2), Rational(1, 2));  // (i-1)/2
  Eigen::MatrixXcd m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = (c * s.at(a, b)).to_complex();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().maxCoeff();
}

}  // namespace daf
