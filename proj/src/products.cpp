#include "daf/products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace daf {

namespace {

void require_zeta(const CoefficientSeries& c, const char* who) {
  if (c.basis() != Basis::zeta)
    throw PreconditionError(std::string(who) + ": coefficients must be in the zeta basis");
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// natural log of a positive integer, overflow-safe
double log_mpz(const mpz_class& z) {
  signed long e = 0;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs(const GaussianRational& c) {
  Rational n2 = c.norm2();
  return 0.5 * (log_mpz(n2.get_num()) - log_mpz(n2.get_den()));
}

std::vector<GaussianRational> axis_values(const ExpandableFunction& f, long top) {
  std::vector<GaussianRational> out(top + 1);
  for (long x = 0; x <= top; ++x) out[x] = f.restriction_value(x);
  return out;
}

CoefficientSeries retag_zeta(const CoefficientSeries& c) {
  return CoefficientSeries(Basis::zeta, c.coeffs());
}

}  // namespace

ExpandableFunction::ExpandableFunction(CoefficientSeries c, SupportKind k)
    : coeffs(std::move(c)), kind(k) {
  require_zeta(coeffs, "ExpandableFunction");
}

ExpandableFunction ExpandableFunction::polynomial(std::vector<GaussianRational> c) {
  return ExpandableFunction(CoefficientSeries(Basis::zeta, std::move(c)),
                            SupportKind::polynomial);
}

ExpandableFunction ExpandableFunction::truncated(std::vector<GaussianRational> c) {
  return ExpandableFunction(CoefficientSeries(Basis::zeta, std::move(c)),
                            SupportKind::truncated);
}

GaussianRational ExpandableFunction::restriction_value(long x) const {
  GaussianRational acc;
  GaussianRational pw(1);  // x^[n], vanishes for good once n exceeds a nonnegative x
  for (int n = 0; n <= support(); ++n) {
    if (n > 0) pw *= GaussianRational(Rational(x - (n - 1)));
    if (pw.is_zero()) break;
    acc += coeffs.coeff(n) * pw;
  }
  return acc;
}

ExpandableEval eval_expandable(const ExpandableFunction& f, const ZetaTable& table,
                               long x, long y) {
  if (f.support() > table.max_degree) {
    std::ostringstream os;
    os << "eval_expandable: series support " << f.support()
       << " exceeds table degree " << table.max_degree;
    throw PreconditionError(os.str());
  }
  if (!table.window.contains(x, y))
    throw PreconditionError("eval_expandable: point outside the table window");

  ExpandableEval out;
  std::vector<double> mags;  // magnitudes of the nonzero terms, in order
  for (int n = 0; n <= f.support(); ++n) {
    const GaussianRational& c = f.coeffs.coeff(n);
    if (c.is_zero()) continue;
    GaussianRational term = c * table.value(n, x, y);
    out.value += term;
    mags.push_back(term.abs());
  }

  // Off the nonnegative axis a truncated series drops unknown terms.
  if (f.kind == SupportKind::polynomial || (y == 0 && x >= 0 && x <= f.support())) {
    out.exact = true;
    return out;
  }
  if (mags.empty()) return out;

  // geometric extrapolation from the trailing term ratios
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

LatticeFunction expandable_values(const ExpandableFunction& f, const ZetaTable& table) {
  if (f.support() > table.max_degree)
    throw PreconditionError("expandable_values: series support exceeds table degree");
  LatticeFunction out(table.window);
  for (int n = 0; n <= f.support(); ++n) {
    const GaussianRational& c = f.coeffs.coeff(n);
    if (c.is_zero()) continue;
    out = lat_add(out, lat_scale(table.values[n], c));
  }
  return out;
}

LatticeFunction z_operator(const LatticeFunction& f) {
  const Window& w = f.window();
  if (w.height() < 3)
    throw PreconditionError("z_operator: window height must be at least 3");
  Window sub(w.x_min, w.x_max, w.y_min + 1, w.y_max - 1);
  LatticeFunction g(sub);
  for (long y = sub.y_min; y <= sub.y_max; ++y) {
    GaussianRational iy_half(Rational(0), Rational(y, 2));
    for (long x = sub.x_min; x <= sub.x_max; ++x) {
      GaussianRational v = GaussianRational(Rational(x)) * f.at(x, y) +
                           iy_half * (f.at(x, y + 1) + f.at(x, y - 1));
      g.set(x, y, std::move(v));
    }
  }
  return g;
}

CoefficientSeries z_shift_coeffs(const CoefficientSeries& c) {
  require_zeta(c, "z_shift_coeffs");
  std::vector<GaussianRational> out(c.size() + 1);
  for (size_t n = 0; n < out.size(); ++n) {
    GaussianRational v;
    if (n < c.size())
      v += GaussianRational(Rational(static_cast<unsigned long>(n))) * c.coeff(n);
    if (n >= 1) v += c.coeff(n - 1);
    out[n] = std::move(v);
  }
  return CoefficientSeries(Basis::zeta, std::move(out));
}

CoefficientSeries ck_structure_constants(int m, int n) {
  if (m < 0 || n < 0)
    throw PreconditionError("ck_structure_constants: indices must be nonnegative");
  std::vector<GaussianRational> vals(m + n + 1);
  for (long x = 0; x <= m + n; ++x) {
    GaussianRational gx{Rational(x)};
    vals[x] = factorial_poly(m, gx) * factorial_poly(n, gx);
  }
  return retag_zeta(fourier_1d(vals));
}

ExpandableFunction ck_product(const ExpandableFunction& f, const ExpandableFunction& g) {
  bool fp = f.kind == SupportKind::polynomial;
  bool gp = g.kind == SupportKind::polynomial;
  if (!fp && !gp)
    throw PreconditionError(
        "ck_product: both factors are truncated; call ck_product_truncated with an "
        "explicit order");
  if (fp && gp) {
    if (f.support() < 0 || g.support() < 0) return ExpandableFunction::polynomial({});
    long top = f.support() + g.support();
    auto fv = axis_values(f, top);
    auto gv = axis_values(g, top);
    for (long x = 0; x <= top; ++x) fv[x] *= gv[x];
    return ExpandableFunction(retag_zeta(fourier_1d(fv)), SupportKind::polynomial);
  }
  // one truncated factor bounds the trusted prefix
  long top = fp ? g.support() : f.support();
  if (top < 0)
    return ExpandableFunction(CoefficientSeries(Basis::zeta, {}), SupportKind::truncated);
  auto fv = axis_values(f, top);
  auto gv = axis_values(g, top);
  for (long x = 0; x <= top; ++x) fv[x] *= gv[x];
  return ExpandableFunction(retag_zeta(fourier_1d(fv)), SupportKind::truncated);
}

ExpandableFunction ck_product_truncated(const ExpandableFunction& f,
                                        const ExpandableFunction& g, int truncation) {
  if (truncation < 0)
    throw PreconditionError("ck_product_truncated: order must be nonnegative");
  for (const ExpandableFunction* h : {&f, &g})
    if (h->kind == SupportKind::truncated && h->support() < truncation)
      throw PreconditionError(
          "ck_product_truncated: order exceeds the stored support of a factor");
  auto fv = axis_values(f, truncation);
  auto gv = axis_values(g, truncation);
  for (long x = 0; x <= truncation; ++x) fv[x] *= gv[x];
  return ExpandableFunction(retag_zeta(fourier_1d(fv)), SupportKind::truncated);
}

ExpandableFunction boxdot_product(const ExpandableFunction& f, const ExpandableFunction& g) {
  bool fp = f.kind == SupportKind::polynomial;
  bool gp = g.kind == SupportKind::polynomial;
  long top;
  SupportKind kind;
  if (fp && gp) {
    if (f.support() < 0 || g.support() < 0) return ExpandableFunction::polynomial({});
    top = f.support() + g.support();
    kind = SupportKind::polynomial;
  } else {
    kind = SupportKind::truncated;
    top = std::min(fp ? std::numeric_limits<long>::max() : f.support(),
                   gp ? std::numeric_limits<long>::max() : g.support());
    if (top < 0) return ExpandableFunction(CoefficientSeries(Basis::zeta, {}), kind);
  }
  std::vector<GaussianRational> h(top + 1);
  for (long k = 0; k <= top; ++k) {
    GaussianRational acc;
    for (long m = 0; m <= k; ++m) {
      const GaussianRational& a = f.coeffs.coeff(m);
      if (a.is_zero()) continue;
      const GaussianRational& b = g.coeffs.coeff(k - m);
      if (b.is_zero()) continue;
      acc += a * b * GaussianRational(factorial(m) * factorial(k - m) / factorial(k));
    }
    h[k] = std::move(acc);
  }
  return ExpandableFunction(CoefficientSeries(Basis::zeta, std::move(h)), kind);
}

namespace {

// Shared validation for the quotient routes: the divisor must be a polynomial
// whose axis restriction never vanishes on the nonnegative integers.  Returns
// that restriction in the monomial basis.
ExactPolynomial1 quotient_checks(const ExpandableFunction& p, const ExpandableFunction& q,
                                 int truncation) {
  if (truncation < 0) throw PreconditionError("ck_quotient: order must be nonnegative");
  if (q.kind != SupportKind::polynomial)
    throw PreconditionError("ck_quotient: divisor must be a polynomial");
  if (q.support() < 0) throw PreconditionError("ck_quotient: divisor is zero");
  if (p.kind == SupportKind::truncated && p.support() < truncation)
    throw PreconditionError("ck_quotient: numerator support below the requested order");

  ExactPolynomial1 q0 =
      factorial_to_monomial(CoefficientSeries(Basis::factorial_x, q.coeffs.coeffs()));
  int d = q0.degree();
  // every root z satisfies |z| <= 1 + max_k |c_k| / |c_d|; bound the complex
  // magnitudes by |re|+|im| above and max(|re|,|im|) below
  Rational lead = std::max(rat_abs(q0.coeff(d).re), rat_abs(q0.coeff(d).im));
  Rational worst(0);
  for (int k = 0; k < d; ++k)
    worst = std::max(worst, Rational(rat_abs(q0.coeff(k).re) + rat_abs(q0.coeff(k).im)));
  Rational bound = 1 + worst / lead;
  if (!(bound.get_d() < 1e9))
    throw PreconditionError("ck_quotient: divisor coefficients too large to screen roots");
  long top_root = static_cast<long>(std::ceil(bound.get_d())) + 1;
  for (long x = 0; x <= top_root; ++x) {
    if (q0.eval_at(GaussianRational(Rational(x))).is_zero()) {
      std::ostringstream os;
      os << "ck_quotient: divisor vanishes at x=" << x;
      throw PreconditionError(os.str());
    }
  }
  return q0;
}

}  // namespace

ExpandableFunction ck_quotient(const ExpandableFunction& p, const ExpandableFunction& q,
                               int truncation) {
  ExactPolynomial1 q0 = quotient_checks(p, q, truncation);
  std::vector<GaussianRational> vals(truncation + 1);
  for (long x = 0; x <= truncation; ++x)
    vals[x] = p.restriction_value(x) / q0.eval_at(GaussianRational(Rational(x)));
  return ExpandableFunction(retag_zeta(fourier_1d(vals)), SupportKind::truncated);
}

ExpandableFunction ck_quotient_triangular(const ExpandableFunction& p,
                                          const ExpandableFunction& q, int truncation) {
  quotient_checks(p, q, truncation);
  int dq = q.support();

  // multiplication by q is triangular in the basis; row k of the operator has
  // entries w(k,n) = sum_m q(m) c_k^{m,n} and diagonal q|axis(k)
  std::vector<std::vector<CoefficientSeries>> sc(dq + 1);
  for (int m = 0; m <= dq; ++m) {
    sc[m].reserve(truncation + 1);
    for (int n = 0; n <= truncation; ++n) sc[m].push_back(ck_structure_constants(m, n));
  }

  std::vector<GaussianRational> f(truncation + 1);
  for (int k = 0; k <= truncation; ++k) {
    GaussianRational rhs = p.coeffs.coeff(k);
    for (int n = 0; n < k; ++n) {
      if (f[n].is_zero()) continue;
      GaussianRational w;
      for (int m = 0; m <= dq; ++m) {
        const GaussianRational& qm = q.coeffs.coeff(m);
        if (qm.is_zero()) continue;
        w += qm * sc[m][n].coeff(k);
      }
      rhs -= w * f[n];
    }
    GaussianRational diag;
    for (int m = 0; m <= dq; ++m)
      diag += q.coeffs.coeff(m) * factorial_poly(m, GaussianRational(Rational(k)));
    if (diag.is_zero())
      throw PreconditionError("ck_quotient_triangular: zero pivot");
    f[k] = rhs / diag;
  }
  return ExpandableFunction(CoefficientSeries(Basis::zeta, std::move(f)),
                            SupportKind::truncated);
}

double expandability_estimate(const ExpandableFunction& f, int top) {
  if (top < 1) throw PreconditionError("expandability_estimate: window top must be >= 1");
  if (f.kind == SupportKind::truncated && f.support() < top)
    throw PreconditionError(
        "expandability_estimate: stored support does not reach the window");
  double best = 0.0;
  for (int n = std::max(1, top / 2); n <= top; ++n) {
    const GaussianRational& c = f.coeffs.coeff(n);
    if (c.is_zero()) continue;
    double ln = log_abs(c) + std::lgamma(static_cast<double>(n) + 1.0);
    best = std::max(best, std::exp(ln / n));
  }
  return best;
}

}  // namespace daf
