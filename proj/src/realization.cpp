#include "daf/realization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace daf {

namespace {

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Solve (xI - A) v = b in place.  Returns false when the shift is singular.
bool solve_shifted(const Realization& r, const GaussianRational& x,
                   std::vector<GaussianRational>& v) {
  int n = r.dim();
  std::vector<std::vector<GaussianRational>> m(n);
  for (int i = 0; i < n; ++i) {
    m[i] = r.a[i];
    for (auto& e : m[i]) e = -e;
    m[i][i] += x;
  }
  v = r.b;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        piv = row;
        break;
      }
    if (piv < 0) return false;
    std::swap(m[piv], m[col]);
    std::swap(v[piv], v[col]);
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      GaussianRational f = m[row][col] / m[col][col];
      for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      v[row] -= f * v[col];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int k = col + 1; k < n; ++k) v[col] -= m[col][k] * v[k];
    v[col] /= m[col][col];
  }
  return true;
}

}  // namespace

void check_shape(const Realization& r) {
  size_t n = r.a.size();
  for (const auto& row : r.a)
    if (row.size() != n) throw PreconditionError("realization: state matrix not square");
  if (r.b.size() != n || r.c.size() != n)
    throw PreconditionError("realization: vector lengths do not match the state size");
}

GaussianRational eval_realization(const Realization& r, const GaussianRational& x) {
  check_shape(r);
  GaussianRational out = r.poly.eval_at(x);
  if (r.dim() == 0) return out;
  std::vector<GaussianRational> v;
  if (!solve_shifted(r, x, v)) {
    std::ostringstream os;
    os << "eval_realization: xI - A singular at x=" << x.str();
    throw PreconditionError(os.str());
  }
  for (int i = 0; i < r.dim(); ++i) out += r.c[i] * v[i];
  return out;
}

RealizationCheck validate(const Realization& r) {
  check_shape(r);
  RealizationCheck out;
  if (r.dim() == 0) return out;
  Rational bound(0);
  for (const auto& row : r.a) {
    Rational s(0);
    for (const auto& e : row) s += rat_abs(e.re) + rat_abs(e.im);
    bound = std::max(bound, s);
  }
  long top = static_cast<long>(std::ceil(bound.get_d())) + 1;
  std::vector<GaussianRational> v;
  for (long x = 0; x <= top; ++x) {
    if (!solve_shifted(r, GaussianRational(x), v)) {
      out.ok = false;
      out.x = x;
      return out;
    }
  }
  return out;
}

Realization realize_from_poles(
    const std::vector<std::pair<GaussianRational, GaussianRational>>& poles) {
  Realization r;
  for (const auto& [pole, residue] : poles) {
    if (pole.is_real() && pole.re >= 0 && pole.re.get_den() == 1) {
      std::ostringstream os;
      os << "realize_from_poles: pole " << pole.str() << " lies on the nonnegative axis";
      throw PreconditionError(os.str());
    }
    r.b.push_back(GaussianRational(1));
    r.c.push_back(residue);
  }
  int n = static_cast<int>(poles.size());
  r.a.assign(n, std::vector<GaussianRational>(n));
  for (int i = 0; i < n; ++i) r.a[i][i] = poles[i].first;
  return r;
}

ExpandableFunction rational_da_extend(const Realization& r, int truncation) {
  if (truncation < 0)
    throw PreconditionError("rational_da_extend: order must be nonnegative");
  check_shape(r);
  if (r.dim() == 0) {
    std::vector<GaussianRational> vals(std::max<long>(truncation, r.poly.degree()) + 1);
    for (long x = 0; x < static_cast<long>(vals.size()); ++x)
      vals[x] = r.poly.eval_int(x);
    return ExpandableFunction(CoefficientSeries(Basis::zeta, fourier_1d(vals).coeffs()),
                              SupportKind::polynomial);
  }
  RealizationCheck chk = validate(r);
  if (!chk.ok) {
    std::ostringstream os;
    os << "rational_da_extend: xI - A singular at x=" << chk.x;
    throw PreconditionError(os.str());
  }
  std::vector<GaussianRational> vals(truncation + 1);
  for (long x = 0; x <= truncation; ++x)
    vals[x] = eval_realization(r, GaussianRational(x));
  return ExpandableFunction(CoefficientSeries(Basis::zeta, fourier_1d(vals).coeffs()),
                            SupportKind::truncated);
}

double fourier_decay_check(const Realization& r, int top) {
  if (top < 1) throw PreconditionError("fourier_decay_check: window top must be >= 1");
  // forward-difference triangle of the exact axis values
  std::vector<GaussianRational> row(top + 1);
  for (long x = 0; x <= top; ++x) row[x] = eval_realization(r, GaussianRational(x));
  double best = 0.0;
  int lo = std::max(1, top / 2);
  for (int n = 1; n <= top; ++n) {
    for (int k = 0; k + n <= top; ++k) row[k] = row[k + 1] - row[k];
    if (n < lo || row[0].is_zero()) continue;
    best = std::max(best, std::pow(row[0].abs(), 1.0 / n));
  }
  return best;
}

nlohmann::ordered_json realization_to_json(const Realization& r) {
  check_shape(r);
  nlohmann::ordered_json j;
  j["a"] = nlohmann::ordered_json::array();
  for (const auto& row : r.a) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const auto& e : row) jr.push_back(to_json(e));
    j["a"].push_back(std::move(jr));
  }
  j["b"] = nlohmann::ordered_json::array();
  for (const auto& e : r.b) j["b"].push_back(to_json(e));
  j["c"] = nlohmann::ordered_json::array();
  for (const auto& e : r.c) j["c"].push_back(to_json(e));
  j["poly"] = nlohmann::ordered_json::array();
  for (const auto& e : r.poly.coeffs()) j["poly"].push_back(to_json(e));
  return j;
}

Realization realization_from_json(const nlohmann::json& j) {
  Realization r;
  for (const auto& jr : j.at("a")) {
    std::vector<GaussianRational> row;
    for (const auto& e : jr) row.push_back(gr_from_json(e));
    r.a.push_back(std::move(row));
  }
  for (const auto& e : j.at("b")) r.b.push_back(gr_from_json(e));
  for (const auto& e : j.at("c")) r.c.push_back(gr_from_json(e));
  std::vector<GaussianRational> pc;
  for (const auto& e : j.at("poly")) pc.push_back(gr_from_json(e));
  r.poly = ExactPolynomial1(std::move(pc));
  check_shape(r);
  return r;
}

}  // namespace daf
