#include "daf/series.hpp"

namespace daf {

namespace {
const GaussianRational kZero{};
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::factorial_x: return "factorial_x";
    case Basis::zeta: return "zeta";
    case Basis::monomial: return "monomial";
  }
  return "?";
}

Basis basis_from_name(const std::string& s) {
  if (s == "factorial_x") return Basis::factorial_x;
  if (s == "zeta") return Basis::zeta;
  if (s == "monomial") return Basis::monomial;
  throw PreconditionError("unknown basis tag: " + s);
}

CoefficientSeries::CoefficientSeries(Basis b, std::vector<GaussianRational> c)
    : basis_(b), c_(std::move(c)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& CoefficientSeries::coeff(size_t n) const {
  return n < c_.size() ? c_[n] : kZero;
}

nlohmann::ordered_json series_to_json(const CoefficientSeries& c) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& v : c.coeffs()) coeffs.push_back(v.str());
  return nlohmann::ordered_json{{"basis", basis_name(c.basis())}, {"coeffs", coeffs}};
}

CoefficientSeries series_from_json(const nlohmann::json& j) {
  std::vector<GaussianRational> c;
  for (const auto& s : j.at("coeffs")) c.push_back(GaussianRational::parse(s.get<std::string>()));
  return CoefficientSeries(basis_from_name(j.at("basis").get<std::string>()), std::move(c));
}

GaussianRational factorial_poly(unsigned n, const GaussianRational& x) {
  GaussianRational acc(1);
  for (unsigned j = 0; j < n; ++j) acc *= x - GaussianRational(static_cast<long>(j));
  return acc;
}

ExactPolynomial1 factorial_poly1(unsigned n) {
  ExactPolynomial1 p({GaussianRational(1)});
  for (unsigned j = 0; j < n; ++j) {
    p = p * ExactPolynomial1({GaussianRational(-static_cast<long>(j)), GaussianRational(1)});
  }
  return p;
}

CoefficientSeries fourier_1d(const std::vector<GaussianRational>& values) {
  // difference triangle; row n starts with the n-th difference at 0
  std::vector<GaussianRational> row = values;
  std::vector<GaussianRational> out;
  out.reserve(values.size());
  Rational fact(1);
  for (size_t n = 0; n < values.size(); ++n) {
    if (n > 0) fact *= static_cast<long>(n);
    out.push_back(row[0] / GaussianRational(fact));
    for (size_t k = 0; k + n + 1 < values.size(); ++k) row[k] = row[k + 1] - row[k];
  }
  return CoefficientSeries(Basis::factorial_x, std::move(out));
}

GaussianRational inverse_fourier_1d(const CoefficientSeries& c, long x) {
  GaussianRational acc;
  GaussianRational pow(1);
  GaussianRational gx(x);
  for (size_t n = 0; n < c.size(); ++n) {
    if (n > 0) pow *= gx - GaussianRational(static_cast<long>(n - 1));
    acc += c.coeff(n) * pow;
    // x^[n] vanishes for all larger n once the factor hits zero
    if (pow.is_zero()) break;
  }
  return acc;
}

void CoefficientSeries2::add(int m, int n, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto key = std::pair{m, n};
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
  }
}

GaussianRational CoefficientSeries2::coeff(int m, int n) const {
  auto it = t_.find(std::pair{m, n});
  return it == t_.end() ? kZero : it->second;
}

std::pair<int, int> CoefficientSeries2::max_degrees() const {
  int dm = -1, dn = -1;
  for (const auto& [k, v] : t_) {
    dm = std::max(dm, k.first);
    dn = std::max(dn, k.second);
  }
  return {dm, dn};
}

GaussianRational CoefficientSeries2::eval(long x, long y) const {
  auto [dm, dn] = max_degrees();
  if (dm < 0) return kZero;
  std::vector<GaussianRational> xs(dm + 1), ys(dn + 1);
  xs[0] = GaussianRational(1);
  for (int m = 1; m <= dm; ++m) xs[m] = xs[m - 1] * GaussianRational(x - (m - 1));
  ys[0] = GaussianRational(1);
  for (int n = 1; n <= dn; ++n) ys[n] = ys[n - 1] * GaussianRational(y - (n - 1));
  GaussianRational acc;
  for (const auto& [k, v] : t_) acc += v * xs[k.first] * ys[k.second];
  return acc;
}

CoefficientSeries2 CoefficientSeries2::scaled(const GaussianRational& s) const {
  CoefficientSeries2 out;
  if (s.is_zero()) return out;
  for (const auto& [k, v] : t_) out.add(k.first, k.second, s * v);
  return out;
}

CoefficientSeries2& CoefficientSeries2::operator+=(const CoefficientSeries2& o) {
  for (const auto& [k, v] : o.t_) add(k.first, k.second, v);
  return *this;
}

CoefficientSeries2& CoefficientSeries2::operator-=(const CoefficientSeries2& o) {
  for (const auto& [k, v] : o.t_) add(k.first, k.second, -v);
  return *this;
}

ExactPolynomial2 CoefficientSeries2::to_monomial() const {
  ExactPolynomial2 out;
  for (const auto& [k, v] : t_) {
    ExactPolynomial1 xm = factorial_poly1(k.first);
    ExactPolynomial1 yn = factorial_poly1(k.second);
    for (int a = 0; a <= xm.degree(); ++a) {
      if (xm.coeff(a).is_zero()) continue;
      for (int b = 0; b <= yn.degree(); ++b) {
        if (yn.coeff(b).is_zero()) continue;
        out.add_term(a, b, v * xm.coeff(a) * yn.coeff(b));
      }
    }
  }
  return out;
}

CoefficientSeries2 fourier_2d(const LatticeFunction& f) {
  const Window& w = f.window();
  if (w.x_min != 0 || w.y_min != 0) {
    throw PreconditionError("2d transform needs a window anchored at (0,0)");
  }
  // transform along y for each column, then along x
  long W = w.width(), H = w.height();
  std::vector<CoefficientSeries> columns;
  columns.reserve(W);
  for (long x = 0; x < W; ++x) {
    std::vector<GaussianRational> col;
    col.reserve(H);
    for (long y = 0; y < H; ++y) col.push_back(f.at(x, y));
    columns.push_back(fourier_1d(col));
  }
  CoefficientSeries2 out;
  for (long n = 0; n < H; ++n) {
    std::vector<GaussianRational> row;
    row.reserve(W);
    for (long x = 0; x < W; ++x) row.push_back(columns[x].coeff(n));
    CoefficientSeries cx = fourier_1d(row);
    for (long m = 0; m < W; ++m) out.add(static_cast<int>(m), static_cast<int>(n), cx.coeff(m));
  }
  return out;
}

LatticeFunction inverse_fourier_2d(const CoefficientSeries2& c, const Window& w) {
  return LatticeFunction::sample(w, [&c](long x, long y) { return c.eval(x, y); });
}

CoefficientSeries2 delta_x_coeffs(const CoefficientSeries2& c) {
  CoefficientSeries2 out;
  for (const auto& [k, v] : c.terms()) {
    if (k.first == 0) continue;
    out.add(k.first - 1, k.second, GaussianRational(k.first) * v);
  }
  return out;
}

CoefficientSeries2 delta_y_coeffs(const CoefficientSeries2& c) {
  CoefficientSeries2 out;
  for (const auto& [k, v] : c.terms()) {
    if (k.second == 0) continue;
    out.add(k.first, k.second - 1, GaussianRational(k.second) * v);
  }
  return out;
}

CoefficientSeries antidifference_1d(const CoefficientSeries& f) {
  if (f.basis() != Basis::factorial_x) {
    throw PreconditionError("antidifference expects factorial-basis coefficients");
  }
  std::vector<GaussianRational> g(f.size() + 1);
  for (size_t n = 0; n < f.size(); ++n) {
    g[n + 1] = f.coeff(n) / GaussianRational(static_cast<long>(n + 1));
  }
  return CoefficientSeries(Basis::factorial_x, std::move(g));
}

CoefficientSeries2 joint_primitive(const CoefficientSeries2& f, const CoefficientSeries2& g) {
  auto [fm, fn] = f.max_degrees();
  auto [gm, gn] = g.max_degrees();
  int M = std::max(fm, gm) + 1, N = std::max(fn, gn) + 1;
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= N; ++n) {
      GaussianRational lhs = GaussianRational(n + 1) * f.coeff(m, n + 1);
      GaussianRational rhs = GaussianRational(m + 1) * g.coeff(m + 1, n);
      if (lhs != rhs) {
        throw PreconditionError("mixed differences incompatible at (" + std::to_string(m) +
                                "," + std::to_string(n) + ")");
      }
    }
  CoefficientSeries2 h;
  for (const auto& [k, v] : f.terms()) {
    h.add(k.first + 1, k.second, v / GaussianRational(k.first + 1));
  }
  for (const auto& [k, v] : g.terms()) {
    if (k.first != 0) continue;
    h.add(0, k.second + 1, v / GaussianRational(k.second + 1));
  }
  return h;
}

CoefficientSeries monomial_to_factorial(const ExactPolynomial1& p) {
  std::vector<GaussianRational> vals;
  int d = std::max(p.degree(), 0);
  vals.reserve(d + 1);
  for (long x = 0; x <= d; ++x) vals.push_back(p.eval_int(x));
  return fourier_1d(vals);
}

ExactPolynomial1 factorial_to_monomial(const CoefficientSeries& c) {
  ExactPolynomial1 out;
  for (size_t n = 0; n < c.size(); ++n) {
    if (c.coeff(n).is_zero()) continue;
    ExactPolynomial1 t = factorial_poly1(static_cast<unsigned>(n));
    t.scale(c.coeff(n));
    out += t;
  }
  return out;
}

}  // namespace daf
