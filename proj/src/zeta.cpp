#include "daf/zeta.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

namespace daf {

namespace {

const GaussianRational kI(0, 1);
const GaussianRational kHalfOneMinusI(Rational(1, 2), Rational(-1, 2));

using Coeffs = std::vector<GaussianRational>;

Coeffs series_mul(const Coeffs& a, const Coeffs& b, size_t len) {
  Coeffs r(len);
  for (size_t m = 0; m < a.size() && m < len; ++m) {
    if (a[m].is_zero()) continue;
    size_t top = std::min(len - m, b.size());
    for (size_t n = 0; n < top; ++n) r[m + n] += a[m] * b[n];
  }
  return r;
}

Coeffs series_inverse(const Coeffs& a, size_t len) {
  if (a.empty() || a[0].is_zero()) {
    throw PreconditionError("series with zero constant term has no inverse");
  }
  Coeffs r(len);
  r[0] = GaussianRational(1) / a[0];
  for (size_t n = 1; n < len; ++n) {
    GaussianRational acc;
    for (size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * r[n - k];
    r[n] = -acc / a[0];
  }
  return r;
}

Coeffs series_pow(Coeffs base, unsigned long e, size_t len) {
  Coeffs r(len);
  r[0] = GaussianRational(1);
  while (e > 0) {
    if (e & 1) r = series_mul(r, base, len);
    e >>= 1;
    if (e > 0) base = series_mul(base, base, len);
  }
  return r;
}

}  // namespace

CoefficientSeries2 extension_step(const CoefficientSeries2& f) {
  CoefficientSeries2 g = f.scaled(kI);
  g -= delta_y_coeffs(f).scaled(kHalfOneMinusI);
  return joint_primitive(f, g);
}

CoefficientSeries2 extend_to_factorial2(const CoefficientSeries& p) {
  if (p.basis() != Basis::factorial_x) {
    throw PreconditionError("extension expects factorial-basis coefficients");
  }
  CoefficientSeries2 out;
  if (p.degree() <= 0) {
    out.add(0, 0, p.coeff(0));
    return out;
  }
  Coeffs dp(p.size() - 1);
  for (size_t n = 0; n + 1 < p.size(); ++n) {
    dp[n] = GaussianRational(static_cast<long>(n + 1)) * p.coeff(n + 1);
  }
  CoefficientSeries2 f = extend_to_factorial2(CoefficientSeries(Basis::factorial_x, dp));
  CoefficientSeries2 h = extension_step(f);
  h.add(0, 0, p.coeff(0));
  return h;
}

ExactPolynomial2 extend_polynomial(const ExactPolynomial1& p) {
  return extend_to_factorial2(monomial_to_factorial(p)).to_monomial();
}

const GaussianRational& ZetaTable::value(int n, long x, long y) const {
  if (n < 0 || n > max_degree) throw PreconditionError("zeta index outside table");
  return values[n].at(x, y);
}

ZetaTable zeta_by_extension(int max_degree, const Window& w, int threads) {
  if (max_degree < 0) throw PreconditionError("negative table degree");
  ZetaTable zt(max_degree, w);
  zt.fcoeffs.resize(max_degree + 1);
  zt.fcoeffs[0].add(0, 0, GaussianRational(1));
  for (int n = 1; n <= max_degree; ++n) {
    zt.fcoeffs[n] = extension_step(zt.fcoeffs[n - 1].scaled(GaussianRational(n)));
  }
  zt.polys.reserve(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) zt.polys.push_back(zt.fcoeffs[n].to_monomial());

  zt.values.assign(max_degree + 1, LatticeFunction(w));
  auto tabulate = [&zt, &w](int n) {
    zt.values[n] = LatticeFunction::sample(
        w, [&zt, n](long x, long y) { return zt.fcoeffs[n].eval(x, y); });
  };
  int workers = std::max(1, threads);
  if (workers == 1) {
    for (int n = 0; n <= max_degree; ++n) tabulate(n);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&next, &tabulate, max_degree] {
        for (int n = next.fetch_add(1); n <= max_degree; n = next.fetch_add(1)) tabulate(n);
      });
    }
    for (auto& th : pool) th.join();
  }
  return zt;
}

nlohmann::ordered_json zeta_table_to_json(const ZetaTable& zt) {
  nlohmann::ordered_json fc = nlohmann::ordered_json::array();
  for (const auto& c : zt.fcoeffs) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, v] : c.terms()) {
      terms.push_back({{"m", k.first}, {"n", k.second}, {"c", v.str()}});
    }
    fc.push_back(std::move(terms));
  }
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& f : zt.values) vals.push_back(lattice_to_json(f));
  return nlohmann::ordered_json{{"max_degree", zt.max_degree},
                                {"window",
                                 {{"x_min", zt.window.x_min},
                                  {"x_max", zt.window.x_max},
                                  {"y_min", zt.window.y_min},
                                  {"y_max", zt.window.y_max}}},
                                {"fcoeffs", fc},
                                {"values", vals}};
}

ZetaTable zeta_table_from_json(const nlohmann::json& j) {
  const auto& jw = j.at("window");
  Window w(jw.at("x_min").get<long>(), jw.at("x_max").get<long>(),
           jw.at("y_min").get<long>(), jw.at("y_max").get<long>());
  ZetaTable zt(j.at("max_degree").get<int>(), w);
  for (const auto& terms : j.at("fcoeffs")) {
    CoefficientSeries2 c;
    for (const auto& t : terms) {
      c.add(t.at("m").get<int>(), t.at("n").get<int>(),
            GaussianRational::parse(t.at("c").get<std::string>()));
    }
    zt.fcoeffs.push_back(std::move(c));
  }
  for (const auto& jv : j.at("values")) zt.values.push_back(lattice_from_json(jv));
  if (static_cast<int>(zt.fcoeffs.size()) != zt.max_degree + 1 ||
      zt.values.size() != zt.fcoeffs.size()) {
    throw PreconditionError("zeta table file inconsistent");
  }
  zt.polys.reserve(zt.fcoeffs.size());
  for (const auto& c : zt.fcoeffs) zt.polys.push_back(c.to_monomial());
  return zt;
}

ZetaTable zeta_cached(int max_degree, const Window& w, int threads) {
  const char* dir = std::getenv("ZETA_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return zeta_by_extension(max_degree, w, threads);
  namespace fs = std::filesystem;
  fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  fs::path file = root / ("zeta_n" + std::to_string(max_degree) + "_x" +
                          std::to_string(w.x_min) + "_" + std::to_string(w.x_max) + "_y" +
                          std::to_string(w.y_min) + "_" + std::to_string(w.y_max) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    nlohmann::json j;
    in >> j;
    ZetaTable zt = zeta_table_from_json(j);
    if (zt.max_degree == max_degree && zt.window == w) return zt;
  }
  ZetaTable zt = zeta_by_extension(max_degree, w, threads);
  std::ofstream out(file);
  out << zeta_table_to_json(zt).dump();
  return zt;
}

CoefficientSeries exy_taylor(long x, long y, int truncation) {
  if (truncation < 0) throw PreconditionError("negative truncation");
  size_t len = static_cast<size_t>(truncation) + 1;

  // (1+z)^x: generalized binomial coefficients, exact for any integer x
  Coeffs f1(len);
  for (size_t n = 0; n < len; ++n) {
    f1[n] = factorial_poly(static_cast<unsigned>(n), GaussianRational(x)) /
            GaussianRational(factorial(static_cast<unsigned>(n)));
  }

  // geometric series of 1/(1+i+z), then the linear numerator 1+i+iz
  GaussianRational one_plus_i(1, 1);
  Coeffs recip(len);
  recip[0] = GaussianRational(1) / one_plus_i;
  for (size_t n = 1; n < len; ++n) recip[n] = -recip[n - 1] / one_plus_i;
  Coeffs numer = {one_plus_i, kI};
  Coeffs base = series_mul(numer, recip, len);

  Coeffs f2;
  if (y >= 0) {
    f2 = series_pow(base, static_cast<unsigned long>(y), len);
  } else {
    f2 = series_pow(series_inverse(base, len), static_cast<unsigned long>(-y), len);
  }

  return CoefficientSeries(Basis::monomial, series_mul(f1, f2, len));
}

double growth_rate(long x, long y, int truncation) {
  if (y == 0 && x >= 0) {
    throw PreconditionError("series terminates on the nonnegative real axis");
  }
  if (truncation < 2) throw PreconditionError("truncation too small for an estimate");
  CoefficientSeries c = exy_taylor(x, y, truncation);
  double sup = 0.0;
  for (int n = std::max(1, truncation / 2); n <= truncation; ++n) {
    double mag = c.coeff(n).abs();
    if (mag == 0.0) continue;
    sup = std::max(sup, std::pow(mag, 1.0 / n));
  }
  return sup;
}

}  // namespace daf
