#include <complex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "daf/operator_alg.hpp"
#include "daf/realization.hpp"
#include "daf/schur.hpp"
#include "daf/verify.hpp"

using namespace daf;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ConfigError("cannot write " + out_path);
  out << text;
}

Window parse_window(const std::vector<long>& v) {
  return Window(v[0], v[1], v[2], v[3]);
}

ordered_json expandable_to_json(const ExpandableFunction& f) {
  ordered_json j;
  j["kind"] = f.kind == SupportKind::polynomial ? "polynomial" : "truncated";
  j["coeffs"] = ordered_json::array();
  for (int n = 0; n <= f.support(); ++n) j["coeffs"].push_back(to_json(f.coeffs.coeff(n)));
  return j;
}

ExpandableFunction expandable_from_json(const json& j) {
  std::vector<GaussianRational> c;
  for (const auto& e : j.at("coeffs")) c.push_back(gr_from_json(e));
  const std::string kind = j.at("kind");
  if (kind == "polynomial") return ExpandableFunction::polynomial(std::move(c));
  if (kind == "truncated") return ExpandableFunction::truncated(std::move(c));
  throw ConfigError("unknown support kind: " + kind);
}

std::string gr_cell(const GaussianRational& v, bool float_mode) {
  if (!float_mode) return v.str();
  std::complex<double> c = v.to_complex();
  return format_double(c.real()) + " " + format_double(c.imag());
}

// shared by zeta and kernel: cached table build honoring $ZETA_CACHE_DIR
ZetaTable table_for(int degree, const Window& w, int threads) {
  return zeta_cached(degree, w, threads);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact discrete analytic function toolkit"};
  app.require_subcommand(1);

  int threads = 1;
  unsigned seed = 2026;
  bool float_mode = false;
  app.add_option("--threads", threads, "worker threads for table construction");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_flag("--float", float_mode, "emit floating-point values instead of fractions");

  int rc = 0;

  // zeta: tabulate the polynomial basis on a window
  auto* sc_zeta = app.add_subcommand("zeta", "tabulate basis members on a window");
  int z_degree = 8;
  std::vector<long> z_win{0, 8, -4, 4};
  std::string z_format = "json", z_out;
  sc_zeta->add_option("--degree", z_degree, "highest degree")->required();
  sc_zeta->add_option("--window", z_win, "x0 x1 y0 y1")->expected(4);
  sc_zeta->add_option("--format", z_format)->check(CLI::IsMember({"json", "csv"}));
  sc_zeta->add_option("--out", z_out, "output path (stdout when omitted)");
  sc_zeta->callback([&] {
    ZetaTable zt = table_for(z_degree, parse_window(z_win), threads);
    if (z_format == "json") {
      emit(zeta_table_to_json(zt).dump(2), z_out);
      return;
    }
    std::ostringstream os;
    os << "n,x,y,re,im\n";
    for (int n = 0; n <= zt.max_degree; ++n)
      for (long y = zt.window.y_min; y <= zt.window.y_max; ++y)
        for (long x = zt.window.x_min; x <= zt.window.x_max; ++x) {
          const GaussianRational& v = zt.value(n, x, y);
          std::complex<double> c = v.to_complex();
          os << n << "," << x << "," << y << ",";
          if (float_mode)
            os << format_double(c.real()) << "," << format_double(c.imag());
          else
            os << v.re.get_str() << "," << v.im.get_str();
          os << "\n";
        }
    emit(os.str(), z_out);
  });

  // extend: axis polynomial -> two-variable analytic extension values
  auto* sc_extend = app.add_subcommand("extend", "extend an axis polynomial to the plane");
  std::vector<std::string> e_coeffs;
  std::vector<long> e_win{-4, 4, -4, 4};
  std::string e_out;
  sc_extend->add_option("--coeffs", e_coeffs, "monomial coefficients, constant first")
      ->required()
      ->expected(-1);
  sc_extend->add_option("--window", e_win)->expected(4);
  sc_extend->add_option("--out", e_out);
  sc_extend->callback([&] {
    ExactPolynomial1 p;
    for (size_t k = 0; k < e_coeffs.size(); ++k)
      p.set_coeff(static_cast<int>(k), GaussianRational::parse(e_coeffs[k]));
    LatticeFunction f = LatticeFunction::sample_poly(extend_polynomial(p), parse_window(e_win));
    emit(float_mode ? lattice_to_csv(f, true) : lattice_to_json(f).dump(2), e_out);
  });

  // check-da: kernel test for the conjugate difference
  auto* sc_check = app.add_subcommand("check-da", "test a tabulated function for analyticity");
  std::string c_in;
  sc_check->add_option("--in", c_in, "lattice JSON file")->required();
  sc_check->callback([&] {
    DaCheck c = is_discrete_analytic(lattice_from_json(load_json(c_in)));
    if (c.ok) {
      std::cout << "discrete analytic\n";
      return;
    }
    std::cout << "not analytic: witness (" << c.x << "," << c.y << ") residual "
              << c.residual.str() << "\n";
    rc = 1;
  });

  // fourier: coefficient transform, 1-d values or a 2-d lattice file
  auto* sc_fourier = app.add_subcommand("fourier", "factorial-basis coefficient transform");
  std::string f_in;
  std::vector<std::string> f_values;
  sc_fourier->add_option("--in", f_in, "lattice JSON file (2-d transform)");
  sc_fourier->add_option("--values", f_values, "axis values v0 v1 ... (1-d transform)")
      ->expected(-1);
  sc_fourier->callback([&] {
    if (f_in.empty() == f_values.empty())
      throw ConfigError("fourier needs exactly one of --in or --values");
    ordered_json j;
    if (!f_values.empty()) {
      std::vector<GaussianRational> vals;
      for (const auto& s : f_values) vals.push_back(GaussianRational::parse(s));
      CoefficientSeries c = fourier_1d(vals);
      j["coeffs"] = ordered_json::array();
      for (int n = 0; n <= c.degree(); ++n) j["coeffs"].push_back(to_json(c.coeff(n)));
    } else {
      CoefficientSeries2 c = fourier_2d(lattice_from_json(load_json(f_in)));
      j["terms"] = ordered_json::array();
      for (const auto& [mn, v] : c.terms()) {
        ordered_json t;
        t["m"] = mn.first;
        t["n"] = mn.second;
        t["value"] = to_json(v);
        j["terms"].push_back(t);
      }
    }
    emit(j.dump(2), "");
  });

  // binary products and the quotient
  auto* sc_mul = app.add_subcommand("ck-mul", "restriction-law product of two functions");
  auto* sc_box = app.add_subcommand("boxdot", "convolution-type product of two functions");
  std::string m_f, m_g;
  int m_trunc = -1;
  for (auto* sc : {sc_mul, sc_box}) {
    sc->add_option("--f", m_f, "left factor JSON")->required();
    sc->add_option("--g", m_g, "right factor JSON")->required();
  }
  sc_mul->add_option("--truncation", m_trunc, "required when both factors are truncated");
  sc_mul->callback([&] {
    ExpandableFunction f = expandable_from_json(load_json(m_f));
    ExpandableFunction g = expandable_from_json(load_json(m_g));
    ExpandableFunction h =
        m_trunc >= 0 ? ck_product_truncated(f, g, m_trunc) : ck_product(f, g);
    emit(expandable_to_json(h).dump(2), "");
  });
  sc_box->callback([&] {
    ExpandableFunction h = boxdot_product(expandable_from_json(load_json(m_f)),
                                          expandable_from_json(load_json(m_g)));
    emit(expandable_to_json(h).dump(2), "");
  });

  auto* sc_div = app.add_subcommand("ck-div", "divide, checking the divisor for axis zeros");
  std::string d_p, d_q;
  int d_order = 12;
  sc_div->add_option("--p", d_p, "numerator JSON")->required();
  sc_div->add_option("--q", d_q, "divisor JSON (polynomial)")->required();
  sc_div->add_option("--order", d_order, "truncation order of the quotient");
  sc_div->callback([&] {
    ExpandableFunction p = expandable_from_json(load_json(d_p));
    ExpandableFunction q = expandable_from_json(load_json(d_q));
    ExpandableFunction h = ck_quotient(p, q, d_order);
    ExpandableFunction cross = ck_quotient_triangular(p, q, d_order);
    if (!(h.coeffs == cross.coeffs))
      throw PreconditionError("quotient routes disagree; please report this input");
    emit(expandable_to_json(h).dump(2), "");
  });

  // realize: validate a state-space file and optionally extend it
  auto* sc_real = app.add_subcommand("realize", "validate and extend a rational function");
  std::string r_in;
  int r_trunc = -1, r_decay = 30;
  sc_real->add_option("--in", r_in, "realization JSON file")->required();
  sc_real->add_option("--truncation", r_trunc, "emit basis coefficients to this order");
  sc_real->add_option("--decay-top", r_decay, "order for the expandability estimate");
  sc_real->callback([&] {
    Realization r = realization_from_json(load_json(r_in));
    RealizationCheck chk = validate(r);
    if (!chk.ok)
      throw PreconditionError("pole at the nonnegative integer " + std::to_string(chk.x));
    ordered_json j;
    j["dim"] = r.dim();
    j["decay_estimate"] = fourier_decay_check(r, r_decay);
    if (r_trunc >= 0) j["extension"] = expandable_to_json(rational_da_extend(r, r_trunc));
    emit(j.dump(2), "");
  });

  // kernel: Gram matrix of the reproducing kernel at integer points
  auto* sc_kernel = app.add_subcommand("kernel", "reproducing-kernel Gram at lattice points");
  std::string k_points;
  int k_degree = 25, k_trunc = 25;
  sc_kernel->add_option("--points", k_points, "JSON file [[x,y],...]")->required();
  sc_kernel->add_option("--degree", k_degree, "table degree");
  sc_kernel->add_option("--truncation", k_trunc, "kernel partial-sum order");
  sc_kernel->callback([&] {
    json pj = load_json(k_points);
    std::vector<std::pair<long, long>> pts;
    long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    for (const auto& e : pj) {
      long x = e.at(0), y = e.at(1);
      pts.push_back({x, y});
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    if (pts.empty()) throw ConfigError("no points in " + k_points);
    ZetaTable zt = table_for(k_degree, Window(x0, x1, y0, y1), threads);
    KernelMatrix km = kernel_gram(zt, pts, k_trunc);
    ordered_json j;
    j["truncation"] = km.truncation;
    j["min_eigenvalue"] = km.min_eigenvalue;
    j["gram"] = ordered_json::array();
    for (const auto& row : km.gram) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back({{"re", v.real()}, {"im", v.imag()}});
      j["gram"].push_back(r);
    }
    emit(j.dump(2), "");
  });

  // matrix: exact operator truncations
  auto* sc_matrix = app.add_subcommand("matrix", "operator truncation in the normalized basis");
  std::string x_op = "Z", x_format = "csv", x_out;
  int x_n = 8;
  sc_matrix->add_option("--op", x_op, "delta_x | delta_y | Z | Z_adj | A");
  sc_matrix->add_option("--n", x_n, "truncation size");
  sc_matrix->add_option("--format", x_format)->check(CLI::IsMember({"json", "csv"}));
  sc_matrix->add_option("--out", x_out);
  sc_matrix->callback([&] {
    OperatorMatrix m = matrix_of(op_tag_from_name(x_op), x_n);
    if (x_format == "csv") {
      std::ostringstream os;
      for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j)
          os << (j ? "," : "") << gr_cell(m.at(i, j), float_mode);
        os << "\n";
      }
      emit(os.str(), x_out);
      return;
    }
    ordered_json j;
    j["op"] = x_op;
    j["n"] = x_n;
    j["entries"] = ordered_json::array();
    for (int i = 0; i < m.size(); ++i)
      for (int k = 0; k < m.size(); ++k)
        if (!m.at(i, k).is_zero())
          j["entries"].push_back(
              {{"row", i}, {"col", k}, {"value", to_json(m.at(i, k))}});
    emit(j.dump(2), x_out);
  });

  // brackets: commutation relations, matrix mode plus a seeded lattice probe
  auto* sc_br = app.add_subcommand("brackets", "verify generator commutation relations");
  int b_n = 10;
  sc_br->add_option("--n", b_n, "matrix truncation size");
  sc_br->callback([&] {
    bool all_ok = true;
    for (const RelationReport& rel : bracket_checks_matrix(b_n)) {
      std::cout << (rel.ok ? "ok   " : "FAIL ") << "matrix  " << rel.name << "\n";
      all_ok = all_ok && rel.ok;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 3);
    LatticeFunction f = LatticeFunction::sample(Window(0, 7, -3, 4), [&](long, long) {
      return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    });
    for (const RelationReport& rel : bracket_checks_lattice(f)) {
      std::cout << (rel.ok ? "ok   " : "FAIL ") << "lattice " << rel.name << "\n";
      all_ok = all_ok && rel.ok;
    }
    if (!all_ok) rc = 1;
  });

  // schur-kernel: complementary-space kernel by both routes
  auto* sc_sk = app.add_subcommand("schur-kernel", "complementary-space kernel, two routes");
  std::vector<double> s_factors{0.5};
  std::vector<double> s_z{0.3, 0.1}, s_w{-0.2, 0.4};
  int s_n = 64;
  sc_sk->add_option("--factor", s_factors, "inner factor parameters, repeatable");
  sc_sk->add_option("--z", s_z, "first point re im")->expected(2);
  sc_sk->add_option("--w", s_w, "second point re im")->expected(2);
  sc_sk->add_option("--n", s_n, "multiplier truncation");
  sc_sk->callback([&] {
    CoisometryRealization r = blaschke_realization(s_factors[0]);
    std::vector<Cplx> sym = blaschke_coeffs(s_factors[0], s_n);
    for (size_t k = 1; k < s_factors.size(); ++k) {
      r = cascade(r, blaschke_realization(s_factors[k]));
      std::vector<Cplx> next = blaschke_coeffs(s_factors[k], s_n);
      std::vector<Cplx> conv(s_n, 0.0);
      for (int m = 0; m < s_n; ++m)
        for (int n2 = 0; m + n2 < s_n; ++n2) conv[m + n2] += sym[m] * next[n2];
      sym = std::move(conv);
    }
    Cplx z(s_z[0], s_z[1]), w(s_w[0], s_w[1]);
    Cplx sandwich = ks_kernel(r, z, w);
    Cplx series = kernel_from_multiplier(sym, z, w, s_n);
    ordered_json j;
    j["realization_route"] = {{"re", sandwich.real()}, {"im", sandwich.imag()}};
    j["multiplier_route"] = {{"re", series.real()}, {"im", series.imag()}};
    j["difference"] = std::abs(sandwich - series);
    emit(j.dump(2), "");
  });

  // norm-check: weighted area norms of the monomials
  auto* sc_norm = app.add_subcommand("norm-check", "weighted norm ratios of the monomials");
  int n_max = 6;
  sc_norm->add_option("--max-n", n_max, "highest monomial degree");
  sc_norm->callback([&] {
    bool ok = true;
    for (int n = 0; n <= n_max; ++n) {
      double ratio = bessel_norm_check(n);
      std::cout << "n=" << n << " ratio " << format_double(ratio) << "\n";
      ok = ok && std::abs(ratio - 1.0) <= 5e-3;
    }
    if (!ok) rc = 1;
  });

  // verify-all: the full acceptance battery
  auto* sc_verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  sc_verify->callback([&] {
    int failed = 0;
    for (const CriterionResult& r : run_acceptance()) {
      if (!r.pass) ++failed;
      std::printf("%2d/14 %s  %s%s%s  [%.2fs]\n", r.index, r.pass ? "PASS" : "FAIL",
                  r.label.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str(),
                  r.seconds);
    }
    if (failed > 0) rc = 1;
  });

  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
