#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "daf/operator_alg.hpp"
#include "daf/schur.hpp"

using namespace daf;
using namespace std::complex_literals;

namespace {

EntireSeries h2(std::vector<Cplx> c) { return EntireSeries{std::move(c), SeriesSpace::h2}; }

EntireSeries random_h2(std::mt19937& rng, int deg, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Cplx> c(deg + 1);
  for (auto& v : c) v = Cplx(u(rng), u(rng)) * scale;
  return h2(std::move(c));
}

double fact(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("coefficient transform scales by factorials and round-trips") {
  EntireSeries f = h2({1.0, 1.0, 1.0, 1.0, 1.0});
  EntireSeries tf = t_map(f);
  CHECK(tf.space == SeriesSpace::entire);
  for (int n = 0; n <= 4; ++n)
    CHECK(std::abs(tf.coeffs[n] - 1.0 / fact(n)) < 1e-15);
  EntireSeries back = t_inv(tf);
  for (int n = 0; n <= 4; ++n) CHECK(std::abs(back.coeffs[n] - 1.0) < 1e-15);
  // the range norm is defined to match, so the transform is unitary
  std::mt19937 rng(3u);
  EntireSeries g = random_h2(rng, 12);
  CHECK(transported_norm(t_map(g)) == doctest::Approx(h2_norm(g)).epsilon(1e-13));
}

TEST_CASE("product transported from the pointwise one") {
  EntireSeries z = t_map(h2({0.0, 1.0}));
  EntireSeries zz = diamond_product(z, z);
  CHECK(std::abs(zz.coeffs[2] - 0.5) < 1e-15);  // z <> z = z^2/2

  std::mt19937 rng(8u);
  EntireSeries f = t_map(random_h2(rng, 8));
  EntireSeries one = t_map(h2({1.0}));
  EntireSeries of = diamond_product(one, f);
  for (size_t k = 0; k < f.coeffs.size(); ++k)
    CHECK(std::abs(of.coeffs[k] - f.coeffs[k]) < 1e-14);

  // (1 - za) has <>-inverse e^{az}: the product telescopes to 1
  double a = 0.6;
  std::vector<Cplx> expo(30);
  for (int n = 0; n < 30; ++n) expo[n] = std::pow(a, n) / fact(n);
  EntireSeries prod =
      diamond_product(EntireSeries{{1.0, -a}, SeriesSpace::entire},
                      EntireSeries{expo, SeriesSpace::entire});
  CHECK(std::abs(prod.coeffs[0] - 1.0) < 1e-14);
  for (int k = 1; k < 29; ++k) CHECK(std::abs(prod.coeffs[k]) < 1e-14);
}

TEST_CASE("multiplier norms of basic symbols") {
  CHECK(multiplier_norm({0.0, 1.0}, 40) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(multiplier_norm({0.3}, 10) == doctest::Approx(0.3).epsilon(1e-12));
  std::vector<Cplx> b = blaschke_coeffs(-0.5, 60);
  double nb = multiplier_norm(b, 60);
  CHECK(nb <= 1.0 + 1e-8);
  CHECK(nb >= 0.9);
}

TEST_CASE("inner factor coefficients match the closed form") {
  std::vector<Cplx> b = blaschke_coeffs(0.5, 12);
  CHECK(std::abs(b[0] - (-0.5)) < 1e-15);
  CHECK(std::abs(b[1] - 0.75) < 1e-15);
  CHECK(std::abs(b[2] - 0.375) < 1e-15);
  // pointwise against (z-a)/(1-az)
  Cplx zv = 0.3 + 0.2i;
  Cplx direct = (zv - 0.5) / (1.0 - 0.5 * zv);
  Cplx series = 0.0;
  Cplx pw = 1.0;
  for (const Cplx& ck : b) {
    series += ck * pw;
    pw *= zv;
  }
  CHECK(std::abs(series - direct) < 1e-6);  // geometric tail at 0.5^12
}

TEST_CASE("one-factor realization is coisometric with the right transfer") {
  CoisometryRealization r = blaschke_realization(0.5);
  CHECK(is_coisometric(r));
  std::mt19937 rng(15u);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int k = 0; k < 20; ++k) {
    Cplx zv(u(rng), u(rng));
    Cplx classical = classical_transfer_eval(r, zv);
    CHECK(std::abs(classical - (zv - 0.5) / (1.0 - 0.5 * zv)) < 1e-12);
    // the integrated series form is the transform of the classical one
    std::vector<Cplx> b = blaschke_coeffs(0.5, 60);
    Cplx expect = 0.0;
    Cplx pw = 1.0;
    for (size_t n = 0; n < b.size(); ++n) {
      expect += b[n] * pw / fact(static_cast<int>(n));
      pw *= zv;
    }
    CHECK(std::abs(coisometry_realize_eval(r, zv) - expect) < 1e-10);
  }
}

TEST_CASE("integrator realization of the identity symbol") {
  CoisometryRealization r;
  r.a = Eigen::MatrixXcd::Zero(1, 1);
  r.b = Eigen::VectorXcd::Ones(1);
  r.c = Eigen::RowVectorXcd::Ones(1);
  r.d = 0.0;
  CHECK(is_coisometric(r));
  for (Cplx zv : {Cplx(0.4, 0.1), Cplx(-0.9, 0.5), Cplx(2.0, -1.0)})
    CHECK(std::abs(coisometry_realize_eval(r, zv) - zv) < 1e-12);
  // kernel of the complementary space collapses to the constant
  CHECK(std::abs(ks_kernel(r, Cplx(0.7, 0.2), Cplx(-0.3, 0.4)) - 1.0) < 1e-12);

  CoisometryRealization flat = r;
  flat.b.setZero();
  flat.d = 0.25;
  CHECK(std::abs(coisometry_realize_eval(flat, Cplx(0.5, 0.5)) - 0.25) < 1e-15);
}

TEST_CASE("cascade multiplies transfer functions and stays coisometric") {
  CoisometryRealization r1 = blaschke_realization(0.5);
  CoisometryRealization r2 = blaschke_realization(-1.0 / 3.0);
  CoisometryRealization rc = cascade(r1, r2);
  CHECK(rc.a.rows() == 2);
  CHECK(is_coisometric(rc));
  std::mt19937 rng(23u);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int k = 0; k < 12; ++k) {
    Cplx zv(u(rng), u(rng));
    Cplx expect = classical_transfer_eval(r1, zv) * classical_transfer_eval(r2, zv);
    CHECK(std::abs(classical_transfer_eval(rc, zv) - expect) < 1e-12);
  }
}

TEST_CASE("matrix exponential basics") {
  Eigen::MatrixXcd one(1, 1);
  one(0, 0) = 1.3 - 0.4i;
  CHECK(std::abs(expm(one)(0, 0) - std::exp(Cplx(1.3, -0.4))) < 1e-13);

  Eigen::MatrixXcd nil = Eigen::MatrixXcd::Zero(2, 2);
  nil(0, 1) = 5.0;
  Eigen::MatrixXcd en = expm(nil);
  CHECK(std::abs(en(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(en(0, 1) - 5.0) < 1e-13);
  CHECK(std::abs(en(1, 0)) < 1e-14);

  std::mt19937 rng(4u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Cplx(u(rng), u(rng));
  Eigen::MatrixXcd prod = expm(m) * expm(-m);
  CHECK((prod - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kernel from the realization matches the multiplier route") {
  std::vector<std::pair<Cplx, Cplx>> pairs;
  std::mt19937 rng(77u);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int k = 0; k < 10; ++k)
    pairs.push_back({Cplx(u(rng), u(rng)), Cplx(u(rng), u(rng))});

  CoisometryRealization r1 = blaschke_realization(0.5);
  std::vector<Cplx> b1 = blaschke_coeffs(0.5, 80);
  for (auto& [zv, wv] : pairs) {
    Cplx lhs = ks_kernel(r1, zv, wv);
    Cplx rhs = kernel_from_multiplier(b1, zv, wv, 80);
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }

  CoisometryRealization rc = cascade(r1, blaschke_realization(-1.0 / 3.0));
  EntireSeries prod_symbol = h2({1.0});
  // coefficients of the product symbol via convolution of the factors
  std::vector<Cplx> b2 = blaschke_coeffs(-1.0 / 3.0, 80);
  std::vector<Cplx> bc(80, 0.0);
  for (int m = 0; m < 80; ++m)
    for (int n = 0; m + n < 80; ++n) bc[m + n] += b1[m] * b2[n];
  for (auto& [zv, wv] : pairs)
    CHECK(std::abs(ks_kernel(rc, zv, wv) - kernel_from_multiplier(bc, zv, wv, 80)) <
          1e-8);

  // constants admit no finite realization block; the multiplier route alone
  // carries them, pinned against the analytic value
  Cplx c0 = 0.6;
  Cplx z1 = 0.5 + 0.1i, w1 = -0.2 + 0.3i;
  Cplx khw = 0.0;
  Cplx zw = z1 * std::conj(w1);
  Cplx pw = 1.0;
  for (int n = 0; n < 40; ++n) {
    khw += pw / (fact(n) * fact(n));
    pw *= zw;
  }
  CHECK(std::abs(kernel_from_multiplier({c0}, z1, w1, 60) - (1.0 - 0.36) * khw) < 1e-10);
}

TEST_CASE("kernel at the origin is the defect of the symbol") {
  CoisometryRealization r = blaschke_realization(0.5);
  CHECK(std::abs(ks_kernel(r, 0.0, 0.0) - 0.75) < 1e-13);  // 1 - |s0'...(0)|^2 = 1 - a^2
}

TEST_CASE("derivative-type operator identities") {
  DdReport rep = dd_checks(40);
  CHECK(rep.intertwine_ok);
  CHECK(rep.ddstar_ok);
  CHECK(rep.dstar_d_ok);
}

TEST_CASE("kernel reproduces point evaluation") {
  std::mt19937 rng(31u);
  EntireSeries f = t_map(random_h2(rng, 18));
  for (Cplx wv : {Cplx(0.3, -0.4), Cplx(1.2, 0.7)}) {
    // <F, K(.,w)> in the transported inner product is sum F_n w^n
    Cplx ip = 0.0, val = 0.0, pw = 1.0;
    for (size_t n = 0; n < f.coeffs.size(); ++n) {
      val += f.coeffs[n] * pw;
      pw *= wv;
    }
    ip = reproduce_at(f, wv);
    CHECK(std::abs(ip - val) < 1e-10);
  }
}

TEST_CASE("multiplication matrix transports unchanged") {
  // the matrix of <>-multiplication by Ts0 in the transported basis equals the
  // Toeplitz matrix of s0 on coefficients
  std::vector<Cplx> b = blaschke_coeffs(0.4, 20);
  EntireSeries symbol = t_map(h2(b));
  for (int k = 0; k < 6; ++k) {
    std::vector<Cplx> unit(k + 1, 0.0);
    unit[k] = 1.0 / fact(k);  // transported basis member z^k/k!
    EntireSeries col = diamond_product(symbol, EntireSeries{unit, SeriesSpace::entire});
    for (int m = 0; m < 20; ++m) {
      Cplx entry = (m < static_cast<int>(col.coeffs.size())) ? col.coeffs[m] * fact(m) : 0.0;
      Cplx expect = (m >= k && m - k < 20) ? b[m - k] : 0.0;
      CHECK(std::abs(entry - expect) < 1e-12);
    }
  }
}

TEST_CASE("complementary space inequality in state-space form") {
  CHECK(hs_inequality_margin(blaschke_realization(0.5)) >= -1e-8);
  CoisometryRealization rc =
      cascade(blaschke_realization(0.5), blaschke_realization(-1.0 / 3.0));
  CHECK(hs_inequality_margin(rc) >= -1e-8);
  // pointwise consequence: |Av|^2 <= |v|^2 - |Cv|^2 for state vectors
  std::mt19937 rng(6u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    Eigen::VectorXcd v(2);
    v << Cplx(u(rng), u(rng)), Cplx(u(rng), u(rng));
    double lhs = (rc.a * v).squaredNorm();
    double rhs = v.squaredNorm() - std::norm((rc.c * v)(0, 0));
    CHECK(lhs <= rhs + 1e-8);
  }
}

TEST_CASE("inner symbols induce projections onto their range") {
  CHECK(beurling_projection_residual(blaschke_coeffs(0.5, 60), 60) < 1e-8);
  std::vector<Cplx> b1 = blaschke_coeffs(0.5, 60);
  std::vector<Cplx> b2 = blaschke_coeffs(-0.3, 60);
  std::vector<Cplx> bc(60, 0.0);
  for (int m = 0; m < 60; ++m)
    for (int n = 0; m + n < 60; ++n) bc[m + n] += b1[m] * b2[n];
  CHECK(beurling_projection_residual(bc, 60) < 1e-8);
  // a strictly contractive symbol is not inner and fails the projection law
  CHECK(beurling_projection_residual({0.5}, 20) > 0.1);
}

TEST_CASE("multiplication by a contractive symbol shrinks the norm") {
  std::mt19937 rng(12u);
  std::vector<Cplx> b = blaschke_coeffs(0.7, 50);
  for (int k = 0; k < 8; ++k) {
    EntireSeries f = random_h2(rng, 30);
    EntireSeries tf = t_map(f);
    EntireSeries prod = diamond_product(t_map(h2(b)), tf);
    prod.coeffs.resize(31);  // trusted prefix of the truncated product
    CHECK(transported_norm(prod) <= h2_norm(f) * (1.0 + 1e-10) + 1e-12);
  }
}

TEST_CASE("weighted area integrals reproduce squared factorials") {
  for (int n = 0; n <= 6; ++n) {
    double ratio = bessel_norm_check(n);
    CHECK(ratio == doctest::Approx(1.0).epsilon(5e-3));
  }
}

TEST_CASE("transport carries basis members and exponentials to the lattice") {
  ZetaTable zt = zeta_by_extension(12, Window(-2, 6, -3, 3));
  // z^n/n! lands on the normalized basis member
  for (int n = 0; n <= 5; ++n) {
    std::vector<Cplx> c(n + 1, 0.0);
    c[n] = 1.0 / fact(n);
    ExpandableFunction vf = v_transport(EntireSeries{c, SeriesSpace::entire});
    for (int m = 0; m < n; ++m) CHECK(vf.coeffs.coeff(m).is_zero());
    CHECK(std::abs(vf.coeffs.coeff(n).to_complex().real() - 1.0 / fact(n)) < 1e-16);
  }
  // constant goes to the constant
  ExpandableFunction v1 = v_transport(EntireSeries{{1.0}, SeriesSpace::entire});
  CHECK(v1.coeffs.coeff(0) == GaussianRational(1));
  CHECK(v1.support() == 0);

  // exponential: V(e^{tz}) matches the two-variable exponential partial sum
  double t = 0.25;
  std::vector<Cplx> ec(13);
  for (int n = 0; n <= 12; ++n) ec[n] = std::pow(t, n) / fact(n);
  ExpandableFunction ve = v_transport(EntireSeries{ec, SeriesSpace::entire});
  for (long x : {0L, 2L, 5L})
    for (long y : {-2L, 0L, 3L}) {
      CoefficientSeries taylor = exy_taylor(x, y, 12);
      Cplx expect = 0.0;
      double pw = 1.0;
      for (int n = 0; n <= 12; ++n) {
        expect += taylor.coeff(n).to_complex() * pw;
        pw *= t;
      }
      Cplx got = eval_expandable(ve, zt, x, y).value.to_complex();
      CHECK(std::abs(got - expect) < 1e-12);
    }

  // intertwining with the derivative-type operator, exactly on dyadic data
  std::mt19937 rng(9u);
  std::uniform_int_distribution<int> k(-32, 32);
  std::vector<Cplx> dy(9);
  for (auto& v : dy) v = Cplx(k(rng) / 64.0, k(rng) / 64.0);
  EntireSeries g{dy, SeriesSpace::entire};
  std::vector<Cplx> dd(8);
  for (int n = 0; n < 8; ++n) dd[n] = (n + 1.0) * dy[n + 1];
  ExpandableFunction lhs = v_transport(EntireSeries{dd, SeriesSpace::entire});
  CoefficientSeries rhs = deltax_zeta_coeffs(v_transport(g).coeffs);
  CHECK(lhs.coeffs == rhs);
}

TEST_CASE("lattice kernel of a multiplier agrees between both routes") {
  ZetaTable zt = zeta_by_extension(60, Window(-1, 3, -2, 2));
  CoisometryRealization r = blaschke_realization(0.5);
  std::vector<Cplx> b = blaschke_coeffs(0.5, 60);
  std::vector<std::pair<long, long>> pts = {{0, 0}, {1, 0}, {1, 1}, {2, -1}, {0, 2}};
  for (auto& p1 : pts)
    for (auto& p2 : pts) {
      Cplx sandwich = hda_multiplier_kernel(r, p1.first, p1.second, p2.first, p2.second);
      Cplx series = kernel_from_multiplier_da(b, zt, p1, p2, 60);
      CHECK(std::abs(sandwich - series) < 1e-8);
    }
  // scalar sandwich against the closed form of the generating function
  Cplx e11 = exy_point(0.5, 1, 1);
  Cplx e2m1 = exy_point(0.5, 2, -1);
  Cplx direct = 0.75 * e11 * std::conj(e2m1);
  CHECK(std::abs(hda_multiplier_kernel(r, 1, 1, 2, -1) - direct) < 1e-12);
  // both points at the origin reduce to the defect
  CHECK(std::abs(hda_multiplier_kernel(r, 0, 0, 0, 0) - 0.75) < 1e-13);
}

TEST_CASE("lattice kernel rejects spectra reaching the convergence bound") {
  CoisometryRealization r;
  r.a = Eigen::MatrixXcd::Zero(1, 1);
  r.a(0, 0) = 1.6;
  r.b = Eigen::VectorXcd::Ones(1);
  r.c = Eigen::RowVectorXcd::Ones(1);
  r.d = 0.0;
  CHECK_THROWS_AS(hda_multiplier_kernel(r, 1, 0, 1, 0), PreconditionError);
}

TEST_CASE("rationality detector accepts matched denominators and rejects others") {
  // T(1/(1-z/2)) against the true denominator
  std::vector<Cplx> f0(40);
  for (int n = 0; n < 40; ++n) f0[n] = std::pow(0.5, n);
  EntireSeries F = t_map(h2(f0));
  CHECK(diamond_rational_check(F, {1.0, -0.5}));
  CHECK(!diamond_rational_check(F, {1.0, -0.25}));

  // polynomials are rational with trivial denominator; pad so the tail window
  // sits beyond the degree
  std::vector<Cplx> pc(12, 0.0);
  pc[0] = 2.0;
  pc[2] = 1.0;
  EntireSeries P = t_map(h2(pc));
  CHECK(diamond_rational_check(P, {1.0}));

  // slowly decaying non-rational coefficients leave a residual tail
  std::mt19937 rng(44u);
  std::uniform_real_distribution<double> u(0.5, 1.0);
  std::vector<Cplx> g0(40);
  for (int n = 0; n < 40; ++n)
    g0[n] = u(rng) * std::pow(0.8, n) * ((n * (n + 3)) % 3 == 0 ? -1.0 : 1.0);
  CHECK(!diamond_rational_check(t_map(h2(g0)), {1.0, -0.8}));

  // denominator recovered from a realization spectrum
  CoisometryRealization r = blaschke_realization(0.5);
  std::vector<Cplx> bc = blaschke_coeffs(0.5, 40);
  EntireSeries Fb = t_map(h2(bc));
  CHECK(diamond_rational_check(Fb, denominator_from_realization(r)));
}
