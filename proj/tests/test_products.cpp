#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "daf/products.hpp"

using namespace daf;

namespace {

GaussianRational gr(long re, long im = 0) { return GaussianRational(re, im); }

ExpandableFunction poly_ef(std::initializer_list<long> zeta_coeffs) {
  std::vector<GaussianRational> c;
  for (long v : zeta_coeffs) c.push_back(gr(v));
  return ExpandableFunction::polynomial(std::move(c));
}

ExpandableFunction random_poly_ef(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<GaussianRational> c(deg(rng) + 1);
  for (auto& v : c)
    v = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return ExpandableFunction::polynomial(std::move(c));
}

}  // namespace

TEST_CASE("finite series evaluate exactly through the table") {
  ZetaTable zt = zeta_by_extension(6, Window(-2, 6, -2, 3));
  ExpandableFunction f = poly_ef({0, 1});  // zeta_1
  auto r = eval_expandable(f, zt, 2, 3);
  CHECK(r.value == gr(2, 3));
  CHECK(r.exact);
  CHECK(r.tail_bound == 0.0);

  // 1 + 2*zeta_2 at (1,1): 1 + 2(-1+i)
  ExpandableFunction g = poly_ef({1, 0, 2});
  CHECK(eval_expandable(g, zt, 1, 1).value == gr(-1, 2));
}

TEST_CASE("truncated reciprocal series is exact on the axis") {
  ZetaTable zt = zeta_by_extension(20, Window(0, 6, -1, 1));
  std::vector<GaussianRational> c(21);
  for (unsigned n = 0; n <= 20; ++n) {
    Rational v = Rational(1) / factorial(n + 1);
    c[n] = GaussianRational(n % 2 ? -v : v);
  }
  ExpandableFunction f = ExpandableFunction::truncated(std::move(c));
  for (long x = 0; x <= 6; ++x) {
    auto r = eval_expandable(f, zt, x, 0);
    CHECK(r.exact);
    CHECK(r.value == GaussianRational(Rational(1, x + 1)));
  }
  auto off = eval_expandable(f, zt, 2, 1);
  CHECK(!off.exact);
  CHECK(off.tail_bound > 0.0);
  CHECK(off.tail_bound < 0.05);
}

TEST_CASE("evaluation demands enough table degree") {
  ZetaTable zt = zeta_by_extension(3, Window(0, 4, -1, 1));
  ExpandableFunction f = poly_ef({0, 0, 0, 0, 1});
  CHECK_THROWS_AS(eval_expandable(f, zt, 1, 0), PreconditionError);
}

TEST_CASE("shift operator on lattice values maps basis member n to n+1") {
  ZetaTable zt = zeta_by_extension(6, Window(-3, 6, -3, 3));
  for (int n = 0; n <= 5; ++n) {
    LatticeFunction lhs = z_operator(zt.values[n]);
    // zeta_{n+1} + n zeta_n on the shrunken window
    LatticeFunction rhs = lat_add(zt.values[n + 1], lat_scale(zt.values[n], gr(n)));
    CHECK(lat_sub(lhs, rhs) ==
          LatticeFunction(Window(-3, 6, -2, 2)));
  }
}

TEST_CASE("shift operator preserves discrete analyticity") {
  ZetaTable zt = zeta_by_extension(7, Window(-3, 6, -4, 4));
  std::mt19937 rng(31u);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int rep = 0; rep < 6; ++rep) {
    std::vector<GaussianRational> c(8);
    for (auto& v : c) v = GaussianRational(Rational(num(rng), 3), Rational(num(rng), 2));
    auto f = expandable_values(ExpandableFunction::polynomial(c), zt);
    CHECK(is_discrete_analytic(z_operator(f)).ok);
  }
}

TEST_CASE("coefficient action of the shift operator") {
  CoefficientSeries f(Basis::zeta, {gr(2), gr(0, 1), gr(3)});
  CoefficientSeries out = z_shift_coeffs(f);
  // out(n) = n f(n) + f(n-1)
  CHECK(out.coeff(0).is_zero());
  CHECK(out.coeff(1) == gr(2, 1));
  CHECK(out.coeff(2) == gr(6, 1));
  CHECK(out.coeff(3) == gr(3));
}

TEST_CASE("structure constants frozen examples") {
  CoefficientSeries c11 = ck_structure_constants(1, 1);
  CHECK(c11.coeff(0).is_zero());
  CHECK(c11.coeff(1) == gr(1));
  CHECK(c11.coeff(2) == gr(1));

  CoefficientSeries c22 = ck_structure_constants(2, 2);
  long expect[5] = {0, 0, 2, 4, 1};
  for (int j = 0; j <= 4; ++j) CHECK(c22.coeff(j) == gr(expect[j]));

  // multiplying by the constant basis member changes nothing
  CoefficientSeries c30 = ck_structure_constants(3, 0);
  CHECK(c30.degree() == 3);
  CHECK(c30.coeff(3) == gr(1));
}

TEST_CASE("structure constants match the binomial convolution formula") {
  // x^[m] x^[n] = sum_j binom(m,j) binom(n,j) j! x^[m+n-j]
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      CoefficientSeries c = ck_structure_constants(m, n);
      std::vector<GaussianRational> expect(m + n + 1);
      for (int j = 0; j <= std::min(m, n); ++j) {
        Rational b = factorial(m) / (factorial(j) * factorial(m - j));
        b *= factorial(n) / (factorial(j) * factorial(n - j));
        b *= factorial(j);
        expect[m + n - j] += GaussianRational(b);
      }
      for (int k = 0; k <= m + n; ++k) CHECK(c.coeff(k) == expect[k]);
    }
}

TEST_CASE("product frozen examples") {
  ExpandableFunction z1 = poly_ef({0, 1});
  ExpandableFunction p = ck_product(z1, z1);
  CHECK(p.kind == SupportKind::polynomial);
  CHECK(p.coeffs.coeff(1) == gr(1));
  CHECK(p.coeffs.coeff(2) == gr(1));
  CHECK(p.coeffs.coeff(0).is_zero());

  ExpandableFunction z2 = poly_ef({0, 0, 1});
  ExpandableFunction q = ck_product(z2, z2);
  long expect[5] = {0, 0, 2, 4, 1};
  for (int j = 0; j <= 4; ++j) CHECK(q.coeffs.coeff(j) == gr(expect[j]));

  ExpandableFunction one = poly_ef({1});
  ExpandableFunction idp = ck_product(one, z2);
  CHECK(idp.coeffs == z2.coeffs);
}

TEST_CASE("product restricts to the pointwise product and commutes") {
  std::mt19937 rng(909u);
  for (int rep = 0; rep < 12; ++rep) {
    ExpandableFunction f = random_poly_ef(rng, 6);
    ExpandableFunction g = random_poly_ef(rng, 6);
    ExpandableFunction fg = ck_product(f, g);
    ExpandableFunction gf = ck_product(g, f);
    CHECK(fg.coeffs == gf.coeffs);
    for (long x = 0; x <= 13; ++x) {
      CHECK(fg.restriction_value(x) == f.restriction_value(x) * g.restriction_value(x));
    }
  }
}

TEST_CASE("product values stay discrete analytic") {
  ZetaTable zt = zeta_by_extension(8, Window(-2, 5, -3, 3));
  std::mt19937 rng(13u);
  for (int rep = 0; rep < 5; ++rep) {
    ExpandableFunction f = random_poly_ef(rng, 4);
    ExpandableFunction g = random_poly_ef(rng, 4);
    auto vals = expandable_values(ck_product(f, g), zt);
    CHECK(is_discrete_analytic(vals).ok);
  }
}

TEST_CASE("product through the shift-polynomial form agrees") {
  // with c_k the monomial coefficients of the restriction of f,
  // f o g = sum_k c_k Z^k g
  std::mt19937 rng(2025u);
  for (int rep = 0; rep < 10; ++rep) {
    ExpandableFunction f = random_poly_ef(rng, 5);
    ExpandableFunction g = random_poly_ef(rng, 5);
    ExactPolynomial1 rest = factorial_to_monomial(
        CoefficientSeries(Basis::factorial_x, f.coeffs.coeffs()));
    CoefficientSeries acc(Basis::zeta, {});
    for (int k = rest.degree(); k >= 0; --k) {
      acc = z_shift_coeffs(acc);
      std::vector<GaussianRational> c = acc.coeffs();
      std::vector<GaussianRational> gc = g.coeffs.coeffs();
      if (c.size() < gc.size()) c.resize(gc.size());
      for (size_t n = 0; n < gc.size(); ++n) c[n] += rest.coeff(k) * gc[n];
      acc = CoefficientSeries(Basis::zeta, std::move(c));
    }
    CHECK(acc == ck_product(f, g).coeffs);
  }
}

TEST_CASE("two truncated factors demand an explicit truncation") {
  auto f = ExpandableFunction::truncated({gr(1), gr(1), gr(1)});
  auto g = ExpandableFunction::truncated({gr(1), gr(-1)});
  CHECK_THROWS_AS(ck_product(f, g), PreconditionError);
  ExpandableFunction h = ck_product_truncated(f, g, 1);
  CHECK(h.kind == SupportKind::truncated);
  // (1 + z1 + z2...)(1 - z1): restriction (1+x+x(x-1))(1-x) at 0,1 -> 1, 0
  CHECK(h.restriction_value(0) == gr(1));
  CHECK_THROWS_AS(ck_product_truncated(f, g, 5), PreconditionError);
}

TEST_CASE("convolution product frozen examples") {
  ExpandableFunction z1 = poly_ef({0, 1});
  ExpandableFunction b = boxdot_product(z1, z1);
  CHECK(b.coeffs.coeff(2) == GaussianRational(Rational(1, 2)));
  CHECK(b.coeffs.degree() == 2);

  ExpandableFunction z2 = poly_ef({0, 0, 1});
  ExpandableFunction z3 = poly_ef({0, 0, 0, 1});
  ExpandableFunction c = boxdot_product(z2, z3);
  CHECK(c.coeffs.degree() == 5);
  CHECK(c.coeffs.coeff(5) == GaussianRational(Rational(1, 10)));

  ExpandableFunction one = poly_ef({1});
  CHECK(boxdot_product(one, z3).coeffs == z3.coeffs);
}

TEST_CASE("convolution product is commutative and associative") {
  std::mt19937 rng(41u);
  for (int rep = 0; rep < 8; ++rep) {
    ExpandableFunction f = random_poly_ef(rng, 4);
    ExpandableFunction g = random_poly_ef(rng, 4);
    ExpandableFunction h = random_poly_ef(rng, 4);
    CHECK(boxdot_product(f, g).coeffs == boxdot_product(g, f).coeffs);
    CHECK(boxdot_product(boxdot_product(f, g), h).coeffs ==
          boxdot_product(f, boxdot_product(g, h)).coeffs);
  }
}

TEST_CASE("quotient of one by one plus the first basis member") {
  ExpandableFunction p = poly_ef({1});
  ExpandableFunction q = poly_ef({1, 1});  // restriction 1 + x
  ExpandableFunction f = ck_quotient(p, q, 20);
  for (unsigned n = 0; n <= 20; ++n) {
    Rational v = Rational(1) / factorial(n + 1);
    GaussianRational expect(n % 2 ? -v : v);
    CHECK(f.coeffs.coeff(n) == expect);
  }
  // the product against the divisor recovers the numerator
  ExpandableFunction check = ck_product_truncated(q, f, 20);
  CHECK(check.coeffs.coeff(0) == gr(1));
  for (unsigned n = 1; n <= 20; ++n) CHECK(check.coeffs.coeff(n).is_zero());
}

TEST_CASE("triangular solve and value division agree") {
  std::mt19937 rng(1618u);
  for (int rep = 0; rep < 6; ++rep) {
    ExpandableFunction p = random_poly_ef(rng, 4);
    // divisor with restriction (x+1)^2 + rep: no roots on the nonnegative axis
    ExpandableFunction q = poly_ef({1 + rep, 3, 1});
    ExpandableFunction a = ck_quotient(p, q, 12);
    ExpandableFunction b = ck_quotient_triangular(p, q, 12);
    CHECK(a.coeffs == b.coeffs);
  }
}

TEST_CASE("quotient rejects divisors vanishing on the nonnegative axis") {
  ExpandableFunction p = poly_ef({1});
  CHECK_THROWS_AS(ck_quotient(p, poly_ef({0, 1}), 5), PreconditionError);   // root at 0
  CHECK_THROWS_AS(ck_quotient(p, poly_ef({0, -1, 1}), 5), PreconditionError);  // restriction x(x-2)
  // restriction (x-2)(x-3) = x^[2] - 4x^[1] + 6
  CHECK_THROWS_AS(ck_quotient(p, poly_ef({6, -4, 1}), 5), PreconditionError);
}

TEST_CASE("growth estimate of exponential coefficients recovers the ratio") {
  // coefficients t^n/n! give the estimate |t| at every window size
  Rational t(6, 5);
  std::vector<GaussianRational> c(25);
  Rational pw(1);
  for (unsigned n = 0; n < 25; ++n) {
    c[n] = GaussianRational(pw / factorial(n));
    pw *= t;
  }
  ExpandableFunction f = ExpandableFunction::truncated(std::move(c));
  CHECK(expandability_estimate(f, 24) == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("growth estimate flags the non-expandable geometric restriction") {
  // restriction (1+t)^(2x) has factorial coefficients s^n/n! with s = 2t+t^2;
  // for t=3/5 the bound s = 39/25 exceeds sqrt(2), so no expansion exists
  Rational s(39, 25);
  std::vector<GaussianRational> c(31);
  Rational pw(1);
  for (unsigned n = 0; n < 31; ++n) {
    c[n] = GaussianRational(pw / factorial(n));
    pw *= s;
  }
  ExpandableFunction g = ExpandableFunction::truncated(std::move(c));
  double est = expandability_estimate(g, 30);
  CHECK(est == doctest::Approx(1.56).epsilon(1e-12));
  CHECK(est > std::sqrt(2.0));
}

TEST_CASE("polynomials report vanishing growth beyond their degree") {
  ExpandableFunction f = poly_ef({3, 2, 1});
  CHECK(expandability_estimate(f, 12) == 0.0);
  auto t = ExpandableFunction::truncated({gr(1), gr(1)});
  CHECK_THROWS_AS(expandability_estimate(t, 12), PreconditionError);
}
