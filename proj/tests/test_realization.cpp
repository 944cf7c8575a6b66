#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "daf/realization.hpp"

using namespace daf;

namespace {

GaussianRational gr(long re, long im = 0) { return GaussianRational(re, im); }

Realization single_pole() {
  Realization r;
  r.a = {{gr(-1)}};
  r.b = {gr(1)};
  r.c = {gr(1)};
  return r;
}

}  // namespace

TEST_CASE("one-state system evaluates to the shifted reciprocal") {
  Realization r = single_pole();
  // C (xI - A)^{-1} B = 1/(x+1)
  CHECK(eval_realization(r, gr(0)) == gr(1));
  CHECK(eval_realization(r, gr(3)) == GaussianRational(Rational(1, 4)));
  CHECK(eval_realization(r, gr(-2)) == gr(-1));
  CHECK(eval_realization(r, GaussianRational(Rational(1, 2))) ==
        GaussianRational(Rational(2, 3)));
}

TEST_CASE("evaluation at a spectral point is rejected") {
  Realization r;
  r.a = {{gr(2)}};
  r.b = {gr(1)};
  r.c = {gr(1)};
  CHECK_THROWS_AS(eval_realization(r, gr(2)), PreconditionError);
  CHECK(eval_realization(r, gr(3)) == gr(1));
}

TEST_CASE("direct polynomial part adds on top of the resolvent term") {
  Realization r = single_pole();
  r.poly = ExactPolynomial1({gr(2), gr(0), gr(1)});  // 2 + x^2
  CHECK(eval_realization(r, gr(1)) == GaussianRational(Rational(7, 2)));
  // empty state space leaves just the polynomial
  Realization p;
  p.poly = ExactPolynomial1({gr(0), gr(0, 1)});
  CHECK(eval_realization(p, gr(5)) == gr(0, 5));
}

TEST_CASE("shape mismatches are reported") {
  Realization r;
  r.a = {{gr(0), gr(1)}, {gr(0)}};  // ragged
  r.b = {gr(1), gr(0)};
  r.c = {gr(1), gr(0)};
  CHECK_THROWS_AS(eval_realization(r, gr(0)), PreconditionError);
  r.a = {{gr(0), gr(1)}, {gr(0), gr(0)}};
  r.b = {gr(1)};
  CHECK_THROWS_AS(eval_realization(r, gr(0)), PreconditionError);
}

TEST_CASE("pole placement gives partial fractions") {
  // 1/(x+1) - 1/(x+2) = 1/((x+1)(x+2))
  Realization r = realize_from_poles({{gr(-1), gr(1)}, {gr(-2), gr(-1)}});
  CHECK(r.dim() == 2);
  for (long x = 0; x <= 5; ++x) {
    CHECK(eval_realization(r, gr(x)) ==
          GaussianRational(Rational(1, (x + 1) * (x + 2))));
  }
  Realization s = realize_from_poles({{gr(-1), gr(1)}, {gr(-2), gr(1)}});
  CHECK(eval_realization(s, gr(0)) == GaussianRational(Rational(3, 2)));
}

TEST_CASE("poles on the nonnegative integers are refused") {
  CHECK_THROWS_AS(realize_from_poles({{gr(3), gr(1)}}), PreconditionError);
  CHECK_THROWS_AS(realize_from_poles({{gr(0), gr(1)}}), PreconditionError);
  // negative and complex poles are fine
  Realization r = realize_from_poles({{gr(0, 1), gr(1)}});
  CHECK(eval_realization(r, gr(0)) == gr(0, 1));  // 1/(-i) = i
}

TEST_CASE("validation scans every nonnegative integer shift") {
  CHECK(validate(single_pole()).ok);

  Realization nil;  // f = 1/x^2, singular shift at 0
  nil.a = {{gr(0), gr(1)}, {gr(0), gr(0)}};
  nil.b = {gr(0), gr(1)};
  nil.c = {gr(1), gr(0)};
  RealizationCheck bad = validate(nil);
  CHECK(!bad.ok);
  CHECK(bad.x == 0);

  Realization hidden;  // eigenvalues 1 and 4 despite nonzero entries everywhere
  hidden.a = {{gr(2), gr(2)}, {gr(1), gr(3)}};
  hidden.b = {gr(1), gr(1)};
  hidden.c = {gr(1), gr(1)};
  RealizationCheck h = validate(hidden);
  CHECK(!h.ok);
  CHECK(h.x == 1);

  Realization irr;  // eigenvalues +-sqrt(5), never integral
  irr.a = {{gr(0), gr(5)}, {gr(1), gr(0)}};
  irr.b = {gr(1), gr(0)};
  irr.c = {gr(0), gr(1)};
  CHECK(validate(irr).ok);
}

TEST_CASE("extension coefficients match the known reciprocal transform") {
  ExpandableFunction f = rational_da_extend(single_pole(), 20);
  CHECK(f.kind == SupportKind::truncated);
  for (unsigned n = 0; n <= 20; ++n) {
    Rational v = Rational(1) / factorial(n + 1);
    CHECK(f.coeffs.coeff(n) == GaussianRational(n % 2 ? -v : v));
  }
  // no state space means an honest polynomial
  Realization p;
  p.poly = ExactPolynomial1({gr(1), gr(2)});
  ExpandableFunction g = rational_da_extend(p, 4);
  CHECK(g.kind == SupportKind::polynomial);
  CHECK(g.coeffs.coeff(0) == gr(1));
  CHECK(g.coeffs.coeff(1) == gr(2));
  CHECK(g.support() == 1);
}

TEST_CASE("extension refuses systems with spectrum on the axis") {
  Realization nil;
  nil.a = {{gr(0)}};
  nil.b = {gr(1)};
  nil.c = {gr(1)};
  CHECK_THROWS_AS(rational_da_extend(nil, 8), PreconditionError);
}

TEST_CASE("multiplying back by the denominator recovers the numerator") {
  // f = 1/(x+1): q with restriction x+1 gives q o f = 1
  ExpandableFunction f = rational_da_extend(single_pole(), 20);
  ExpandableFunction q = ExpandableFunction::polynomial({gr(1), gr(1)});
  ExpandableFunction back = ck_product_truncated(q, f, 20);
  CHECK(back.coeffs.coeff(0) == gr(1));
  for (unsigned n = 1; n <= 20; ++n) CHECK(back.coeffs.coeff(n).is_zero());

  // f = 1/((x+1)(x+2)): restriction of the divisor is x^2+3x+2 = x^[2]+4x+2
  Realization r2 = realize_from_poles({{gr(-1), gr(1)}, {gr(-2), gr(-1)}});
  ExpandableFunction f2 = rational_da_extend(r2, 18);
  ExpandableFunction q2 = ExpandableFunction::polynomial({gr(2), gr(4), gr(1)});
  ExpandableFunction back2 = ck_product_truncated(q2, f2, 18);
  CHECK(back2.coeffs.coeff(0) == gr(1));
  for (unsigned n = 1; n <= 18; ++n) CHECK(back2.coeffs.coeff(n).is_zero());
}

TEST_CASE("quotient route and resolvent route agree") {
  Realization r2 = realize_from_poles({{gr(-1), gr(1)}, {gr(-2), gr(-1)}});
  ExpandableFunction f2 = rational_da_extend(r2, 15);
  ExpandableFunction p = ExpandableFunction::polynomial({gr(1)});
  ExpandableFunction q = ExpandableFunction::polynomial({gr(2), gr(4), gr(1)});
  CHECK(ck_quotient(p, q, 15).coeffs == f2.coeffs);
}

TEST_CASE("decay proxy stays under the threshold for true rationals") {
  double one_pole = fourier_decay_check(single_pole(), 30);
  CHECK(one_pole == doctest::Approx(std::pow(31.0, -1.0 / 30.0)).epsilon(1e-12));
  CHECK(one_pole <= 1.05);

  Realization r2 = realize_from_poles({{gr(-1), gr(1)}, {gr(-2), gr(-1)}});
  double two_pole = fourier_decay_check(r2, 30);
  CHECK(two_pole == doctest::Approx(std::pow(32.0, -1.0 / 30.0)).epsilon(1e-12));
  CHECK(two_pole <= 1.05);

  // the module-level proxy and the series-level estimate are the same number
  CHECK(fourier_decay_check(r2, 24) ==
        doctest::Approx(expandability_estimate(rational_da_extend(r2, 24), 24))
            .epsilon(1e-10));
}

TEST_CASE("serialization round-trips") {
  Realization r = realize_from_poles({{gr(-1), gr(1)}, {gr(0, 1), gr(2, -3)}});
  r.poly = ExactPolynomial1({gr(1), GaussianRational(Rational(1, 2), Rational(0))});
  nlohmann::ordered_json j = realization_to_json(r);
  Realization back = realization_from_json(j);
  CHECK(back.dim() == 2);
  for (long x = 0; x <= 6; ++x)
    CHECK(eval_realization(back, gr(x)) == eval_realization(r, gr(x)));
  CHECK(realization_to_json(back) == j);
}
