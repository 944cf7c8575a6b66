#include "daf/gaussian_rational.hpp"

#include <cmath>
#include <regex>

namespace daf {

double GaussianRational::abs() const {
  return std::hypot(re.get_d(), im.get_d());
}

std::string GaussianRational::str() const {
  auto frac = [](const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  };
  return frac(re) + "+" + frac(im) + "*i";
}

GaussianRational GaussianRational::parse(const std::string& s) {
  static const std::regex form(R"(^(-?\d+)/(\d+)\+(-?\d+)/(\d+)\*i$)");
  std::smatch m;
  if (!std::regex_match(s, m, form)) {
    throw PreconditionError("cannot parse Gaussian rational: " + s);
  }
  if (m[2].str() == "0" || m[4].str() == "0") {
    throw PreconditionError("zero denominator in: " + s);
  }
  Rational re(m[1].str() + "/" + m[2].str());
  Rational im(m[3].str() + "/" + m[4].str());
  re.canonicalize();
  im.canonicalize();
  return GaussianRational(re, im);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n2 = o.norm2();
  if (n2 == 0) throw PreconditionError("division by zero Gaussian rational");
  Rational r = (re * o.re + im * o.im) / n2;
  Rational i = (im * o.re - re * o.im) / n2;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r *= b;
}
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  GaussianRational r = a;
  return r /= b;
}
GaussianRational operator-(const GaussianRational& a) {
  return GaussianRational(-a.re, -a.im);
}
bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}
bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

nlohmann::ordered_json to_json(const GaussianRational& g) {
  auto frac = [](const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  };
  return nlohmann::ordered_json{{"re", frac(g.re)}, {"im", frac(g.im)}};
}

GaussianRational gr_from_json(const nlohmann::json& j) {
  auto rat = [](const std::string& s) {
    static const std::regex form(R"(^(-?\d+)(/(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, form)) {
      throw PreconditionError("cannot parse rational: " + s);
    }
    if (m[3].matched && m[3].str() == "0") {
      throw PreconditionError("zero denominator in: " + s);
    }
    Rational r(s);
    r.canonicalize();
    return r;
  };
  return GaussianRational(rat(j.at("re").get<std::string>()),
                          rat(j.at("im").get<std::string>()));
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace daf
