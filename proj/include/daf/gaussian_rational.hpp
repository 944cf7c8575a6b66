#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace daf {

/// Raised when a mathematical precondition fails (division by zero, pole on
/// the nonnegative integers, incompatible data). Callers that map errors to
/// process exit codes treat this class as "bad input mathematics" rather than
/// "bad file / bad flag".
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

using Rational = mpq_class;

/// Element of Q(i): a pair of arbitrary-precision rationals. All arithmetic
/// is exact; nothing here ever rounds.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  explicit GaussianRational(long r) : re(r) { canonical(); }
  GaussianRational(Rational r) : re(std::move(r)) { canonical(); }
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) { canonical(); }
  GaussianRational(long r, long i) : re(r), im(i) { canonical(); }

  static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return GaussianRational(re, -im); }
  /// |z|^2 as an exact rational.
  Rational norm2() const { return re * re + im * im; }
  double abs() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  /// Serialized form "a/b+c/d*i", denominators always explicit and positive,
  /// both fractions reduced. parse() accepts exactly what str() emits.
  std::string str() const;
  static GaussianRational parse(const std::string& s);

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

 private:
  void canonical() {
    re.canonicalize();
    im.canonicalize();
  }
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
bool operator==(const GaussianRational& a, const GaussianRational& b);
bool operator!=(const GaussianRational& a, const GaussianRational& b);

nlohmann::ordered_json to_json(const GaussianRational& g);
GaussianRational gr_from_json(const nlohmann::json& j);

/// Exact n! as a rational (numerator n!, denominator 1).
Rational factorial(unsigned n);

}  // namespace daf
