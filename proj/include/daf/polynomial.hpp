#pragma once

#include <map>
#include <utility>
#include <vector>

#include "daf/gaussian_rational.hpp"

namespace daf {

/// Dense univariate polynomial over Q(i), monomial basis, index = power.
class ExactPolynomial1 {
 public:
  ExactPolynomial1() = default;
  explicit ExactPolynomial1(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const GaussianRational& coeff(size_t k) const;
  void set_coeff(size_t k, GaussianRational v);

  GaussianRational eval_at(const GaussianRational& x) const;
  GaussianRational eval_int(long x) const { return eval_at(GaussianRational(x)); }

  ExactPolynomial1& operator+=(const ExactPolynomial1& o);
  ExactPolynomial1& operator-=(const ExactPolynomial1& o);
  ExactPolynomial1 operator*(const ExactPolynomial1& o) const;
  ExactPolynomial1& scale(const GaussianRational& s);

  const std::vector<GaussianRational>& coeffs() const { return c_; }

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

ExactPolynomial1 operator+(ExactPolynomial1 a, const ExactPolynomial1& b);
ExactPolynomial1 operator-(ExactPolynomial1 a, const ExactPolynomial1& b);

/// Sparse bivariate polynomial over Q(i), monomial basis x^m y^n.
class ExactPolynomial2 {
 public:
  using Key = std::pair<int, int>;

  void add_term(int m, int n, const GaussianRational& v);
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  GaussianRational coeff(int m, int n) const;

  /// Highest powers of x and y occurring; (-1,-1) for the zero polynomial.
  std::pair<int, int> max_degrees() const;

  /// Direct evaluation: per-term power products, accumulated exactly.
  GaussianRational eval(const GaussianRational& x, const GaussianRational& y) const;
  GaussianRational eval(long x, long y) const {
    return eval(GaussianRational(x), GaussianRational(y));
  }
  /// Same value through nested Horner schemes; kept as an independent route.
  GaussianRational eval_horner(const GaussianRational& x, const GaussianRational& y) const;
  GaussianRational eval_horner(long x, long y) const {
    return eval_horner(GaussianRational(x), GaussianRational(y));
  }

  ExactPolynomial2& operator+=(const ExactPolynomial2& o);
  ExactPolynomial2& operator-=(const ExactPolynomial2& o);
  ExactPolynomial2 operator*(const ExactPolynomial2& o) const;
  ExactPolynomial2& scale(const GaussianRational& s);

  const std::map<Key, GaussianRational>& terms() const { return terms_; }

  nlohmann::ordered_json to_json() const;
  static ExactPolynomial2 from_json(const nlohmann::json& j);

 private:
  std::map<Key, GaussianRational> terms_;
};

ExactPolynomial2 operator+(ExactPolynomial2 a, const ExactPolynomial2& b);
ExactPolynomial2 operator-(ExactPolynomial2 a, const ExactPolynomial2& b);

}  // namespace daf
