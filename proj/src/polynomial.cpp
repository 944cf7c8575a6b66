#include "daf/polynomial.hpp"

#include <algorithm>

namespace daf {

namespace {
const GaussianRational kZero{};
}

const GaussianRational& ExactPolynomial1::coeff(size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

void ExactPolynomial1::set_coeff(size_t k, GaussianRational v) {
  if (k >= c_.size()) c_.resize(k + 1);
  c_[k] = std::move(v);
  trim();
}

GaussianRational ExactPolynomial1::eval_at(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPolynomial1& ExactPolynomial1::operator+=(const ExactPolynomial1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

ExactPolynomial1& ExactPolynomial1::operator-=(const ExactPolynomial1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

ExactPolynomial1 ExactPolynomial1::operator*(const ExactPolynomial1& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  return ExactPolynomial1(std::move(r));
}

ExactPolynomial1& ExactPolynomial1::scale(const GaussianRational& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

void ExactPolynomial1::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactPolynomial1 operator+(ExactPolynomial1 a, const ExactPolynomial1& b) { return a += b; }
ExactPolynomial1 operator-(ExactPolynomial1 a, const ExactPolynomial1& b) { return a -= b; }

void ExactPolynomial2::add_term(int m, int n, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto key = Key{m, n};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational ExactPolynomial2::coeff(int m, int n) const {
  auto it = terms_.find(Key{m, n});
  return it == terms_.end() ? kZero : it->second;
}

std::pair<int, int> ExactPolynomial2::max_degrees() const {
  int dm = -1, dn = -1;
  for (const auto& [k, v] : terms_) {
    dm = std::max(dm, k.first);
    dn = std::max(dn, k.second);
  }
  return {dm, dn};
}

GaussianRational ExactPolynomial2::eval(const GaussianRational& x,
                                        const GaussianRational& y) const {
  auto [dm, dn] = max_degrees();
  if (dm < 0) return kZero;
  // power tables keep each power exact and computed once
  std::vector<GaussianRational> xp(dm + 1), yp(dn + 1);
  xp[0] = GaussianRational(1);
  for (int k = 1; k <= dm; ++k) xp[k] = xp[k - 1] * x;
  yp[0] = GaussianRational(1);
  for (int k = 1; k <= dn; ++k) yp[k] = yp[k - 1] * y;
  GaussianRational acc;
  for (const auto& [k, v] : terms_) acc += v * xp[k.first] * yp[k.second];
  return acc;
}

GaussianRational ExactPolynomial2::eval_horner(const GaussianRational& x,
                                               const GaussianRational& y) const {
  auto [dm, dn] = max_degrees();
  if (dm < 0) return kZero;
  // collect rows p_m(y), then Horner in x with inner Horner in y
  std::vector<std::vector<GaussianRational>> rows(dm + 1,
                                                  std::vector<GaussianRational>(dn + 1));
  for (const auto& [k, v] : terms_) rows[k.first][k.second] = v;
  GaussianRational acc;
  for (int m = dm; m >= 0; --m) {
    GaussianRational row;
    for (int n = dn; n >= 0; --n) row = row * y + rows[m][n];
    acc = acc * x + row;
  }
  return acc;
}

ExactPolynomial2& ExactPolynomial2::operator+=(const ExactPolynomial2& o) {
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
  return *this;
}

ExactPolynomial2& ExactPolynomial2::operator-=(const ExactPolynomial2& o) {
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, -v);
  return *this;
}

ExactPolynomial2 ExactPolynomial2::operator*(const ExactPolynomial2& o) const {
  ExactPolynomial2 r;
  for (const auto& [ka, va] : terms_)
    for (const auto& [kb, vb] : o.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

ExactPolynomial2& ExactPolynomial2::scale(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

nlohmann::ordered_json ExactPolynomial2::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [k, v] : terms_) {
    terms.push_back({{"m", k.first}, {"n", k.second}, {"c", v.str()}});
  }
  return nlohmann::ordered_json{{"terms", terms}};
}

ExactPolynomial2 ExactPolynomial2::from_json(const nlohmann::json& j) {
  ExactPolynomial2 p;
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at("m").get<int>(), t.at("n").get<int>(),
               GaussianRational::parse(t.at("c").get<std::string>()));
  }
  return p;
}

ExactPolynomial2 operator+(ExactPolynomial2 a, const ExactPolynomial2& b) { return a += b; }
ExactPolynomial2 operator-(ExactPolynomial2 a, const ExactPolynomial2& b) { return a -= b; }

}  // namespace daf
