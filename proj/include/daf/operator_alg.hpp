#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "daf/products.hpp"
#include "daf/zeta.hpp"

namespace daf {

// Dense exact matrix of an operator truncation in the orthonormal basis
// e_n = zeta_n / n!.  Row m, column n holds the e_m component of (op)e_n.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  static OperatorMatrix identity(int n);

  int size() const { return n_; }
  GaussianRational& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const GaussianRational& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * n_ + j];
  }

  OperatorMatrix operator*(const OperatorMatrix& o) const;
  OperatorMatrix operator+(const OperatorMatrix& o) const;
  OperatorMatrix operator-(const OperatorMatrix& o) const;
  OperatorMatrix scaled(const GaussianRational& s) const;
  OperatorMatrix adjoint() const;

  // agreement of the leading keep x keep blocks
  bool equal_upto(const OperatorMatrix& o, int keep) const;
  // (lower, upper) bandwidths of the nonzero profile
  std::pair<int, int> band_profile() const;

  bool operator==(const OperatorMatrix& o) const = default;

 private:
  int n_;
  std::vector<GaussianRational> e_;
};

enum class OpTag { delta_x, delta_y, z_mult, z_adj, a_re };

std::string op_tag_name(OpTag t);
OpTag op_tag_from_name(const std::string& s);

// truncation of the chosen generator; n >= 2
OperatorMatrix matrix_of(OpTag op, int n);

// action on coefficients against the zeta basis: out(n) = (n+1) c(n+1)
CoefficientSeries deltax_zeta_coeffs(const CoefficientSeries& c);
// the convergent series i sum_k (-(1-i)/2)^k delta_x^{k+1}, finite here
// because the shift is nilpotent on polynomials
CoefficientSeries deltay_zeta_coeffs(const CoefficientSeries& c);

struct RelationReport {
  std::string name;
  bool ok = true;
  long x = 0, y = 0;  // first failing lattice point or matrix entry
};

// the six generator relations checked on an arbitrary grid function,
// compared on the common shrunken window
std::vector<RelationReport> bracket_checks_lattice(const LatticeFunction& f);

// the shift-algebra relations on n x n truncations, compared on the leading
// (n-2) x (n-2) block where truncation cannot corrupt the products
std::vector<RelationReport> bracket_checks_matrix(int n);

// [psi(S), Z] = psi'(S)(I + S) for a polynomial psi in the shift
bool shift_series_bracket(const std::vector<GaussianRational>& psi, int n);

// lattice vertical difference of each basis member against the series route
RelationReport deltay_check(const ZetaTable& zt, int max_n);

// [delta_x, A] = (I + delta_x)^2 / 2 on the leading (n-2) block
bool commutator_A_check(int n);

struct KernelEval {
  GaussianRational value;
  bool exact = false;
  double tail_bound = 0.0;
};

// K(p1,p2) = sum_n zeta_n(p1) zeta_n(p2)^* / (n!)^2, partial sum to the given
// order.  Exact whenever either point lies on the nonnegative axis within the
// order (the series terminates there).
KernelEval kernel_eval(const ZetaTable& zt, long x1, long y1, long x2, long y2,
                       int truncation);

struct KernelMatrix {
  std::vector<std::pair<long, long>> points;
  std::vector<std::vector<std::complex<double>>> gram;
  int truncation = 0;
  double min_eigenvalue = 0.0;
};

KernelMatrix kernel_gram(const ZetaTable& zt,
                         const std::vector<std::pair<long, long>>& pts, int truncation);

// minimal eigenvalue of the Gram of K_F - K_H at complex points, where
// K_F(z,w) = sum z^n conj(w)^n / n! and K_H uses 1/(n!)^2
double fock_dominance(const std::vector<std::complex<double>>& pts, int truncation);

// spectral norm of ((i-1)/2) times the shift truncation; 1/sqrt(2) for n >= 2
double scaled_shift_norm(int n);

}  // namespace daf
