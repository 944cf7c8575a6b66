#pragma once

#include <functional>
#include <vector>

#include "daf/polynomial.hpp"

namespace daf {

/// Closed rectangle [x_min,x_max] x [y_min,y_max] in Z^2, bounds inclusive.
struct Window {
  long x_min, x_max, y_min, y_max;

  Window(long x0, long x1, long y0, long y1);

  long width() const { return x_max - x_min + 1; }
  long height() const { return y_max - y_min + 1; }
  bool contains(long x, long y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
  /// Throws if the rectangles do not overlap.
  Window intersect(const Window& o) const;
  bool operator==(const Window& o) const = default;
};

/// Function Z^2 -> Q(i) tabulated on a window. Values stored row by row,
/// y ascending, x ascending within a row.
class LatticeFunction {
 public:
  explicit LatticeFunction(const Window& w);
  static LatticeFunction sample(const Window& w,
                                const std::function<GaussianRational(long, long)>& fn);
  static LatticeFunction sample_poly(const ExactPolynomial2& p, const Window& w);

  const Window& window() const { return w_; }
  const GaussianRational& at(long x, long y) const;
  void set(long x, long y, GaussianRational v);
  LatticeFunction restrict_to(const Window& sub) const;

  bool operator==(const LatticeFunction& o) const = default;

 private:
  size_t index(long x, long y) const;
  Window w_;
  std::vector<GaussianRational> v_;
};

/// Forward difference in x; the result loses the rightmost column.
LatticeFunction delta_x(const LatticeFunction& f);
/// Forward difference in y; the result loses the topmost row.
LatticeFunction delta_y(const LatticeFunction& f);
/// (1-i) delta_x + (1+i) delta_y + delta_x delta_y; loses one column and one row.
LatticeFunction dbar(const LatticeFunction& f);

/// Pointwise combination on the window intersection.
LatticeFunction lat_add(const LatticeFunction& f, const LatticeFunction& g);
LatticeFunction lat_sub(const LatticeFunction& f, const LatticeFunction& g);
LatticeFunction lat_scale(const LatticeFunction& f, const GaussianRational& c);

struct DaCheck {
  bool ok = true;
  long x = 0, y = 0;          // first violating point in scan order, if any
  GaussianRational residual;  // dbar value there
};

/// Evaluates dbar on the shrunken window and reports the first nonzero value
/// (scan order: y ascending, then x ascending).
DaCheck is_discrete_analytic(const LatticeFunction& f);

nlohmann::ordered_json lattice_to_json(const LatticeFunction& f);
LatticeFunction lattice_from_json(const nlohmann::json& j);
/// Header "x,y,re,im"; exact fraction strings, or shortest-round-trip floats.
std::string lattice_to_csv(const LatticeFunction& f, bool float_mode);

/// printf %.17g, enough digits to round-trip a double.
std::string format_double(double v);

}  // namespace daf
