#include "daf/lattice.hpp"

#include <cstdio>
#include <sstream>

namespace daf {

Window::Window(long x0, long x1, long y0, long y1)
    : x_min(x0), x_max(x1), y_min(y0), y_max(y1) {
  if (x_min > x_max || y_min > y_max) {
    throw PreconditionError("degenerate window");
  }
}

Window Window::intersect(const Window& o) const {
  long x0 = std::max(x_min, o.x_min), x1 = std::min(x_max, o.x_max);
  long y0 = std::max(y_min, o.y_min), y1 = std::min(y_max, o.y_max);
  if (x0 > x1 || y0 > y1) throw PreconditionError("windows do not overlap");
  return Window(x0, x1, y0, y1);
}

LatticeFunction::LatticeFunction(const Window& w)
    : w_(w), v_(static_cast<size_t>(w.width() * w.height())) {}

LatticeFunction LatticeFunction::sample(
    const Window& w, const std::function<GaussianRational(long, long)>& fn) {
  LatticeFunction f(w);
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x) f.set(x, y, fn(x, y));
  return f;
}

LatticeFunction LatticeFunction::sample_poly(const ExactPolynomial2& p, const Window& w) {
  return sample(w, [&p](long x, long y) { return p.eval(x, y); });
}

size_t LatticeFunction::index(long x, long y) const {
  if (!w_.contains(x, y)) throw PreconditionError("lattice point outside window");
  return static_cast<size_t>((y - w_.y_min) * w_.width() + (x - w_.x_min));
}

const GaussianRational& LatticeFunction::at(long x, long y) const { return v_[index(x, y)]; }

void LatticeFunction::set(long x, long y, GaussianRational v) {
  v_[index(x, y)] = std::move(v);
}

LatticeFunction LatticeFunction::restrict_to(const Window& sub) const {
  Window w = w_.intersect(sub);
  if (!(w == sub)) throw PreconditionError("restriction window exceeds domain");
  LatticeFunction g(sub);
  for (long y = sub.y_min; y <= sub.y_max; ++y)
    for (long x = sub.x_min; x <= sub.x_max; ++x) g.set(x, y, at(x, y));
  return g;
}

LatticeFunction delta_x(const LatticeFunction& f) {
  const Window& w = f.window();
  if (w.width() < 2) throw PreconditionError("window too narrow for delta_x");
  Window r(w.x_min, w.x_max - 1, w.y_min, w.y_max);
  LatticeFunction g(r);
  for (long y = r.y_min; y <= r.y_max; ++y)
    for (long x = r.x_min; x <= r.x_max; ++x) g.set(x, y, f.at(x + 1, y) - f.at(x, y));
  return g;
}

LatticeFunction delta_y(const LatticeFunction& f) {
  const Window& w = f.window();
  if (w.height() < 2) throw PreconditionError("window too short for delta_y");
  Window r(w.x_min, w.x_max, w.y_min, w.y_max - 1);
  LatticeFunction g(r);
  for (long y = r.y_min; y <= r.y_max; ++y)
    for (long x = r.x_min; x <= r.x_max; ++x) g.set(x, y, f.at(x, y + 1) - f.at(x, y));
  return g;
}

LatticeFunction dbar(const LatticeFunction& f) {
  const Window& w = f.window();
  if (w.width() < 2 || w.height() < 2) {
    throw PreconditionError("window too small for dbar");
  }
  // expanded form: f(x+1,y+1) - i f(x+1,y) + i f(x,y+1) - f(x,y)
  static const GaussianRational I(0, 1);
  Window r(w.x_min, w.x_max - 1, w.y_min, w.y_max - 1);
  LatticeFunction g(r);
  for (long y = r.y_min; y <= r.y_max; ++y)
    for (long x = r.x_min; x <= r.x_max; ++x) {
      g.set(x, y, f.at(x + 1, y + 1) - I * f.at(x + 1, y) + I * f.at(x, y + 1) - f.at(x, y));
    }
  return g;
}

LatticeFunction lat_add(const LatticeFunction& f, const LatticeFunction& g) {
  Window w = f.window().intersect(g.window());
  LatticeFunction r(w);
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x) r.set(x, y, f.at(x, y) + g.at(x, y));
  return r;
}

LatticeFunction lat_sub(const LatticeFunction& f, const LatticeFunction& g) {
  Window w = f.window().intersect(g.window());
  LatticeFunction r(w);
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x) r.set(x, y, f.at(x, y) - g.at(x, y));
  return r;
}

LatticeFunction lat_scale(const LatticeFunction& f, const GaussianRational& c) {
  const Window& w = f.window();
  LatticeFunction r(w);
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x) r.set(x, y, c * f.at(x, y));
  return r;
}

DaCheck is_discrete_analytic(const LatticeFunction& f) {
  LatticeFunction r = dbar(f);
  const Window& w = r.window();
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x) {
      if (!r.at(x, y).is_zero()) {
        return DaCheck{false, x, y, r.at(x, y)};
      }
    }
  return DaCheck{};
}

nlohmann::ordered_json lattice_to_json(const LatticeFunction& f) {
  const Window& w = f.window();
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x) vals.push_back(f.at(x, y).str());
  return nlohmann::ordered_json{
      {"window",
       {{"x_min", w.x_min}, {"x_max", w.x_max}, {"y_min", w.y_min}, {"y_max", w.y_max}}},
      {"values", vals}};
}

LatticeFunction lattice_from_json(const nlohmann::json& j) {
  const auto& jw = j.at("window");
  Window w(jw.at("x_min").get<long>(), jw.at("x_max").get<long>(),
           jw.at("y_min").get<long>(), jw.at("y_max").get<long>());
  const auto& vals = j.at("values");
  if (static_cast<long>(vals.size()) != w.width() * w.height()) {
    throw PreconditionError("value count does not match window");
  }
  LatticeFunction f(w);
  size_t k = 0;
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x)
      f.set(x, y, GaussianRational::parse(vals[k++].get<std::string>()));
  return f;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string lattice_to_csv(const LatticeFunction& f, bool float_mode) {
  const Window& w = f.window();
  std::ostringstream out;
  out << "x,y,re,im\n";
  auto frac = [](const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  };
  for (long y = w.y_min; y <= w.y_max; ++y)
    for (long x = w.x_min; x <= w.x_max; ++x) {
      const GaussianRational& v = f.at(x, y);
      if (float_mode) {
        out << x << "," << y << "," << format_double(v.re.get_d()) << ","
            << format_double(v.im.get_d()) << "\n";
      } else {
        out << x << "," << y << "," << frac(v.re) << "," << frac(v.im) << "\n";
      }
    }
  return out.str();
}

}  // namespace daf
