#pragma once

#include <vector>

namespace hardwall {

// Fritsch-Carlson monotone cubic interpolant through (x_k, y_k); never
// overshoots, so monotone data stay monotone.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double xv) const;

 private:
  std::vector<double> x_, y_, d_;
};

// Tabulated CDF on [nodes.front(), nodes.back()] with values in [0, 1],
// nondecreasing; evaluation by monotone cubic interpolation, inverse by
// bracketed bisection (robust against locally flat stretches).
struct CdfTable {
  std::vector<double> nodes;
  std::vector<double> values;
  int degree = -1;

  double value_at(double r) const;  // clamped to [0, 1] outside the range
  double inverse(double u) const;   // u in (0, 1)
  void validate() const;            // throws on non-monotone data

 private:
  mutable MonotoneCubic interp_;
  mutable bool built_ = false;
  void ensure_interp() const;
};

}  // namespace hardwall
