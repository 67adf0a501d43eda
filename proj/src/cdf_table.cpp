#include "hardwall/cdf_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardwall {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n)
    throw std::domain_error("MonotoneCubic: need >= 2 matching samples");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i]))
      throw std::domain_error("MonotoneCubic: abscissae must be increasing");
  std::vector<double> h(n - 1), s(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    s[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  d_.assign(n, 0.0);
  d_[0] = s[0];
  d_[n - 1] = s[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (s[i - 1] * s[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      double w1 = 2.0 * h[i] + h[i - 1];
      double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
    }
  }
}

double MonotoneCubic::operator()(double xv) const {
  const std::size_t n = x_.size();
  std::size_t i = std::upper_bound(x_.begin(), x_.end(), xv) - x_.begin();
  if (i == 0) i = 1;
  if (i >= n) i = n - 1;
  --i;
  double h = x_[i + 1] - x_[i];
  double t = (xv - x_[i]) / h;
  double t2 = t * t, t3 = t2 * t;
  return y_[i] * (2 * t3 - 3 * t2 + 1) + h * d_[i] * (t3 - 2 * t2 + t) +
         y_[i + 1] * (-2 * t3 + 3 * t2) + h * d_[i + 1] * (t3 - t2);
}

void CdfTable::validate() const {
  if (nodes.size() < 2 || nodes.size() != values.size())
    throw std::domain_error("CdfTable: inconsistent table sizes");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i + 1] > nodes[i]))
      throw std::domain_error("CdfTable: nodes must be strictly increasing");
    if (values[i + 1] < values[i])
      throw std::domain_error("CdfTable: values must be nondecreasing");
  }
}

void CdfTable::ensure_interp() const {
  if (!built_) {
    interp_ = MonotoneCubic(nodes, values);
    built_ = true;
  }
}

double CdfTable::value_at(double r) const {
  ensure_interp();
  if (r <= nodes.front()) return values.front();
  if (r >= nodes.back()) return values.back();
  return std::clamp(interp_(r), 0.0, 1.0);
}

double CdfTable::inverse(double u) const {
  ensure_interp();
  if (u <= values.front()) return nodes.front();
  if (u >= values.back()) return nodes.back();
  std::size_t hi =
      std::lower_bound(values.begin(), values.end(), u) - values.begin();
  std::size_t lo = hi - 1;
  double a = nodes[lo], b = nodes[hi];
  for (int it = 0; it < 60 && b - a > 1e-15 * nodes.back(); ++it) {
    double mid = 0.5 * (a + b);
    (value_at(mid) >= u ? b : a) = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace hardwall
