#pragma once

namespace hardwall {

// Lower incomplete gamma gamma(a, x) = int_0^x t^(a-1) e^(-t) dt, a > 0.
// Series for x < a+1, Lentz continued fraction otherwise.
double lower_inc_gamma(double a, double x);

// Upper incomplete gamma Gamma(a, x) = Gamma(a) - gamma(a, x).
double upper_inc_gamma(double a, double x);

// log gamma(a, x), stable for large a where gamma(a, x) itself overflows.
double log_lower_inc_gamma(double a, double x);

// Regularized P(a, x) = gamma(a, x) / Gamma(a) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Complementary error function.
double erfc_eval(double x);

// phi_alpha(xi) = int_0^inf s^alpha e^(-(s - xi)^2 / 2) ds, alpha > -1.
double phi_alpha(double alpha, double xi);

}  // namespace hardwall
