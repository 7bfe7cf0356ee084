#ifndef ORDSTAT_SPECIAL_FUNCTIONS_HPP
#define ORDSTAT_SPECIAL_FUNCTIONS_HPP

// Scalar special functions used by the distribution and order-statistic code.
// Everything here is a pure function of its arguments.

namespace ordstat::sf {

// log of the binomial coefficient C(n, k), valid for real n >= k >= 0.
double log_binomial(double n, double k);

// Standard normal CDF and its complement, accurate in both tails.
double normal_cdf(double z);
double normal_sf(double z);

// Standard normal density.
double normal_pdf(double z);

// Inverse standard normal CDF (rational approximation polished by one
// Newton step).  `u` and `w` must satisfy u + w = 1; supplying both keeps
// full relative accuracy in either tail.  Valid for u, w in (0, 1).
double normal_quantile(double u, double w);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x),
// for a > 0, x >= 0.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Inverse of P(a, .): returns t with P(a, t) = u.  As with normal_quantile,
// u + w = 1 and the smaller of the two drives the solve.
double gamma_quantile(double a, double u, double w);

// P(the second largest of n i.i.d. uniforms exceeds u), i.e.
//   1 - n u^(n-1) + (n-1) u^n,
// evaluated without cancellation for u near 1 (w = 1 - u must be exact).
double top_two_survival(double u, double w, int n);

}  // namespace ordstat::sf

#endif
