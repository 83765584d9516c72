#pragma once

namespace tickvar {

// Standard normal density, distribution function and quantile.

double normal_pdf(double x);

// Phi(x) = erfc(-x / sqrt(2)) / 2. Absolute error well below 1e-12 on
// [-8, 8]; saturates to 0/1 beyond the range where erfc under/overflows.
double normal_cdf(double x);

// Inverse of Phi on (0, 1). Algorithm AS241 (Wichura, Applied Statistics
// 37, 1988), accurate to about 1e-16.
double normal_quantile(double p);

} // namespace tickvar
