#pragma once

namespace kinpol {

// Bessel function of the first kind, order zero, by power series.
// Accurate to machine precision for |x| <= 4, which covers the root search.
double bessel_j0(double x);

// First positive zero of J0, located by bisection on [2,3].
// Deterministic; |J0(result)| < 1e-14.
double bessel_j0_first_zero();

}  // namespace kinpol
