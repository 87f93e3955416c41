#pragma once

namespace denominal::special {

/// Regularized incomplete beta I_x(a, b), continued fraction (modified Lentz).
double incomplete_beta(double a, double b, double x);

/// P(F > f) for an F(d1, d2) variable.
double f_upper_tail(double f, double d1, double d2);

/// P(Z > z) for a standard normal Z.
double normal_upper_tail(double z);

}  // namespace denominal::special
