#pragma once

// Special functions used by the Gaussian integral formulas.

namespace starkvqe {

double erf(double x);

// F0(x) = sqrt(pi/4x) erf(sqrt x), with a Maclaurin branch below 1e-4.
double boys_f0(double x);

// Fn(x) = int_0^1 t^{2n} exp(-x t^2) dt.
double boys(int n, double x);

// Fills out[0..n_max] with F0..F_nmax; shares one evaluation of exp(-x).
void boys_array(int n_max, double x, double* out);

// F_D(x) = exp(-x^2) int_0^x exp(t^2) dt.
double dawson(double x);

}  // namespace starkvqe
