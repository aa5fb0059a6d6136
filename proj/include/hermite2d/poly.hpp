// Scalar special functions consumed by the identities: Hermite, Laguerre
// (integer superscript of either sign), Charlier, modified Bessel I0, and the
// bivariate Hermite polynomials H_{m,n} by independent routes.
#pragma once

#include <vector>

#include "hermite2d/core.hpp"

namespace h2d::poly {

struct PolyIndex {
    int m = 0;
    int n = 0;
};

// H_n(x) via the three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
// Valid for complex arguments; overflow to infinity is permitted and shows up
// as a non-finite result.
Complex hermite(int n, Complex x);
double hermite(int n, double x);

// H_0..H_nmax at a fixed point.
std::vector<Complex> hermite_table(int nmax, Complex x);
std::vector<double> hermite_table(int nmax, double x);

// Generalized Laguerre L_n^{(alpha)}(x) by its finite series with
// product-form binomials, so negative integer alpha is legal.
Complex laguerre(int n, int alpha, Complex x);
double laguerre(int n, int alpha, double x);

// Charlier C_n(x; a) through the Laguerre connection
// C_n(x; a) = n! (-a)^{-n} L_n^{(x-n)}(a).  Throws ZeroParameter for a = 0.
double charlier(int n, int x, double a);

// Modified Bessel I_0 by its power series.
double bessel_i0(double x);
// I_0(z) given z^2; stays real for imaginary z, where I_0(iy) = J_0(y).
double bessel_i0_from_square(double z_squared);

// Bivariate Hermite H_{m,n}(z1, z2): the exact finite sum
// sum_k (-1)^k k! C(m,k) C(n,k) z1^{m-k} z2^{n-k}.
Complex h2d_direct(PolyIndex idx, Complex z1, Complex z2);

// Same value through the single-Laguerre closed form; the two branches
// (m >= n and n >= m) coincide at m = n.
Complex h2d_laguerre(PolyIndex idx, Complex w1, Complex w2);

// Table of H_{r,c}(z1, z2) for r, c = 0..nmax, row-major (nmax+1)^2.
std::vector<Complex> h2d_table(int nmax, Complex z1, Complex z2);

// Partial sum of the generating function
// sum_{m+n <= degree_cap} H_{m,n}(z1,z2) u^m v^n / (m! n!),
// which converges to exp(u z1 + v z2 - u v).
Complex gf_h2d_partial(Complex z1, Complex z2, Complex u, Complex v, int degree_cap);

}  // namespace h2d::poly
