// q-shifted factorials, 2D q-Hermite polynomials, their generating function,
// the Askey-Wilson integral, the trigonometric moments of the q-Hermite
// weight, and the bilinear/multilinear generating-function identities built
// from them.
#pragma once

#include <array>
#include <vector>

#include "hermite2d/core.hpp"

namespace h2d::qs {

struct QParameter {
    double q = 0.5;
    double product_tol = 1e-18;  // infinite products truncated once |a| q^K < this
};

// finite q-shifted factorial (a;q)_n
Complex qpoch(Complex a, const QParameter& q, int n);
double qpoch(double a, const QParameter& q, int n);
// infinite product (a;q)_inf; DivergentProduct unless 0 < q < 1
Complex qpoch_inf(Complex a, const QParameter& q);
double qpoch_inf(double a, const QParameter& q);

// (q;q)_k for k = 0..nmax
std::vector<double> qpoch_q_table(const QParameter& q, int nmax);

// bivariate q-Hermite H_{m,n}(z1, z2 | q)
Complex h2d_q(int m, int n, Complex z1, Complex z2, const QParameter& q);

// the q-Hermite weight (e^{2i theta}, e^{-2i theta}; q)_inf, evaluated through
// the real product prod_k (1 - 2 q^k cos 2theta + q^{2k}) to avoid cancellation
// near theta = 0, pi
double qhermite_weight(double theta, const QParameter& q);

// (t e^{i theta}, t e^{-i theta}; q)_inf = prod_k (1 - 2 t q^k cos theta + t^2 q^{2k})
Complex qpoch_symmetric_pair(Complex t, double theta, const QParameter& q);

struct GfCheck {
    Complex lhs{};
    Complex rhs{};
    double abs_err = 0.0;
};

// generating function sum H_{m,n}(z1,z2|q) u^m v^n / ((q;q)_m (q;q)_n)
// against (uv;q)_inf / ((u z1; q)_inf (v z2; q)_inf); needs |u z1|, |v z2| < 1
GfCheck gf_h2d_q_check(Complex z1, Complex z2, Complex u, Complex v, const QParameter& q,
                       int degree_cap);

struct QuadratureVsClosed {
    Complex quadrature{};
    Complex closed_form{};
    double abs_err = 0.0;
    int points_used = 0;
};

// int_0^pi weight(theta) / prod_j (t_j e^{i theta}, t_j e^{-i theta}; q)_inf dtheta
// against 2 pi (t1 t2 t3 t4; q)_inf / ((q;q)_inf prod_{j<k} (t_j t_k; q)_inf);
// needs max |t_j| < 1
QuadratureVsClosed askey_wilson_integral(const std::array<Complex, 4>& t, const QParameter& q,
                                         int points, Exec exec = Exec::serial);

// Trigonometric moments of the q-Hermite weight.  The resolved convention is
// the full-period average: (1/2pi) int_{-pi}^{pi} e^{2ij theta} w(theta) dtheta,
// evaluated here as (1/pi) int_0^pi, equals
// (-1)^j (q^C(j,2) + q^C(-j,2)) / (q;q)_inf.  A [0,pi] integral with a 1/(2pi)
// normalization gives half of this; the j = 0 moment pinned against the
// Askey-Wilson value is what arbitrates.
QuadratureVsClosed q_weight_moment(int j, const QParameter& q, int points, Exec exec = Exec::serial);

struct MultilinearCheck {
    Complex closed_form{};   // Askey-Wilson evaluation of the weighted product
    Complex series{};        // truncated multi-fold sum
    Complex quadrature{};    // direct quadrature of the weighted product
    double series_vs_quadrature = 0.0;
    double closed_vs_quadrature = 0.0;
    int points_used = 0;
    std::uint64_t term_count = 0;
};

// Bilinear identity: two generating functions with parameters (r e^{+-i theta},
// s e^{-+i theta}) integrated against the weight.  Resolved closed form:
//   2 (rs; q)_inf^2 / (z1 z2 r s; q)_inf
// equals the parity-constrained four-fold sum with weight
//   (-1)^j (q^C(j,2) + q^C(-j,2)),  j = (m1 + n2 - n1 - m2)/2.
MultilinearCheck q_bilinear_generating_check(Complex z1, Complex z2, double r, double s,
                                             const QParameter& q, int degree_cap, int points,
                                             Exec exec = Exec::serial);

// Four-factor identity in variables (z1, z2) and (z3, z4) with parameter
// pairs (r1, s1), (r2, s2).  Resolved closed form:
//   2 (r1 s1; q)_inf^2 (r2 s2; q)_inf^2 (r1 s1 r2 s2 z1 z2 z3 z4; q)_inf
//     / prod of the six pair products (r1 s1 z1 z2), (r1 r2 z1 z3), (r1 s2 z1 z4),
//       (s1 r2 z2 z3), (s1 s2 z2 z4), (r2 s2 z3 z4)
// against the parity-constrained eight-fold sum with weight
//   (-1)^M (q^C(M,2) + q^C(-M,2)).
MultilinearCheck q_multilinear_generating_check(const std::array<Complex, 4>& z, double r1,
                                                double s1, double r2, double s2,
                                                const QParameter& q, int degree_cap, int points,
                                                Exec exec = Exec::serial);

}  // namespace h2d::qs
