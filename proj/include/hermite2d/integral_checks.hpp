// Numerical verification of the integral representations and mixed
// finite-sum relations: Hermite and bivariate-Hermite moment integrals,
// circle representations, multivariate normal integrals, and the
// Hermite/Laguerre mixed identities.
#pragma once

#include <optional>
#include <vector>

#include "hermite2d/ks_series.hpp"
#include "hermite2d/poly.hpp"
#include "hermite2d/quadrature.hpp"

namespace h2d::iq {

struct CheckResult {
    Complex lhs{};
    Complex rhs{};
    double abs_err = 0.0;
    int points_used = 0;
};

// H_n(x) e^{-x^2} against its Fourier-type Gaussian moment integral
// ((-2i)^n / sqrt(pi)) int t^n exp(-t^2 + 2ixt) dt.
CheckResult check_hermite_moment(int n, double x, const quad::QuadratureSpec& spec,
                                 Exec exec = Exec::serial);

// e^{-z1 z2} H_{m,n}(z1, z2) against the plane moment integral.  The
// bilinear form uses (1/(pi i^{m+n})) int wbar^m w^n exp(-w wbar + i z1 w + i z2 wbar);
// the conjugate form (z2 = conj(z1)) uses
// (i^{m+n}/pi) int w^m wbar^n exp(-|w|^2 - 2i Re(w conj(z1))).
enum class H2dMomentForm { bilinear, conjugate };
CheckResult check_h2d_moment(int m, int n, Complex z1, Complex z2, const quad::QuadratureSpec& spec,
                             H2dMomentForm form = H2dMomentForm::bilinear, Exec exec = Exec::serial);

// Circle representation of e^{-z1 z2} H_{m,n}: with c(phi) = z1 e^{i phi} + z2 e^{-i phi}
// and G_k the half-line Gaussian moment,
//   e^{-z1 z2} H_{m,n}(z1, z2) = (1/(pi i^{m+n})) int_0^{2pi} e^{i(n-m)phi} G_{m+n+1}(c(phi)) dphi.
// For r1 = r2, theta2 = -theta1 the kernel reduces to G_{m+n+1}(2 r cos phi)
// (evaluated as a second code path) and the left side has the Laguerre closed
// form (-1)^n n! (r e^{i theta})^{m-n} e^{-r^2} L_n^{(m-n)}(r^2).
struct CircleCheck : CheckResult {
    bool reduced_case = false;
    Complex reduced_path{};
    Complex laguerre_closed{};
};
CircleCheck check_circle_rep(int m, int n, double r1, double theta1, double r2, double theta2,
                             int points, Exec exec = Exec::serial);

// int_{R^N} exp(-X^T A X + 2i B^T X) dX = sqrt(pi^N / det A) exp(-B^T A^{-1} B),
// A real symmetric positive definite, N <= 3; quadrature after a Cholesky
// whitening change of variables.
CheckResult check_normal_integral_real(int n, const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       const quad::QuadratureSpec& spec, Exec exec = Exec::serial);

// int_{R^{2N}} exp(-Z^*(I+H)Z + 2i Re(W^* Z)) = pi^N exp(-W^*(I+H)^{-1}W)/det(I+H),
// I+H Hermitian positive definite, N <= 2.
CheckResult check_normal_integral_complex(const ks::ComplexSquareMatrix& h,
                                          const std::vector<Complex>& w,
                                          const quad::QuadratureSpec& spec, Exec exec = Exec::serial);

// Mixed relations between H_n, H_{m,n} and Laguerre polynomials:
//   hermite_split      H_n((w1+w2)/2) as a binomial sum of H_{j,n-j}
//   laguerre_fan       H_n(rho(z+1/z)/2) as a Laguerre fan in z^2
//   laguerre_fan_circle  the z = e^{i theta} case of laguerre_fan
//   circle_fourier     Fourier coefficients of H_n(rho cos theta)
//   circle_mean_square circle average of H_n(rho cos theta)^2
//   rotation_expansion H_{m,n}(w1 + i w2, w1 - i w2) via products H_a(w1) H_b(w2)
//   shift_formula      Taylor shift of H_{m,n} in both arguments
//   origin_values      H_{m,n}(0,0) = delta_{m,n} (-1)^n n!
enum class MixedCase {
    hermite_split,
    laguerre_fan,
    laguerre_fan_circle,
    circle_fourier,
    circle_mean_square,
    rotation_expansion,
    shift_formula,
    origin_values
};

struct MixedParams {
    int n = 0;
    int m = 0;
    int k = 0;          // Fourier index of the circle-average relation
    Complex z{1.0, 0.0};
    Complex w1{};
    Complex w2{};
    Complex z1{};
    Complex z2{};
    double rho = 1.0;
    double theta = 0.0;
    int series_cap = 25;  // truncation of the shift-formula double series
};

CheckResult check_mixed(MixedCase which, const MixedParams& p, int points, Exec exec = Exec::serial);

const char* mixed_case_name(MixedCase which);

}  // namespace h2d::iq
