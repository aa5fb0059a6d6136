// Quadrature backends: Gauss-Hermite rules on lines and tensor grids,
// uniform trapezoid rules on circles, and the half-line Gaussian moment
// kernel that powers the circle representation checks.  All grid sums use
// the deterministic blocked reduction from core.hpp.
#pragma once

#include <vector>

#include "hermite2d/core.hpp"

namespace h2d::quad {

inline constexpr int kMaxTensorDims = 6;

struct QuadratureSpec {
    enum class Kind { gauss_hermite_1d, gauss_hermite_2d_tensor, periodic_trapezoid };
    Kind kind = Kind::gauss_hermite_1d;
    int points = 32;
};

// Nodes and weights for integrals against exp(-x^2) on the real line,
// computed by Newton iteration on the orthonormal recurrence.
class GaussHermite {
public:
    explicit GaussHermite(int points);
    int size() const { return static_cast<int>(nodes_.size()); }
    double node(std::size_t i) const { return nodes_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// integral of f against exp(-|x|^2) over R^dims, tensor rule
template <typename Fn>
Complex integrate_gauss_hermite(const GaussHermite& gh, int dims, Fn&& f,
                                Exec exec = Exec::serial) {
    if (dims < 1 || dims > kMaxTensorDims)
        throw std::invalid_argument("integrate_gauss_hermite: unsupported dimension");
    const std::size_t p = static_cast<std::size_t>(gh.size());
    std::size_t total = 1;
    for (int d = 0; d < dims; ++d) total *= p;
    return blocked_sum(
        total,
        [&](std::size_t idx) {
            double coords[kMaxTensorDims];
            double wprod = 1.0;
            std::size_t rem = idx;
            for (int d = 0; d < dims; ++d) {
                const std::size_t i = rem % p;
                rem /= p;
                coords[d] = gh.node(i);
                wprod *= gh.weight(i);
            }
            return wprod * f(static_cast<const double*>(coords));
        },
        exec);
}

// uniform rule over one full period [0, 2pi); spectrally accurate for
// analytic periodic integrands
template <typename Fn>
Complex trapezoid_2pi(int points, Fn&& f, Exec exec = Exec::serial) {
    if (points < 2) throw std::invalid_argument("trapezoid_2pi: need at least 2 points");
    const double h = 2.0 * std::acos(-1.0) / points;
    return h * blocked_sum(
                   static_cast<std::size_t>(points),
                   [&](std::size_t k) { return f(h * static_cast<double>(k)); }, exec);
}

// closed trapezoid on [0, pi]; equivalent to the periodic rule on the even
// extension of the integrand
template <typename Fn>
Complex trapezoid_0pi(int points, Fn&& f, Exec exec = Exec::serial) {
    if (points < 2) throw std::invalid_argument("trapezoid_0pi: need at least 2 points");
    const double h = std::acos(-1.0) / points;
    return h * blocked_sum(
                   static_cast<std::size_t>(points) + 1,
                   [&](std::size_t k) {
                       const Complex v = f(h * static_cast<double>(k));
                       return (k == 0 || k == static_cast<std::size_t>(points)) ? 0.5 * v : v;
                   },
                   exec);
}

// i^k for integer k of either sign
Complex i_pow(int k);

// Dawson function F(z) = exp(-z^2) int_0^z exp(t^2) dt, complex argument,
// by Maclaurin series; intended for |z| up to ~5.
Complex dawson(Complex z);

// Half-line Gaussian moments G_k(c) = int_0^inf rho^k exp(-rho^2 + i c rho) drho.
// Upward recursion G_k = (k-1)/2 G_{k-2} + (i c / 2) G_{k-1} from
// G_0 = sqrt(pi)/2 exp(-c^2/4) + i F(c/2).
Complex half_line_gauss_moment(int k, Complex c);
// Same value by the direct Gamma series (independent route, used as oracle).
Complex half_line_gauss_moment_series(int k, Complex c);

}  // namespace h2d::quad
