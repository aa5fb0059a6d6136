#include "hermite2d/integral_checks.hpp"

#include <cmath>

namespace h2d::iq {

namespace {

constexpr double kRefineTol = 1e-11;

// run an evaluation at p and 2p points; complain if they disagree
template <typename Eval>
std::pair<Complex, int> refined(Eval&& eval, int points) {
    const Complex coarse = eval(points);
    const Complex fine = eval(2 * points);
    if (std::abs(coarse - fine) > kRefineTol * (1.0 + std::abs(fine)))
        throw QuadratureUnderResolved("quadrature not self-consistent under point doubling");
    return {fine, 2 * points};
}

std::vector<double> cholesky(int n, const std::vector<double>& a) {
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[static_cast<std::size_t>(i) * n + j];
            for (int k = 0; k < j; ++k)
                s -= l[static_cast<std::size_t>(i) * n + k] * l[static_cast<std::size_t>(j) * n + k];
            if (i == j) {
                if (s <= 0.0) throw NotSPD("matrix not positive definite");
                l[static_cast<std::size_t>(i) * n + j] = std::sqrt(s);
            } else {
                l[static_cast<std::size_t>(i) * n + j] = s / l[static_cast<std::size_t>(j) * n + j];
            }
        }
    }
    return l;
}

std::vector<double> forward_solve(int n, const std::vector<double>& l, std::vector<double> b) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) b[i] -= l[static_cast<std::size_t>(i) * n + j] * b[j];
        b[i] /= l[static_cast<std::size_t>(i) * n + i];
    }
    return b;
}

std::vector<double> backward_solve_t(int n, const std::vector<double>& l, std::vector<double> b) {
    // solves L^T x = b
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) b[i] -= l[static_cast<std::size_t>(j) * n + i] * b[j];
        b[i] /= l[static_cast<std::size_t>(i) * n + i];
    }
    return b;
}

Complex normal_integral_quadrature(int n, const std::vector<double>& l,
                                   const std::vector<double>& b_whitened, int points, Exec exec) {
    const quad::GaussHermite gh(points);
    double det_l = 1.0;
    for (int i = 0; i < n; ++i) det_l *= l[static_cast<std::size_t>(i) * n + i];
    const Complex raw = quad::integrate_gauss_hermite(
        gh, n,
        [&](const double* u) {
            double phase = 0.0;
            for (int d = 0; d < n; ++d) phase += b_whitened[d] * u[d];
            return std::exp(Complex(0.0, 2.0 * phase));
        },
        exec);
    return raw / det_l;
}

}  // namespace

CheckResult check_hermite_moment(int n, double x, const quad::QuadratureSpec& spec, Exec exec) {
    if (spec.kind != quad::QuadratureSpec::Kind::gauss_hermite_1d)
        throw std::invalid_argument("check_hermite_moment: wrong quadrature kind");
    if (spec.points < n / 2 + 10)
        throw std::invalid_argument("check_hermite_moment: too few points for this degree");

    const Complex scale = std::pow(Complex(0.0, -2.0), n) / std::sqrt(std::acos(-1.0));
    auto eval = [&](int points) {
        const quad::GaussHermite gh(points);
        const Complex s = quad::integrate_gauss_hermite(
            gh, 1,
            [&](const double* t) {
                return std::pow(t[0], n) * std::exp(Complex(0.0, 2.0 * x * t[0]));
            },
            exec);
        return scale * s;
    };
    CheckResult out;
    const auto [rhs, used] = refined(eval, spec.points);
    out.rhs = rhs;
    out.points_used = used;
    out.lhs = poly::hermite(n, x) * std::exp(-x * x);
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult check_h2d_moment(int m, int n, Complex z1, Complex z2, const quad::QuadratureSpec& spec,
                             H2dMomentForm form, Exec exec) {
    if (spec.kind != quad::QuadratureSpec::Kind::gauss_hermite_2d_tensor)
        throw std::invalid_argument("check_h2d_moment: wrong quadrature kind");
    if (spec.points < (m + n) / 2 + 10)
        throw std::invalid_argument("check_h2d_moment: too few points for this degree");
    if (form == H2dMomentForm::conjugate && std::abs(z2 - std::conj(z1)) > 1e-14)
        throw std::invalid_argument("check_h2d_moment: conjugate form needs z2 = conj(z1)");

    const double pi = std::acos(-1.0);
    auto eval = [&](int points) {
        const quad::GaussHermite gh(points);
        Complex s;
        if (form == H2dMomentForm::bilinear) {
            s = quad::integrate_gauss_hermite(
                gh, 2,
                [&](const double* rs) {
                    const Complex w(rs[0], rs[1]);
                    const Complex wbar = std::conj(w);
                    return std::pow(wbar, m) * std::pow(w, n) *
                           std::exp(Complex(0.0, 1.0) * (z1 * w + z2 * wbar));
                },
                exec);
            return s / (pi * quad::i_pow(m + n));
        }
        s = quad::integrate_gauss_hermite(
            gh, 2,
            [&](const double* rs) {
                const Complex w(rs[0], rs[1]);
                const double re = (w * std::conj(z1)).real();
                return std::pow(w, m) * std::pow(std::conj(w), n) *
                       std::exp(Complex(0.0, -2.0 * re));
            },
            exec);
        return s * quad::i_pow(m + n) / pi;
    };

    CheckResult out;
    const auto [rhs, used] = refined(eval, spec.points);
    out.rhs = rhs;
    out.points_used = used;
    out.lhs = std::exp(-z1 * z2) * poly::h2d_direct({m, n}, z1, z2);
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CircleCheck check_circle_rep(int m, int n, double r1, double theta1, double r2, double theta2,
                             int points, Exec exec) {
    const Complex z1 = std::polar(r1, theta1);
    const Complex z2 = std::polar(r2, theta2);
    const double pi = std::acos(-1.0);
    const Complex scale = 1.0 / (pi * quad::i_pow(m + n));

    auto eval = [&](int pts) {
        return scale * quad::trapezoid_2pi(
                           pts,
                           [&](double phi) {
                               const Complex c =
                                   z1 * std::polar(1.0, phi) + z2 * std::polar(1.0, -phi);
                               return std::polar(1.0, (n - m) * phi) *
                                      quad::half_line_gauss_moment(m + n + 1, c);
                           },
                           exec);
    };

    CircleCheck out;
    const auto [rhs, used] = refined(eval, points);
    out.rhs = rhs;
    out.points_used = used;
    out.lhs = std::exp(-z1 * z2) * poly::h2d_direct({m, n}, z1, z2);
    out.abs_err = std::abs(out.lhs - out.rhs);

    if (std::abs(r1 - r2) < 1e-15 && std::abs(theta1 + theta2) < 1e-15) {
        out.reduced_case = true;
        const double r = r1;
        // same quadrature with the shifted kernel G(2 r cos phi)
        auto eval_reduced = [&](int pts) {
            return scale * std::polar(1.0, (m - n) * theta1) *
                   quad::trapezoid_2pi(
                       pts,
                       [&](double phi) {
                           return std::polar(1.0, (n - m) * phi) *
                                  quad::half_line_gauss_moment(m + n + 1, 2.0 * r * std::cos(phi));
                       },
                       exec);
        };
        out.reduced_path = refined(eval_reduced, points).first;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        out.laguerre_closed = sign * factorial(n) * std::pow(std::polar(r, theta1), m - n) *
                              std::exp(-r * r) * poly::laguerre(n, m - n, r * r);
    }
    return out;
}

CheckResult check_normal_integral_real(int n, const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       const quad::QuadratureSpec& spec, Exec exec) {
    if (n < 1 || n > 3) throw std::invalid_argument("check_normal_integral_real: N must be 1..3");
    if (a.size() != static_cast<std::size_t>(n) * n || b.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("check_normal_integral_real: size mismatch");

    const std::vector<double> l = cholesky(n, a);
    const std::vector<double> b_whitened = forward_solve(n, l, b);  // L^{-1} B

    const double pi = std::acos(-1.0);
    double det_a = 1.0;
    for (int i = 0; i < n; ++i) {
        const double d = l[static_cast<std::size_t>(i) * n + i];
        det_a *= d * d;
    }
    const std::vector<double> ainv_b = backward_solve_t(n, l, b_whitened);  // A^{-1} B
    double quad_form = 0.0;
    for (int i = 0; i < n; ++i) quad_form += b[i] * ainv_b[i];

    CheckResult out;
    out.lhs = std::sqrt(std::pow(pi, n) / det_a) * std::exp(-quad_form);
    const auto [rhs, used] =
        refined([&](int pts) { return normal_integral_quadrature(n, l, b_whitened, pts, exec); },
                spec.points);
    out.rhs = rhs;
    out.points_used = used;
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult check_normal_integral_complex(const ks::ComplexSquareMatrix& h,
                                          const std::vector<Complex>& w,
                                          const quad::QuadratureSpec& spec, Exec exec) {
    const int n = h.dim();
    if (n < 1 || n > 2) throw std::invalid_argument("check_normal_integral_complex: N must be 1..2");
    if (w.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("check_normal_integral_complex: size mismatch");
    if (!ks::is_hermitian(h)) throw NotPD("check_normal_integral_complex: H must be Hermitian");

    const ks::ComplexSquareMatrix g = ks::ComplexSquareMatrix::identity(n) + h;
    // real quadratic form of Z* G Z in coordinates (x_1..x_n, y_1..y_n)
    const int nn = 2 * n;
    std::vector<double> m_real(static_cast<std::size_t>(nn) * nn, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = g.at(i, j).real();
            const double im = g.at(i, j).imag();
            m_real[static_cast<std::size_t>(i) * nn + j] = re;
            m_real[static_cast<std::size_t>(i + n) * nn + (j + n)] = re;
            m_real[static_cast<std::size_t>(i) * nn + (j + n)] = -im;
            m_real[static_cast<std::size_t>(i + n) * nn + j] = im;
        }
    }
    std::vector<double> b(static_cast<std::size_t>(nn));
    for (int i = 0; i < n; ++i) {
        b[i] = w[i].real();
        b[i + n] = w[i].imag();
    }

    const std::vector<double> l = cholesky(nn, m_real);  // NotSPD iff I+H not PD
    const std::vector<double> b_whitened = forward_solve(nn, l, b);

    const ks::LuDecomposition lu(g);
    const std::vector<Complex> ginv_w = lu.solve(w);
    Complex expo{};
    for (int i = 0; i < n; ++i) expo += std::conj(w[i]) * ginv_w[i];

    CheckResult out;
    const double pi = std::acos(-1.0);
    out.lhs = std::pow(pi, n) * std::exp(-expo) / lu.determinant();
    const auto [rhs, used] =
        refined([&](int pts) { return normal_integral_quadrature(nn, l, b_whitened, pts, exec); },
                spec.points);
    out.rhs = rhs;
    out.points_used = used;
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

namespace {

CheckResult mixed_hermite_split(const MixedParams& p) {
    if (p.z == Complex{}) throw ZeroParameter("hermite_split: z = 0");
    CheckResult out;
    out.lhs = poly::hermite(p.n, 0.5 * (p.w1 + p.w2));
    KahanComplex acc;
    for (int j = 0; j <= p.n; ++j)
        acc.add(binomial(p.n, j) * poly::h2d_direct({j, p.n - j}, p.z * p.w1, p.w2 / p.z) *
                std::pow(p.z, -2 * j));
    out.rhs = std::pow(p.z, p.n) * acc.value();
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

Complex laguerre_fan_sum(int n, double rho, Complex z2)  // sum_j (-rho^2 z^2)^j/j! L_{n-j}^{(2j-n)}(rho^2)
{
    KahanComplex acc;
    Complex pw{1.0, 0.0};
    for (int j = 0; j <= n; ++j) {
        acc.add(pw / factorial(j) * poly::laguerre(n - j, 2 * j - n, Complex(rho * rho, 0.0)));
        pw *= -rho * rho * z2;
    }
    return acc.value();
}

CheckResult mixed_laguerre_fan(const MixedParams& p) {
    if (p.z == Complex{}) throw ZeroParameter("laguerre_fan: z = 0");
    if (!(p.rho > 0.0)) throw ZeroParameter("laguerre_fan: rho must be positive");
    CheckResult out;
    out.lhs = poly::hermite(p.n, 0.5 * p.rho * (p.z + 1.0 / p.z));
    out.rhs = factorial(p.n) / std::pow(-p.rho * p.z, p.n) * laguerre_fan_sum(p.n, p.rho, p.z * p.z);
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult mixed_laguerre_fan_circle(const MixedParams& p) {
    MixedParams q = p;
    q.z = std::polar(1.0, p.theta);
    CheckResult out = mixed_laguerre_fan(q);
    out.lhs = poly::hermite(p.n, p.rho * std::cos(p.theta));  // same value, real route
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult mixed_circle_fourier(const MixedParams& p, int points, Exec exec) {
    if (std::abs(p.k) > p.n) throw std::invalid_argument("circle_fourier: need |k| <= n");
    CheckResult out;
    auto eval = [&](int pts) {
        return quad::trapezoid_2pi(
            pts,
            [&](double theta) {
                return poly::hermite(p.n, p.rho * std::cos(theta)) *
                       std::polar(1.0, -p.k * theta);
            },
            exec);
    };
    const auto [lhs, used] = refined(eval, points);
    out.lhs = lhs;
    out.points_used = used;
    if ((p.n + p.k) % 2 != 0) {
        out.rhs = Complex{};
    } else {
        const int half_diff = (p.n - p.k) / 2;
        const int half_sum = (p.n + p.k) / 2;
        const double sign = (half_diff % 2 == 0) ? 1.0 : -1.0;
        out.rhs = 2.0 * std::acos(-1.0) * factorial(p.n) * sign * std::pow(p.rho, p.k) *
                  poly::laguerre(half_diff, p.k, p.rho * p.rho) / factorial(half_sum);
    }
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult mixed_circle_mean_square(const MixedParams& p, int points, Exec exec) {
    CheckResult out;
    auto eval = [&](int pts) {
        const Complex raw = quad::trapezoid_2pi(
            pts,
            [&](double theta) {
                const double h = poly::hermite(p.n, p.rho * std::cos(theta));
                return Complex(h * h, 0.0);
            },
            exec);
        return raw / (2.0 * std::acos(-1.0));
    };
    const auto [lhs, used] = refined(eval, points);
    out.lhs = lhs;
    out.points_used = used;
    // circle average of H_n^2: (n!)^2 rho^{-2n} sum_j rho^{4j} (L_{n-j}^{(2j-n)}(rho^2))^2 / (j!)^2
    KahanReal acc;
    for (int j = 0; j <= p.n; ++j) {
        const double lag = poly::laguerre(p.n - j, 2 * j - p.n, p.rho * p.rho);
        acc.add(std::pow(p.rho, 4 * j) * lag * lag / (factorial(j) * factorial(j)));
    }
    const double nf = factorial(p.n);
    out.rhs = nf * nf * std::pow(p.rho, -2 * p.n) * acc.value();
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult mixed_rotation_expansion(const MixedParams& p) {
    CheckResult out;
    const Complex i{0.0, 1.0};
    out.lhs = poly::h2d_direct({p.m, p.n}, p.w1 + i * p.w2, p.w1 - i * p.w2);
    KahanComplex acc;
    for (int j = 0; j <= p.m; ++j) {
        for (int k = 0; k <= p.n; ++k) {
            acc.add(binomial(p.m, j) * binomial(p.n, k) * quad::i_pow(k - j) *
                    poly::hermite(j + k, p.w1) * poly::hermite(p.m + p.n - j - k, p.w2));
        }
    }
    out.rhs = quad::i_pow(p.m - p.n) / std::pow(2.0, p.m + p.n) * acc.value();
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult mixed_shift_formula(const MixedParams& p) {
    CheckResult out;
    out.lhs = poly::h2d_direct({p.m, p.n}, p.z1 + p.w1, p.z2 + p.w2) /
              std::exp(p.w1 * p.w2 + p.z1 * p.w2 + p.z2 * p.w1);
    KahanComplex acc;
    for (int j = 0; j <= p.series_cap; ++j) {
        for (int k = 0; j + k <= p.series_cap; ++k) {
            acc.add(std::pow(-p.w1, j) * std::pow(-p.w2, k) / (factorial(j) * factorial(k)) *
                    poly::h2d_direct({p.m + k, p.n + j}, p.z1, p.z2));
        }
    }
    out.rhs = acc.value();
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

CheckResult mixed_origin_values(const MixedParams& p) {
    CheckResult out;
    out.lhs = poly::h2d_direct({p.m, p.n}, Complex{}, Complex{});
    const double sign = (p.n % 2 == 0) ? 1.0 : -1.0;
    out.rhs = (p.m == p.n) ? Complex(sign * factorial(p.n), 0.0) : Complex{};
    out.abs_err = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace

CheckResult check_mixed(MixedCase which, const MixedParams& p, int points, Exec exec) {
    switch (which) {
        case MixedCase::hermite_split: return mixed_hermite_split(p);
        case MixedCase::laguerre_fan: return mixed_laguerre_fan(p);
        case MixedCase::laguerre_fan_circle: return mixed_laguerre_fan_circle(p);
        case MixedCase::circle_fourier: return mixed_circle_fourier(p, points, exec);
        case MixedCase::circle_mean_square: return mixed_circle_mean_square(p, points, exec);
        case MixedCase::rotation_expansion: return mixed_rotation_expansion(p);
        case MixedCase::shift_formula: return mixed_shift_formula(p);
        case MixedCase::origin_values: return mixed_origin_values(p);
    }
    throw std::invalid_argument("check_mixed: unknown case");
}

const char* mixed_case_name(MixedCase which) {
    switch (which) {
        case MixedCase::hermite_split: return "hermite_split";
        case MixedCase::laguerre_fan: return "laguerre_fan";
        case MixedCase::laguerre_fan_circle: return "laguerre_fan_circle";
        case MixedCase::circle_fourier: return "circle_fourier";
        case MixedCase::circle_mean_square: return "circle_mean_square";
        case MixedCase::rotation_expansion: return "rotation_expansion";
        case MixedCase::shift_formula: return "shift_formula";
        case MixedCase::origin_values: return "origin_values";
    }
    return "unknown";
}

}  // namespace h2d::iq
