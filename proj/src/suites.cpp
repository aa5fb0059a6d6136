// Suite registry: every verification campaign the harness can run, with its
// seeded corpus generation.  Suite ids are stable; tags name the identity
// under test.
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "hermite2d/harness.hpp"
#include "hermite2d/integral_checks.hpp"
#include "hermite2d/ks_series.hpp"
#include "hermite2d/multi_index.hpp"
#include "hermite2d/poly.hpp"
#include "hermite2d/q_series.hpp"
#include "hermite2d/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace h2d::harness {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

// ---------------------------------------------------------------------------
// Seeded corpora

ks::ComplexSquareMatrix random_real_symmetric(SplitMix64& rng, int n, double target_frobenius) {
    ks::ComplexSquareMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = rng.uniform(-1.0, 1.0);
            s.at(i, j) = v;
            s.at(j, i) = v;
        }
    const double norm = ks::frobenius_norm(s);
    if (norm > 0.0) {
        const double scale = target_frobenius / norm;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s.at(i, j) *= scale;
    }
    return s;
}

ks::ComplexSquareMatrix random_general_complex(SplitMix64& rng, int n, double target_max_norm) {
    ks::ComplexSquareMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = rng.unit_disk();
    const double norm = ks::max_norm(h);
    if (norm > 0.0) {
        const double scale = target_max_norm / norm;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h.at(i, j) *= scale;
    }
    return h;
}

ks::ComplexSquareMatrix random_hermitian(SplitMix64& rng, int n, double target_frobenius) {
    ks::ComplexSquareMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h.at(i, i) = rng.uniform(-1.0, 1.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex v = rng.unit_disk();
            h.at(i, j) = v;
            h.at(j, i) = std::conj(v);
        }
    }
    const double norm = ks::frobenius_norm(h);
    if (norm > 0.0) {
        const double scale = target_frobenius / norm;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h.at(i, j) *= scale;
    }
    return h;
}

struct ComplexDraw {
    ks::ComplexSquareMatrix h;
    std::vector<Complex> w;
    int dim = 0;
    int index = 0;
};

// general complex corpus with ||H||_inf <= norm_scale / N; shared between the
// identity suite and the Laguerre-route suite so both see the same draws
std::vector<ComplexDraw> complex_corpus(std::uint64_t seed, const std::vector<int>& dims,
                                        int draws, double norm_scale, double w_radius) {
    SplitMix64 rng(seed);
    std::vector<ComplexDraw> out;
    for (int n : dims) {
        for (int d = 0; d < draws; ++d) {
            ComplexDraw draw;
            draw.dim = n;
            draw.index = d;
            const double target = (norm_scale / n) * rng.uniform(0.2, 1.0);
            draw.h = random_general_complex(rng, n, target);
            draw.w.resize(static_cast<std::size_t>(n));
            for (Complex& w : draw.w) {
                do {
                    w = w_radius * rng.unit_disk();
                } while (std::abs(w) < 1e-3);  // the polar route needs rho > 0
            }
            out.push_back(std::move(draw));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Record plumbing

struct SuiteContext {
    const SuiteConfig& config;
    std::uint64_t seed;
    SuiteResult& result;

    double tol;
    bool abs_mode;

    SuiteContext(const SuiteConfig& c, std::uint64_t s, SuiteResult& r)
        : config(c), seed(s), result(r), tol(c.tolerance()), abs_mode(c.absolute_mode()) {}

    CheckRecord& add(std::string params, Complex lhs, Complex rhs, double wall,
                     int degree_or_points = 0) {
        CheckRecord rec;
        rec.params = std::move(params);
        rec.lhs = lhs;
        rec.rhs = rhs;
        rec.abs_err = std::abs(lhs - rhs);
        rec.rel_err = rec.abs_err / (1.0 + std::abs(lhs));
        rec.degree_or_points = degree_or_points;
        rec.wall_ms = wall;
        rec.status = ((abs_mode ? rec.abs_err : rec.rel_err) <= tol) ? CheckStatus::pass
                                                                     : CheckStatus::fail;
        result.records.push_back(std::move(rec));
        return result.records.back();
    }

    void add_status(std::string params, CheckStatus status, Complex lhs, Complex rhs, double wall,
                    int degree_or_points = 0) {
        CheckRecord rec;
        rec.params = std::move(params);
        rec.lhs = lhs;
        rec.rhs = rhs;
        rec.abs_err = std::abs(lhs - rhs);
        rec.rel_err = rec.abs_err / (1.0 + std::abs(lhs));
        rec.degree_or_points = degree_or_points;
        rec.wall_ms = wall;
        rec.status = status;
        result.records.push_back(std::move(rec));
    }
};

ks::TruncationPolicy policy_from(const SuiteConfig& c, int max_degree, double shell_tol,
                                 int quiet) {
    ks::TruncationPolicy p;
    p.max_degree = c.integer("max_degree", max_degree);
    p.shell_tol = c.number("shell_tol", shell_tol);
    p.quiet_shells = c.integer("quiet_shells", quiet);
    return p;
}

// low dimensions have tiny shells but slower geometric ratios, so they get
// higher degree caps; "max_degrees" pairs with "dims" when present
int degree_cap_for_dim(const SuiteConfig& c, const std::vector<int>& dims, int n, int fallback) {
    const std::vector<int> caps = c.int_array("max_degrees", {});
    if (caps.size() == dims.size()) {
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] == n) return caps[i];
    }
    return fallback;
}

// ---------------------------------------------------------------------------
// Polynomial-level suites

void run_poly_h2d_routes(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int samples = ctx.config.integer("samples", 100);
    const int max_index = ctx.config.integer("max_index", 12);
    const double radius = ctx.config.number("radius", 2.0);
    for (int s = 0; s < samples; ++s) {
        const auto start = Clock::now();
        const Complex z1 = radius * rng.unit_disk();
        const Complex z2 = radius * rng.unit_disk();
        double worst = -1.0;
        Complex worst_direct{}, worst_lag{};
        int wm = 0, wn = 0;
        for (int m = 0; m <= max_index; ++m) {
            for (int n = 0; n <= max_index; ++n) {
                const Complex a = poly::h2d_direct({m, n}, z1, z2);
                const Complex b = poly::h2d_laguerre({m, n}, z1, z2);
                const double dev = std::abs(a - b) / (1.0 + std::abs(a));
                if (dev > worst) {
                    worst = dev;
                    worst_direct = a;
                    worst_lag = b;
                    wm = m;
                    wn = n;
                }
            }
        }
        ctx.add("sample=" + std::to_string(s) + " worst_m=" + std::to_string(wm) +
                    " worst_n=" + std::to_string(wn),
                worst_direct, worst_lag, ms_since(start), max_index);
    }
}

void run_poly_h2d_bound(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int samples = ctx.config.integer("samples", 200);
    const int max_index = ctx.config.integer("max_index", 10);
    const double radius = ctx.config.number("radius", 2.0);
    for (int s = 0; s < samples; ++s) {
        const auto start = Clock::now();
        const Complex z = radius * rng.unit_disk();
        double worst_margin = -1e300;
        double worst_abs = 0.0, worst_bound = 0.0;
        int wm = 0, wn = 0;
        for (int m = 0; m <= max_index; ++m) {
            for (int n = 0; n <= max_index; ++n) {
                const double value = std::abs(poly::h2d_direct({m, n}, std::conj(z), z));
                const double bound =
                    std::exp(std::norm(z)) * std::sqrt(factorial(m) * factorial(n));
                if (value - bound > worst_margin) {
                    worst_margin = value - bound;
                    worst_abs = value;
                    worst_bound = bound;
                    wm = m;
                    wn = n;
                }
            }
        }
        // pass iff no violation: record the worst margin against zero
        CheckRecord rec;
        rec.params = "sample=" + std::to_string(s) + " worst_m=" + std::to_string(wm) +
                     " worst_n=" + std::to_string(wn);
        rec.lhs = worst_abs;
        rec.rhs = worst_bound;
        rec.abs_err = std::max(0.0, worst_margin);
        rec.rel_err = rec.abs_err / (1.0 + worst_abs);
        rec.degree_or_points = max_index;
        rec.wall_ms = ms_since(start);
        rec.status = (rec.abs_err <= ctx.tol) ? CheckStatus::pass : CheckStatus::fail;
        ctx.result.records.push_back(std::move(rec));
    }
}

void run_poly_gf2d(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int samples = ctx.config.integer("samples", 40);
    const int cap = ctx.config.integer("degree_cap", 30);
    for (int s = 0; s < samples; ++s) {
        const auto start = Clock::now();
        const Complex z1 = rng.unit_disk();
        const Complex z2 = rng.unit_disk();
        const Complex u = 0.5 * rng.unit_disk();
        const Complex v = 0.5 * rng.unit_disk();
        const Complex lhs = std::exp(u * z1 + v * z2 - u * v);
        const Complex rhs = poly::gf_h2d_partial(z1, z2, u, v, cap);
        ctx.add("sample=" + std::to_string(s), lhs, rhs, ms_since(start), cap);
    }
}

// ---------------------------------------------------------------------------
// Kibble-Slepian suites

void run_ks_real_identity(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const std::vector<int> dims = ctx.config.int_array("dims", {1, 2, 3});
    const int draws = ctx.config.integer("draws", 50);
    const double norm_cap = ctx.config.number("norm_cap", 0.3);
    const ks::TruncationPolicy policy = policy_from(ctx.config, 30, 1e-8, 3);
    for (int n : dims) {
        for (int d = 0; d < draws; ++d) {
            const auto start = Clock::now();
            const double target = norm_cap * rng.uniform(0.2, 1.0);
            const ks::ComplexSquareMatrix s = random_real_symmetric(rng, n, target);
            std::vector<double> x(static_cast<std::size_t>(n));
            for (double& xi : x) xi = rng.uniform(-1.0, 1.0);
            const std::string params = "N=" + std::to_string(n) + " draw=" + std::to_string(d);
            try {
                const double lhs = ks::lhs_real(s, x);
                const ks::SeriesResult rhs = ks::rhs_real(s, x, policy);
                ctx.add(params, lhs, rhs.value, ms_since(start), rhs.degree_reached);
            } catch (const ks::TruncationNotConverged& e) {
                ctx.add_status(params, CheckStatus::not_converged, ks::lhs_real(s, x),
                               e.partial.value, ms_since(start), e.partial.degree_reached);
            } catch (const DomainViolation&) {
                ctx.add_status(params, CheckStatus::domain_skip, 0.0, 0.0, ms_since(start));
            }
        }
    }
}

void run_ks_complex_identity(SuiteContext& ctx) {
    const std::vector<int> dims = ctx.config.int_array("dims", {1, 2, 3});
    const int draws = ctx.config.integer("draws", 50);
    const double norm_scale = ctx.config.number("norm_scale", 0.8);
    const double w_radius = ctx.config.number("w_radius", 1.5);
    const ks::TruncationPolicy base_policy = policy_from(ctx.config, 30, 5e-9, 3);
    const auto corpus = complex_corpus(ctx.seed, dims, draws, norm_scale, w_radius);
    for (const ComplexDraw& draw : corpus) {
        const auto start = Clock::now();
        ks::TruncationPolicy policy = base_policy;
        policy.max_degree = degree_cap_for_dim(ctx.config, dims, draw.dim, base_policy.max_degree);
        const std::string params =
            "N=" + std::to_string(draw.dim) + " draw=" + std::to_string(draw.index);
        try {
            const Complex lhs = ks::lhs_complex(draw.h, draw.w);
            const ks::SeriesResult rhs = ks::rhs_complex(draw.h, draw.w, policy);
            ctx.add(params, lhs, rhs.value, ms_since(start), rhs.degree_reached);
        } catch (const ks::TruncationNotConverged& e) {
            ctx.add_status(params, CheckStatus::not_converged, ks::lhs_complex(draw.h, draw.w),
                           e.partial.value, ms_since(start), e.partial.degree_reached);
        } catch (const DomainViolation&) {
            ctx.add_status(params, CheckStatus::domain_skip, 0.0, 0.0, ms_since(start));
        }
    }
}

void run_ks_complex_hermitian(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const std::vector<int> dims = ctx.config.int_array("dims", {1, 2, 3});
    const int draws = ctx.config.integer("draws", 20);  // total, cycled over dims
    const double frobenius_cap = ctx.config.number("frobenius_cap", 0.5);
    const double w_radius = ctx.config.number("w_radius", 1.5);
    const ks::TruncationPolicy policy = policy_from(ctx.config, 32, 1e-8, 3);
    for (int d = 0; d < draws; ++d) {
        const auto start = Clock::now();
        const int n = dims[static_cast<std::size_t>(d) % dims.size()];
        const double target = frobenius_cap * rng.uniform(0.2, 1.0);
        const ks::ComplexSquareMatrix h = random_hermitian(rng, n, target);
        std::vector<Complex> w(static_cast<std::size_t>(n));
        for (Complex& wi : w) wi = w_radius * rng.unit_disk();
        ks::TruncationPolicy draw_policy = policy;
        draw_policy.max_degree = degree_cap_for_dim(ctx.config, dims, n, policy.max_degree);
        std::string params = "N=" + std::to_string(n) + " draw=" + std::to_string(d);
        try {
            const Complex lhs = ks::lhs_complex(h, w);
            const ks::SeriesResult rhs = ks::rhs_complex(h, w, draw_policy);
            params += (rhs.domain == ks::DomainKind::hermitian_frobenius) ? " domain=frobenius"
                                                                          : " domain=max_norm";
            ctx.add(params, lhs, rhs.value, ms_since(start), rhs.degree_reached);
        } catch (const ks::TruncationNotConverged& e) {
            ctx.add_status(params, CheckStatus::not_converged, ks::lhs_complex(h, w),
                           e.partial.value, ms_since(start), e.partial.degree_reached);
        } catch (const DomainViolation&) {
            ctx.add_status(params, CheckStatus::domain_skip, 0.0, 0.0, ms_since(start));
        }
    }
}

void run_ks_laguerre_equiv(SuiteContext& ctx) {
    // same corpus as ks.complex.identity
    const std::vector<int> dims = ctx.config.int_array("dims", {1, 2, 3});
    const int draws = ctx.config.integer("draws", 50);
    const double norm_scale = ctx.config.number("norm_scale", 0.8);
    const double w_radius = ctx.config.number("w_radius", 1.5);
    const ks::TruncationPolicy policy = policy_from(ctx.config, 30, 1e-8, 3);
    // undo this suite's id hash so the corpus matches ks.complex.identity draw
    // for draw
    const std::uint64_t corpus_seed =
        ctx.seed ^ fnv1a("ks.laguerre.equiv") ^ fnv1a("ks.complex.identity");
    const auto corpus = complex_corpus(corpus_seed, dims, draws, norm_scale, w_radius);
    for (const ComplexDraw& draw : corpus) {
        const auto start = Clock::now();
        ks::TruncationPolicy draw_policy = policy;
        draw_policy.max_degree = degree_cap_for_dim(ctx.config, dims, draw.dim, policy.max_degree);
        const std::string params =
            "N=" + std::to_string(draw.dim) + " draw=" + std::to_string(draw.index);
        std::vector<ks::PolarPoint> polar(draw.w.size());
        for (std::size_t i = 0; i < draw.w.size(); ++i)
            polar[i] = {std::abs(draw.w[i]), std::arg(draw.w[i])};
        try {
            // the routes agree shell by shell, so compare them over the same
            // truncation range; independent stopping would compare tails
            const ks::SeriesResult hermite_route = ks::rhs_complex(draw.h, draw.w, draw_policy);
            const int top = std::min(draw_policy.max_degree,
                                     hermite_route.degree_reached + draw_policy.quiet_shells);
            KahanComplex laguerre_route;
            for (int deg = 0; deg <= top; ++deg)
                laguerre_route.add(ks::rhs_laguerre_shell(draw.h, polar, deg, Exec::parallel));
            ctx.add(params, hermite_route.value, laguerre_route.value(), ms_since(start), top);
        } catch (const ks::TruncationNotConverged& e) {
            ctx.add_status(params, CheckStatus::not_converged, 0.0, e.partial.value,
                           ms_since(start), e.partial.degree_reached);
        } catch (const DomainViolation&) {
            ctx.add_status(params, CheckStatus::domain_skip, 0.0, 0.0, ms_since(start));
        }
    }
}

void run_ks_charlier_bilinear(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int cap = ctx.config.integer("degree_cap", 40);
    const auto start0 = Clock::now();
    // pinned example point
    {
        const ks::CharlierBilinear r = ks::charlier_bilinear_check(0.05, 0.03, 2.0, 3.0, cap);
        ctx.add("u=0.05 v=0.03 x=2 y=3", r.lhs, r.rhs, ms_since(start0), cap);
    }
    for (int x = 1; x <= 3; ++x) {
        for (int y = 1; y <= 3; ++y) {
            const auto start = Clock::now();
            const double cap_uv = x * y / 8.0;
            const double u = cap_uv * rng.uniform(-1.0, 1.0);
            const double v = cap_uv * rng.uniform(-1.0, 1.0);
            const ks::CharlierBilinear r =
                ks::charlier_bilinear_check(u, v, static_cast<double>(x), static_cast<double>(y), cap);
            ctx.add("x=" + std::to_string(x) + " y=" + std::to_string(y) + " u=" + fmt(u) +
                        " v=" + fmt(v),
                    r.lhs, r.rhs, ms_since(start), cap);
        }
    }
}

void run_ks_lemma_real(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const std::vector<int> dims = ctx.config.int_array("dims", {1, 2, 3});
    const int draws = ctx.config.integer("draws", 10);
    const double norm_cap = ctx.config.number("norm_cap", 0.25);
    const ks::TruncationPolicy policy = policy_from(ctx.config, 40, 1e-12, 3);
    for (int n : dims) {
        for (int d = 0; d < draws; ++d) {
            const auto start = Clock::now();
            const ks::ComplexSquareMatrix s =
                random_real_symmetric(rng, n, norm_cap * rng.uniform(0.2, 1.0));
            std::vector<Complex> y(static_cast<std::size_t>(n));
            for (Complex& yi : y) yi = rng.unit_disk();
            Complex quad{};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) quad += y[i] * s.at(i, j) * y[j];
            const Complex lhs = std::exp(-quad);
            const std::string params = "N=" + std::to_string(n) + " draw=" + std::to_string(d);
            try {
                const ks::SeriesResult rhs = ks::exp_quadratic_real(s, y, policy);
                ctx.add(params, lhs, rhs.value, ms_since(start), rhs.degree_reached);
            } catch (const ks::TruncationNotConverged& e) {
                ctx.add_status(params, CheckStatus::not_converged, lhs, e.partial.value,
                               ms_since(start), e.partial.degree_reached);
            }
        }
    }
}

void run_ks_lemma_complex(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const std::vector<int> dims = ctx.config.int_array("dims", {1, 2, 3});
    const int draws = ctx.config.integer("draws", 10);
    const double norm_scale = ctx.config.number("norm_scale", 0.3);
    const ks::TruncationPolicy policy = policy_from(ctx.config, 40, 1e-12, 3);
    for (int n : dims) {
        for (int d = 0; d < draws; ++d) {
            const auto start = Clock::now();
            const ks::ComplexSquareMatrix h =
                random_general_complex(rng, n, (norm_scale / n) * rng.uniform(0.2, 1.0));
            std::vector<Complex> z(static_cast<std::size_t>(n));
            for (Complex& zi : z) zi = rng.unit_disk();
            Complex quad{};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) quad += std::conj(z[i]) * h.at(i, j) * z[j];
            const Complex lhs = std::exp(-quad);
            const std::string params = "N=" + std::to_string(n) + " draw=" + std::to_string(d);
            try {
                const ks::SeriesResult rhs = ks::exp_quadratic_complex(h, z, policy);
                ctx.add(params, lhs, rhs.value, ms_since(start), rhs.degree_reached);
            } catch (const ks::TruncationNotConverged& e) {
                ctx.add_status(params, CheckStatus::not_converged, lhs, e.partial.value,
                               ms_since(start), e.partial.degree_reached);
            }
        }
    }
}

void run_ks_tail_decay(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const std::vector<int> dims = ctx.config.int_array("dims", {1, 2, 3});
    const int draws = ctx.config.integer("draws", 4);
    const int top_degree = ctx.config.integer("top_degree", 16);
    const double norm_scale = ctx.config.number("norm_scale", 0.8);
    const double w_radius = ctx.config.number("w_radius", 1.5);
    for (int n : dims) {
        for (int d = 0; d < draws; ++d) {
            const auto start = Clock::now();
            const ks::ComplexSquareMatrix h =
                random_general_complex(rng, n, (norm_scale / n) * rng.uniform(0.4, 1.0));
            std::vector<Complex> w(static_cast<std::size_t>(n));
            for (Complex& wi : w) wi = w_radius * rng.unit_disk();
            const double ratio = n * ks::max_norm(h) + 0.1;
            std::vector<double> shell_norm(static_cast<std::size_t>(top_degree) + 1);
            for (int deg = 0; deg <= top_degree; ++deg)
                shell_norm[deg] = std::abs(ks::rhs_complex_shell(h, w, deg, Exec::parallel));
            double envelope = 1e-300;
            for (int deg = 0; deg <= 5; ++deg) envelope = std::max(envelope, shell_norm[deg]);
            envelope *= 4.0;
            double worst = 0.0;
            double worst_shell = 0.0, worst_cap = envelope;
            for (int deg = 6; deg <= top_degree; ++deg) {
                const double cap = envelope * std::pow(ratio, deg - 5);
                if (shell_norm[deg] - cap > worst) {
                    worst = shell_norm[deg] - cap;
                    worst_shell = shell_norm[deg];
                    worst_cap = cap;
                }
            }
            CheckRecord rec;
            rec.params = "N=" + std::to_string(n) + " draw=" + std::to_string(d) +
                         " ratio=" + fmt(ratio);
            rec.lhs = worst_shell;
            rec.rhs = worst_cap;
            rec.abs_err = worst;
            rec.rel_err = worst / (1.0 + worst_shell);
            rec.degree_or_points = top_degree;
            rec.wall_ms = ms_since(start);
            rec.status = (worst <= ctx.tol) ? CheckStatus::pass : CheckStatus::fail;
            ctx.result.records.push_back(std::move(rec));
        }
    }
}

// ---------------------------------------------------------------------------
// Integral-representation suites

void run_int_hermite_moment(SuiteContext& ctx) {
    const int max_n = ctx.config.integer("max_n", 6);
    const int points = ctx.config.integer("points", 60);
    const std::vector<double> xs = {-1.2, -0.3, 0.0, 0.7, 1.5};
    for (int n = 0; n <= max_n; ++n) {
        for (double x : xs) {
            const auto start = Clock::now();
            const quad::QuadratureSpec spec{quad::QuadratureSpec::Kind::gauss_hermite_1d, points};
            const iq::CheckResult r = iq::check_hermite_moment(n, x, spec, Exec::parallel);
            ctx.add("n=" + std::to_string(n) + " x=" + fmt(x), r.lhs, r.rhs, ms_since(start),
                    r.points_used);
        }
    }
}

void run_int_h2d_moment(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int points = ctx.config.integer("points", 50);
    const std::vector<std::pair<int, int>> grid = {{0, 0}, {1, 0}, {2, 1}, {3, 2},
                                                   {4, 4}, {6, 5}, {6, 6}};
    const quad::QuadratureSpec spec{quad::QuadratureSpec::Kind::gauss_hermite_2d_tensor, points};
    for (const auto& [m, n] : grid) {
        const auto start = Clock::now();
        const Complex z1 = 1.2 * rng.unit_disk();
        const Complex z2 = 1.2 * rng.unit_disk();
        const iq::CheckResult r =
            iq::check_h2d_moment(m, n, z1, z2, spec, iq::H2dMomentForm::bilinear, Exec::parallel);
        ctx.add("form=bilinear m=" + std::to_string(m) + " n=" + std::to_string(n), r.lhs, r.rhs,
                ms_since(start), r.points_used);

        const auto start2 = Clock::now();
        const Complex z = 1.2 * rng.unit_disk();
        const iq::CheckResult rc = iq::check_h2d_moment(m, n, z, std::conj(z), spec,
                                                        iq::H2dMomentForm::conjugate, Exec::parallel);
        ctx.add("form=conjugate m=" + std::to_string(m) + " n=" + std::to_string(n), rc.lhs, rc.rhs,
                ms_since(start2), rc.points_used);
    }
}

void run_int_circle(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int points = ctx.config.integer("points", 256);
    const std::vector<std::pair<int, int>> grid = {{0, 0}, {1, 0}, {2, 1}, {3, 3}, {5, 2}, {6, 4}};
    const std::vector<double> radii = {0.3, 0.8, 1.5};
    for (const auto& [m, n] : grid) {
        for (double r : radii) {
            const auto start = Clock::now();
            const double theta = rng.uniform(0.0, 3.1);
            const iq::CircleCheck c =
                iq::check_circle_rep(m, n, r, theta, r, -theta, points, Exec::parallel);
            const std::string base = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                     " r=" + fmt(r) + " theta=" + fmt(theta);
            ctx.add(base, c.lhs, c.rhs, ms_since(start), c.points_used);
            ctx.add(base + " path=reduced", c.rhs, c.reduced_path, 0.0, c.points_used);
            ctx.add(base + " path=laguerre", c.laguerre_closed, c.rhs, 0.0, c.points_used);
        }
    }
    // general two-radius cases
    for (int sample = 0; sample < 4; ++sample) {
        const auto start = Clock::now();
        const int m = static_cast<int>(rng.uniform(0.0, 5.0));
        const int n = static_cast<int>(rng.uniform(0.0, 5.0));
        const double r1 = rng.uniform(0.2, 1.4);
        const double r2 = rng.uniform(0.2, 1.4);
        const double t1 = rng.uniform(0.0, 6.28);
        const double t2 = rng.uniform(0.0, 6.28);
        const iq::CircleCheck c = iq::check_circle_rep(m, n, r1, t1, r2, t2, points, Exec::parallel);
        ctx.add("m=" + std::to_string(m) + " n=" + std::to_string(n) + " r1=" + fmt(r1) +
                    " r2=" + fmt(r2),
                c.lhs, c.rhs, ms_since(start), c.points_used);
    }
}

void run_int_normal_real(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int points = ctx.config.integer("points", 48);
    const quad::QuadratureSpec spec{quad::QuadratureSpec::Kind::gauss_hermite_2d_tensor, points};
    {
        const auto start = Clock::now();
        const iq::CheckResult r =
            iq::check_normal_integral_real(2, {1, 0, 0, 1}, {0, 0}, spec, Exec::parallel);
        ctx.add("case=identity2", r.lhs, r.rhs, ms_since(start), r.points_used);
    }
    {
        const auto start = Clock::now();
        const iq::CheckResult r =
            iq::check_normal_integral_real(2, {1, 0, 0, 2}, {0, 0}, spec, Exec::parallel);
        ctx.add("case=diag12", r.lhs, r.rhs, ms_since(start), r.points_used);
    }
    {
        const auto start = Clock::now();
        const iq::CheckResult r =
            iq::check_normal_integral_real(2, {2, 0.5, 0.5, 1}, {1, 0}, spec, Exec::parallel);
        ctx.add("case=coupled", r.lhs, r.rhs, ms_since(start), r.points_used);
    }
    for (int n = 1; n <= 3; ++n) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto start = Clock::now();
            // SPD by construction: A = M^T M + 0.4 I
            std::vector<double> m_entries(static_cast<std::size_t>(n) * n);
            for (double& e : m_entries) e = rng.uniform(-0.7, 0.7);
            std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double s = (i == j) ? 0.4 : 0.0;
                    for (int k = 0; k < n; ++k)
                        s += m_entries[static_cast<std::size_t>(k) * n + i] *
                             m_entries[static_cast<std::size_t>(k) * n + j];
                    a[static_cast<std::size_t>(i) * n + j] = s;
                }
            std::vector<double> b(static_cast<std::size_t>(n));
            for (double& e : b) e = rng.uniform(-1.0, 1.0);
            const iq::CheckResult r = iq::check_normal_integral_real(n, a, b, spec, Exec::parallel);
            ctx.add("N=" + std::to_string(n) + " draw=" + std::to_string(draw), r.lhs, r.rhs,
                    ms_since(start), r.points_used);
        }
    }
}

void run_int_normal_complex(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int points = ctx.config.integer("points", 24);
    const quad::QuadratureSpec spec{quad::QuadratureSpec::Kind::gauss_hermite_2d_tensor, points};
    {
        const auto start = Clock::now();
        const iq::CheckResult r = iq::check_normal_integral_complex(
            ks::ComplexSquareMatrix::zero(1), {Complex{}}, spec, Exec::parallel);
        ctx.add("case=zero", r.lhs, r.rhs, ms_since(start), r.points_used);
    }
    {
        const auto start = Clock::now();
        const iq::CheckResult r = iq::check_normal_integral_complex(
            ks::ComplexSquareMatrix::zero(1), {Complex{0.8, 0.4}}, spec, Exec::parallel);
        ctx.add("case=shifted_gaussian", r.lhs, r.rhs, ms_since(start), r.points_used);
    }
    {
        const auto start = Clock::now();
        ks::ComplexSquareMatrix h(1);
        h.at(0, 0) = 0.4;
        const iq::CheckResult r =
            iq::check_normal_integral_complex(h, {Complex{1.0, 0.0}}, spec, Exec::parallel);
        ctx.add("case=scalar_h", r.lhs, r.rhs, ms_since(start), r.points_used);
    }
    for (int n = 1; n <= 2; ++n) {
        for (int draw = 0; draw < 3; ++draw) {
            const auto start = Clock::now();
            const ks::ComplexSquareMatrix h =
                random_hermitian(rng, n, 0.5 * rng.uniform(0.2, 1.0));
            std::vector<Complex> w(static_cast<std::size_t>(n));
            for (Complex& wi : w) wi = rng.unit_disk();
            const iq::CheckResult r = iq::check_normal_integral_complex(h, w, spec, Exec::parallel);
            ctx.add("N=" + std::to_string(n) + " draw=" + std::to_string(draw), r.lhs, r.rhs,
                    ms_since(start), r.points_used);
        }
    }
}

void run_int_mixed(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int points = ctx.config.integer("points", 256);
    const int max_n = ctx.config.integer("max_n", 8);

    for (int n = 0; n <= max_n; ++n) {
        const auto start = Clock::now();
        iq::MixedParams p;
        p.n = n;
        p.z = std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, 6.28));
        p.w1 = rng.unit_disk();
        p.w2 = rng.unit_disk();
        const iq::CheckResult r = iq::check_mixed(iq::MixedCase::hermite_split, p, points);
        ctx.add("case=hermite_split n=" + std::to_string(n), r.lhs, r.rhs, ms_since(start));
    }
    for (int n = 0; n <= max_n; ++n) {
        const auto start = Clock::now();
        iq::MixedParams p;
        p.n = n;
        p.rho = rng.uniform(0.4, 1.4);
        p.z = std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, 6.28));
        const iq::CheckResult r = iq::check_mixed(iq::MixedCase::laguerre_fan, p, points);
        ctx.add("case=laguerre_fan n=" + std::to_string(n), r.lhs, r.rhs, ms_since(start));
    }
    for (int n = 0; n <= max_n; ++n) {
        const auto start = Clock::now();
        iq::MixedParams p;
        p.n = n;
        p.rho = rng.uniform(0.4, 1.4);
        p.theta = rng.uniform(0.0, 6.28);
        const iq::CheckResult r = iq::check_mixed(iq::MixedCase::laguerre_fan_circle, p, points);
        ctx.add("case=laguerre_fan_circle n=" + std::to_string(n), r.lhs, r.rhs, ms_since(start));
    }
    for (int n = 0; n <= max_n; ++n) {
        for (int k = -n; k <= n; k += std::max(1, n)) {
            const auto start = Clock::now();
            iq::MixedParams p;
            p.n = n;
            p.k = k;
            p.rho = rng.uniform(0.5, 1.4);
            const iq::CheckResult r = iq::check_mixed(iq::MixedCase::circle_fourier, p, points);
            ctx.add("case=circle_fourier n=" + std::to_string(n) + " k=" + std::to_string(k), r.lhs,
                    r.rhs, ms_since(start), r.points_used);
        }
    }
    for (int n = 0; n <= max_n; ++n) {
        const auto start = Clock::now();
        iq::MixedParams p;
        p.n = n;
        p.rho = rng.uniform(0.5, 1.4);
        const iq::CheckResult r = iq::check_mixed(iq::MixedCase::circle_mean_square, p, points);
        ctx.add("case=circle_mean_square n=" + std::to_string(n), r.lhs, r.rhs, ms_since(start),
                r.points_used);
    }
    for (int m = 0; m <= max_n; m += 2) {
        for (int n = 1; n <= max_n; n += 3) {
            const auto start = Clock::now();
            iq::MixedParams p;
            p.m = m;
            p.n = n;
            p.w1 = rng.unit_disk();
            p.w2 = rng.unit_disk();
            const iq::CheckResult r = iq::check_mixed(iq::MixedCase::rotation_expansion, p, points);
            ctx.add("case=rotation_expansion m=" + std::to_string(m) + " n=" + std::to_string(n),
                    r.lhs, r.rhs, ms_since(start));
        }
    }
    for (int m = 0; m <= max_n; m += 3) {
        for (int n = 0; n <= max_n; n += 4) {
            const auto start = Clock::now();
            iq::MixedParams p;
            p.m = m;
            p.n = n;
            p.z1 = rng.unit_disk();
            p.z2 = rng.unit_disk();
            p.w1 = 0.5 * rng.unit_disk();
            p.w2 = 0.5 * rng.unit_disk();
            p.series_cap = 25;
            const iq::CheckResult r = iq::check_mixed(iq::MixedCase::shift_formula, p, points);
            ctx.add("case=shift_formula m=" + std::to_string(m) + " n=" + std::to_string(n), r.lhs,
                    r.rhs, ms_since(start));
        }
    }
    for (int m = 0; m <= max_n; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            const auto start = Clock::now();
            iq::MixedParams p;
            p.m = m;
            p.n = n;
            const iq::CheckResult r = iq::check_mixed(iq::MixedCase::origin_values, p, points);
            ctx.add("case=origin_values m=" + std::to_string(m) + " n=" + std::to_string(n), r.lhs,
                    r.rhs, ms_since(start));
        }
    }
}

// ---------------------------------------------------------------------------
// q-series suites

void run_q_gf(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int cap = ctx.config.integer("degree_cap", 40);
    {
        const auto start = Clock::now();
        const qs::GfCheck r =
            qs::gf_h2d_q_check({0.3, 0.0}, {0.4, 0.0}, {0.2, 0.0}, {0.1, 0.0}, {0.5, 1e-18}, cap);
        ctx.add("pinned q=0.5", r.lhs, r.rhs, ms_since(start), cap);
    }
    for (double q : {0.3, 0.5, 0.7}) {
        for (int draw = 0; draw < 5; ++draw) {
            const auto start = Clock::now();
            const Complex z1 = 0.8 * rng.unit_disk();
            const Complex z2 = 0.8 * rng.unit_disk();
            const Complex u = 0.5 * rng.unit_disk();
            const Complex v = 0.5 * rng.unit_disk();
            const qs::GfCheck r = qs::gf_h2d_q_check(z1, z2, u, v, {q, 1e-18}, cap);
            ctx.add("q=" + fmt(q) + " draw=" + std::to_string(draw), r.lhs, r.rhs, ms_since(start),
                    cap);
        }
    }
}

void run_q_awi(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int points = ctx.config.integer("points", 512);
    {
        const auto start = Clock::now();
        const qs::QuadratureVsClosed r =
            qs::askey_wilson_integral({Complex{}, Complex{}, Complex{}, Complex{}}, {0.5, 1e-18},
                                      points, Exec::parallel);
        ctx.add("case=all_zero q=0.5", r.closed_form, r.quadrature, ms_since(start), r.points_used);
    }
    {
        const auto start = Clock::now();
        const qs::QuadratureVsClosed r = qs::askey_wilson_integral(
            {Complex{0.5, 0.0}, Complex{}, Complex{}, Complex{}}, {0.5, 1e-18}, points,
            Exec::parallel);
        ctx.add("case=single q=0.5", r.closed_form, r.quadrature, ms_since(start), r.points_used);
    }
    {
        const auto start = Clock::now();
        const qs::QuadratureVsClosed r = qs::askey_wilson_integral(
            {Complex{0.3, 0.0}, Complex{0.2, 0.0}, Complex{0.1, 0.0}, Complex{0.4, 0.0}},
            {0.4, 1e-18}, points, Exec::parallel);
        ctx.add("case=four_real q=0.4", r.closed_form, r.quadrature, ms_since(start),
                r.points_used);
    }
    const std::vector<double> qs_grid = {0.3, 0.5, 0.7};
    for (int draw = 0; draw < 20; ++draw) {
        const auto start = Clock::now();
        const double q = qs_grid[static_cast<std::size_t>(draw) % qs_grid.size()];
        std::array<Complex, 4> t;
        for (Complex& tj : t) tj = 0.6 * rng.unit_disk();
        const qs::QuadratureVsClosed r =
            qs::askey_wilson_integral(t, {q, 1e-18}, points, Exec::parallel);
        ctx.add("draw=" + std::to_string(draw) + " q=" + fmt(q), r.closed_form, r.quadrature,
                ms_since(start), r.points_used);
    }
}

void run_q_moments(SuiteContext& ctx) {
    const int points = ctx.config.integer("points", 512);
    const int max_j = ctx.config.integer("max_j", 8);
    for (double q : {0.3, 0.5, 0.7}) {
        for (int j = 0; j <= max_j; ++j) {
            const auto start = Clock::now();
            const qs::QuadratureVsClosed r =
                qs::q_weight_moment(j, {q, 1e-18}, points, Exec::parallel);
            ctx.add("j=" + std::to_string(j) + " q=" + fmt(q), r.closed_form, r.quadrature,
                    ms_since(start), r.points_used);
        }
    }
}

void run_q_bilinear(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int cap = ctx.config.integer("degree_cap", 24);
    const int points = ctx.config.integer("points", 512);
    auto record = [&](const std::string& params, const qs::MultilinearCheck& r, double wall) {
        ctx.add(params + " side=series", r.quadrature, r.series, wall, cap);
        ctx.add(params + " side=closed", r.quadrature, r.closed_form, 0.0, r.points_used);
    };
    {
        const auto start = Clock::now();
        const qs::MultilinearCheck r = qs::q_bilinear_generating_check(
            {0.3, 0.0}, {0.2, 0.0}, 0.25, 0.25, {0.5, 1e-18}, cap, points, Exec::parallel);
        record("pinned q=0.5", r, ms_since(start));
    }
    for (double q : {0.3, 0.5, 0.7}) {
        for (int draw = 0; draw < 2; ++draw) {
            const auto start = Clock::now();
            const Complex z1 = 0.4 * rng.unit_disk();
            const Complex z2 = 0.4 * rng.unit_disk();
            const double r = rng.uniform(0.05, 0.3);
            const double s = rng.uniform(0.05, 0.3);
            const qs::MultilinearCheck res = qs::q_bilinear_generating_check(
                z1, z2, r, s, {q, 1e-18}, cap, points, Exec::parallel);
            record("q=" + fmt(q) + " draw=" + std::to_string(draw), res, ms_since(start));
        }
    }
}

void run_q_multilinear(SuiteContext& ctx) {
    SplitMix64 rng(ctx.seed);
    const int cap = ctx.config.integer("degree_cap", 16);
    const int points = ctx.config.integer("points", 512);
    auto record = [&](const std::string& params, const qs::MultilinearCheck& r, double wall) {
        ctx.add(params + " side=series", r.quadrature, r.series, wall, cap);
        ctx.add(params + " side=closed", r.quadrature, r.closed_form, 0.0, r.points_used);
    };
    {
        const auto start = Clock::now();
        const qs::MultilinearCheck r = qs::q_multilinear_generating_check(
            {Complex{0.15, 0.0}, Complex{0.1, 0.0}, Complex{0.12, 0.0}, Complex{0.08, 0.0}}, 0.15,
            0.15, 0.15, 0.15, {0.5, 1e-18}, cap, points, Exec::parallel);
        record("pinned q=0.5", r, ms_since(start));
    }
    {
        // degenerate pair: reduces to the bilinear identity
        const auto start = Clock::now();
        const qs::MultilinearCheck r = qs::q_multilinear_generating_check(
            {Complex{0.3, 0.0}, Complex{0.2, 0.0}, Complex{0.1, 0.0}, Complex{0.1, 0.0}}, 0.25,
            0.25, 0.0, 0.0, {0.5, 1e-18}, cap, points, Exec::parallel);
        record("degenerate q=0.5", r, ms_since(start));
    }
    for (int draw = 0; draw < 2; ++draw) {
        const auto start = Clock::now();
        std::array<Complex, 4> z;
        for (Complex& zi : z) zi = 0.15 * rng.unit_disk();
        const qs::MultilinearCheck r = qs::q_multilinear_generating_check(
            z, rng.uniform(0.05, 0.15), rng.uniform(0.05, 0.15), rng.uniform(0.05, 0.15),
            rng.uniform(0.05, 0.15), {0.5, 1e-18}, cap, points, Exec::parallel);
        record("draw=" + std::to_string(draw) + " q=0.5", r, ms_since(start));
    }
}

// ---------------------------------------------------------------------------
// Registry

struct SuiteEntry {
    SuiteInfo info;
    std::function<void(SuiteContext&)> run;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries = {
        {{"poly.h2d.routes", "h2d_two_route_agreement",
          "bivariate Hermite: direct sum vs Laguerre closed form"},
         run_poly_h2d_routes},
        {{"poly.h2d.bound", "h2d_factorial_bound",
          "bound |H_{m,n}(conj z, z)| <= e^{|z|^2} sqrt(m! n!)"},
         run_poly_h2d_bound},
        {{"poly.gf2d", "h2d_generating_function",
          "partial generating-function sums vs exp(u z1 + v z2 - uv)"},
         run_poly_gf2d},
        {{"ks.real.identity", "kibble_slepian_real",
          "real symmetric multilinear Hermite generating function"},
         run_ks_real_identity},
        {{"ks.complex.identity", "kibble_slepian_complex",
          "general complex multilinear 2D Hermite generating function"},
         run_ks_complex_identity},
        {{"ks.complex.hermitian", "kibble_slepian_hermitian",
          "Hermitian-matrix domain of the complex identity"},
         run_ks_complex_hermitian},
        {{"ks.laguerre.equiv", "laguerre_route_equivalence",
          "Laguerre form of the series vs the 2D Hermite form"},
         run_ks_laguerre_equiv},
        {{"ks.charlier.bilinear", "charlier_bilinear",
          "bilinear Charlier sum vs exponential/Bessel closed form"},
         run_ks_charlier_bilinear},
        {{"ks.lemma.real", "exp_quadratic_real_expansion",
          "shell expansion of exp(-Y^T S Y)"},
         run_ks_lemma_real},
        {{"ks.lemma.complex", "exp_quadratic_complex_expansion",
          "shell expansion of exp(-Z^* H Z)"},
         run_ks_lemma_complex},
        {{"ks.tail.decay", "shell_tail_geometric_decay",
          "geometric decay envelope of shell norms"},
         run_ks_tail_decay},
        {{"int.hermite.moment", "hermite_moment_integral",
          "H_n(x) e^{-x^2} as a Gaussian moment integral"},
         run_int_hermite_moment},
        {{"int.h2d.moment", "h2d_moment_integral",
          "plane moment integrals of the bivariate Hermite polynomials"},
         run_int_h2d_moment},
        {{"int.circle", "h2d_circle_representation",
          "circle form of the moment integral with the half-line kernel"},
         run_int_circle},
        {{"int.normal.real", "gaussian_integral_real",
          "multivariate real Gaussian integral with linear phase"},
         run_int_normal_real},
        {{"int.normal.complex", "gaussian_integral_complex",
          "complex Gaussian integral with Hermitian quadratic form"},
         run_int_normal_complex},
        {{"int.mixed", "mixed_hermite_laguerre_relations",
          "finite mixed relations between H_n, H_{m,n} and Laguerre"},
         run_int_mixed},
        {{"q.gf", "q_hermite_generating_function",
          "2D q-Hermite generating function vs q-Pochhammer quotient"},
         run_q_gf},
        {{"q.awi", "askey_wilson_integral",
          "Askey-Wilson integral vs circle quadrature"},
         run_q_awi},
        {{"q.moments", "q_weight_trigonometric_moments",
          "trigonometric moments of the q-Hermite weight"},
         run_q_moments},
        {{"q.bilinear", "q_bilinear_generating_function",
          "two-factor q-Hermite generating identity vs quadrature"},
         run_q_bilinear},
        {{"q.multilinear", "q_multilinear_generating_function",
          "four-factor q-Hermite generating identity vs quadrature"},
         run_q_multilinear},
    };
    return entries;
}

const SuiteEntry* find_suite(const std::string& id) {
    for (const SuiteEntry& e : registry())
        if (e.info.id == id) return &e;
    return nullptr;
}

}  // namespace

std::vector<SuiteInfo> list_suites() {
    std::vector<SuiteInfo> out;
    for (const SuiteEntry& e : registry()) out.push_back(e.info);
    return out;
}

CampaignResult run_campaign(const CampaignConfig& config) {
    for (const SuiteConfig& suite : config.suites) {
        if (find_suite(suite.id) == nullptr) throw ConfigError("unknown suite id: " + suite.id);
        suite.tolerance();  // validates presence and positivity
    }
#ifdef _OPENMP
    if (config.jobs > 0) omp_set_num_threads(config.jobs);
#endif

    CampaignResult result;
    result.seed = config.seed;
    result.metadata["rng"] = "splitmix64";
    result.metadata["q_weight_moment_normalization"] =
        "full-period average (1/2pi) int_{-pi}^{pi} e^{2ij theta} w(theta) dtheta = "
        "(-1)^j (q^C(j,2) + q^C(-j,2)) / (q;q)_inf; a [0,pi] integral with the same 1/(2pi) "
        "normalization gives half of this, fixed against the j=0 Askey-Wilson value";
    result.metadata["q_bilinear_closed_form"] =
        "2 (rs;q)_inf^2 / (z1 z2 r s;q)_inf equals the parity-restricted four-fold sum with "
        "weight (-1)^j (q^C(j,2) + q^C(-j,2)), j = (m1 + n2 - n1 - m2)/2";
    result.metadata["q_multilinear_closed_form"] =
        "2 (r1 s1;q)_inf^2 (r2 s2;q)_inf^2 (r1 s1 r2 s2 z1 z2 z3 z4;q)_inf divided by the six "
        "pair products (r1 s1 z1 z2)(r1 r2 z1 z3)(r1 s2 z1 z4)(s1 r2 z2 z3)(s1 s2 z2 z4)"
        "(r2 s2 z3 z4), all (.;q)_inf";
    result.metadata["charlier_bilinear_closed_form"] =
        "sum_{0<=j<k} (u^j v^k + u^k v^j)/(j!k!) C_j(k;x) C_j(k;y) = xy/(xy-uv) "
        "[exp((xy(u+v) - uv(x+y))/(xy-uv)) - exp(-uv(x+y)/(xy-uv)) I_0(2 xy sqrt(uv)/(xy-uv))]";
    result.metadata["circle_representation_kernel"] =
        "e^{-z1 z2} H_{m,n}(z1,z2) = (1/(pi i^{m+n})) int_0^{2pi} e^{i(n-m)phi} "
        "G_{m+n+1}(z1 e^{i phi} + z2 e^{-i phi}) dphi with G_k(c) = int_0^inf rho^k "
        "e^{-rho^2 + i c rho} drho; the full-line Hermite kernel integrates to zero";

    const auto campaign_start = Clock::now();
    for (const SuiteConfig& suite_config : config.suites) {
        const SuiteEntry* entry = find_suite(suite_config.id);
        SuiteResult suite;
        suite.id = entry->info.id;
        suite.tag = entry->info.tag;
        suite.tolerance = suite_config.tolerance();
        suite.absolute_mode = suite_config.absolute_mode();
        const std::uint64_t suite_seed = config.seed ^ fnv1a(entry->info.id);
        SuiteContext ctx(suite_config, suite_seed, suite);
        const auto suite_start = Clock::now();
        entry->run(ctx);
        suite.wall_ms = ms_since(suite_start);
        for (const CheckRecord& r : suite.records) {
            switch (r.status) {
                case CheckStatus::pass: ++suite.passes; break;
                case CheckStatus::fail: ++suite.fails; break;
                case CheckStatus::not_converged: ++suite.not_converged; break;
                case CheckStatus::domain_skip: ++suite.skips; break;
            }
        }
        result.checks += static_cast<int>(suite.records.size());
        result.passes += suite.passes;
        result.fails += suite.fails;
        result.not_converged += suite.not_converged;
        result.skips += suite.skips;
        result.suites.push_back(std::move(suite));
    }
    result.wall_ms = ms_since(campaign_start);
    return result;
}

}  // namespace h2d::harness
