#include "hermite2d/ks_series.hpp"

#include <algorithm>
#include <cmath>

namespace h2d::ks {

// ---------------------------------------------------------------------------
// Matrix basics

ComplexSquareMatrix ComplexSquareMatrix::identity(int n) {
    ComplexSquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexSquareMatrix ComplexSquareMatrix::from_real(int n, const std::vector<double>& entries) {
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("from_real: size mismatch");
    ComplexSquareMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = entries[static_cast<std::size_t>(i) * n + j];
    return m;
}

ComplexSquareMatrix ComplexSquareMatrix::operator+(const ComplexSquareMatrix& rhs) const {
    ComplexSquareMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

std::vector<Complex> ComplexSquareMatrix::apply(const std::vector<Complex>& x) const {
    std::vector<Complex> y(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        Complex s{};
        for (int j = 0; j < n_; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

bool ComplexSquareMatrix::all_finite() const {
    for (const Complex& z : a_)
        if (!is_finite(z)) return false;
    return true;
}

LuDecomposition::LuDecomposition(const ComplexSquareMatrix& m)
    : n_(m.dim()), lu_(m), pivot_(static_cast<std::size_t>(m.dim())) {
    for (int col = 0; col < n_; ++col) {
        int p = col;
        for (int row = col + 1; row < n_; ++row)
            if (std::abs(lu_.at(row, col)) > std::abs(lu_.at(p, col))) p = row;
        pivot_[col] = p;
        if (p != col) {
            for (int j = 0; j < n_; ++j) std::swap(lu_.at(col, j), lu_.at(p, j));
            pivot_sign_ = -pivot_sign_;
        }
        const Complex diag = lu_.at(col, col);
        if (diag == Complex{}) throw IllConditioned("LU: exactly singular matrix");
        for (int row = col + 1; row < n_; ++row) {
            const Complex factor = lu_.at(row, col) / diag;
            lu_.at(row, col) = factor;
            for (int j = col + 1; j < n_; ++j) lu_.at(row, j) -= factor * lu_.at(col, j);
        }
    }
    // 1-norm condition estimate via the explicit inverse; N is tiny here
    double norm_a = 0.0, norm_inv = 0.0;
    for (int j = 0; j < n_; ++j) {
        double col_sum = 0.0;
        for (int i = 0; i < n_; ++i) col_sum += std::abs(m.at(i, j));
        norm_a = std::max(norm_a, col_sum);
    }
    for (int j = 0; j < n_; ++j) {
        std::vector<Complex> e(static_cast<std::size_t>(n_));
        e[j] = 1.0;
        const std::vector<Complex> col = solve(std::move(e));
        double col_sum = 0.0;
        for (const Complex& z : col) col_sum += std::abs(z);
        norm_inv = std::max(norm_inv, col_sum);
    }
    cond_ = norm_a * norm_inv;
    if (cond_ >= 1e12) throw IllConditioned("LU: condition estimate >= 1e12");
}

Complex LuDecomposition::determinant() const {
    Complex det = static_cast<double>(pivot_sign_);
    for (int i = 0; i < n_; ++i) det *= lu_.at(i, i);
    return det;
}

std::vector<Complex> LuDecomposition::solve(std::vector<Complex> b) const {
    for (int i = 0; i < n_; ++i)
        if (pivot_[i] != i) std::swap(b[i], b[pivot_[i]]);
    for (int i = 1; i < n_; ++i)
        for (int j = 0; j < i; ++j) b[i] -= lu_.at(i, j) * b[j];
    for (int i = n_ - 1; i >= 0; --i) {
        for (int j = i + 1; j < n_; ++j) b[i] -= lu_.at(i, j) * b[j];
        b[i] /= lu_.at(i, i);
    }
    return b;
}

ComplexSquareMatrix LuDecomposition::inverse() const {
    ComplexSquareMatrix inv(n_);
    for (int j = 0; j < n_; ++j) {
        std::vector<Complex> e(static_cast<std::size_t>(n_));
        e[j] = 1.0;
        const std::vector<Complex> col = solve(std::move(e));
        for (int i = 0; i < n_; ++i) inv.at(i, j) = col[i];
    }
    return inv;
}

double frobenius_norm(const ComplexSquareMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

double max_norm(const ComplexSquareMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s = std::max(s, std::abs(m.at(i, j)));
    return s;
}

bool is_hermitian(const ComplexSquareMatrix& m, double tol) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j)
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol) return false;
    return true;
}

bool is_real_symmetric(const ComplexSquareMatrix& m, double tol) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            if (std::abs(m.at(i, j).imag()) > tol) return false;
            if (std::abs(m.at(i, j) - m.at(j, i)) > tol) return false;
        }
    return true;
}

bool in_domain_real(const ComplexSquareMatrix& s) { return frobenius_norm(s) < 1.0; }

bool in_domain_complex(const ComplexSquareMatrix& h) {
    return max_norm(h) < 1.0 / static_cast<double>(h.dim());
}

bool in_box_domain(const ComplexSquareMatrix& h, const ComplexSquareMatrix& center,
                   const std::vector<double>& delta) {
    const int n = h.dim();
    auto d = [&](int i, int j) { return delta[static_cast<std::size_t>(i) * n + j]; };
    for (int j = 0; j < n; ++j)
        if (std::abs(h.at(j, j) - center.at(j, j)) >= d(j, j)) return false;
    for (int l = 0; l < n; ++l) {
        for (int k = l + 1; k < n; ++k) {
            const Complex u = 0.5 * (h.at(l, k) + h.at(k, l));
            const Complex v = (h.at(l, k) - h.at(k, l)) / Complex(0.0, 2.0);
            const Complex u0 = 0.5 * (center.at(l, k) + center.at(k, l));
            const Complex v0 = (center.at(l, k) - center.at(k, l)) / Complex(0.0, 2.0);
            if (std::abs(u - u0) >= d(l, k)) return false;
            if (std::abs(v - v0) >= d(l, k)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Closed-form sides

namespace {

DomainKind classify_complex_domain(const ComplexSquareMatrix& h) {
    if (in_domain_complex(h)) return DomainKind::max_norm_ball;
    if (is_hermitian(h) && frobenius_norm(h) < 1.0) return DomainKind::hermitian_frobenius;
    throw DomainViolation("complex matrix outside both convergence domains");
}

}  // namespace

double lhs_real(const ComplexSquareMatrix& s, const std::vector<double>& x) {
    const int n = s.dim();
    if (x.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("lhs_real: size mismatch");
    if (!s.all_finite()) throw std::invalid_argument("lhs_real: non-finite entries");
    if (!is_real_symmetric(s)) throw AsymmetryError("lhs_real: matrix not real symmetric");
    if (!in_domain_real(s)) throw DomainViolation("lhs_real: Frobenius norm >= 1");

    const LuDecomposition lu(ComplexSquareMatrix::identity(n) + s);
    std::vector<Complex> xc(x.begin(), x.end());
    const std::vector<Complex> u = lu.solve(xc);      // (I+S)^{-1} X
    const std::vector<Complex> su = s.apply(u);       // S (I+S)^{-1} X
    Complex expo{};
    for (int i = 0; i < n; ++i) expo += xc[i] * su[i];
    // eigenvalues of S exceed -1 in-domain, so det(I+S) > 0
    const double det = lu.determinant().real();
    return std::exp(expo.real()) / std::sqrt(det);
}

Complex lhs_complex(const ComplexSquareMatrix& h, const std::vector<Complex>& w) {
    const int n = h.dim();
    if (w.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("lhs_complex: size mismatch");
    if (!h.all_finite()) throw std::invalid_argument("lhs_complex: non-finite entries");
    classify_complex_domain(h);

    const LuDecomposition lu(ComplexSquareMatrix::identity(n) + h);
    const std::vector<Complex> u = lu.solve(w);  // (I+H)^{-1} W
    const std::vector<Complex> hu = h.apply(u);
    Complex expo{};
    for (int i = 0; i < n; ++i) expo += std::conj(w[i]) * hu[i];
    return std::exp(expo) / lu.determinant();
}

// ---------------------------------------------------------------------------
// Shell summers.
//
// Every series below is a sum over index matrices K of
//     prod_cells coef[cell][k_cell] * prod_j factor_j(K derived sums),
// evaluated shell by shell.  Terms are buffered in fixed blocks of
// kReduceBlock and reduced pairwise, so the value is independent of the
// worker count (see core.hpp).

namespace {

struct GeneralSeries {
    int n = 0;
    int dmax = 0;
    std::vector<Complex> coef;    // [cell * (dmax+1) + k]
    std::vector<Complex> factor;  // [j * (dmax+1)^2 + r * (dmax+1) + c]

    Complex eval(const std::vector<int>& cells, std::vector<int>& rsum, std::vector<int>& csum) const {
        std::fill(rsum.begin(), rsum.end(), 0);
        std::fill(csum.begin(), csum.end(), 0);
        const std::size_t stride = static_cast<std::size_t>(dmax) + 1;
        Complex t{1.0, 0.0};
        int cell = 0;
        for (int m = 0; m < n; ++m) {
            for (int col = 0; col < n; ++col, ++cell) {
                const int k = cells[cell];
                t *= coef[static_cast<std::size_t>(cell) * stride + k];
                rsum[m] += k;
                csum[col] += k;
            }
        }
        for (int j = 0; j < n; ++j)
            t *= factor[(static_cast<std::size_t>(j) * stride + rsum[j]) * stride + csum[j]];
        return t;
    }
};

struct SymmetricSeries {
    int n = 0;
    int dmax = 0;
    std::vector<Complex> coef;    // [cell * (dmax+1) + k] over upper-triangle cells
    std::vector<Complex> factor;  // [l * (2*dmax+1) + k]

    Complex eval(const std::vector<int>& cells, std::vector<int>& kvec, std::vector<int>&) const {
        std::fill(kvec.begin(), kvec.end(), 0);
        const std::size_t stride = static_cast<std::size_t>(dmax) + 1;
        Complex t{1.0, 0.0};
        int cell = 0;
        for (int m = 0; m < n; ++m) {
            for (int col = m; col < n; ++col, ++cell) {
                const int k = cells[cell];
                t *= coef[static_cast<std::size_t>(cell) * stride + k];
                // k_l = k_{l,l} + full row sum: diagonal cells count twice
                if (col == m) {
                    kvec[m] += 2 * k;
                } else {
                    kvec[m] += k;
                    kvec[col] += k;
                }
            }
        }
        const std::size_t fstride = 2 * static_cast<std::size_t>(dmax) + 1;
        for (int l = 0; l < n; ++l) t *= factor[static_cast<std::size_t>(l) * fstride + kvec[l]];
        return t;
    }
};

template <typename Series>
Complex shell_sum(const Series& series, int degree, bool symmetric, Exec exec) {
    const std::uint64_t count = mindex::shell_count(series.n, degree, symmetric);
    const std::uint64_t nblocks = (count + kReduceBlock - 1) / kReduceBlock;
    std::vector<Complex> partial(nblocks);
#pragma omp parallel if (exec == Exec::parallel)
    {
        mindex::ShellCursor cursor(series.n, degree, symmetric);
        std::vector<Complex> buf(kReduceBlock);
        std::vector<int> scratch_a(series.n), scratch_b(series.n);
#pragma omp for schedule(dynamic)
        for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
            const std::uint64_t begin = static_cast<std::uint64_t>(b) * kReduceBlock;
            const std::uint64_t end = std::min<std::uint64_t>(begin + kReduceBlock, count);
            cursor.seek(begin);
            for (std::uint64_t i = begin; i < end; ++i) {
                buf[i - begin] = series.eval(cursor.cells(), scratch_a, scratch_b);
                if (i + 1 < end) cursor.advance();
            }
            partial[static_cast<std::size_t>(b)] =
                pairwise_sum(std::span<const Complex>(buf.data(), end - begin));
        }
    }
    return pairwise_sum(std::span<const Complex>(partial));
}

void validate_policy(const TruncationPolicy& policy) {
    if (policy.max_degree < 0) throw std::invalid_argument("TruncationPolicy: negative max_degree");
    if (!(policy.shell_tol > 0.0) || policy.shell_tol >= 1.0)
        throw std::invalid_argument("TruncationPolicy: shell_tol must be in (0,1)");
    if (policy.quiet_shells < 1) throw std::invalid_argument("TruncationPolicy: quiet_shells >= 1");
}

template <typename ShellFn>
SeriesResult run_series(int n, bool symmetric, const TruncationPolicy& policy, DomainKind domain,
                        ShellFn&& shell) {
    validate_policy(policy);
    SeriesResult result;
    result.domain = domain;
    KahanComplex partial;
    int quiet = 0;
    for (int d = 0; d <= policy.max_degree; ++d) {
        const Complex s = shell(d);
        partial.add(s);
        result.term_count += mindex::shell_count(n, d, symmetric);
        result.last_shell_norm = std::abs(s);
        const double ref = std::max(std::abs(partial.value()), 1e-300);
        if (result.last_shell_norm <= policy.shell_tol * ref) {
            ++quiet;
        } else {
            quiet = 0;
            result.degree_reached = d;
        }
        if (quiet >= policy.quiet_shells) {
            result.converged = true;
            break;
        }
    }
    result.value = partial.value();
    if (!result.converged) throw TruncationNotConverged(result);
    return result;
}

// coefficient tables: powers[k] = (scale)^k / k! starting from 1
void fill_power_over_factorial(std::vector<Complex>& out, std::size_t offset, int dmax, Complex scale) {
    Complex v{1.0, 0.0};
    out[offset] = v;
    for (int k = 1; k <= dmax; ++k) {
        v *= scale / static_cast<double>(k);
        out[offset + k] = v;
    }
}

SymmetricSeries build_real_ks_series(const ComplexSquareMatrix& s, const std::vector<double>& x,
                                     int dmax) {
    const int n = s.dim();
    SymmetricSeries series;
    series.n = n;
    series.dmax = dmax;
    const std::size_t stride = static_cast<std::size_t>(dmax) + 1;
    series.coef.resize(static_cast<std::size_t>(mindex::MultiIndexMatrix::support_size(n, true)) * stride);
    int cell = 0;
    for (int m = 0; m < n; ++m) {
        for (int col = m; col < n; ++col, ++cell) {
            // diagonal: s^k/(2^k k!) * 2^{-k} from the trace factor; off-diagonal: s^k/(2^k k!)
            const Complex scale = s.at(m, col) * (col == m ? 0.25 : 0.5);
            fill_power_over_factorial(series.coef, static_cast<std::size_t>(cell) * stride, dmax, scale);
        }
    }
    const std::size_t fstride = 2 * static_cast<std::size_t>(dmax) + 1;
    series.factor.resize(static_cast<std::size_t>(n) * fstride);
    for (int l = 0; l < n; ++l) {
        const std::vector<double> h = poly::hermite_table(2 * dmax, x[l]);
        for (std::size_t k = 0; k < fstride; ++k)
            series.factor[static_cast<std::size_t>(l) * fstride + k] = h[k];
    }
    return series;
}

SymmetricSeries build_exp_quadratic_real_series(const ComplexSquareMatrix& s,
                                                const std::vector<Complex>& y, int dmax) {
    const int n = s.dim();
    SymmetricSeries series;
    series.n = n;
    series.dmax = dmax;
    const std::size_t stride = static_cast<std::size_t>(dmax) + 1;
    series.coef.resize(static_cast<std::size_t>(mindex::MultiIndexMatrix::support_size(n, true)) * stride);
    int cell = 0;
    for (int m = 0; m < n; ++m) {
        for (int col = m; col < n; ++col, ++cell) {
            // (-2s)^k/k! with the trace factor folded into the diagonal
            const Complex scale = -s.at(m, col) * (col == m ? 1.0 : 2.0);
            fill_power_over_factorial(series.coef, static_cast<std::size_t>(cell) * stride, dmax, scale);
        }
    }
    const std::size_t fstride = 2 * static_cast<std::size_t>(dmax) + 1;
    series.factor.resize(static_cast<std::size_t>(n) * fstride);
    for (int l = 0; l < n; ++l) {
        Complex p{1.0, 0.0};
        for (std::size_t k = 0; k < fstride; ++k) {
            series.factor[static_cast<std::size_t>(l) * fstride + k] = p;
            p *= y[l];
        }
    }
    return series;
}

GeneralSeries build_complex_ks_series(const ComplexSquareMatrix& h, const std::vector<Complex>& w,
                                      int dmax) {
    const int n = h.dim();
    GeneralSeries series;
    series.n = n;
    series.dmax = dmax;
    const std::size_t stride = static_cast<std::size_t>(dmax) + 1;
    series.coef.resize(static_cast<std::size_t>(n) * n * stride);
    for (int cell = 0; cell < n * n; ++cell)
        fill_power_over_factorial(series.coef, static_cast<std::size_t>(cell) * stride, dmax,
                                  h.at(cell / n, cell % n));
    series.factor.resize(static_cast<std::size_t>(n) * stride * stride);
    for (int j = 0; j < n; ++j) {
        const std::vector<Complex> table = poly::h2d_table(dmax, std::conj(w[j]), w[j]);
        std::copy(table.begin(), table.end(), series.factor.begin() + static_cast<std::size_t>(j) * stride * stride);
    }
    return series;
}

GeneralSeries build_laguerre_ks_series(const ComplexSquareMatrix& h,
                                       const std::vector<PolarPoint>& w_polar, int dmax) {
    const int n = h.dim();
    GeneralSeries series;
    series.n = n;
    series.dmax = dmax;
    const std::size_t stride = static_cast<std::size_t>(dmax) + 1;
    series.coef.resize(static_cast<std::size_t>(n) * n * stride);
    for (int cell = 0; cell < n * n; ++cell)
        fill_power_over_factorial(series.coef, static_cast<std::size_t>(cell) * stride, dmax,
                                  -h.at(cell / n, cell % n));
    series.factor.resize(static_cast<std::size_t>(n) * stride * stride);
    for (int j = 0; j < n; ++j) {
        const double rho = w_polar[j].rho;
        const Complex dir = std::polar(1.0, -w_polar[j].theta);  // conj(w)/rho
        const double rho2 = rho * rho;
        for (int r = 0; r <= dmax; ++r) {
            for (int c = 0; c <= dmax; ++c) {
                const Complex wbar_pow = std::pow(rho, r - c) * std::pow(dir, r - c);
                series.factor[(static_cast<std::size_t>(j) * stride + r) * stride + c] =
                    factorial(c) * wbar_pow * poly::laguerre(c, r - c, rho2);
            }
        }
    }
    return series;
}

GeneralSeries build_exp_quadratic_complex_series(const ComplexSquareMatrix& h,
                                                 const std::vector<Complex>& z, int dmax) {
    const int n = h.dim();
    GeneralSeries series;
    series.n = n;
    series.dmax = dmax;
    const std::size_t stride = static_cast<std::size_t>(dmax) + 1;
    series.coef.resize(static_cast<std::size_t>(n) * n * stride);
    for (int cell = 0; cell < n * n; ++cell)
        fill_power_over_factorial(series.coef, static_cast<std::size_t>(cell) * stride, dmax,
                                  -h.at(cell / n, cell % n));
    series.factor.resize(static_cast<std::size_t>(n) * stride * stride);
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r <= dmax; ++r)
            for (int c = 0; c <= dmax; ++c)
                series.factor[(static_cast<std::size_t>(j) * stride + r) * stride + c] =
                    std::pow(std::conj(z[j]), r) * std::pow(z[j], c);
    }
    return series;
}

void validate_real_inputs(const ComplexSquareMatrix& s, std::size_t xsize) {
    if (xsize != static_cast<std::size_t>(s.dim())) throw std::invalid_argument("dimension mismatch");
    if (!s.all_finite()) throw std::invalid_argument("non-finite entries");
    if (!is_real_symmetric(s)) throw AsymmetryError("matrix not real symmetric");
    if (!in_domain_real(s)) throw DomainViolation("Frobenius norm >= 1");
}

}  // namespace

SeriesResult rhs_real(const ComplexSquareMatrix& s, const std::vector<double>& x,
                      const TruncationPolicy& policy, Exec exec) {
    validate_real_inputs(s, x.size());
    const SymmetricSeries series = build_real_ks_series(s, x, policy.max_degree);
    return run_series(s.dim(), true, policy, DomainKind::hermitian_frobenius,
                      [&](int d) { return shell_sum(series, d, true, exec); });
}

SeriesResult rhs_complex(const ComplexSquareMatrix& h, const std::vector<Complex>& w,
                         const TruncationPolicy& policy, Exec exec) {
    if (w.size() != static_cast<std::size_t>(h.dim())) throw std::invalid_argument("dimension mismatch");
    if (!h.all_finite()) throw std::invalid_argument("non-finite entries");
    const DomainKind domain = classify_complex_domain(h);
    const GeneralSeries series = build_complex_ks_series(h, w, policy.max_degree);
    return run_series(h.dim(), false, policy, domain,
                      [&](int d) { return shell_sum(series, d, false, exec); });
}

SeriesResult rhs_laguerre(const ComplexSquareMatrix& h, const std::vector<PolarPoint>& w_polar,
                          const TruncationPolicy& policy, Exec exec) {
    if (w_polar.size() != static_cast<std::size_t>(h.dim()))
        throw std::invalid_argument("dimension mismatch");
    if (!h.all_finite()) throw std::invalid_argument("non-finite entries");
    for (const PolarPoint& p : w_polar)
        if (!(p.rho > 0.0)) throw DomainViolation("rhs_laguerre: rho must be positive");
    const DomainKind domain = classify_complex_domain(h);
    const GeneralSeries series = build_laguerre_ks_series(h, w_polar, policy.max_degree);
    return run_series(h.dim(), false, policy, domain,
                      [&](int d) { return shell_sum(series, d, false, exec); });
}

Complex rhs_real_shell(const ComplexSquareMatrix& s, const std::vector<double>& x, int degree,
                       Exec exec) {
    validate_real_inputs(s, x.size());
    const SymmetricSeries series = build_real_ks_series(s, x, degree);
    return shell_sum(series, degree, true, exec);
}

Complex rhs_complex_shell(const ComplexSquareMatrix& h, const std::vector<Complex>& w, int degree,
                          Exec exec) {
    const GeneralSeries series = build_complex_ks_series(h, w, degree);
    return shell_sum(series, degree, false, exec);
}

Complex rhs_laguerre_shell(const ComplexSquareMatrix& h, const std::vector<PolarPoint>& w_polar,
                           int degree, Exec exec) {
    const GeneralSeries series = build_laguerre_ks_series(h, w_polar, degree);
    return shell_sum(series, degree, false, exec);
}

Complex rhs_complex_shell_reference(const ComplexSquareMatrix& h, const std::vector<Complex>& w,
                                    int degree) {
    const int n = h.dim();
    const GeneralSeries series = build_complex_ks_series(h, w, degree);
    std::vector<int> rsum(static_cast<std::size_t>(n)), csum(static_cast<std::size_t>(n));
    mindex::ShellCursor cursor(n, degree, false);
    KahanComplex acc;
    do {
        acc.add(series.eval(cursor.cells(), rsum, csum));
    } while (cursor.advance());
    return acc.value();
}

SeriesResult exp_quadratic_real(const ComplexSquareMatrix& s, const std::vector<Complex>& y,
                                const TruncationPolicy& policy, Exec exec) {
    if (y.size() != static_cast<std::size_t>(s.dim())) throw std::invalid_argument("dimension mismatch");
    if (!is_real_symmetric(s)) throw AsymmetryError("matrix not real symmetric");
    const SymmetricSeries series = build_exp_quadratic_real_series(s, y, policy.max_degree);
    return run_series(s.dim(), true, policy, DomainKind::hermitian_frobenius,
                      [&](int d) { return shell_sum(series, d, true, exec); });
}

SeriesResult exp_quadratic_complex(const ComplexSquareMatrix& h, const std::vector<Complex>& z,
                                   const TruncationPolicy& policy, Exec exec) {
    if (z.size() != static_cast<std::size_t>(h.dim())) throw std::invalid_argument("dimension mismatch");
    const GeneralSeries series = build_exp_quadratic_complex_series(h, z, policy.max_degree);
    return run_series(h.dim(), false, policy, DomainKind::max_norm_ball,
                      [&](int d) { return shell_sum(series, d, false, exec); });
}

CharlierBilinear charlier_bilinear_check(double u, double v, double x, double y, int degree_cap) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainViolation("charlier_bilinear: x, y must be positive");
    if (std::abs(u) >= x * y / 4.0 || std::abs(v) >= x * y / 4.0)
        throw DomainViolation("charlier_bilinear: |u|, |v| must be below xy/4");

    CharlierBilinear out;
    const double denom = x * y - u * v;
    const double pref = x * y / denom;
    const double term1 = pref * std::exp((x * y * (u + v) - u * v * (x + y)) / denom);
    const double term2 = pref * std::exp(-u * v * (x + y) / denom) *
                         poly::bessel_i0_from_square(4.0 * u * v * x * x * y * y / (denom * denom));
    out.lhs = term1 - term2;

    KahanReal acc;
    for (int k = 1; k <= degree_cap; ++k) {
        for (int j = 0; j < k; ++j) {
            const double weight =
                (std::pow(u, j) * std::pow(v, k) + std::pow(u, k) * std::pow(v, j)) /
                (factorial(j) * factorial(k));
            acc.add(weight * poly::charlier(j, k, x) * poly::charlier(j, k, y));
        }
    }
    out.rhs = acc.value();
    return out;
}

}  // namespace h2d::ks
