// Both sides of the multilinear Hermite generating-function identities
// (Kibble-Slepian formula and its bivariate-Hermite analogues): closed forms
// via dense LU, truncated series via shell enumeration with tail diagnostics.
#pragma once

#include <cstdint>
#include <vector>

#include "hermite2d/core.hpp"
#include "hermite2d/multi_index.hpp"
#include "hermite2d/poly.hpp"

namespace h2d::ks {

// ---------------------------------------------------------------------------
// Dense complex linear algebra (N stays tiny; partial-pivot LU throughout)

class ComplexSquareMatrix {
public:
    ComplexSquareMatrix() = default;
    explicit ComplexSquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    int dim() const { return n_; }
    Complex& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    static ComplexSquareMatrix identity(int n);
    static ComplexSquareMatrix zero(int n) { return ComplexSquareMatrix(n); }
    static ComplexSquareMatrix from_real(int n, const std::vector<double>& entries);

    ComplexSquareMatrix operator+(const ComplexSquareMatrix& rhs) const;
    std::vector<Complex> apply(const std::vector<Complex>& x) const;

    bool all_finite() const;

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

// LU with partial pivoting; throws IllConditioned when the 1-norm condition
// estimate reaches 1e12.
struct LuDecomposition {
    explicit LuDecomposition(const ComplexSquareMatrix& m);
    Complex determinant() const;
    std::vector<Complex> solve(std::vector<Complex> b) const;
    ComplexSquareMatrix inverse() const;
    double condition_estimate() const { return cond_; }

private:
    int n_;
    ComplexSquareMatrix lu_;
    std::vector<int> pivot_;
    int pivot_sign_ = 1;
    double cond_ = 0.0;
};

double frobenius_norm(const ComplexSquareMatrix& m);
double max_norm(const ComplexSquareMatrix& m);
bool is_hermitian(const ComplexSquareMatrix& m, double tol = 1e-12);
bool is_real_symmetric(const ComplexSquareMatrix& m, double tol = 1e-14);

// Theorem domains: Frobenius ball for the real/symmetric and Hermitian
// statements, entrywise max-norm ball of radius 1/N for general complex H.
bool in_domain_real(const ComplexSquareMatrix& s);
bool in_domain_complex(const ComplexSquareMatrix& h);

// Box domain around a Hermitian center, in symmetrized coordinates
// u = (h_{lk}+h_{kl})/2, v = (h_{lk}-h_{kl})/(2i): |h_jj - h0_jj| < delta_jj
// and |u - u0| < delta_lk, |v - v0| < delta_lk for l < k.
bool in_box_domain(const ComplexSquareMatrix& h, const ComplexSquareMatrix& center,
                   const std::vector<double>& delta);

// ---------------------------------------------------------------------------
// Series evaluation

struct TruncationPolicy {
    int max_degree = 30;
    double shell_tol = 1e-9;
    int quiet_shells = 3;
};

enum class DomainKind { max_norm_ball, hermitian_frobenius };

struct SeriesResult {
    Complex value{};
    int degree_reached = 0;       // degree of the last shell above tolerance
    double last_shell_norm = 0.0; // |shell| at the stopping degree
    std::uint64_t term_count = 0;
    DomainKind domain = DomainKind::max_norm_ball;
    bool converged = false;
};

struct TruncationNotConverged : std::runtime_error {
    explicit TruncationNotConverged(SeriesResult r)
        : std::runtime_error("series not converged at max_degree"), partial(r) {}
    SeriesResult partial;
};

// Closed form det(I+S)^{-1/2} exp(X^T S (I+S)^{-1} X) for real symmetric S,
// ||S|| < 1 in Frobenius norm.
double lhs_real(const ComplexSquareMatrix& s, const std::vector<double>& x);

// Closed form det(I+H)^{-1} exp(W* H (I+H)^{-1} W).  General complex H must
// lie in the max-norm ball ||H||_inf < 1/N; Hermitian H is also accepted
// under the weaker Frobenius condition ||H|| < 1.
Complex lhs_complex(const ComplexSquareMatrix& h, const std::vector<Complex>& w);

// Series sides, shell-summed with the stopping rule: `quiet_shells`
// consecutive shells below shell_tol * |partial sum|, or max_degree (which
// throws TruncationNotConverged carrying the partial result).

SeriesResult rhs_real(const ComplexSquareMatrix& s, const std::vector<double>& x,
                      const TruncationPolicy& policy, Exec exec = Exec::parallel);

SeriesResult rhs_complex(const ComplexSquareMatrix& h, const std::vector<Complex>& w,
                         const TruncationPolicy& policy, Exec exec = Exec::parallel);

struct PolarPoint {
    double rho = 0.0;
    double theta = 0.0;
};

// Same sum as rhs_complex with each bivariate Hermite factor replaced by its
// Laguerre closed form (column multinomial times rho^{r-c} e^{-i theta (r-c)}
// L_c^{(r-c)}(rho^2)); agrees with rhs_complex shell by shell.
SeriesResult rhs_laguerre(const ComplexSquareMatrix& h, const std::vector<PolarPoint>& w_polar,
                          const TruncationPolicy& policy, Exec exec = Exec::parallel);

// Single-shell sums, exposed for the shell-equality and hand-expansion tests.
Complex rhs_real_shell(const ComplexSquareMatrix& s, const std::vector<double>& x, int degree,
                       Exec exec = Exec::serial);
Complex rhs_complex_shell(const ComplexSquareMatrix& h, const std::vector<Complex>& w, int degree,
                          Exec exec = Exec::serial);
Complex rhs_laguerre_shell(const ComplexSquareMatrix& h, const std::vector<PolarPoint>& w_polar,
                           int degree, Exec exec = Exec::serial);

// Straight-line sequential evaluation of one shell (plain enumeration, no
// blocking).  Reference implementation kept for testing the blocked kernels
// and for the benchmark.
Complex rhs_complex_shell_reference(const ComplexSquareMatrix& h, const std::vector<Complex>& w,
                                    int degree);

// Shell expansions of exp(-Y^T S Y) (symmetric support, monomial factors) and
// exp(-Z* H Z) (general support); same enumerators as the identities above.
SeriesResult exp_quadratic_real(const ComplexSquareMatrix& s, const std::vector<Complex>& y,
                                const TruncationPolicy& policy, Exec exec = Exec::parallel);
SeriesResult exp_quadratic_complex(const ComplexSquareMatrix& h, const std::vector<Complex>& z,
                                   const TruncationPolicy& policy, Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// Bilinear Charlier identity.
//
// lhs: closed form; rhs: brute-force double sum
//   sum_{0 <= j < k <= cap} (u^j v^k + u^k v^j)/(j! k!) C_j(k;x) C_j(k;y).
// The closed form used here is the one that survives numerical arbitration:
//   xy/(xy-uv) [ exp((xy(u+v) - uv(x+y))/(xy-uv))
//              - exp(-uv(x+y)/(xy-uv)) I_0(2 xy sqrt(uv)/(xy-uv)) ].
struct CharlierBilinear {
    double lhs = 0.0;
    double rhs = 0.0;
};
CharlierBilinear charlier_bilinear_check(double u, double v, double x, double y, int degree_cap);

}  // namespace h2d::ks
