// Shared numeric infrastructure: error types, compensated summation,
// factorial/binomial helpers, deterministic blocked reductions, and the
// seedable RNG used by all verification corpora.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2d {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors

struct DomainViolation : std::runtime_error {
    explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};
struct AsymmetryError : std::runtime_error {
    explicit AsymmetryError(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroParameter : std::runtime_error {
    explicit ZeroParameter(const std::string& what) : std::runtime_error(what) {}
};
struct QuadratureUnderResolved : std::runtime_error {
    explicit QuadratureUnderResolved(const std::string& what) : std::runtime_error(what) {}
};
struct NotSPD : std::runtime_error {
    explicit NotSPD(const std::string& what) : std::runtime_error(what) {}
};
struct NotPD : std::runtime_error {
    explicit NotPD(const std::string& what) : std::runtime_error(what) {}
};
struct DivergentProduct : std::runtime_error {
    explicit DivergentProduct(const std::string& what) : std::runtime_error(what) {}
};
struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Compensated summation

template <typename Value>
struct KahanAccumulator {
    Value sum{};
    Value compensation{};

    void add(Value value) {
        const Value y = value - compensation;
        const Value t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    Value value() const { return sum; }
};

using KahanReal = KahanAccumulator<double>;
using KahanComplex = KahanAccumulator<Complex>;

// ---------------------------------------------------------------------------
// Factorials and binomials.
//
// Exact integer arithmetic up to 20!, lgamma accumulation above; the
// identities under test stay below degree ~40 where this keeps >= 9
// significant digits.

inline double factorial(int n) {
    static const double table[21] = {
        1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0, 362880.0,
        3628800.0, 39916800.0, 479001600.0, 6227020800.0, 87178291200.0,
        1307674368000.0, 20922789888000.0, 355687428096000.0,
        6402373705728000.0, 121645100408832000.0, 2432902008176640000.0};
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (n <= 20) return table[n];
    return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

inline double ln_factorial(int n) {
    if (n < 0) throw std::invalid_argument("ln_factorial: negative argument");
    if (n <= 20) return std::log(factorial(n));
    return std::lgamma(static_cast<double>(n) + 1.0);
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 20) return factorial(n) / (factorial(k) * factorial(n - k));
    return std::exp(ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k));
}

// binom(a, k) for integer a of either sign, as the falling-factorial product
// a(a-1)...(a-k+1)/k!.  Needed by the Laguerre series with negative integer
// superscripts, where a gamma-quotient evaluation would hit poles.
inline double binomial_product(double a, int k) {
    if (k < 0) return 0.0;
    double result = 1.0;
    for (int j = 1; j <= k; ++j) result *= (a - static_cast<double>(k - j)) / static_cast<double>(j);
    return result;
}

// ---------------------------------------------------------------------------
// Deterministic reductions.
//
// All large sums go through a fixed block structure: terms are grouped into
// blocks of kReduceBlock, each block is reduced by a fixed pairwise tree, and
// the block partials are reduced by the same tree.  The result is a function
// of the term values alone, so serial and OpenMP execution agree bit for bit
// and the answer does not depend on the worker count.

enum class Exec { serial, parallel };

inline constexpr std::size_t kReduceBlock = 4096;

template <typename Value>
Value pairwise_sum(std::span<const Value> v) {
    if (v.size() <= 8) {
        Value s{};
        for (const Value& x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

// Sums term(i) for i in [0, n).  TermFn must be pure.
template <typename TermFn>
Complex blocked_sum(std::size_t n, TermFn&& term, Exec exec) {
    if (n == 0) return Complex{};
    const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<Complex> partial(nblocks);
#pragma omp parallel if (exec == Exec::parallel)
    {
        std::vector<Complex> buf(kReduceBlock);
#pragma omp for schedule(dynamic)
        for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
            const std::size_t begin = static_cast<std::size_t>(b) * kReduceBlock;
            const std::size_t end = std::min(begin + kReduceBlock, n);
            for (std::size_t i = begin; i < end; ++i) buf[i - begin] = term(i);
            partial[static_cast<std::size_t>(b)] =
                pairwise_sum(std::span<const Complex>(buf.data(), end - begin));
        }
    }
    return pairwise_sum(std::span<const Complex>(partial));
}

// ---------------------------------------------------------------------------
// RNG: splitmix64.  Chosen by algorithm identity so corpora reproduce across
// platforms and languages from the same 64-bit seed.

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform over the closed unit disk, by rejection from the square
    Complex unit_disk() {
        for (;;) {
            const double re = uniform(-1.0, 1.0);
            const double im = uniform(-1.0, 1.0);
            if (re * re + im * im <= 1.0) return {re, im};
        }
    }

private:
    std::uint64_t state_;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace h2d
