#include "hermite2d/multi_index.hpp"

#include <stdexcept>

namespace h2d::mindex {

namespace {

// C(n, k) in exact 64-bit arithmetic; shell sizes stay far below 2^63 at the
// dimensions and degrees this library supports.
std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int j = 1; j <= k; ++j) {
        result = result * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    }
    return result;
}

// compositions of `degree` into `cells` parts
std::uint64_t composition_count(int degree, int cells) {
    return binom_u64(degree + cells - 1, cells - 1);
}

}  // namespace

int MultiIndexMatrix::entry(int m, int n) const {
    if (!symmetric) return cells[static_cast<std::size_t>(m) * dim + n];
    if (m > n) std::swap(m, n);
    // row-major upper triangle: row m starts at offset m*dim - m(m-1)/2 - m
    const int offset = m * dim - m * (m - 1) / 2 - m;
    return cells[static_cast<std::size_t>(offset) + n];
}

int MultiIndexMatrix::total_degree() const {
    int total = 0;
    for (int v : cells) total += v;
    return total;
}

DerivedSums derived_sums(const MultiIndexMatrix& k) {
    const int n = k.dim;
    DerivedSums out;
    out.row_sums.assign(n, 0);
    out.col_sums.assign(n, 0);
    out.k_real.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int v = k.entry(i, j);
            out.row_sums[i] += v;
            out.col_sums[j] += v;
        }
        out.trace += k.entry(i, i);
        out.k_real[i] = k.entry(i, i) + out.row_sums[i];
    }
    out.total = k.total_degree();
    return out;
}

std::uint64_t shell_count(int n, int degree, bool symmetric) {
    if (n < 1) throw std::invalid_argument("shell_count: dimension must be >= 1");
    if (degree < 0) return 0;
    return composition_count(degree, MultiIndexMatrix::support_size(n, symmetric));
}

ShellCursor::ShellCursor(int n, int degree, bool symmetric)
    : n_(n),
      degree_(degree),
      symmetric_(symmetric),
      free_cells_(MultiIndexMatrix::support_size(n, symmetric)),
      size_(composition_count(degree, free_cells_)),
      cells_(static_cast<std::size_t>(free_cells_), 0) {
    if (n < 1) throw std::invalid_argument("ShellCursor: dimension must be >= 1");
    if (degree < 0) throw std::invalid_argument("ShellCursor: negative degree");
    cells_.back() = degree;  // lexicographically first composition
}

void ShellCursor::seek(std::uint64_t rank) {
    if (rank >= size_) throw std::out_of_range("ShellCursor::seek: rank out of range");
    rank_ = rank;
    int remaining = degree_;
    for (int cell = 0; cell < free_cells_ - 1; ++cell) {
        int value = 0;
        for (;;) {
            const std::uint64_t below = composition_count(remaining - value, free_cells_ - cell - 1);
            if (rank < below) break;
            rank -= below;
            ++value;
        }
        cells_[cell] = value;
        remaining -= value;
    }
    cells_[free_cells_ - 1] = remaining;
}

bool ShellCursor::advance() {
    if (rank_ + 1 >= size_) return false;
    ++rank_;
    const int last = free_cells_ - 1;
    if (cells_[last] > 0) {
        // move one unit from the tail into the cell before it
        cells_[last - 1] += 1;
        cells_[last] -= 1;
        return true;
    }
    // tail empty: clear the rightmost positive cell, bump its left neighbour,
    // park the remainder in the tail
    int j = last - 1;
    while (cells_[j] == 0) --j;
    const int t = cells_[j];
    cells_[j] = 0;
    cells_[j - 1] += 1;
    cells_[last] = t - 1;
    return true;
}

std::vector<MultiIndexMatrix> enumerate_shell(int n, int degree, bool symmetric) {
    std::vector<MultiIndexMatrix> out;
    ShellCursor cursor(n, degree, symmetric);
    out.reserve(cursor.size());
    do {
        out.push_back(cursor.materialize());
    } while (cursor.advance());
    return out;
}

}  // namespace h2d::mindex
