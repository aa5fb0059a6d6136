// Enumeration of the N x N nonnegative-integer index matrices K the
// multilinear sums run over, in total-degree shells.  Symmetric matrices use
// the upper-triangle (incl. diagonal) as free cells; general matrices use all
// N^2 cells.  Enumeration order is lexicographic over the free-cell vector
// and supports O(N degree) seeking by rank, which is what lets shell sums
// fan out across workers deterministically.
#pragma once

#include <cstdint>
#include <vector>

#include "hermite2d/core.hpp"

namespace h2d::mindex {

struct MultiIndexMatrix {
    int dim = 0;
    bool symmetric = false;
    std::vector<int> cells;  // free cells, row-major over the support

    // number of free cells for an N x N support
    static int support_size(int n, bool symmetric) {
        return symmetric ? n * (n + 1) / 2 : n * n;
    }

    // entry (m, n) of the full matrix, mirroring across the diagonal when
    // symmetric
    int entry(int m, int n) const;
    int total_degree() const;
};

struct DerivedSums {
    std::vector<int> row_sums;  // r_m over the full (mirrored) matrix
    std::vector<int> col_sums;  // c_n
    std::vector<int> k_real;    // k_l = k_{l,l} + sum_j k_{l,j}; diagonal counts twice
    int trace = 0;
    int total = 0;  // sum over free cells
};

DerivedSums derived_sums(const MultiIndexMatrix& k);

// number of matrices in the shell: C(degree + F - 1, F - 1) with F free cells
std::uint64_t shell_count(int n, int degree, bool symmetric);

// Lazy cursor over one shell.  Items appear in increasing lexicographic order
// of the free-cell vector; two cursors over the same shell yield identical
// sequences.
class ShellCursor {
public:
    ShellCursor(int n, int degree, bool symmetric);

    std::uint64_t size() const { return size_; }
    const std::vector<int>& cells() const { return cells_; }
    std::uint64_t rank() const { return rank_; }

    void seek(std::uint64_t rank);
    // advance to the next item; false once the shell is exhausted
    bool advance();

    MultiIndexMatrix materialize() const { return {n_, symmetric_, cells_}; }

private:
    int n_;
    int degree_;
    bool symmetric_;
    int free_cells_;
    std::uint64_t size_;
    std::uint64_t rank_ = 0;
    std::vector<int> cells_;
};

// Materializing helper for tests and small shells.
std::vector<MultiIndexMatrix> enumerate_shell(int n, int degree, bool symmetric);

}  // namespace h2d::mindex
