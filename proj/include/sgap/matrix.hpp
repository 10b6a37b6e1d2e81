#pragma once

#include <set>
#include <string>
#include <vector>

#include "sgap/bigint.hpp"
#include "sgap/poly.hpp"

namespace sgap {

// Dense matrix of arbitrary-precision integers, row-major. Small by design:
// the adjacency matrices this library produces stay well under a few hundred
// rows, so O(n^3) exact algorithms with zero-skipping inner loops are plenty.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), BigInt(0)) {}
    static IntMatrix identity(int n);
    // Build from nested initializer lists of longs (test convenience).
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& at(int i, int j) { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }
    const BigInt& at(int i, int j) const { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    // Zero-skipping multiplication: cost is proportional to the number of
    // nonzero entries of the right factor per row, which makes powers of the
    // sparse adjacency matrices cheap.
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix scaled(const BigInt& c) const;
    BigInt trace() const;

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Intermediate entries are determinants of leading minors, so no fractions
// ever appear and entry growth is bounded by the Hadamard bound.
BigInt det(const IntMatrix& m);

// Monic characteristic polynomial det(x*Id - A), degree n, computed by exact
// evaluation-interpolation: Bareiss determinants at the n+1 consecutive
// integer nodes centered at zero, then integer forward-difference (Newton)
// interpolation with one exact division by n! at the end.
IntPoly char_poly(const IntMatrix& a);

// Exact trace of A^n (n >= 1) via repeated exact multiplication.
BigInt trace_power(const IntMatrix& a, int n);

// Traces of A^1..A^n in one incremental sweep (each step one sparse multiply).
std::vector<BigInt> trace_powers_upto(const IntMatrix& a, int n);

// Closed-form determinant of the "companion-with-pivot-column" matrix family:
// E is n x n with E[i][i+1] = -1 (superdiagonal), E[i][1] = -1 exactly for the
// rows i in `pivots` (1-based, nonempty), all other off-diagonal entries 0,
// and E[i][i] = diag[i-1] for the rows whose (i,1) entry is not forced (the
// forced entry wins at (1,1) when 1 is a pivot row). The determinant is
//     [1 not a pivot] * (product of all diag[i])
//       - sum over pivots p of (product of diag[i] for i = p+1 .. n),
// the empty product (p = n) contributing -1.
IntPoly pivot_column_det(int n, const std::vector<IntPoly>& diag, const std::set<int>& pivots);

// The same matrix family assembled explicitly over Z[x], for cross-checking
// pivot_column_det against a generic polynomial determinant.
std::vector<std::vector<IntPoly>> pivot_column_matrix(int n, const std::vector<IntPoly>& diag,
                                                  const std::set<int>& pivots);

// Generic determinant of a small polynomial matrix by cofactor expansion with
// zero skipping. Exponential worst case; intended as an independent oracle for
// n <= 10 in tests and the acceptance suite, not as a production path.
IntPoly poly_det_cofactor(const std::vector<std::vector<IntPoly>>& m);

}  // namespace sgap
