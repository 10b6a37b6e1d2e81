#pragma once

#include <string>
#include <vector>

#include "sgap/matrix.hpp"

namespace sgap {

// Diagonal of the Smith normal form: nonnegative entries d_1 | d_2 | ... with
// all zeros trailing. Length = min(rows, cols) of the input.
struct SmithForm {
    std::vector<BigInt> diag;

    int rank() const;
    // Product of the nonzero entries (= |det| for square nonsingular input).
    BigInt nonzero_product() const;
    bool operator==(const SmithForm& o) const = default;
    std::string to_string() const;
};

// Smith normal form over Z by repeated pivot reduction. Pivot selection takes
// the smallest nonzero magnitude in the remaining submatrix, with row/column
// division-with-remainder reduction; no transformation matrices are kept.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace sgap
