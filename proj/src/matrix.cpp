#include "sgap/matrix.hpp"

#include <sstream>

#include "sgap/errors.hpp"

namespace sgap {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw DimensionError("from_rows: ragged row " + std::to_string(i));
        int j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub: shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix mul: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const BigInt& bkj = o.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::scaled(const BigInt& c) const {
    IntMatrix r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
}

BigInt IntMatrix::trace() const {
    if (!square()) throw DimensionError("trace: matrix not square");
    BigInt t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j).get_str();
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

BigInt det(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("det: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (w.at(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j) swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        const BigInt& pkk = w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const BigInt wik = w.at(i, k);
            if (wik == 0) {
                // Row update degenerates to an exact rescale of the nonzeros.
                for (int j = k + 1; j < n; ++j) {
                    BigInt& wij = w.at(i, j);
                    if (wij == 0) continue;
                    wij = div_exact(pkk * wij, prev);
                }
            } else {
                for (int j = k + 1; j < n; ++j) {
                    BigInt& wij = w.at(i, j);
                    const BigInt& wkj = w.at(k, j);
                    if (wij == 0 && wkj == 0) continue;
                    wij = div_exact(pkk * wij - wik * wkj, prev);
                }
                w.at(i, k) = 0;
            }
        }
        prev = pkk;
    }
    return sign < 0 ? BigInt(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

IntPoly char_poly(const IntMatrix& a) {
    if (!a.square()) throw DimensionError("char_poly: matrix not square");
    int n = a.rows();
    if (n == 0) return IntPoly::constant(1);

    // Evaluate p(c) = det(c*Id - A) at the consecutive nodes c = lo .. lo+n.
    long lo = -(n / 2);
    std::vector<BigInt> val(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        BigInt c(lo + j);
        IntMatrix b(n, n);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                b.at(r, s) = (r == s ? BigInt(c - a.at(r, s)) : BigInt(-a.at(r, s)));
        val[static_cast<size_t>(j)] = det(b);
    }

    // Forward differences: after pass j, val[j] = Delta^j p(lo), an integer.
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i) val[static_cast<size_t>(i)] -= val[static_cast<size_t>(i) - 1];

    // Newton form on consecutive integer nodes:
    //   p(x) = sum_j Delta^j p(lo) * C(x - lo, j).
    // Accumulate n! * p(x) = sum_j Delta^j * (n!/j!) * prod_{i<j} (x - lo - i)
    // over Z, then divide exactly by n!.
    BigInt factorial = 1;
    for (int j = 2; j <= n; ++j) factorial *= j;
    IntPoly acc;
    IntPoly rising = IntPoly::constant(1);  // prod_{i<j} (x - lo - i)
    BigInt scale = factorial;               // n!/j!
    for (int j = 0; j <= n; ++j) {
        acc = acc + rising.scaled(val[static_cast<size_t>(j)] * scale);
        if (j < n) {
            rising = rising * (IntPoly::x() - IntPoly::constant(BigInt(lo + j)));
            scale = div_exact(scale, BigInt(j + 1));
        }
    }
    IntPoly p = acc.div_scalar_exact(factorial);
    if (p.degree() != n || p.leading() != 1)
        throw Error("char_poly: interpolation produced a non-monic result (internal bug)");
    return p;
}

BigInt trace_power(const IntMatrix& a, int n) {
    if (!a.square()) throw DimensionError("trace_power: matrix not square");
    if (n < 1) throw IndexError("trace_power: exponent must be >= 1");
    return trace_powers_upto(a, n).back();
}

std::vector<BigInt> trace_powers_upto(const IntMatrix& a, int n) {
    if (!a.square()) throw DimensionError("trace_powers_upto: matrix not square");
    if (n < 1) throw IndexError("trace_powers_upto: exponent must be >= 1");
    std::vector<BigInt> traces;
    traces.reserve(static_cast<size_t>(n));
    IntMatrix p = a;
    traces.push_back(p.trace());
    for (int m = 2; m <= n; ++m) {
        p = p * a;
        traces.push_back(p.trace());
    }
    return traces;
}

IntPoly pivot_column_det(int n, const std::vector<IntPoly>& diag, const std::set<int>& pivots) {
    if (n < 1) throw DimensionError("pivot_column_det: n must be >= 1");
    if (static_cast<int>(diag.size()) != n)
        throw DimensionError("pivot_column_det: need exactly n diagonal entries");
    if (pivots.empty()) throw IndexError("pivot_column_det: pivot set must be nonempty");
    for (int p : pivots)
        if (p < 1 || p > n) throw IndexError("pivot_column_det: pivot " + std::to_string(p) + " outside 1.." + std::to_string(n));

    // Expand along column 1. Each pivot row p contributes -prod(diag[p..n-1])
    // (0-based: suffix[p]), the sign from the cofactor cancelling against the
    // lower-triangular block of superdiagonal -1 entries; suffix[n] = 1 is the
    // empty product for p = n. When row 1 is not a pivot its diagonal entry
    // survives at (1,1) and adds the full product suffix[0].
    std::vector<IntPoly> suffix(static_cast<size_t>(n) + 1);
    suffix[static_cast<size_t>(n)] = IntPoly::constant(1);
    for (int i = n - 1; i >= 0; --i)
        suffix[static_cast<size_t>(i)] = diag[static_cast<size_t>(i)] * suffix[static_cast<size_t>(i) + 1];
    IntPoly acc;
    if (pivots.count(1) == 0) acc = suffix[0];
    for (int p : pivots) acc = acc - suffix[static_cast<size_t>(p)];
    return acc;
}

std::vector<std::vector<IntPoly>> pivot_column_matrix(int n, const std::vector<IntPoly>& diag,
                                                  const std::set<int>& pivots) {
    if (static_cast<int>(diag.size()) != n)
        throw DimensionError("pivot_column_matrix: need exactly n diagonal entries");
    std::vector<std::vector<IntPoly>> m(static_cast<size_t>(n),
                                        std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) m[size_t(i)][size_t(i)] = diag[size_t(i)];
    for (int i = 0; i + 1 < n; ++i) m[size_t(i)][size_t(i) + 1] = IntPoly::constant(-1);
    for (int p : pivots) m[size_t(p) - 1][0] = IntPoly::constant(-1);  // wins at (1,1) if p = 1
    return m;
}

namespace {

IntPoly poly_det_rec(const std::vector<std::vector<IntPoly>>& m, std::vector<int>& cols, int row) {
    int n = static_cast<int>(m.size());
    if (row == n) return IntPoly::constant(1);
    IntPoly acc;
    int pos = 0;
    for (size_t ci = 0; ci < cols.size(); ++ci, ++pos) {
        int c = cols[ci];
        const IntPoly& e = m[static_cast<size_t>(row)][static_cast<size_t>(c)];
        if (e.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != ci) rest.push_back(cols[k]);
        IntPoly minor = poly_det_rec(m, rest, row + 1);
        IntPoly term = e * minor;
        acc = (pos % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

IntPoly poly_det_cofactor(const std::vector<std::vector<IntPoly>>& m) {
    int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw DimensionError("poly_det_cofactor: not square");
    std::vector<int> cols(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cols[static_cast<size_t>(i)] = i;
    return poly_det_rec(m, cols, 0);
}

}  // namespace sgap
