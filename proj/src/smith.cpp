#include "sgap/smith.hpp"

#include <sstream>

#include "sgap/errors.hpp"

namespace sgap {

int SmithForm::rank() const {
    int r = 0;
    for (const auto& d : diag)
        if (d != 0) ++r;
    return r;
}

BigInt SmithForm::nonzero_product() const {
    BigInt p = 1;
    for (const auto& d : diag)
        if (d != 0) p *= d;
    return p;
}

std::string SmithForm::to_string() const {
    std::ostringstream out;
    out << "diag(";
    for (size_t i = 0; i < diag.size(); ++i) out << (i ? ", " : "") << diag[i].get_str();
    out << ")";
    return out.str();
}

SmithForm smith_normal_form(const IntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    int nd = std::min(rows, cols);
    IntMatrix w = m;
    SmithForm result;
    result.diag.assign(static_cast<size_t>(nd), BigInt(0));

    for (int t = 0; t < nd; ++t) {
        // Smallest nonzero magnitude in the remaining submatrix keeps entry
        // growth in check (the usual SNF pivot heuristic).
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const BigInt& v = w.at(i, j);
                if (v == 0) continue;
                BigInt a = abs(v);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // remaining submatrix is zero; zeros trail
        if (pi != t)
            for (int j = t; j < cols; ++j) swap(w.at(t, j), w.at(pi, j));
        if (pj != t)
            for (int i = t; i < rows; ++i) swap(w.at(i, t), w.at(i, pj));

        bool settled = false;
        while (!settled) {
            settled = true;
            // Clear column t by division with remainder; a nonzero remainder
            // is strictly smaller than the pivot, so swapping it up makes
            // progress and the loop terminates.
            for (int i = t + 1; i < rows; ++i) {
                if (w.at(i, t) == 0) continue;
                BigInt q = w.at(i, t) / w.at(t, t);  // C++ truncated division is fine here
                if (q != 0)
                    for (int j = t; j < cols; ++j) w.at(i, j) -= q * w.at(t, j);
                if (w.at(i, t) != 0) {
                    for (int j = t; j < cols; ++j) swap(w.at(t, j), w.at(i, j));
                    settled = false;
                }
            }
            if (!settled) continue;
            // Same for row t.
            for (int j = t + 1; j < cols; ++j) {
                if (w.at(t, j) == 0) continue;
                BigInt q = w.at(t, j) / w.at(t, t);
                if (q != 0)
                    for (int i = t; i < rows; ++i) w.at(i, j) -= q * w.at(i, t);
                if (w.at(t, j) != 0) {
                    for (int i = t; i < rows; ++i) swap(w.at(i, t), w.at(i, j));
                    settled = false;
                }
            }
            if (!settled) continue;
            // Divisibility: the pivot must divide every remaining entry. If
            // some w[i][j] resists, fold row i into row t and restart; the
            // next reduction strictly shrinks the pivot.
            for (int i = t + 1; i < rows && settled; ++i)
                for (int j = t + 1; j < cols; ++j) {
                    if (w.at(i, j) % w.at(t, t) != 0) {
                        for (int c = t; c < cols; ++c) w.at(t, c) += w.at(i, c);
                        settled = false;
                        break;
                    }
                }
        }
        result.diag[static_cast<size_t>(t)] = abs(w.at(t, t));
    }
    return result;
}

}  // namespace sgap
