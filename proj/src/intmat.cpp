#include "qtorus/intmat.hpp"

#include <sstream>

namespace qtorus {

namespace {

i64 det_recursive(const IntMat& m, std::vector<int>& cols, int row) {
    const int n = m.rows();
    if (row == n) return 1;
    if (static_cast<int>(cols.size()) == 1) return m(row, cols[0]);
    i64 acc = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const int c = cols[i];
        if (m(row, c) != 0) {
            std::vector<int> rest;
            rest.reserve(cols.size() - 1);
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != i) rest.push_back(cols[j]);
            i64 minor = det_recursive(m, rest, row + 1);
            i64 term = checked_mul(m(row, c), minor);
            if (i % 2 == 1) term = checked_sub(0, term);
            acc = checked_add(acc, term);
        }
    }
    return acc;
}

} // namespace

i64 IntMat::det() const {
    if (rows_ != cols_) throw validation_error("IntMat::det: not square");
    if (rows_ == 0) return 1;
    std::vector<int> cols(cols_);
    for (int j = 0; j < cols_; ++j) cols[j] = j;
    return det_recursive(*this, cols, 0);
}

IntMat IntMat::unimodular_inverse() const {
    const i64 d = det();
    if (d != 1 && d != -1) throw validation_error("IntMat: matrix is not unimodular (det " + std::to_string(d) + ")");
    const int n = rows_;
    IntMat inv(n, n);
    if (n == 1) {
        inv(0, 0) = d; // 1/d = d for d = +-1
        return inv;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // cofactor C_ji for the (j, i) entry of the adjugate
            IntMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = (*this)(r, c);
                }
                ++rr;
            }
            i64 cof = minor.det();
            if ((i + j) % 2 == 1) cof = checked_sub(0, cof);
            inv(i, j) = checked_mul(cof, d); // divide by det = multiply for +-1
        }
    return inv;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? "," : "");
        os << ']' << (i + 1 < rows_ ? "," : "");
    }
    os << ']';
    return os.str();
}

} // namespace qtorus
