#include "bct/polymat.hpp"

#include <stdexcept>

namespace bct {

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows*cols");
}

PolyMatrix PolyMatrix::of(std::vector<std::vector<Poly>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    PolyMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::row_is_zero(int i) const {
    for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

bool PolyMatrix::col_is_zero(int j) const {
    for (int i = 0; i < rows_; ++i)
        if (!at(i, j).is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m(*this);
    for (auto& p : m.e_) p = -p;
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    PolyMatrix m(a);
    for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    PolyMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

PolyMatrix PolyMatrix::row(int i) const { return row_range(i, i + 1); }

PolyMatrix PolyMatrix::col(int j) const { return select_cols({j}); }

PolyMatrix PolyMatrix::row_range(int r0, int r1) const {
    PolyMatrix m(r1 - r0, cols_);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i - r0, j) = at(i, j);
    return m;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<int>& js) const {
    PolyMatrix m(rows_, static_cast<int>(js.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t k = 0; k < js.size(); ++k) m.at(i, static_cast<int>(k)) = at(i, js[k]);
    return m;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<int>& is) const {
    PolyMatrix m(static_cast<int>(is.size()), cols_);
    for (size_t k = 0; k < is.size(); ++k)
        for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(k), j) = at(is[k], j);
    return m;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
    PolyMatrix m(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0)
        throw std::invalid_argument("vstack col mismatch");
    const int cols = a.rows_ == 0 ? b.cols_ : a.cols_;
    PolyMatrix m(a.rows_ + b.rows_, cols);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < cols; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
    return m;
}

}  // namespace bct
