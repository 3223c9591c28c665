#ifndef BCT_POLYMAT_HPP
#define BCT_POLYMAT_HPP

#include <optional>
#include <vector>

#include "bct/poly.hpp"

namespace bct {

/// Dense matrix of polynomials, row-major. Zero-row and zero-column
/// matrices are legal and show up routinely (empty kernel representations).
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    PolyMatrix(int rows, int cols, std::vector<Poly> entries);
    /// Row-major initializer, e.g. PolyMatrix::of({{a, b}, {c, d}}).
    static PolyMatrix of(std::vector<std::vector<Poly>> rows);
    static PolyMatrix identity(int n);
    static PolyMatrix zero(int rows, int cols) { return {rows, cols}; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool row_is_zero(int i) const;
    bool col_is_zero(int j) const;

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    PolyMatrix transpose() const;
    PolyMatrix row(int i) const;
    PolyMatrix col(int j) const;
    /// Rows [r0, r1) as a matrix.
    PolyMatrix row_range(int r0, int r1) const;
    /// The listed columns, in the given order.
    PolyMatrix select_cols(const std::vector<int>& js) const;
    PolyMatrix select_rows(const std::vector<int>& is) const;

    static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Poly> e_;
};

/// Row echelon (Hermite) form H = U * M with U unimodular: zero rows at the
/// bottom, monic pivots, entries above a pivot of strictly smaller degree.
/// Uinv = U^-1 is accumulated alongside since several callers need it.
struct HermiteResult {
    PolyMatrix H, U, Uinv;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};
HermiteResult hermite_form(const PolyMatrix& m);

/// Rank over the fraction field R(x).
int rank(const PolyMatrix& m);

/// True iff m is square with constant nonzero determinant.
bool is_unimodular(const PolyMatrix& m);

/// Smith decomposition M = U * D * V with U, V unimodular and D
/// diagonal-rectangular, monic diagonal, d1 | d2 | ... .
/// Uinv, Vinv satisfy Uinv * M * Vinv = D.
struct SmithResult {
    PolyMatrix U, D, V, Uinv, Vinv;
    /// Diagonal entries, including trailing zeros.
    std::vector<Poly> diagonal() const;
};
SmithResult smith_form(const PolyMatrix& m);

/// For full-row-rank R, a unimodular W with R * W = [D 0], D square nonsingular.
/// Throws std::invalid_argument if R is rank deficient.
struct ColumnCompression {
    PolyMatrix W, D;
};
ColumnCompression column_compress(const PolyMatrix& r);

/// Polynomial solution X of X * A = B, if each row of B lies in the row
/// module of A. "No solution" is a normal outcome.
std::optional<PolyMatrix> solve_left_division(const PolyMatrix& a, const PolyMatrix& b);

/// Completes a left-prime U1 (rows <= cols, Smith form [I 0]) to a unimodular
/// [U1; U2]. Returns nullopt when U1 is not left prime.
std::optional<PolyMatrix> unimodular_completion(const PolyMatrix& u1);

/// Monic gcd of a column with a Bezout witness row: v * col = pi.
/// All-zero column gives pi = 0, v = 0.
struct ColGcd {
    Poly pi;
    std::vector<Poly> v;
};
ColGcd col_gcd_bezout(const std::vector<Poly>& col);

}  // namespace bct

#endif
