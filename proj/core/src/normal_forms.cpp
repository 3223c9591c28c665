#include <stdexcept>

#include "bct/polymat.hpp"

namespace bct {

namespace {

// Elementary 2x2 row transform [x y; z w] (determinant 1) applied to rows
// (i, j) of H, with the inverse [w -y; -z x] accumulated into the columns of
// Uinv so that Uinv stays the exact inverse of the collected row operations.
struct RowOps {
    PolyMatrix& H;
    PolyMatrix& U;     // U * M = H
    PolyMatrix& Uinv;  // H = U^-1-free reconstruction: M = Uinv * H

    void swap(int i, int j) {
        for (int k = 0; k < H.cols(); ++k) std::swap(H.at(i, k), H.at(j, k));
        for (int k = 0; k < U.cols(); ++k) std::swap(U.at(i, k), U.at(j, k));
        for (int k = 0; k < Uinv.rows(); ++k) std::swap(Uinv.at(k, i), Uinv.at(k, j));
    }

    void combine(int i, int j, const Poly& x, const Poly& y, const Poly& z, const Poly& w) {
        for (int k = 0; k < H.cols(); ++k) {
            Poly hi = H.at(i, k), hj = H.at(j, k);
            H.at(i, k) = x * hi + y * hj;
            H.at(j, k) = z * hi + w * hj;
        }
        for (int k = 0; k < U.cols(); ++k) {
            Poly ui = U.at(i, k), uj = U.at(j, k);
            U.at(i, k) = x * ui + y * uj;
            U.at(j, k) = z * ui + w * uj;
        }
        for (int k = 0; k < Uinv.rows(); ++k) {
            Poly ci = Uinv.at(k, i), cj = Uinv.at(k, j);
            Uinv.at(k, i) = ci * w - cj * z;
            Uinv.at(k, j) = cj * x - ci * y;
        }
    }

    // row_i += q * row_j
    void addmul(int i, int j, const Poly& q) {
        if (q.is_zero()) return;
        for (int k = 0; k < H.cols(); ++k) H.at(i, k) += q * H.at(j, k);
        for (int k = 0; k < U.cols(); ++k) U.at(i, k) += q * U.at(j, k);
        for (int k = 0; k < Uinv.rows(); ++k) Uinv.at(k, j) -= q * Uinv.at(k, i);
    }

    // Divide row i by the unit u (used to normalize pivots monic).
    void scale(int i, const Rational& u) {
        if (u == 1) return;
        const Rational inv = Rational(1) / u;
        for (int k = 0; k < H.cols(); ++k) H.at(i, k) = H.at(i, k) * inv;
        for (int k = 0; k < U.cols(); ++k) U.at(i, k) = U.at(i, k) * inv;
        for (int k = 0; k < Uinv.rows(); ++k) Uinv.at(k, i) = Uinv.at(k, i) * u;
    }

    // Zero out H(i, col) against the pivot at H(p, col), leaving the gcd at p.
    void eliminate(int p, int i, int col) {
        const Poly a = H.at(p, col), b = H.at(i, col);
        if (b.is_zero()) return;
        if (auto q = b.exact_div(a); q && !a.is_zero()) {
            addmul(i, p, -*q);
            return;
        }
        auto [g, x, y] = poly_gcd_bezout(a, b);
        combine(p, i, x, y, -*b.exact_div(g), *a.exact_div(g));
    }
};

}  // namespace

HermiteResult hermite_form(const PolyMatrix& m) {
    HermiteResult res{m, PolyMatrix::identity(m.rows()), PolyMatrix::identity(m.rows()), {}};
    RowOps ops{res.H, res.U, res.Uinv};
    int pr = 0;
    for (int j = 0; j < m.cols() && pr < m.rows(); ++j) {
        // Pivot: smallest degree, smallest row index on ties.
        int sel = -1;
        for (int i = pr; i < m.rows(); ++i) {
            if (res.H.at(i, j).is_zero()) continue;
            if (sel < 0 || res.H.at(i, j).degree() < res.H.at(sel, j).degree()) sel = i;
        }
        if (sel < 0) continue;
        if (sel != pr) ops.swap(pr, sel);
        for (int i = pr + 1; i < m.rows(); ++i) ops.eliminate(pr, i, j);
        ops.scale(pr, res.H.at(pr, j).lead());
        for (int i = 0; i < pr; ++i) {
            auto [q, r] = res.H.at(i, j).divmod(res.H.at(pr, j));
            ops.addmul(i, pr, -q);
        }
        res.pivot_cols.push_back(j);
        ++pr;
    }
    return res;
}

int rank(const PolyMatrix& m) { return hermite_form(m).rank(); }

bool is_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return hermite_form(m).H == PolyMatrix::identity(m.rows());
}

std::vector<Poly> SmithResult::diagonal() const {
    std::vector<Poly> d;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D.at(i, i));
    return d;
}

SmithResult smith_form(const PolyMatrix& m) {
    SmithResult res{PolyMatrix::identity(m.rows()), m, PolyMatrix::identity(m.cols()),
                    PolyMatrix::identity(m.rows()), PolyMatrix::identity(m.cols())};
    PolyMatrix& A = res.D;
    // Row ops keep M = U * A * V: A <- E*A pairs with U <- U*E^-1, and the
    // running inverse Uinv <- E*Uinv. RowOps already implements exactly this
    // triple if we feed it (A, Uinv, U). Column ops are the transposed story.
    RowOps rops{A, res.Uinv, res.U};

    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < A.rows(); ++k) std::swap(A.at(k, i), A.at(k, j));
        for (int k = 0; k < res.Vinv.rows(); ++k) std::swap(res.Vinv.at(k, i), res.Vinv.at(k, j));
        for (int k = 0; k < res.V.cols(); ++k) std::swap(res.V.at(i, k), res.V.at(j, k));
    };
    // col_j += q * col_src
    auto col_addmul = [&](int j, int src, const Poly& q) {
        if (q.is_zero()) return;
        for (int k = 0; k < A.rows(); ++k) A.at(k, j) += q * A.at(k, src);
        for (int k = 0; k < res.Vinv.rows(); ++k) res.Vinv.at(k, j) += q * res.Vinv.at(k, src);
        for (int k = 0; k < res.V.cols(); ++k) res.V.at(src, k) -= q * res.V.at(j, k);
    };
    // Columns (t, j) <- [x  -b/g; y  a/g] pattern: new col_t carries the gcd.
    auto col_eliminate = [&](int t, int j, int row) {
        const Poly a = A.at(row, t), b = A.at(row, j);
        if (b.is_zero()) return;
        if (auto q = b.exact_div(a); q && !a.is_zero()) {
            col_addmul(j, t, -*q);
            return;
        }
        auto [g, x, y] = poly_gcd_bezout(a, b);
        const Poly bg = *b.exact_div(g), ag = *a.exact_div(g);
        for (int k = 0; k < A.rows(); ++k) {
            Poly ct = A.at(k, t), cj = A.at(k, j);
            A.at(k, t) = ct * x + cj * y;
            A.at(k, j) = cj * ag - ct * bg;
        }
        for (int k = 0; k < res.Vinv.rows(); ++k) {
            Poly ct = res.Vinv.at(k, t), cj = res.Vinv.at(k, j);
            res.Vinv.at(k, t) = ct * x + cj * y;
            res.Vinv.at(k, j) = cj * ag - ct * bg;
        }
        for (int k = 0; k < res.V.cols(); ++k) {
            Poly rt = res.V.at(t, k), rj = res.V.at(j, k);
            res.V.at(t, k) = ag * rt + bg * rj;
            res.V.at(j, k) = x * rj - y * rt;
        }
    };

    const int steps = std::min(m.rows(), m.cols());
    for (int t = 0; t < steps; ++t) {
        // Pivot selection: smallest degree, then smallest row, then column.
        int pi = -1, pj = -1;
        for (int i = t; i < A.rows(); ++i)
            for (int j = t; j < A.cols(); ++j) {
                if (A.at(i, j).is_zero()) continue;
                if (pi < 0 || A.at(i, j).degree() < A.at(pi, pj).degree()) pi = i, pj = j;
            }
        if (pi < 0) break;  // remaining block is zero
        if (pi != t) rops.swap(t, pi);
        if (pj != t) col_swap(t, pj);

        for (bool settled = false; !settled;) {
            for (bool changed = true; changed;) {
                changed = false;
                for (int i = t + 1; i < A.rows(); ++i)
                    if (!A.at(i, t).is_zero()) {
                        rops.eliminate(t, i, t);
                        changed = true;
                    }
                for (int j = t + 1; j < A.cols(); ++j)
                    if (!A.at(t, j).is_zero()) {
                        col_eliminate(t, j, t);
                        changed = true;
                    }
            }
            // Divisibility repair: pull in a row holding a non-multiple.
            settled = true;
            for (int i = t + 1; i < A.rows() && settled; ++i)
                for (int j = t + 1; j < A.cols() && settled; ++j)
                    if (!A.at(i, j).divisible_by(A.at(t, t))) {
                        rops.addmul(t, i, Poly(1));
                        settled = false;
                    }
        }
        rops.scale(t, A.at(t, t).lead());
    }
    return res;
}

ColumnCompression column_compress(const PolyMatrix& r) {
    auto h = hermite_form(r.transpose());
    if (h.rank() != r.rows()) throw std::invalid_argument("column_compress: matrix is not full row rank");
    const PolyMatrix w = h.U.transpose();
    const PolyMatrix d = h.H.row_range(0, r.rows()).transpose();
    return {w, d};
}

std::optional<PolyMatrix> solve_left_division(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("solve_left_division: column count mismatch");
    const auto h = hermite_form(a);
    PolyMatrix x(b.rows(), a.rows());
    for (int i = 0; i < b.rows(); ++i) {
        std::vector<Poly> res(static_cast<size_t>(b.cols()));
        for (int j = 0; j < b.cols(); ++j) res[static_cast<size_t>(j)] = b.at(i, j);
        for (int k = 0; k < h.rank(); ++k) {
            const int pc = h.pivot_cols[static_cast<size_t>(k)];
            auto q = res[static_cast<size_t>(pc)].exact_div(h.H.at(k, pc));
            if (!q) return std::nullopt;
            if (q->is_zero()) continue;
            for (int j = pc; j < b.cols(); ++j) res[static_cast<size_t>(j)] -= *q * h.H.at(k, j);
            for (int j = 0; j < a.rows(); ++j) x.at(i, j) += *q * h.U.at(k, j);
        }
        for (const auto& p : res)
            if (!p.is_zero()) return std::nullopt;
    }
    return x;
}

std::optional<PolyMatrix> unimodular_completion(const PolyMatrix& u1) {
    if (u1.rows() > u1.cols())
        throw std::invalid_argument("unimodular_completion: more rows than columns");
    const auto s = smith_form(u1);
    for (const auto& d : s.diagonal())
        if (!d.is_one()) return std::nullopt;  // not left prime
    // u1 = U * [I 0] * V = U * V_top, so the bottom rows of V complete it.
    return s.V.row_range(u1.rows(), u1.cols());
}

ColGcd col_gcd_bezout(const std::vector<Poly>& col) {
    if (col.empty()) throw std::invalid_argument("col_gcd_bezout: empty column");
    ColGcd res{Poly{}, {}};
    for (const auto& p : col) {
        auto [g, x, y] = poly_gcd_bezout(res.pi, p);
        for (auto& v : res.v) v = v * x;
        res.v.push_back(y);
        res.pi = g;
    }
    return res;
}

}  // namespace bct
