#include "bct/minint.hpp"

#include <functional>
#include <stdexcept>

namespace bct {

bool string_less(const SearchString& a, const SearchString& b) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

std::vector<SearchString> sorted_strings(int c) {
    std::vector<SearchString> out;
    SearchString cur;
    std::function<void(int)> rec = [&](int next) {
        out.push_back(cur);
        for (int j = next; j <= c; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

bool is_terminal(const SearchString& s, int c) { return !s.empty() && s.back() == c; }

std::vector<SearchString> terminal_strings(int c) {
    std::vector<SearchString> out;
    for (const auto& s : sorted_strings(c))
        if (is_terminal(s, c)) out.push_back(s);
    return out;
}

std::vector<SearchString> prefixes(const SearchString& s) {
    std::vector<SearchString> out;
    for (size_t k = 0; k <= s.size(); ++k) out.emplace_back(s.begin(), s.begin() + static_cast<long>(k));
    return out;
}

SearchString next_terminal_above(const SearchString& s, int k, int c) {
    for (const auto& t : terminal_strings(c))
        if (string_less(s, t) && static_cast<int>(t.size()) > k) return t;
    return {};
}

std::optional<SearchString> first_new_prefix(const SearchString& s1, const SearchString& s2) {
    const auto in_pre = [](const SearchString& p, const SearchString& s) {
        return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
    };
    for (const auto& p : prefixes(s2))
        if (!in_pre(p, s1)) return p;
    return std::nullopt;
}

std::optional<SearchString> next_nonextension(const SearchString& s, int c) {
    const auto is_prefix = [&](const SearchString& t) {
        return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
    };
    for (const auto& t : sorted_strings(c))
        if (string_less(s, t) && !is_prefix(t)) return t;
    return std::nullopt;
}

NullifyResult nullify(const PolyMatrix& c, const PolyMatrix& p, int i) {
    if (c.cols() != p.cols()) throw std::invalid_argument("nullify: column count mismatch");
    if (i < 0 || i >= c.cols()) throw std::invalid_argument("nullify: column index out of range");
    if (c.col_is_zero(i))
        return {c, p, PolyMatrix::zero(c.rows(), 1), PolyMatrix::identity(p.rows()), false, true};

    const auto h = hermite_form(p.col(i));
    const Poly pi = h.rank() == 1 ? h.H.at(0, 0) : Poly{};

    PolyMatrix v1 = PolyMatrix::zero(c.rows(), 1);
    for (int r = 0; r < c.rows(); ++r) {
        const auto q = c.at(r, i).exact_div(pi);
        if (!q) return {c, p, PolyMatrix::zero(c.rows(), 1), h.U, true, false};
        v1.at(r, 0) = -*q;
    }
    const PolyMatrix pt = h.U * p;
    const PolyMatrix p1 = pt.row(0);
    const PolyMatrix p2 = pt.row_range(1, pt.rows());
    return {c + v1 * p1, p2, v1, h.U, false, false};
}

ComputeVResult compute_v(const PolyMatrix& c, const PolyMatrix& p) {
    if (c.cols() != p.cols()) throw std::invalid_argument("compute_v: column count mismatch");
    const int q = c.rows(), ncols = c.cols(), prows = p.rows();

    std::vector<int> zero0;
    for (int j = 0; j < ncols; ++j)
        if (c.col_is_zero(j)) zero0.push_back(j);
    // Upper bound on zero columns: for any V,
    // rank(C + V*P) >= rank [C; P] - rank P, and a zero column never meets
    // a row-rank contribution. When C and P interconnect regularly this is
    // the familiar ncols - rank(C).
    const int cap = ncols - (rank(PolyMatrix::vstack(c, p)) - rank(p));
    if (static_cast<int>(zero0.size()) >= cap)
        return {PolyMatrix::zero(q, prows), zero0};

    struct Step {
        PolyMatrix v1, u;
        bool true_skip;
    };
    std::vector<Step> path, best_path;
    int best = 0;

    // DFS over increasing column strings; children in increasing order make
    // the first maximum found the string_less-smallest one.
    std::function<void(const PolyMatrix&, const PolyMatrix&, int, int)> rec =
        [&](const PolyMatrix& ccur, const PolyMatrix& pcur, int start, int depth) {
            if (best >= cap) return;
            for (int j = start; j < ncols; ++j) {
                if (depth + 1 + (ncols - 1 - j) <= best) break;  // cannot beat the incumbent
                PolyMatrix cnext, pnext;
                Step step{PolyMatrix::zero(q, 1), PolyMatrix::identity(pcur.rows()), true};
                if (ccur.col_is_zero(j)) {
                    if (!pcur.col_is_zero(j)) {
                        // Already zero, but a later step could write into this
                        // column: compress P here too so its column vanishes
                        // from the residual.
                        const auto h = hermite_form(pcur.col(j));
                        const PolyMatrix pt = h.U * pcur;
                        step = {PolyMatrix::zero(q, 1), h.U, false};
                        cnext = ccur;
                        pnext = pt.row_range(1, pt.rows());
                    } else {
                        cnext = ccur;
                        pnext = pcur;
                    }
                } else {
                    auto res = nullify(ccur, pcur, j);
                    if (res.fail) continue;
                    step = {res.V1_tilde, res.U, false};
                    cnext = res.C_tilde;
                    pnext = res.P2_tilde;
                }
                path.push_back(step);
                if (depth + 1 > best) {
                    best = depth + 1;
                    best_path = path;
                }
                rec(cnext, pnext, j + 1, depth + 1);
                path.pop_back();
            }
        };
    rec(c, p, 0, 0);

    // Unwind: V = [V1 | V] * U at each non-skip level, innermost first.
    int width = prows;
    for (const auto& s : best_path)
        if (!s.true_skip) --width;
    PolyMatrix v = PolyMatrix::zero(q, width);
    for (auto it = best_path.rbegin(); it != best_path.rend(); ++it) {
        if (it->true_skip) continue;
        v = PolyMatrix::hstack(it->v1, v) * it->u;
    }

    const PolyMatrix final_c = c + v * p;
    std::vector<int> zero_cols;
    for (int j = 0; j < ncols; ++j)
        if (final_c.col_is_zero(j)) zero_cols.push_back(j);
    return {v, zero_cols};
}

OracleResult oracle_max_nullifiable(const PolyMatrix& c, const PolyMatrix& p) {
    if (c.cols() != p.cols()) throw std::invalid_argument("oracle: column count mismatch");
    const int n = c.cols();
    for (int k = n; k >= 1; --k) {
        std::vector<int> pick(static_cast<size_t>(k));
        std::function<const std::vector<int>*(int, int)> comb = [&](int pos, int start) -> const std::vector<int>* {
            if (pos == k) {
                if (solve_left_division(p.select_cols(pick), -c.select_cols(pick))) return &pick;
                return nullptr;
            }
            for (int j = start; j <= n - (k - pos); ++j) {
                pick[static_cast<size_t>(pos)] = j;
                if (const auto* w = comb(pos + 1, j + 1)) return w;
            }
            return nullptr;
        };
        if (const auto* w = comb(0, 0)) return {k, *w};
    }
    return {0, {}};
}

MinintOutcome minimize_interaction(const ControlProblem& p) {
    const auto c0 = bootstrap_regular_controller(p);
    if (!c0) return {SynthStatus::not_regularly_implementable, std::nullopt};
    const Behavior pc = minimal_rep(control_manifest(p));
    const Behavior cm = minimal_rep(*c0);

    auto [v, zero_cols] = compute_v(cm.rep, pc.rep);
    SynthesisResult res;
    res.controller = Behavior{cm.rep + v * pc.rep, p.c_vars};
    res.V = v;
    for (int j : zero_cols) res.irrelevant.push_back(p.c_vars[static_cast<size_t>(j)]);
    res.certificate = make_certificate(p, res.controller);
    return {SynthStatus::ok, res};
}

}  // namespace bct
