#ifndef BCT_MININT_HPP
#define BCT_MININT_HPP

#include <optional>
#include <vector>

#include "bct/control.hpp"

namespace bct {

/// Strictly increasing index string over {1..c}; the empty string is the
/// search-tree root. Symbols are 1-based to match the usual hand notation.
using SearchString = std::vector<int>;

/// Prefix-first (DFS preorder) total order: a proper prefix precedes its
/// extensions, otherwise compare at the first differing position.
bool string_less(const SearchString& a, const SearchString& b);

/// All 2^c increasing strings in ascending string_less order.
std::vector<SearchString> sorted_strings(int c);

/// Strings ending in the last symbol c (the terminal nodes).
std::vector<SearchString> terminal_strings(int c);

bool is_terminal(const SearchString& s, int c);

/// All prefixes of s, including the empty string and s itself.
std::vector<SearchString> prefixes(const SearchString& s);

/// Smallest terminal sigma with sigma > s and |sigma| > k; empty when none.
SearchString next_terminal_above(const SearchString& s, int k, int c);

/// Smallest element of pre(s2) not in pre(s1); nullopt when s2 is a prefix
/// of s1 (the set is empty).
std::optional<SearchString> first_new_prefix(const SearchString& s1, const SearchString& s2);

/// Smallest s2 > s with s not a prefix of s2 (the backtracking jump);
/// nullopt when no such string exists.
std::optional<SearchString> next_nonextension(const SearchString& s, int c);

/// One column-nullification step: U compresses column i of P onto its gcd,
/// and if the gcd divides the matching column of C the forced first column
/// of the transformed V wipes C's column i out.
struct NullifyResult {
    PolyMatrix C_tilde;
    PolyMatrix P2_tilde;
    PolyMatrix V1_tilde;  // column vector, rows(C) x 1
    PolyMatrix U;
    bool fail = false;
    bool skip = false;
};
NullifyResult nullify(const PolyMatrix& c, const PolyMatrix& p, int i);

/// Depth-first search for a V maximizing the number of zero columns of
/// C + V*P. Among maximum-cardinality solutions the one with the smallest
/// index string (DFS preorder) wins. Column indices are 0-based.
struct ComputeVResult {
    PolyMatrix V;
    std::vector<int> zero_cols;
};
ComputeVResult compute_v(const PolyMatrix& c, const PolyMatrix& p);

/// Independent brute-force oracle: decide each column subset by simultaneous
/// polynomial left division, descending cardinality. Desk-scale inputs only.
struct OracleResult {
    int count = 0;
    std::vector<int> witness;
};
OracleResult oracle_max_nullifiable(const PolyMatrix& c, const PolyMatrix& p);

/// End-to-end minimal-interaction synthesis: bootstrap a regular equivalent
/// of the canonical controller, then nullify as many of its columns as
/// possible.
struct MinintOutcome {
    SynthStatus status;
    std::optional<SynthesisResult> result;
};
MinintOutcome minimize_interaction(const ControlProblem& p);

}  // namespace bct

#endif
