#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rook/elem_set.hpp"
#include "rook/shapes.hpp"

namespace rook {

// Sequence (I_1, ..., I_n) of k-subsets of [1, n]. Terms are addressed
// 1-based and cyclically: term(n + 1) == term(1).
class GrassmannNecklace {
public:
    GrassmannNecklace(int n, int k, std::vector<ElemSet> terms);

    int n() const { return n_; }
    int k() const { return k_; }
    const ElemSet& term(int i) const { return terms_[(i - 1) % n_]; }
    const std::vector<ElemSet>& terms() const { return terms_; }

    bool operator==(const GrassmannNecklace&) const = default;

private:
    int n_;
    int k_;
    std::vector<ElemSet> terms_;
};

// File format: first line "n k", then n lines "i: a_1 a_2 ... a_k" with
// 1-based sorted elements and LF endings.
GrassmannNecklace parse_necklace(const std::string& text);
std::string to_text(const GrassmannNecklace& gn);

// Index of the first axiom violation (cyclically), or nullopt when the shift
// axioms hold everywhere.
std::optional<int> validate_necklace(const GrassmannNecklace& gn);

// (loopless, coloopless): i in I_i for all i, and no element lying in every
// term.
std::pair<bool, bool> loopless_coloopless(const GrassmannNecklace& gn);

// Derived statistics of a necklace term: R_i (row part), C_i (column part),
// S_i (occupied columns), r_i = min R_i, c_i = max S_i. A rank-k necklace on
// [n] splits into row indices [1, n-k] and column indices [n-k+1, n].
class NecklaceStats {
public:
    explicit NecklaceStats(GrassmannNecklace gn);

    int n() const { return n_; }
    int k() const { return k_; }
    ElemSet rows(int i) const { return term_part(i, true); }
    ElemSet columns(int i) const { return term_part(i, false); }
    ElemSet occupied_columns(int i) const;  // S_i

    bool r_defined(int i) const;
    // min R_i; 0 for i >= n+1, throws UndefinedStat when R_i is empty
    int r(int i) const;
    bool c_defined(int i) const;
    int c(int i) const;  // max S_i

    // Formal rook cells (t_j, s_j): R_i ascending paired with S_i descending.
    std::vector<Cell> formal_rooks(int i) const;

private:
    ElemSet term_part(int i, bool row_part) const;
    GrassmannNecklace gn_;
    int n_;
    int k_;
};

struct CornerSets {
    std::vector<Cell> inner;  // IC, sorted by row
    std::vector<Cell> outer;  // OC, sorted by row
    bool operator==(const CornerSets&) const = default;
};

// IC and OC read off the r_i / c_i statistics. Requires a valid loopless,
// coloopless necklace.
CornerSets corner_sets(const GrassmannNecklace& gn);

// The unique skew shape on n-k rows and k columns with the given corner sets;
// the full rectangle when both are empty. Throws IncompatibleCorners.
SkewShape reconstruct_shape(const std::vector<Cell>& inner, const std::vector<Cell>& outer, int n,
                            int k);

enum class RejectReason {
    NotNecklace,
    NotLoopless,
    NotColoopless,
    Condition1,
    Condition2,
    Condition3,
    Condition4,
    Condition5,
    // Passed every condition but is not the necklace of the shape carved out
    // by its own corner data (so of no shape at all).
    RoundTrip,
};

std::string to_string(RejectReason reason);

struct Rejection {
    RejectReason reason;
    std::string witness;
    // set for condition 4/5 failures
    std::optional<Cell> missing_corner;
    std::optional<std::pair<Cell, Cell>> cells;
    std::optional<int> index;
};

struct Classification {
    std::optional<SkewShape> shape;  // engaged exactly on Accept
    std::optional<Rejection> rejection;
    bool accepted() const { return shape.has_value(); }
};

// The five characterization conditions alone, in order, assuming a valid
// loopless, coloopless necklace. Returns the first failure. Conditions (4)
// and (5) are applied to every index: a gap in the rows (resp. occupied
// columns) of any term forces the matching inner (resp. outer) corner.
std::optional<Rejection> check_rook_conditions(const GrassmannNecklace& gn);

// Full pipeline: necklace axioms, loops/coloops, conditions (1)-(5), shape
// reconstruction, and the necklace round trip against the reconstructed
// shape. The round trip is the final arbiter: inputs that slip past the
// numbered conditions are rejected with RoundTrip.
Classification classify(const GrassmannNecklace& gn);

}  // namespace rook
