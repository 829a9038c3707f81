#include "rook/necklace.hpp"

#include <algorithm>
#include <sstream>

#include "rook/rook_matroid.hpp"

namespace rook {

GrassmannNecklace::GrassmannNecklace(int n, int k, std::vector<ElemSet> terms)
    : n_(n), k_(k), terms_(std::move(terms)) {
    if (n < 1 || n > kMaxGroundSize) throw OutOfRange("n out of range");
    if (k < 1 || k > n) throw OutOfRange("k out of range");
    if (static_cast<int>(terms_.size()) != n)
        throw WrongSize("expected " + std::to_string(n) + " terms");
    for (const ElemSet& t : terms_) {
        if (t.size() != k) throw WrongSize("term of size " + std::to_string(t.size()) +
                                           ", expected " + std::to_string(k));
        if (!t.subset_of(ElemSet::full(n))) throw OutOfRange("term element outside [1,n]");
    }
}

GrassmannNecklace parse_necklace(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty necklace file");
    std::istringstream header(line);
    int n = 0, k = 0;
    if (!(header >> n >> k)) throw ParseError("expected \"n k\" on the first line");
    std::string extra;
    if (header >> extra) throw ParseError("trailing content on the first line");
    if (n < 1 || n > kMaxGroundSize) throw OutOfRange("n out of range");
    if (k < 1 || k > n) throw OutOfRange("k out of range");

    std::vector<ElemSet> terms;
    for (int i = 1; i <= n; ++i) {
        if (!std::getline(in, line)) throw ParseError("missing line for term " + std::to_string(i));
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label) || label != std::to_string(i) + ":")
            throw ParseError("expected \"" + std::to_string(i) + ":\" at line " +
                             std::to_string(i + 1));
        std::vector<int> elems;
        int e = 0;
        while (ls >> e) {
            if (e < 1 || e > n) throw OutOfRange("element " + std::to_string(e) + " outside [1,n]");
            if (!elems.empty() && e <= elems.back()) throw ParseError("elements must be ascending");
            elems.push_back(e);
        }
        if (!ls.eof()) throw ParseError("invalid element in term " + std::to_string(i));
        if (static_cast<int>(elems.size()) != k)
            throw WrongSize("term " + std::to_string(i) + " has " + std::to_string(elems.size()) +
                            " elements, expected " + std::to_string(k));
        terms.push_back(ElemSet::from(elems));
    }
    while (std::getline(in, line))
        if (!line.empty()) throw ParseError("trailing content after term " + std::to_string(n));
    return GrassmannNecklace(n, k, std::move(terms));
}

std::string to_text(const GrassmannNecklace& gn) {
    std::string out = std::to_string(gn.n()) + " " + std::to_string(gn.k()) + "\n";
    for (int i = 1; i <= gn.n(); ++i)
        out += std::to_string(i) + ": " + join_spaces(gn.term(i)) + "\n";
    return out;
}

std::optional<int> validate_necklace(const GrassmannNecklace& gn) {
    for (int i = 1; i <= gn.n(); ++i) {
        const ElemSet& cur = gn.term(i);
        const ElemSet& next = gn.term(i + 1);
        if (cur.contains(i)) {
            // I_{i+1} = (I_i \ {i}) u {j} for some j in [n]
            if (!cur.without(i).subset_of(next)) return i;
            if ((next - cur.without(i)).size() != 1) return i;
        } else {
            if (next != cur) return i;
        }
    }
    return std::nullopt;
}

std::pair<bool, bool> loopless_coloopless(const GrassmannNecklace& gn) {
    bool loopless = true;
    for (int i = 1; i <= gn.n(); ++i)
        if (!gn.term(i).contains(i)) loopless = false;
    ElemSet in_all = ElemSet::full(gn.n());
    for (const ElemSet& t : gn.terms()) in_all = in_all & t;
    return {loopless, in_all.empty()};
}

NecklaceStats::NecklaceStats(GrassmannNecklace gn)
    : gn_(std::move(gn)), n_(gn_.n()), k_(gn_.k()) {}

ElemSet NecklaceStats::term_part(int i, bool row_part) const {
    ElemSet rows = ElemSet::range(1, n_ - k_);
    return row_part ? (gn_.term(i) & rows) : (gn_.term(i) - rows);
}

ElemSet NecklaceStats::occupied_columns(int i) const {
    return ElemSet::range(n_ - k_ + 1, n_) - columns(i);
}

bool NecklaceStats::r_defined(int i) const {
    if (i >= n_ + 1) return true;
    return !rows(i).empty();
}

int NecklaceStats::r(int i) const {
    if (i >= n_ + 1) return 0;
    ElemSet ri = rows(i);
    if (ri.empty()) throw UndefinedStat("r_" + std::to_string(i) + " undefined: R_i is empty");
    return ri.min();
}

bool NecklaceStats::c_defined(int i) const { return !occupied_columns(i).empty(); }

int NecklaceStats::c(int i) const {
    ElemSet si = occupied_columns(i);
    if (si.empty()) throw UndefinedStat("c_" + std::to_string(i) + " undefined: S_i is empty");
    return si.max();
}

std::vector<Cell> NecklaceStats::formal_rooks(int i) const {
    std::vector<int> t = rows(i).elements();
    std::vector<int> s = occupied_columns(i).elements();
    std::reverse(s.begin(), s.end());
    if (t.size() != s.size())
        throw InternalError("row/column counts of a k-term disagree");  // impossible for k-subsets
    std::vector<Cell> out;
    for (std::size_t j = 0; j < t.size(); ++j) out.push_back({t[j], s[j]});
    return out;
}

CornerSets corner_sets(const GrassmannNecklace& gn) {
    NecklaceStats st(gn);
    int n = gn.n(), k = gn.k();
    CornerSets out;
    for (int i = 2; i <= n - k; ++i) {
        if (!st.c_defined(i) || !st.c_defined(i - 1))
            throw UndefinedStat("c_" + std::to_string(i) + " undefined");
        if (st.c(i) < st.c(i - 1)) out.outer.push_back({i, st.c(i) + 1});
    }
    // j runs through n itself: with r_{n+1} = 0, the j = n test reduces to
    // r_n >= 2, which is exactly an inner corner in column n-1.
    for (int j = n - k + 2; j <= n; ++j) {
        if (!st.r_defined(j) || !st.r_defined(j + 1))
            throw UndefinedStat("r_" + std::to_string(j) + " undefined");
        if (st.r(j) > st.r(j + 1) && st.r(j) != 1) out.inner.push_back({st.r(j) - 1, j - 1});
    }
    std::sort(out.inner.begin(), out.inner.end());
    std::sort(out.outer.begin(), out.outer.end());
    return out;
}

SkewShape reconstruct_shape(const std::vector<Cell>& inner, const std::vector<Cell>& outer, int n,
                            int k) {
    int r = n - k, c = k;
    if (r < 1 || c < 1) throw IncompatibleCorners("need at least one row and one column");
    std::vector<Cell> ic = inner, oc = outer;
    std::sort(ic.begin(), ic.end());
    std::sort(oc.begin(), oc.end());
    for (const Cell& cell : ic)
        if (cell.row < 1 || cell.row > r - 1 || cell.col < r + 1 || cell.col > r + c - 1)
            throw IncompatibleCorners("inner corner " + to_string(cell) + " off the grid");
    for (const Cell& cell : oc)
        if (cell.row < 2 || cell.row > r || cell.col < r + 2 || cell.col > r + c)
            throw IncompatibleCorners("outer corner " + to_string(cell) + " off the grid");

    // mu is constant between inner corners and drops right below each one
    std::vector<int> mu(r, 0);
    {
        int row = 1;
        for (const Cell& cell : ic) {
            for (int i = row; i <= cell.row; ++i) mu[i - 1] = cell.col - r;
            row = cell.row + 1;
        }
    }
    // lambda drops exactly at outer-corner rows
    std::vector<int> lambda(r, 0);
    {
        int value = c;
        std::size_t next = 0;
        for (int i = 1; i <= r; ++i) {
            if (next < oc.size() && oc[next].row == i) {
                value = oc[next].col - 1 - r;
                ++next;
            }
            lambda[i - 1] = value;
        }
    }
    for (int i = 0; i < r; ++i) {
        if (lambda[i] < 1 || mu[i] < 0 || mu[i] >= lambda[i])
            throw IncompatibleCorners("corner data yields an empty row");
        if (i > 0 && (lambda[i] > lambda[i - 1] || mu[i] > mu[i - 1]))
            throw IncompatibleCorners("corner data is not monotone");
    }
    std::vector<int> mu_trimmed = mu;
    while (!mu_trimmed.empty() && mu_trimmed.back() == 0) mu_trimmed.pop_back();
    SkewShape shape{Partition(lambda), Partition(mu_trimmed)};

    auto corner_cells = [](const std::vector<Corner>& cs) {
        std::vector<Cell> out;
        for (const Corner& corner : cs) out.push_back({corner.row, corner.col});
        std::sort(out.begin(), out.end());
        return out;
    };
    if (corner_cells(inner_corners(shape)) != ic || corner_cells(outer_corners(shape)) != oc)
        throw IncompatibleCorners("corner sets do not match any skew shape");
    return shape;
}

std::string to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::NotNecklace: return "not-necklace";
        case RejectReason::NotLoopless: return "not-loopless";
        case RejectReason::NotColoopless: return "not-coloopless";
        case RejectReason::Condition1: return "1";
        case RejectReason::Condition2: return "2";
        case RejectReason::Condition3: return "3";
        case RejectReason::Condition4: return "4";
        case RejectReason::Condition5: return "5";
        case RejectReason::RoundTrip: return "round-trip";
    }
    return "?";
}

namespace {

Rejection make_rejection(RejectReason reason, std::string witness) {
    Rejection rej;
    rej.reason = reason;
    rej.witness = std::move(witness);
    return rej;
}

}  // namespace

std::optional<Rejection> check_rook_conditions(const GrassmannNecklace& gn) {
    NecklaceStats st(gn);
    int n = gn.n(), k = gn.k();

    // (1) the term at the first column index is exactly the columns
    if (gn.term(n - k + 1) != ElemSet::range(n - k + 1, n))
        return make_rejection(RejectReason::Condition1,
                              "I_" + std::to_string(n - k + 1) + "=" +
                                  to_string(gn.term(n - k + 1)) + " != " +
                                  to_string(ElemSet::range(n - k + 1, n)));

    // (2) c_{r_j} >= j-1 for column indices j
    for (int j = n - k + 2; j <= n; ++j) {
        if (!st.r_defined(j))
            return make_rejection(RejectReason::Condition2,
                                  "j=" + std::to_string(j) + " r_j undefined");
        int rj = st.r(j);
        if (st.c(rj) < j - 1)
            return make_rejection(RejectReason::Condition2,
                                  "j=" + std::to_string(j) + " c_{r_j}=" + std::to_string(st.c(rj)) +
                                      " < " + std::to_string(j - 1));
    }

    // (3) r_{c_i+2} - 1 <= i for row indices i
    for (int i = 1; i <= n - k; ++i) {
        int idx = st.c(i) + 2;
        if (!st.r_defined(idx))
            return make_rejection(RejectReason::Condition3,
                                  "i=" + std::to_string(i) + " r_" + std::to_string(idx) +
                                      " undefined");
        if (st.r(idx) - 1 > i)
            return make_rejection(RejectReason::Condition3,
                                  "i=" + std::to_string(i) + " r_{c_i+2}=" +
                                      std::to_string(st.r(idx)) + " > " + std::to_string(i + 1));
    }

    CornerSets corners = corner_sets(gn);
    auto has = [](const std::vector<Cell>& cells, Cell c) {
        return std::find(cells.begin(), cells.end(), c) != cells.end();
    };

    // (4) a row gap between successive formal rooks forces an inner corner
    // just above the lower rook. Row terms carry such gaps too (rows skipped
    // because they end left of the running column), so every index is
    // checked.
    for (int i = 1; i <= n; ++i) {
        std::vector<Cell> rooks = st.formal_rooks(i);
        for (std::size_t j = 0; j + 1 < rooks.size(); ++j)
            if (rooks[j + 1].row > rooks[j].row + 1) {
                Cell need{rooks[j + 1].row - 1, rooks[j + 1].col};
                if (!has(corners.inner, need)) {
                    Rejection rej = make_rejection(
                        RejectReason::Condition4,
                        "i=" + std::to_string(i) + " cells " + to_string(rooks[j]) + "," +
                            to_string(rooks[j + 1]) + " need inner corner " + to_string(need));
                    rej.missing_corner = need;
                    rej.cells = {rooks[j], rooks[j + 1]};
                    rej.index = i;
                    return rej;
                }
            }
    }

    // (5) a column gap between successive formal rooks forces an outer corner
    // just right of the lower rook; again at every index
    for (int i = 1; i <= n; ++i) {
        std::vector<Cell> rooks = st.formal_rooks(i);
        for (std::size_t j = 0; j + 1 < rooks.size(); ++j)
            if (rooks[j + 1].col < rooks[j].col - 1) {
                Cell need{rooks[j + 1].row, rooks[j + 1].col + 1};
                if (!has(corners.outer, need)) {
                    Rejection rej = make_rejection(
                        RejectReason::Condition5,
                        "i=" + std::to_string(i) + " cells " + to_string(rooks[j]) + "," +
                            to_string(rooks[j + 1]) + " need outer corner " + to_string(need));
                    rej.missing_corner = need;
                    rej.cells = {rooks[j], rooks[j + 1]};
                    rej.index = i;
                    return rej;
                }
            }
    }

    return std::nullopt;
}

Classification classify(const GrassmannNecklace& gn) {
    Classification out;
    if (auto violation = validate_necklace(gn)) {
        Rejection rej = make_rejection(RejectReason::NotNecklace,
                                       "axiom violated at i=" + std::to_string(*violation));
        rej.index = *violation;
        out.rejection = rej;
        return out;
    }
    auto [loopless, coloopless] = loopless_coloopless(gn);
    if (!loopless) {
        for (int i = 1; i <= gn.n(); ++i)
            if (!gn.term(i).contains(i)) {
                Rejection rej = make_rejection(RejectReason::NotLoopless,
                                               "loop at " + std::to_string(i));
                rej.index = i;
                out.rejection = rej;
                return out;
            }
    }
    if (!coloopless) {
        ElemSet in_all = ElemSet::full(gn.n());
        for (const ElemSet& t : gn.terms()) in_all = in_all & t;
        Rejection rej = make_rejection(RejectReason::NotColoopless,
                                       "coloop at " + std::to_string(in_all.min()));
        rej.index = in_all.min();
        out.rejection = rej;
        return out;
    }
    if (auto rej = check_rook_conditions(gn)) {
        out.rejection = *rej;
        return out;
    }

    CornerSets corners = corner_sets(gn);
    std::optional<SkewShape> shape;
    try {
        shape = reconstruct_shape(corners.inner, corners.outer, gn.n(), gn.k());
    } catch (const IncompatibleCorners& e) {
        out.rejection =
            make_rejection(RejectReason::RoundTrip, std::string("no shape fits: ") + e.what());
        return out;
    }
    GrassmannNecklace expected = grassmann_necklace(*shape);
    if (expected != gn) {
        int differs = 0;
        for (int i = 1; i <= gn.n(); ++i)
            if (expected.term(i) != gn.term(i)) {
                differs = i;
                break;
            }
        Rejection rej = make_rejection(
            RejectReason::RoundTrip, "I_" + std::to_string(differs) + "=" +
                                         to_string(gn.term(differs)) + " but the necklace of " +
                                         shape->to_string() + " has " +
                                         to_string(expected.term(differs)));
        rej.index = differs;
        out.rejection = rej;
        return out;
    }
    out.shape = shape;
    return out;
}

}  // namespace rook
