#include "rook/matroid.hpp"

#include <algorithm>
#include <bit>

namespace rook {

std::optional<ExchangeCounterexample> verify_basis_exchange(int n,
                                                            const std::vector<ElemSet>& family) {
    if (family.empty()) throw SizeMismatch("empty basis family");
    int k = family.front().size();
    for (const ElemSet& b : family) {
        if (b.size() != k) throw SizeMismatch("basis family is not equicardinal");
        if (!b.subset_of(ElemSet::full(n))) throw OutOfRange("basis element outside [1,n]");
    }
    std::vector<ElemSet> sorted = family;
    std::sort(sorted.begin(), sorted.end(), ElemSetTupleLess{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::uint32_t> lookup;
    lookup.reserve(sorted.size());
    for (const ElemSet& b : sorted) lookup.push_back(b.bits());
    std::sort(lookup.begin(), lookup.end());
    auto member = [&](std::uint32_t bits) {
        return std::binary_search(lookup.begin(), lookup.end(), bits);
    };

    for (int a = 1; a <= n; ++a)
        for (const ElemSet& b1 : sorted) {
            if (!b1.contains(a)) continue;
            for (const ElemSet& b2 : sorted) {
                if (b1 == b2 || b2.contains(a)) continue;
                bool exchanged = false;
                for (int b : (b2 - b1).elements())
                    if (member(b1.without(a).with(b).bits())) {
                        exchanged = true;
                        break;
                    }
                if (!exchanged) return ExchangeCounterexample{b1, b2, a};
            }
        }
    return std::nullopt;
}

Matroid::Matroid(int n, ElemSet ground, std::vector<ElemSet> bases, bool verified)
    : n_(n), ground_(ground), bases_(std::move(bases)), verified_(verified) {
    if (n < 1 || n > kMaxGroundSize) throw OutOfRange("ground size out of range");
    if (bases_.empty()) throw SizeMismatch("empty basis family");
    k_ = bases_.front().size();
    for (const ElemSet& b : bases_) {
        if (b.size() != k_) throw SizeMismatch("basis family is not equicardinal");
        if (!b.subset_of(ground_)) throw OutOfRange("basis element outside the ground set");
    }
    std::sort(bases_.begin(), bases_.end(), ElemSetTupleLess{});
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    lookup_.reserve(bases_.size());
    for (const ElemSet& b : bases_) lookup_.push_back(b.bits());
    std::sort(lookup_.begin(), lookup_.end());
}

Matroid Matroid::from_bases(int n, std::vector<ElemSet> bases) {
    return Matroid(n, ElemSet::full(n), std::move(bases), false);
}

Matroid Matroid::from_verified_bases(int n, std::vector<ElemSet> bases) {
    return Matroid(n, ElemSet::full(n), std::move(bases), true);
}

bool Matroid::is_basis(ElemSet s) const {
    return std::binary_search(lookup_.begin(), lookup_.end(), s.bits());
}

bool Matroid::is_independent(ElemSet s) const {
    for (const ElemSet& b : bases_)
        if (s.subset_of(b)) return true;
    return false;
}

int Matroid::rank(ElemSet s) const {
    int best = 0;
    for (const ElemSet& b : bases_) best = std::max(best, (b & s).size());
    return best;
}

ElemSet Matroid::loops() const {
    ElemSet in_some;
    for (const ElemSet& b : bases_) in_some = in_some | b;
    return ground_ - in_some;
}

ElemSet Matroid::coloops() const {
    ElemSet in_all = ground_;
    for (const ElemSet& b : bases_) in_all = in_all & b;
    return in_all;
}

Matroid Matroid::deleted(ElemSet s) const {
    ElemSet kept = ground_ - s;
    if (kept.empty()) throw SizeMismatch("cannot delete the whole ground set");
    int m = 0;
    for (const ElemSet& b : bases_) m = std::max(m, (b & kept).size());
    std::vector<ElemSet> out;
    for (const ElemSet& b : bases_)
        if ((b & kept).size() == m) out.push_back(b & kept);
    return Matroid(n_, kept, std::move(out), verified_);
}

Matroid Matroid::contracted(ElemSet s) const {
    s = s & ground_;
    ElemSet kept = ground_ - s;
    if (kept.empty()) throw SizeMismatch("cannot contract the whole ground set");
    int rs = rank(s);
    std::vector<ElemSet> out;
    for (const ElemSet& b : bases_)
        if ((b & s).size() == rs) out.push_back(b - s);
    return Matroid(n_, kept, std::move(out), verified_);
}

Matroid::Compacted Matroid::compact() const {
    std::vector<std::pair<int, int>> relabeling;
    int next = 1;
    for (int e : ground_.elements()) relabeling.emplace_back(e, next++);
    auto apply = [&](ElemSet s) {
        ElemSet out;
        for (auto [from, to] : relabeling)
            if (s.contains(from)) out = out.with(to);
        return out;
    };
    std::vector<ElemSet> out;
    out.reserve(bases_.size());
    for (const ElemSet& b : bases_) out.push_back(apply(b));
    Matroid m(ground_.size(), ElemSet::full(ground_.size()), std::move(out), verified_);
    return Compacted{std::move(m), std::move(relabeling)};
}

bool Matroid::is_connected() const {
    // Separators come in complementary pairs, so only subsets containing the
    // smallest ground element need checking.
    std::vector<int> elems = ground_.elements();
    if (elems.size() <= 1) return true;
    int total = rank(ground_);
    std::uint32_t e0 = 1u << (elems[0] - 1);
    std::uint32_t rest = ground_.bits() & ~e0;
    for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
        ElemSet t(e0 | sub);
        if (rank(t) + rank(ground_ - t) == total) return false;
        if (sub == 0) break;
    }
    return true;
}

std::vector<ElemSet> Matroid::minimal_separators() const {
    std::vector<ElemSet> all;
    int total = rank(ground_);
    std::uint32_t g = ground_.bits();
    for (std::uint32_t sub = (g - 1) & g; sub != 0; sub = (sub - 1) & g) {
        ElemSet t(sub);
        if ((ground_ - t).empty()) continue;
        if (rank(t) + rank(ground_ - t) == total) all.push_back(t);
    }
    std::vector<ElemSet> minimal;
    for (const ElemSet& t : all) {
        bool has_smaller = false;
        for (const ElemSet& u : all)
            if (u != t && u.subset_of(t)) {
                has_smaller = true;
                break;
            }
        if (!has_smaller) minimal.push_back(t);
    }
    std::sort(minimal.begin(), minimal.end(), ElemSetTupleLess{});
    return minimal;
}

std::optional<ExchangeCounterexample> Matroid::verify() {
    auto result = verify_basis_exchange(n_, bases_);
    if (!result) verified_ = true;
    return result;
}

}  // namespace rook
