#pragma once

#include <optional>
#include <vector>

#include "rook/cyclic.hpp"
#include "rook/elem_set.hpp"

namespace rook {

struct ExchangeCounterexample {
    ElemSet b1;
    ElemSet b2;
    int a = 0;
    bool operator==(const ExchangeCounterexample&) const = default;
};

// Checks the basis-exchange axiom over an explicit family. Returns the first
// failing triple in (a, B1, B2) order, or nullopt when the axiom holds.
// Throws on an empty or non-equicardinal family.
std::optional<ExchangeCounterexample> verify_basis_exchange(int n,
                                                            const std::vector<ElemSet>& family);

// Finite matroid over an explicit basis family. Elements keep their original
// labels under minors; the ground set of a minor is a subset of [1, n].
class Matroid {
public:
    // Untrusted family: basis exchange not yet checked.
    static Matroid from_bases(int n, std::vector<ElemSet> bases);
    // For constructions whose basis family is a matroid by theory.
    static Matroid from_verified_bases(int n, std::vector<ElemSet> bases);

    int ambient_size() const { return n_; }
    ElemSet ground() const { return ground_; }
    int rank() const { return k_; }
    // Bases in ascending-tuple order.
    const std::vector<ElemSet>& bases() const { return bases_; }
    bool is_basis(ElemSet s) const;
    bool is_independent(ElemSet s) const;

    // max |B n s| over bases
    int rank(ElemSet s) const;
    int rank(const CyclicInterval& iv) const { return rank(iv.member_set()); }

    ElemSet loops() const;    // elements of the ground set in no basis
    ElemSet coloops() const;  // elements in every basis

    Matroid deleted(ElemSet s) const;
    Matroid contracted(ElemSet s) const;
    Matroid restricted(ElemSet s) const { return deleted(ground_ - s); }
    Matroid restrict_cyclic(const CyclicInterval& iv) const { return restricted(iv.member_set()); }

    // Relabels the ground set order-preservingly onto [1, m].
    struct Compacted;
    Compacted compact() const;

    // No proper nonempty separator: rank(T) + rank(E\T) > rank(E) for all
    // proper nonempty T.
    bool is_connected() const;
    std::vector<ElemSet> minimal_separators() const;

    bool verified() const { return verified_; }
    // Runs the exchange check and upgrades the tag on success.
    std::optional<ExchangeCounterexample> verify();

    bool operator==(const Matroid&) const = default;

private:
    Matroid(int n, ElemSet ground, std::vector<ElemSet> bases, bool verified);

    int n_ = 0;
    int k_ = 0;
    ElemSet ground_;
    std::vector<ElemSet> bases_;         // ascending-tuple order
    std::vector<std::uint32_t> lookup_;  // bit patterns, numerically sorted
    bool verified_ = false;
};

struct Matroid::Compacted {
    Matroid matroid;
    std::vector<std::pair<int, int>> relabeling;  // (old, new)
};

}  // namespace rook
