#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rook/errors.hpp"

namespace rook {

// Largest ground size the bitmask representation supports. Everything in this
// library runs at desk scale, and parsers enforce the bound.
inline constexpr int kMaxGroundSize = 30;

// A subset of the ground set [1, n] stored as a bitmask (bit e-1 <-> element e).
class ElemSet {
public:
    ElemSet() = default;
    explicit constexpr ElemSet(std::uint32_t bits) : bits_(bits) {}

    static ElemSet of(std::initializer_list<int> elems) {
        ElemSet s;
        for (int e : elems) s = s.with(e);
        return s;
    }

    static ElemSet from(const std::vector<int>& elems) {
        ElemSet s;
        for (int e : elems) s = s.with(e);
        return s;
    }

    // {lo, lo+1, ..., hi}; empty when lo > hi.
    static ElemSet range(int lo, int hi) {
        ElemSet s;
        for (int e = lo; e <= hi; ++e) s = s.with(e);
        return s;
    }

    static ElemSet full(int n) { return range(1, n); }

    std::uint32_t bits() const { return bits_; }
    bool contains(int e) const { return e >= 1 && e <= 32 && (bits_ >> (e - 1)) & 1u; }
    ElemSet with(int e) const { return check(e), ElemSet(bits_ | (1u << (e - 1))); }
    ElemSet without(int e) const { return check(e), ElemSet(bits_ & ~(1u << (e - 1))); }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    int min() const {
        if (empty()) throw UndefinedStat("min of empty set");
        return std::countr_zero(bits_) + 1;
    }
    int max() const {
        if (empty()) throw UndefinedStat("max of empty set");
        return 32 - std::countl_zero(bits_);
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool disjoint_from(ElemSet other) const { return (bits_ & other.bits_) == 0; }

    friend ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
    friend ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
    // set difference
    friend ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }

    bool operator==(const ElemSet&) const = default;

    // Lexicographic order on the sets written as ascending tuples. For sets of
    // equal size this is decided by the smallest element belonging to exactly
    // one of them.
    bool tuple_less(ElemSet other) const {
        std::uint32_t diff = bits_ ^ other.bits_;
        if (diff == 0) return false;
        if (size() == other.size()) return (diff & (~diff + 1) & bits_) != 0;
        auto a = elements(), b = other.elements();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    static void check(int e) {
        if (e < 1 || e > 32) throw IndexOutOfRange("element " + std::to_string(e) + " out of range");
    }

    std::uint32_t bits_ = 0;
};

inline std::string to_string(const ElemSet& s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

// "1 3 4 5 7" (used by the necklace file format and CLI listings).
inline std::string join_spaces(const ElemSet& s) {
    std::string out;
    bool first = true;
    for (int e : s.elements()) {
        if (!first) out += " ";
        out += std::to_string(e);
        first = false;
    }
    return out;
}

struct ElemSetTupleLess {
    bool operator()(const ElemSet& a, const ElemSet& b) const { return a.tuple_less(b); }
};

}  // namespace rook
