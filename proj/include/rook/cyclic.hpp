#pragma once

#include <string>
#include <vector>

#include "rook/elem_set.hpp"

namespace rook {

// Cyclic interval [a, b] in [1, n]: the elements a, a+1, ..., b with
// wraparound when a > b. [a, a] is a singleton. The full ground set is
// represented only by the distinguished FULL value, never as a wrapped pair.
class CyclicInterval {
public:
    static CyclicInterval proper(int n, int a, int b);
    static CyclicInterval full(int n);

    int n() const { return n_; }
    bool is_full() const { return full_; }
    int a() const;
    int b() const;

    int length() const;
    std::vector<int> members() const;  // in cyclic order a, a+1, ..., b
    ElemSet member_set() const;
    bool contains(int e) const { return member_set().contains(e); }
    bool subset_of(const CyclicInterval& other) const {
        return member_set().subset_of(other.member_set());
    }

    bool operator==(const CyclicInterval&) const = default;

private:
    CyclicInterval(int n, int a, int b, bool full) : n_(n), a_(a), b_(b), full_(full) {}
    int n_;
    int a_;
    int b_;
    bool full_;
};

std::string to_string(const CyclicInterval& iv);

}  // namespace rook
