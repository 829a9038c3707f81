#include "rook/cyclic.hpp"

namespace rook {

CyclicInterval CyclicInterval::proper(int n, int a, int b) {
    if (n < 1 || n > kMaxGroundSize) throw IndexOutOfRange("bad ambient size");
    if (a < 1 || a > n || b < 1 || b > n) throw IndexOutOfRange("interval endpoint outside [1,n]");
    CyclicInterval iv(n, a, b, false);
    if (iv.length() == n)
        throw IndexOutOfRange("the full set must be represented as FULL, not a wrapped pair");
    return iv;
}

CyclicInterval CyclicInterval::full(int n) {
    if (n < 1 || n > kMaxGroundSize) throw IndexOutOfRange("bad ambient size");
    return CyclicInterval(n, 1, n, true);
}

int CyclicInterval::a() const {
    if (full_) throw UndefinedStat("FULL has no start");
    return a_;
}

int CyclicInterval::b() const {
    if (full_) throw UndefinedStat("FULL has no end");
    return b_;
}

int CyclicInterval::length() const {
    if (full_) return n_;
    return (b_ - a_ + n_) % n_ + 1;
}

std::vector<int> CyclicInterval::members() const {
    std::vector<int> out;
    if (full_) {
        for (int e = 1; e <= n_; ++e) out.push_back(e);
        return out;
    }
    int e = a_;
    while (true) {
        out.push_back(e);
        if (e == b_) break;
        e = e % n_ + 1;
    }
    return out;
}

ElemSet CyclicInterval::member_set() const {
    if (full_) return ElemSet::full(n_);
    if (a_ <= b_) return ElemSet::range(a_, b_);
    return ElemSet::range(a_, n_) | ElemSet::range(1, b_);
}

std::string to_string(const CyclicInterval& iv) {
    if (iv.is_full()) return "FULL";
    return "[" + std::to_string(iv.a()) + "," + std::to_string(iv.b()) + "]";
}

}  // namespace rook
