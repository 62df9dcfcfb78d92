#ifndef STABILKIT_HALFINT_HPP
#define STABILKIT_HALFINT_HPP

#include <optional>

#include "stabilkit/rational.hpp"

namespace stabilkit {

// Exact half-integer, stored as its doubled value. All cover values y and
// stabilizer values c are HalfInt; comparisons reduce to integer compares.
class HalfInt {
public:
    HalfInt() : d_(0) {}

    static HalfInt from_doubled(long long d) { HalfInt h; h.d_ = d; return h; }
    static HalfInt whole(long long k) { return from_doubled(2 * k); }
    static HalfInt half() { return from_doubled(1); }
    static HalfInt zero() { return HalfInt(); }
    static HalfInt one() { return whole(1); }

    long long doubled() const { return d_; }
    bool is_whole() const { return d_ % 2 == 0; }
    Rat to_rat() const { return Rat(d_, 2); }

    static std::optional<HalfInt> from_rat(const Rat& r) {
        if (r.den() == 1) return whole(r.num());
        if (r.den() == 2) return from_doubled(r.num());
        return std::nullopt;
    }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.d_ + b.d_); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.d_ - b.d_); }
    HalfInt operator-() const { return from_doubled(-d_); }
    HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
    HalfInt& operator-=(HalfInt o) { d_ -= o.d_; return *this; }

    friend bool operator==(HalfInt a, HalfInt b) { return a.d_ == b.d_; }
    friend bool operator!=(HalfInt a, HalfInt b) { return a.d_ != b.d_; }
    friend bool operator<(HalfInt a, HalfInt b) { return a.d_ < b.d_; }
    friend bool operator>(HalfInt a, HalfInt b) { return a.d_ > b.d_; }
    friend bool operator<=(HalfInt a, HalfInt b) { return a.d_ <= b.d_; }
    friend bool operator>=(HalfInt a, HalfInt b) { return a.d_ >= b.d_; }

    std::string str() const { return to_rat().str(); }

private:
    long long d_;
};

}  // namespace stabilkit

#endif
