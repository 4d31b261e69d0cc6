#pragma once

#include "cubaff/rat.hpp"

#include <ostream>
#include <string>

namespace cubaff {

/// Closed interval [lo, hi] with exact rational endpoints.
class RatInterval
{
public:
    RatInterval() = default;
    RatInterval(const Rat& v) : lo_(v), hi_(v) {}
    RatInterval(int v) : lo_(v), hi_(v) {}
    RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi))
    {
        if (hi_ < lo_)
            throw Error("interval with lo > hi");
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat mid() const { return (lo_ + hi_) / Rat(2); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    /// Largest absolute value attained on the interval.
    Rat magnitude() const { return max(abs(lo_), abs(hi_)); }

    /// +1 / -1 when the whole interval is strictly positive / negative, 0 otherwise.
    int certain_sign() const
    {
        if (lo_.sign() > 0)
            return 1;
        if (hi_.sign() < 0)
            return -1;
        return 0;
    }

    RatInterval operator-() const { return RatInterval(-hi_, -lo_); }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b)
    {
        return RatInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b)
    {
        return RatInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b)
    {
        if (a.is_point() && b.is_point())
            return RatInterval(a.lo_ * b.lo_);
        Rat p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return RatInterval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
    }
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b)
    {
        if (b.contains_zero())
            throw Error("interval division by an interval containing zero");
        return a * RatInterval(Rat(1) / b.hi_, Rat(1) / b.lo_);
    }

    RatInterval& operator+=(const RatInterval& o) { return *this = *this + o; }
    RatInterval& operator-=(const RatInterval& o) { return *this = *this - o; }
    RatInterval& operator*=(const RatInterval& o) { return *this = *this * o; }
    RatInterval& operator/=(const RatInterval& o) { return *this = *this / o; }

    friend bool operator==(const RatInterval&, const RatInterval&) = default;

    std::string str() const
    {
        if (is_point())
            return lo_.str();
        return "[" + lo_.str() + ", " + hi_.str() + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const RatInterval& iv) { return os << iv.str(); }

private:
    Rat lo_, hi_;
};

inline RatInterval hull(const RatInterval& a, const RatInterval& b)
{
    return RatInterval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

/// Rounds both endpoints outward to multiples of 2^-bits. Point intervals at
/// such multiples stay points.
inline RatInterval round_out(const RatInterval& iv, unsigned bits)
{
    mpz_class scale = 1;
    scale <<= bits;
    auto floor_to = [&](const Rat& v) {
        mpz_class q;
        mpz_class n = v.num() * scale;
        mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), v.den().get_mpz_t());
        return Rat(mpq_class(q, scale));
    };
    auto ceil_to = [&](const Rat& v) {
        mpz_class q;
        mpz_class n = v.num() * scale;
        mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), v.den().get_mpz_t());
        return Rat(mpq_class(q, scale));
    };
    if (iv.is_point()) {
        const mpz_class& d = iv.lo().den();
        if (mpz_popcount(d.get_mpz_t()) == 1 && mpz_sizeinbase(d.get_mpz_t(), 2) - 1 <= bits)
            return iv;
    }
    return RatInterval(floor_to(iv.lo()), ceil_to(iv.hi()));
}

/// Smallest power of two that is >= v, for reporting residual bounds; 0 for v <= 0.
inline Rat dyadic_ceiling(const Rat& v)
{
    if (v.sign() <= 0)
        return Rat(0);
    Rat p(1);
    while (p / Rat(2) >= v)
        p /= Rat(2);
    while (p < v)
        p *= Rat(2);
    return p;
}

/// First-order dual number v + d*eps with eps^2 = 0. Used to differentiate
/// substitution formulas exactly at the identity parameter.
template <class T>
struct Dual
{
    T v{};
    T d{};

    Dual() = default;
    Dual(int c) : v(c), d(0) {}
    Dual(T value) : v(std::move(value)), d(0) {}
    Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

    Dual operator-() const { return {-v, -d}; }
    friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
    friend Dual operator/(const Dual& a, const Dual& b)
    {
        T inv = T(1) / b.v;
        return {a.v * inv, (a.d * b.v - a.v * b.d) * inv * inv};
    }
    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }
    friend bool operator==(const Dual&, const Dual&) = default;
};

// Scalar helpers shared by the templated geometry code.

inline bool certainly_zero(const Rat& r) { return r.is_zero(); }
inline bool certainly_zero(const RatInterval& iv) { return iv.is_point() && iv.lo().is_zero(); }
template <class T>
bool certainly_zero(const Dual<T>& x) { return certainly_zero(x.v) && certainly_zero(x.d); }

inline bool certainly_nonzero(const Rat& r) { return !r.is_zero(); }
inline bool certainly_nonzero(const RatInterval& iv) { return !iv.contains_zero(); }
template <class T>
bool certainly_nonzero(const Dual<T>& x) { return certainly_nonzero(x.v); }

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const RatInterval& iv) { return iv.str(); }

} // namespace cubaff
