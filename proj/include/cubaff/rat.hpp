#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cubaff {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator (GMP canonical form).
class Rat
{
public:
    Rat() = default;
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(v) {}
    Rat(long long v) : q_(static_cast<long>(v)) {}
    Rat(unsigned long v) : q_(v) {}
    Rat(long num, long den)
    {
        if (den == 0)
            throw Error("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rat(const mpz_class& z) : q_(z) {}

    /// Parses "p" or "p/q" (decimal integers, optional leading sign).
    static Rat parse(std::string_view text)
    {
        std::string s(text);
        if (s.empty())
            throw Error("empty rational literal");
        auto slash = s.find('/');
        auto valid_int = [](const std::string& t, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+'))
                i = 1;
            if (i >= t.size())
                return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9')
                    return false;
            return true;
        };
        std::string num = slash == std::string::npos ? s : s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw Error("malformed rational literal '" + s + "'");
        if (num[0] == '+')
            num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0)
            throw Error("zero denominator in '" + s + "'");
        return Rat(mpq_class(n, d));
    }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    std::string str() const { return q_.get_str(10); }
    double to_double() const { return q_.get_d(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o)
    {
        if (o.is_zero())
            throw Error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline Rat floor(const Rat& r)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return Rat(f);
}

/// Rational with the smallest denominator in [a, b], a <= b.
inline Rat simplest_between(const Rat& a, const Rat& b)
{
    if (a.sign() <= 0 && b.sign() >= 0)
        return Rat(0);
    if (b.sign() < 0)
        return -simplest_between(-b, -a);
    Rat fl = floor(a);
    if (fl == a || fl + Rat(1) <= b)
        return fl == a ? a : fl + Rat(1);
    return fl + Rat(1) / simplest_between(Rat(1) / (b - fl), Rat(1) / (a - fl));
}

inline Rat pow(Rat base, int e)
{
    if (e < 0) {
        base = Rat(1) / base;
        e = -e;
    }
    Rat out(1);
    while (e > 0) {
        if (e & 1)
            out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// 2^-k as an exact rational.
inline Rat dyadic(unsigned k)
{
    mpz_class d = 1;
    d <<= k;
    return Rat(mpq_class(mpz_class(1), d));
}

/// Exact n-th root of q when q is the n-th power of a rational, else nullopt-like
/// flag through the bool. Requires q >= 0 for even n.
inline bool exact_root(const Rat& q, unsigned n, Rat& out)
{
    if (q.sign() < 0 && n % 2 == 0)
        return false;
    mpz_class num = q.num(), den = q.den();
    bool neg = num < 0;
    if (neg)
        num = -num;
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0)
        return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0)
        return false;
    out = Rat(mpq_class(neg ? mpz_class(-rn) : rn, rd));
    return true;
}

} // namespace cubaff
