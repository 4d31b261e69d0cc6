#pragma once

#include "cubaff/interval.hpp"
#include "cubaff/unipoly.hpp"

#include <vector>

namespace cubaff {

/// Sturm sequence of the square-free part of p.
inline std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
    std::vector<UniPoly> seq;
    UniPoly p0 = square_free_part(p);
    seq.push_back(p0);
    if (p0.degree() <= 0)
        return seq;
    seq.push_back(p0.derivative());
    while (true) {
        UniPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero())
            break;
        seq.push_back(std::move(r));
    }
    return seq;
}

/// Number of sign changes of the sequence at x, zeros dropped.
inline int sign_variations(const std::vector<UniPoly>& seq, const Rat& x)
{
    int count = 0, last = 0;
    for (const auto& q : seq) {
        int s = q.sign_at(x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

/// Distinct real roots of the sequence's polynomial in the half-open interval (a, b].
inline int count_roots(const std::vector<UniPoly>& seq, const Rat& a, const Rat& b)
{
    return sign_variations(seq, a) - sign_variations(seq, b);
}

/// Strict upper bound on the absolute value of every root (Cauchy).
inline Rat root_bound(const UniPoly& p)
{
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i)
        m = max(m, abs(p.coeff(i) / p.lead()));
    return m + Rat(1);
}

namespace detail {

inline void isolate_in(const UniPoly& p, const std::vector<UniPoly>& seq, Rat a, Rat b, int count,
                       std::vector<RatInterval>& out)
{
    if (count <= 0)
        return;
    if (count == 1) {
        if (p.sign_at(b) == 0) {
            out.emplace_back(b);
            return;
        }
        // a may be a root reported by the neighbouring call; shrink away from it.
        while (p.sign_at(a) == 0) {
            Rat m = (a + b) / Rat(2);
            if (p.sign_at(m) == 0) {
                out.emplace_back(m);
                return;
            }
            if (count_roots(seq, a, m) == 1)
                b = m;
            else
                a = m;
        }
        out.emplace_back(a, b);
        return;
    }
    Rat m = (a + b) / Rat(2);
    int left = count_roots(seq, a, m);
    isolate_in(p, seq, a, m, left, out);
    isolate_in(p, seq, m, b, count - left, out);
}

} // namespace detail

/// Isolates every distinct real root of p. Each returned interval is either a
/// point (an exact rational root) or has a strict sign change of p at its
/// endpoints; intervals are sorted and pairwise disjoint.
inline std::vector<RatInterval> isolate_real_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw Error("indeterminate root set");
    std::vector<RatInterval> out;
    if (p.degree() == 0)
        return out;
    UniPoly sf = square_free_part(p);
    auto seq = sturm_sequence(sf);
    Rat bound = root_bound(sf);
    detail::isolate_in(sf, seq, -bound, bound, count_roots(seq, -bound, bound), out);

    // Neighbours may share a non-root endpoint; pull the left one inward.
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i].hi() != out[i + 1].lo() || out[i].is_point())
            continue;
        Rat hi = out[i].hi();
        int s_hi = sf.sign_at(hi);
        Rat w = out[i].width() / Rat(2);
        while (true) {
            Rat probe = hi - w;
            if (probe > out[i].lo() && sf.sign_at(probe) == s_hi) {
                out[i] = RatInterval(out[i].lo(), probe);
                break;
            }
            w /= Rat(2);
        }
    }
    return out;
}

/// Bisects an isolating interval of a simple root of p down to width <= eps.
/// The result is nested in iv; a rational root comes back as a point.
inline RatInterval refine_root(const UniPoly& p, const RatInterval& iv, const Rat& eps)
{
    if (eps.sign() <= 0)
        throw Error("refinement width must be positive");
    if (iv.is_point()) {
        if (p.sign_at(iv.lo()) != 0)
            throw Error("point interval is not a root");
        return iv;
    }
    Rat a = iv.lo(), b = iv.hi();
    int sa = p.sign_at(a), sb = p.sign_at(b);
    if (sa == 0)
        return RatInterval(a);
    if (sb == 0)
        return RatInterval(b);
    if (sa == sb)
        throw Error("root not isolated: no sign change on [" + a.str() + ", " + b.str() + "]");
    while (b - a > eps) {
        Rat m = (a + b) / Rat(2);
        int sm = p.sign_at(m);
        if (sm == 0)
            return RatInterval(m);
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    // Rational roots are returned exactly.
    Rat s = simplest_between(a, b);
    if (p.sign_at(s) == 0)
        return RatInterval(s);
    return RatInterval(a, b);
}

/// The positive real n-th root of a positive rational, exact when it is
/// rational, otherwise a refinable enclosure.
class Radical
{
public:
    Radical(Rat radicand, unsigned n) : radicand_(std::move(radicand)), n_(n)
    {
        if (radicand_.sign() <= 0 || n_ == 0)
            throw Error("radical needs a positive radicand and positive index");
        Rat r;
        if (exact_root(radicand_, n_, r)) {
            exact_ = true;
            value_ = RatInterval(r);
            return;
        }
        poly_ = UniPoly::monomial(Rat(1), static_cast<int>(n_)) - UniPoly{radicand_};
        value_ = RatInterval(Rat(0), max(Rat(1), radicand_));
    }

    bool exact() const { return exact_; }
    const Rat& radicand() const { return radicand_; }
    unsigned index() const { return n_; }

    /// Exact value; only valid when exact().
    Rat value() const
    {
        if (!exact_)
            throw Error("radical is irrational");
        return value_.lo();
    }

    /// Enclosure of width <= eps.
    RatInterval enclose(const Rat& eps) const
    {
        if (exact_)
            return value_;
        return refine_root(poly_, value_, eps);
    }

private:
    Rat radicand_;
    unsigned n_;
    bool exact_ = false;
    UniPoly poly_;
    RatInterval value_;
};

} // namespace cubaff
