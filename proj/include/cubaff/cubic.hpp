#pragma once

#include "cubaff/interval.hpp"
#include "cubaff/rat.hpp"

#include <array>
#include <optional>
#include <string>

namespace cubaff {

/// Exponents (i, j) of x^i y^j for the ten coefficient slots, in the order
/// c30, c21, c12, c03, c20, c11, c02, c10, c01, c00.
inline constexpr std::array<std::array<int, 2>, 10> kMonomials{{
    {3, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0},
}};

inline constexpr std::array<const char*, 10> kCoeffNames{
    "c30", "c21", "c12", "c03", "c20", "c11", "c02", "c10", "c01", "c00",
};

inline int slot_of(int i, int j)
{
    for (int k = 0; k < 10; ++k)
        if (kMonomials[k][0] == i && kMonomials[k][1] == j)
            return k;
    return -1;
}

/// Dense bivariate polynomial of total degree <= 3.
template <class T>
struct Poly2
{
    std::array<std::array<T, 4>, 4> c{};

    Poly2()
    {
        for (auto& row : c)
            row.fill(T(0));
    }

    static Poly2 affine(const T& cx, const T& cy, const T& c0)
    {
        Poly2 p;
        p.c[1][0] = cx;
        p.c[0][1] = cy;
        p.c[0][0] = c0;
        return p;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b)
    {
        Poly2 out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; i + j < 4; ++j)
                for (int k = 0; i + k < 4; ++k)
                    for (int l = 0; i + j + k + l < 4; ++l)
                        out.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
        return out;
    }
};

/// A plane cubic c30 x^3 + c21 x^2 y + ... + c00 = 0.
template <class T>
struct CubicCurve
{
    std::array<T, 10> c{};

    CubicCurve() { c.fill(T(0)); }
    explicit CubicCurve(std::array<T, 10> coeffs) : c(std::move(coeffs)) { check(); }

    T& operator[](int k) { return c[k]; }
    const T& operator[](int k) const { return c[k]; }

    T& at(int i, int j) { return c[slot_of(i, j)]; }
    const T& at(int i, int j) const { return c[slot_of(i, j)]; }

    bool cubic_part_vanishes() const
    {
        return certainly_zero(c[0]) && certainly_zero(c[1]) && certainly_zero(c[2]) && certainly_zero(c[3]);
    }

    void check() const
    {
        if (cubic_part_vanishes())
            throw Error("not a cubic");
    }

    friend bool operator==(const CubicCurve&, const CubicCurve&) = default;
};

/// Invertible affine map (x, y) -> (a11 x + a12 y + alpha, a21 x + a22 y + beta).
template <class T>
struct AffineMap
{
    T a11{1}, a12{0}, a21{0}, a22{1}, alpha{0}, beta{0};

    static AffineMap identity() { return {}; }
    static AffineMap make(T a11, T a12, T a21, T a22, T alpha, T beta)
    {
        AffineMap m;
        m.a11 = std::move(a11);
        m.a12 = std::move(a12);
        m.a21 = std::move(a21);
        m.a22 = std::move(a22);
        m.alpha = std::move(alpha);
        m.beta = std::move(beta);
        return m;
    }
    static AffineMap translation(T dx, T dy) { return make(T(1), T(0), T(0), T(1), std::move(dx), std::move(dy)); }
    static AffineMap linear(T a11, T a12, T a21, T a22) { return make(a11, a12, a21, a22, T(0), T(0)); }

    // Named maps used throughout the classification.
    static AffineMap flip() { return linear(T(-1), T(0), T(0), T(-1)); }
    static AffineMap swap() { return linear(T(1), T(1), T(1), T(0)); }
    static AffineMap fold() { return make(T(-1), T(0), T(2), T(1), T(-2), T(2)); }
    static AffineMap reflect() { return linear(T(-1), T(0), T(2), T(1)); }

    T det() const { return a11 * a22 - a12 * a21; }

    bool is_identity() const
    {
        return certainly_zero(a11 - T(1)) && certainly_zero(a12) && certainly_zero(a21)
            && certainly_zero(a22 - T(1)) && certainly_zero(alpha) && certainly_zero(beta);
    }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

template <class T>
void require_invertible(const AffineMap<T>& g)
{
    if (!certainly_nonzero(g.det()))
        throw Error("singular map");
}

/// g o h as maps of the plane, so pullback(compose(g, h), c) = pullback(h, pullback(g, c)).
template <class T>
AffineMap<T> compose(const AffineMap<T>& g, const AffineMap<T>& h)
{
    require_invertible(g);
    require_invertible(h);
    return AffineMap<T>::make(g.a11 * h.a11 + g.a12 * h.a21, g.a11 * h.a12 + g.a12 * h.a22,
                              g.a21 * h.a11 + g.a22 * h.a21, g.a21 * h.a12 + g.a22 * h.a22,
                              g.a11 * h.alpha + g.a12 * h.beta + g.alpha,
                              g.a21 * h.alpha + g.a22 * h.beta + g.beta);
}

template <class T>
AffineMap<T> invert(const AffineMap<T>& g)
{
    require_invertible(g);
    T inv = T(1) / g.det();
    T b11 = g.a22 * inv, b12 = -(g.a12 * inv), b21 = -(g.a21 * inv), b22 = g.a11 * inv;
    return AffineMap<T>::make(b11, b12, b21, b22, -(b11 * g.alpha + b12 * g.beta), -(b21 * g.alpha + b22 * g.beta));
}

/// The curve defined by f(g(x, y)) where f defines c. Its zero set is g^-1 of
/// the zero set of c.
template <class T>
CubicCurve<T> pullback(const AffineMap<T>& g, const CubicCurve<T>& c)
{
    require_invertible(g);
    auto X = Poly2<T>::affine(g.a11, g.a12, g.alpha);
    auto Y = Poly2<T>::affine(g.a21, g.a22, g.beta);
    std::array<Poly2<T>, 4> xp, yp;
    xp[0].c[0][0] = T(1);
    yp[0].c[0][0] = T(1);
    for (int k = 1; k < 4; ++k) {
        xp[k] = xp[k - 1] * X;
        yp[k] = yp[k - 1] * Y;
    }
    Poly2<T> acc;
    for (int k = 0; k < 10; ++k) {
        if (certainly_zero(c[k]))
            continue;
        auto term = xp[kMonomials[k][0]] * yp[kMonomials[k][1]];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; i + j < 4; ++j)
                acc.c[i][j] += c[k] * term.c[i][j];
    }
    CubicCurve<T> out;
    for (int k = 0; k < 10; ++k)
        out.c[k] = acc.c[kMonomials[k][0]][kMonomials[k][1]];
    return out;
}

template <class T>
AffineMap<T> lift(const AffineMap<Rat>& g)
{
    return AffineMap<T>::make(T(g.a11), T(g.a12), T(g.a21), T(g.a22), T(g.alpha), T(g.beta));
}

template <class T>
CubicCurve<T> lift(const CubicCurve<Rat>& c)
{
    CubicCurve<T> out;
    for (int k = 0; k < 10; ++k)
        out.c[k] = T(c.c[k]);
    return out;
}

/// Normal-form parameters of x^3 + x^2 y = A x^2 + B xy + C y^2 + D x + E y + F.
template <class T>
struct ReducedCubic
{
    std::array<T, 6> p{};

    ReducedCubic() { p.fill(T(0)); }
    ReducedCubic(T A, T B, T C, T D, T E, T F) : p{A, B, C, D, E, F} {}

    const T& A() const { return p[0]; }
    const T& B() const { return p[1]; }
    const T& C() const { return p[2]; }
    const T& D() const { return p[3]; }
    const T& E() const { return p[4]; }
    const T& F() const { return p[5]; }

    T& operator[](int k) { return p[k]; }
    const T& operator[](int k) const { return p[k]; }

    CubicCurve<T> curve() const
    {
        CubicCurve<T> out;
        out.c = {T(1), T(1), T(0), T(0), -p[0], -p[1], -p[2], -p[3], -p[4], -p[5]};
        return out;
    }

    friend bool operator==(const ReducedCubic&, const ReducedCubic&) = default;
};

template <class T>
ReducedCubic<T> lift(const ReducedCubic<Rat>& r)
{
    ReducedCubic<T> out;
    for (int k = 0; k < 6; ++k)
        out.p[k] = T(r.p[k]);
    return out;
}

/// Reads normal-form parameters off a curve whose cubic part is a multiple of
/// x^3 + x^2 y. Throws when that shape is certainly violated.
template <class T>
ReducedCubic<T> read_reduced(const CubicCurve<T>& c)
{
    if (!certainly_nonzero(c[0]))
        throw Error("curve not in normal-form shape: x^3 coefficient may vanish");
    T k = c[0];
    if (certainly_nonzero(c[1] - k) || certainly_nonzero(c[2]) || certainly_nonzero(c[3]))
        throw Error("curve not in normal-form shape");
    ReducedCubic<T> r;
    for (int i = 0; i < 6; ++i)
        r.p[i] = -(c[4 + i] / k);
    return r;
}

/// (x, y) -> (-x, -y) acting on normal-form parameters.
template <class T>
ReducedCubic<T> flip_params(const ReducedCubic<T>& r)
{
    return ReducedCubic<T>(-r.A(), -r.B(), -r.C(), r.D(), r.E(), -r.F());
}

struct ReducedShape
{
    ReducedCubic<Rat> reduced;
    Rat scale;    // c30 of the input
    bool flipped; // (x,y) -> (-x,-y) applied to reach C >= 0
};

inline std::optional<ReducedShape> reduced_shape(const CubicCurve<Rat>& c)
{
    if (!c[2].is_zero() || !c[3].is_zero() || c[0].is_zero() || c[0] != c[1])
        return std::nullopt;
    ReducedCubic<Rat> r = read_reduced(c);
    if (r.C().sign() < 0)
        return ReducedShape{flip_params(r), c[0], true};
    return ReducedShape{r, c[0], false};
}

/// Recognizes curves already in normal-form shape, folding C < 0 by the flip.
inline std::optional<ReducedCubic<Rat>> try_as_reduced(const CubicCurve<Rat>& c)
{
    auto s = reduced_shape(c);
    if (!s)
        return std::nullopt;
    return s->reduced;
}

/// Canonical scaling: x^3 coefficient 1 when present, otherwise the first
/// nonzero cubic coefficient is 1.
inline CubicCurve<Rat> canonical_scaling(const CubicCurve<Rat>& c)
{
    Rat lead;
    for (int k = 0; k < 4; ++k)
        if (!c[k].is_zero()) {
            lead = c[k];
            break;
        }
    if (lead.is_zero())
        throw Error("not a cubic");
    CubicCurve<Rat> out;
    for (int k = 0; k < 10; ++k)
        out.c[k] = c[k] / lead;
    return out;
}

inline bool same_curve(const CubicCurve<Rat>& a, const CubicCurve<Rat>& b)
{
    return canonical_scaling(a) == canonical_scaling(b);
}

template <class T>
std::string describe(const AffineMap<T>& g)
{
    auto lin = [](const T& a, const T& b, const T& c) {
        return to_string(a) + "*x + " + to_string(b) + "*y + " + to_string(c);
    };
    return "(x, y) -> (" + lin(g.a11, g.a12, g.alpha) + ", " + lin(g.a21, g.a22, g.beta) + ")";
}

} // namespace cubaff
