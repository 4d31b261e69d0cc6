#pragma once

#include "cubaff/certificate.hpp"
#include "cubaff/cubic.hpp"
#include "cubaff/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubaff {

/// Default refinement target 2^-64.
inline Rat default_eps()
{
    return dyadic(64);
}

struct Direction
{
    Rat a12;
    RatInterval a22;
};

/// Real directions (1, a22) killing the y^3 coefficient, i.e. roots of
/// c30 + c21 a22 + c12 a22^2 + c03 a22^3, kept only when
/// 3 c30 + 2 c21 a22 + c12 a22^2 is verifiably nonzero.
inline std::vector<Direction> direction_roots(const CubicCurve<Rat>& c, const Rat& eps = default_eps())
{
    if (c[3].is_zero())
        throw Error("direction_roots needs a nonzero y^3 coefficient");
    UniPoly cubic{c[0], c[1], c[2], c[3]};
    UniPoly side{Rat(3) * c[0], Rat(2) * c[1], c[2]};
    UniPoly sf = square_free_part(cubic);
    std::vector<Direction> out;
    for (const RatInterval& iv : isolate_real_roots(cubic)) {
        RatInterval root = refine_root(sf, iv, eps);
        RatInterval val = side.eval(root);
        // An irrational root may still need a narrower enclosure to clear zero.
        for (int k = 0; k < 8 && !root.is_point() && val.contains_zero(); ++k) {
            root = refine_root(sf, root, root.width() * dyadic(16));
            val = side.eval(root);
        }
        if (certainly_nonzero(val))
            out.push_back({Rat(1), root});
    }
    if (out.empty())
        throw Error("no admissible direction");
    return out;
}

/// Discriminant of the binary cubic form c30 x^3 + c21 x^2 y + c12 x y^2 + c03 y^3.
inline Rat binary_discriminant(const CubicCurve<Rat>& c)
{
    const Rat &a = c[0], &b = c[1], &cc = c[2], &d = c[3];
    return b * b * cc * cc - Rat(4) * a * cc * cc * cc - Rat(4) * b * b * b * d - Rat(27) * a * a * d * d
         + Rat(18) * a * b * cc * d;
}

/// Cubic part written as k * l1^2 * l2 with independent rational linear forms
/// l = (p, q) meaning p x + q y.
struct DoubleLineSplit
{
    Rat k;
    std::array<Rat, 2> l1, l2;
};

inline std::optional<DoubleLineSplit> split_double_line(const CubicCurve<Rat>& c)
{
    const Rat &c30 = c[0], &c21 = c[1], &c12 = c[2], &c03 = c[3];
    if (!c30.is_zero()) {
        // Roots t of c30 t^3 + c21 t^2 + c12 t + c03 give factors x - t y.
        UniPoly q{c03, c12, c21, c30};
        UniPoly g = gcd(q, q.derivative());
        if (g.degree() != 1)
            return std::nullopt;
        Rat r = -g.coeff(0);
        UniPoly h = q / (UniPoly{-r, Rat(1)} * UniPoly{-r, Rat(1)});
        Rat s = -h.coeff(0) / h.coeff(1);
        return DoubleLineSplit{h.coeff(1), {Rat(1), -r}, {Rat(1), -s}};
    }
    if (!c21.is_zero()) {
        // y * (c21 x^2 + c12 x y + c03 y^2) needs a square quadratic factor.
        if (!(c12 * c12 - Rat(4) * c21 * c03).is_zero())
            return std::nullopt;
        Rat r = -c12 / (Rat(2) * c21);
        return DoubleLineSplit{c21, {Rat(1), -r}, {Rat(0), Rat(1)}};
    }
    if (!c12.is_zero())
        return DoubleLineSplit{Rat(1), {Rat(0), Rat(1)}, {c12, c03}};
    return std::nullopt;
}

struct ReductionResult
{
    ReducedCubic<Rat> reduced;
    AffineMap<Rat> witness;
    Rat scale;
    Certificate certificate;
    std::vector<std::string> trace;
};

/// Checks pullback(witness, c) == scale * curve(reduced) coefficient-wise.
inline bool verify_reduction(const CubicCurve<Rat>& c, const ReductionResult& res)
{
    if (res.reduced.C().sign() < 0 || res.scale.is_zero())
        return false;
    CubicCurve<Rat> lhs = pullback(res.witness, c), rhs = res.reduced.curve();
    for (int k = 0; k < 10; ++k)
        if (lhs[k] != res.scale * rhs[k])
            return false;
    return true;
}

namespace detail {

// Runs the direction + coefficient-elimination construction and records why it
// cannot produce an invertible map: with a12 = 1 the determinant equals
// -3 a21 (c30 + c21 a22 + c12 a22^2 + c03 a22^3) / (3 c30 + 2 c21 a22 + c12 a22^2),
// whose numerator vanishes at every admissible direction.
inline void trace_direction_route(CubicCurve<Rat> c, const Rat& eps, std::vector<std::string>& trace)
{
    if (c[0].is_zero() && c[3].is_zero()) {
        int alpha = 1;
        while ((Rat(alpha) * (Rat(alpha) * c[1] + c[2])).is_zero())
            ++alpha;
        c = pullback(AffineMap<Rat>::linear(Rat(1), Rat(alpha), Rat(0), Rat(1)), c);
        trace.push_back("shear (x, y) -> (x + " + std::to_string(alpha) + "*y, y): y^3 coefficient "
                        + c[3].str());
    }
    if (c[0].is_zero() || c[3].is_zero()) {
        c = pullback(AffineMap<Rat>::swap(), c);
        trace.push_back("swap (x, y) -> (x + y, x)");
    }
    std::vector<Direction> dirs;
    try {
        dirs = direction_roots(c, eps);
    } catch (const Error& e) {
        trace.push_back(std::string("direction search: ") + e.what());
        return;
    }
    UniPoly num{c[1], Rat(2) * c[2], Rat(3) * c[3]}; // 2 c12 a22 + 3 c03 a22^2 + c21
    UniPoly den{Rat(3) * c[0], Rat(2) * c[1], c[2]};
    for (const Direction& d : dirs) {
        std::string line = "direction a22 in " + d.a22.str() + ":";
        for (int a21 = 1; a21 <= 3; ++a21) {
            RatInterval a11 = -(RatInterval(Rat(a21)) * num.eval(d.a22) / den.eval(d.a22));
            RatInterval det = a11 * d.a22 - RatInterval(Rat(a21));
            line += " a21=" + std::to_string(a21) + " det " + (det.contains_zero() ? "encloses 0" : "= " + det.str());
        }
        trace.push_back(line);
    }
}

inline AffineMap<Rat> double_line_map(const DoubleLineSplit& s)
{
    // N with l1(N(x, y)) = x and l2(N(x, y)) = x + y.
    Rat m11 = s.l1[0], m12 = s.l1[1], m21 = s.l2[0], m22 = s.l2[1];
    Rat det = m11 * m22 - m12 * m21;
    Rat i11 = m22 / det, i12 = -m12 / det, i21 = -m21 / det, i22 = m11 / det;
    return AffineMap<Rat>::linear(i11 + i12, i12, i21 + i22, i22);
}

} // namespace detail

/// Transforms a cubic into x^3 + x^2 y = A x^2 + B xy + C y^2 + D x + E y + F
/// with C >= 0. The normal form's cubic part has a double linear factor, so
/// this succeeds exactly when the input's cubic part is k * l1^2 * l2 with l1,
/// l2 independent; otherwise the certificate is Failed with the obstruction.
inline ReductionResult reduce(const CubicCurve<Rat>& c, const Rat& eps = default_eps())
{
    c.check();
    ReductionResult res;
    if (auto shape = reduced_shape(c)) {
        res.reduced = shape->reduced;
        res.witness = shape->flipped ? AffineMap<Rat>::flip() : AffineMap<Rat>::identity();
        res.scale = shape->flipped ? -shape->scale : shape->scale;
        res.trace.push_back(shape->flipped ? "already in normal-form shape; flipped to C >= 0"
                                           : "already in normal form");
        res.certificate = verify_reduction(c, res) ? Certificate::exact() : Certificate::failed("replay mismatch");
        return res;
    }

    detail::trace_direction_route(c, eps, res.trace);

    Rat disc = binary_discriminant(c);
    auto split = split_double_line(c);
    if (!split) {
        std::string why = disc.is_zero()
            ? "cubic part is a perfect cube (triple line); x^3 + x^2 y has a double and a simple factor"
            : "cubic part has three distinct linear factors (binary discriminant " + disc.str()
                  + " != 0); the discriminant is a relative invariant and vanishes on x^3 + x^2 y";
        res.trace.push_back(why);
        res.witness = AffineMap<Rat>::identity();
        res.scale = Rat(0);
        res.certificate = Certificate::failed(why);
        return res;
    }
    AffineMap<Rat> lin = detail::double_line_map(*split);
    CubicCurve<Rat> moved = pullback(lin, c);
    auto shape = reduced_shape(moved);
    if (!shape) {
        res.certificate = Certificate::failed("double-line change did not reach normal-form shape");
        return res;
    }
    res.reduced = shape->reduced;
    res.witness = shape->flipped ? compose(lin, AffineMap<Rat>::flip()) : lin;
    res.scale = shape->flipped ? -shape->scale : shape->scale;
    res.trace.push_back("double-line change " + describe(lin) + (shape->flipped ? ", then flip" : ""));
    res.certificate = verify_reduction(c, res) ? Certificate::exact() : Certificate::failed("replay mismatch");
    return res;
}

} // namespace cubaff
