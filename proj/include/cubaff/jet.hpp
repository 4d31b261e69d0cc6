#pragma once

#include "cubaff/cubic.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace cubaff {

/// Sparse polynomial in the jet coordinates (x, y, y1, ..., y6).
class JetPoly
{
public:
    static constexpr int kVars = 8;
    using Exponent = std::array<unsigned char, kVars>;

    JetPoly() = default;

    static JetPoly constant(const Rat& c)
    {
        JetPoly p;
        p.add(Exponent{}, c);
        return p;
    }
    static JetPoly monomial(const Rat& c, const Exponent& e)
    {
        JetPoly p;
        p.add(e, c);
        return p;
    }
    static JetPoly var(int v)
    {
        Exponent e{};
        e[v] = 1;
        return monomial(Rat(1), e);
    }

    const std::map<Exponent, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Exponent& e, const Rat& c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = t_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    friend JetPoly operator+(JetPoly a, const JetPoly& b)
    {
        for (const auto& [e, c] : b.t_)
            a.add(e, c);
        return a;
    }
    friend JetPoly operator-(JetPoly a, const JetPoly& b)
    {
        for (const auto& [e, c] : b.t_)
            a.add(e, -c);
        return a;
    }
    friend JetPoly operator*(const JetPoly& a, const JetPoly& b)
    {
        JetPoly out;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exponent e;
                for (int v = 0; v < kVars; ++v)
                    e[v] = static_cast<unsigned char>(ea[v] + eb[v]);
                out.add(e, ca * cb);
            }
        return out;
    }
    friend JetPoly operator*(const Rat& s, const JetPoly& p)
    {
        JetPoly out;
        for (const auto& [e, c] : p.t_)
            out.add(e, s * c);
        return out;
    }

    JetPoly partial(int v) const
    {
        JetPoly out;
        for (const auto& [e, c] : t_) {
            if (e[v] == 0)
                continue;
            Exponent d = e;
            d[v] = static_cast<unsigned char>(d[v] - 1);
            out.add(d, c * Rat(static_cast<long>(e[v])));
        }
        return out;
    }

    /// Total derivative d/dx = dx + y1 dy + y2 dy1 + ... + y6 dy5.
    JetPoly total_derivative() const
    {
        JetPoly out = partial(0);
        for (int v = 1; v < kVars - 1; ++v) {
            JetPoly p = partial(v);
            if (!p.is_zero())
                out = out + var(v + 1) * p;
        }
        if (!partial(kVars - 1).is_zero())
            throw Error("total derivative exceeds the sixth-order jet");
        return out;
    }

    Rat eval(const std::array<Rat, kVars>& at) const
    {
        Rat acc(0);
        for (const auto& [e, c] : t_) {
            Rat m = c;
            for (int v = 0; v < kVars; ++v)
                if (e[v])
                    m *= pow(at[v], e[v]);
            acc += m;
        }
        return acc;
    }

    friend bool operator==(const JetPoly&, const JetPoly&) = default;

private:
    std::map<Exponent, Rat> t_;
};

/// Values (y', y'', ..., y^(6)) of an implicit solution at a point.
struct Jet6
{
    std::array<Rat, 6> y{};
    friend bool operator==(const Jet6&, const Jet6&) = default;
};

/// Bivariate polynomial in (x, y) as a JetPoly.
inline JetPoly plane_poly(const CubicCurve<Rat>& c)
{
    JetPoly p;
    for (int k = 0; k < 10; ++k) {
        JetPoly::Exponent e{};
        e[0] = static_cast<unsigned char>(kMonomials[k][0]);
        e[1] = static_cast<unsigned char>(kMonomials[k][1]);
        p.add(e, c[k]);
    }
    return p;
}

/// Derivatives of the branch y(x) of f = 0 through (x0, y0), by six successive
/// total derivatives solved triangularly. Requires f(x0, y0) = 0 and f_y != 0.
inline Jet6 implicit_jet_of(const JetPoly& f, const Rat& x0, const Rat& y0)
{
    std::array<Rat, JetPoly::kVars> at{};
    at[0] = x0;
    at[1] = y0;
    if (!f.eval(at).is_zero())
        throw Error("point is not on the curve");
    Rat fy = f.partial(1).eval(at);
    if (fy.is_zero())
        throw Error("vertical tangent locus");
    Jet6 j;
    JetPoly dk = f;
    for (int k = 1; k <= 6; ++k) {
        dk = dk.total_derivative();
        at[1 + k] = Rat(0);
        Rat rest = dk.eval(at);
        at[1 + k] = -rest / fy;
        j.y[k - 1] = at[1 + k];
    }
    return j;
}

/// Exact jet of a normal-form cubic at (x0, y0). The constant term F is
/// replaced so that the point lies on the curve; the jet relation involves
/// neither F nor the base point.
inline Jet6 implicit_jet(const ReducedCubic<Rat>& r, const Rat& x0, const Rat& y0)
{
    Rat fiber = x0 * x0 - r.B() * x0 - Rat(2) * r.C() * y0 - r.E();
    if (fiber.is_zero())
        throw Error("vertical tangent locus");
    Rat F = x0 * x0 * x0 + x0 * x0 * y0 - r.A() * x0 * x0 - r.B() * x0 * y0 - r.C() * y0 * y0 - r.D() * x0
          - r.E() * y0;
    ReducedCubic<Rat> on(r.A(), r.B(), r.C(), r.D(), r.E(), F);
    return implicit_jet_of(plane_poly(on.curve()), x0, y0);
}

/// Polynomial in (y1, ..., y6) stored as coefficient + exponent rows.
struct JetRelation
{
    struct Term
    {
        Rat coef;
        std::array<unsigned char, 6> e;
    };
    std::vector<Term> terms;

    Rat eval(const Jet6& j) const
    {
        Rat acc(0);
        for (const auto& t : terms) {
            Rat m = t.coef;
            for (int v = 0; v < 6; ++v)
                if (t.e[v])
                    m *= pow(j.y[v], t.e[v]);
            acc += m;
        }
        return acc;
    }

    Rat coefficient_sum() const
    {
        Rat s(0);
        for (const auto& t : terms)
            s += t.coef;
        return s;
    }

    Rat coefficient(const std::array<unsigned char, 6>& e) const
    {
        Rat s(0);
        for (const auto& t : terms)
            if (t.e == e)
                s += t.coef;
        return s;
    }
};

/// The sixth-order relation exactly as printed (20 terms).
inline const JetRelation& printed_ode()
{
    static const JetRelation rel{{
        {600, {0, 1, 3, 1, 0, 0}},  {-225, {0, 1, 0, 3, 0, 0}}, {120, {0, 0, 3, 0, 1, 0}},
        {-300, {0, 0, 2, 2, 0, 0}}, {-54, {0, 2, 0, 0, 2, 0}},  {460, {1, 1, 1, 1, 1, 0}},
        {360, {0, 1, 1, 1, 1, 0}},  {-120, {1, 1, 2, 0, 0, 1}}, {45, {1, 2, 0, 1, 0, 1}},
        {-400, {0, 0, 5, 0, 0, 0}}, {90, {0, 3, 1, 0, 0, 1}},   {-120, {0, 1, 2, 0, 0, 1}},
        {-225, {1, 1, 0, 3, 0, 0}}, {225, {0, 2, 1, 2, 0, 0}},  {-135, {0, 3, 0, 1, 1, 0}},
        {-150, {1, 0, 2, 2, 0, 0}}, {120, {1, 0, 3, 0, 1, 0}},  {-54, {1, 2, 0, 0, 2, 0}},
        {-360, {0, 2, 2, 0, 1, 0}}, {45, {0, 2, 0, 1, 0, 1}},
    }};
    return rel;
}

/// Evaluates the printed sixth-order relation on a jet.
inline Rat ode_residual(const Jet6& j)
{
    return printed_ode().eval(j);
}

namespace detail {

// Determinant of a square matrix of jet polynomials by Laplace expansion
// along rows, memoized on the set of remaining columns.
inline JetPoly det_rows(const std::vector<std::vector<JetPoly>>& m, std::size_t row, unsigned cols,
                        std::map<unsigned, JetPoly>& memo)
{
    if (row == m.size())
        return JetPoly::constant(Rat(1));
    if (auto it = memo.find(cols); it != memo.end())
        return it->second;
    JetPoly acc;
    int sign = 1;
    for (std::size_t c = 0; c < m.size(); ++c) {
        if (!(cols & (1u << c)))
            continue;
        if (!m[row][c].is_zero()) {
            JetPoly minor = det_rows(m, row + 1, cols & ~(1u << c), memo);
            JetPoly term = m[row][c] * minor;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
}

} // namespace detail

/// Sixth-order relation obtained by eliminating A..F from the six total
/// derivatives of x^3 + x^2 y - A x^2 - B xy - C y^2 - D x - E y - F = 0,
/// scaled so that the y3^5 coefficient matches the printed -400.
inline const JetRelation& derived_ode()
{
    static const JetRelation rel = [] {
        JetPoly x = JetPoly::var(0), y = JetPoly::var(1);
        std::vector<JetPoly> basis{x * x * x + x * x * y, x * x, x * y, y * y, x, y};
        std::vector<std::vector<JetPoly>> m(6, std::vector<JetPoly>(6));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            JetPoly d = basis[j];
            for (int k = 0; k < 6; ++k) {
                d = d.total_derivative();
                // Evaluate the base point at the origin; the eliminant is
                // translation invariant.
                JetPoly at_origin;
                for (const auto& [e, c] : d.terms())
                    if (e[0] == 0 && e[1] == 0)
                        at_origin.add(e, c);
                m[k][j] = at_origin;
            }
        }
        std::map<unsigned, JetPoly> memo;
        JetPoly det = detail::det_rows(m, 0, (1u << 6) - 1, memo);
        JetRelation out;
        for (const auto& [e, c] : det.terms()) {
            std::array<unsigned char, 6> ye;
            for (int v = 0; v < 6; ++v)
                ye[v] = e[v + 2];
            out.terms.push_back({c, ye});
        }
        Rat lead = out.coefficient({0, 0, 5, 0, 0, 0});
        if (lead.is_zero())
            throw Error("eliminant lacks a y3^5 term");
        Rat scale = Rat(-400) / lead;
        for (auto& t : out.terms)
            t.coef *= scale;
        return out;
    }();
    return rel;
}

inline Rat derived_ode_residual(const Jet6& j)
{
    return derived_ode().eval(j);
}

struct OdeDiscrepancy
{
    std::array<unsigned char, 6> exponent;
    Rat printed, derived;
};

inline std::string jet_monomial_str(const std::array<unsigned char, 6>& e)
{
    static constexpr std::array<const char*, 6> names{"y'", "y''", "y3", "y4", "y5", "y6"};
    std::string out;
    for (int v = 0; v < 6; ++v) {
        if (!e[v])
            continue;
        if (!out.empty())
            out += "*";
        out += names[v];
        if (e[v] > 1)
            out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

/// Monomials whose printed coefficient differs from the derived eliminant.
inline std::vector<OdeDiscrepancy> ode_discrepancies()
{
    std::map<std::array<unsigned char, 6>, std::pair<Rat, Rat>> all;
    for (const auto& t : printed_ode().terms)
        all[t.e].first += t.coef;
    for (const auto& t : derived_ode().terms)
        all[t.e].second += t.coef;
    std::vector<OdeDiscrepancy> out;
    for (const auto& [e, pd] : all)
        if (pd.first != pd.second)
            out.push_back({e, pd.first, pd.second});
    return out;
}

} // namespace cubaff
