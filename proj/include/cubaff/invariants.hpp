#pragma once

#include "cubaff/cubic.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

namespace cubaff {

inline constexpr std::array<const char*, 6> kParamNames{"A", "B", "C", "D", "E", "F"};

// Branching polynomials of the seven-case analysis.

template <class T>
T delta1(const ReducedCubic<T>& r)
{
    const T &A = r.A(), &B = r.B(), &C = r.C(), &D = r.D(), &E = r.E();
    return D + A * B - B * B - E - T(2) * A * C + T(3) * C * B - T(2) * C * C;
}

template <class T>
T delta2(const ReducedCubic<T>& r)
{
    const T &A = r.A(), &B = r.B(), &C = r.C(), &D = r.D();
    return T(4) * D + T(4) * C * C - T(3) * B * B + T(4) * A * B;
}

/// Also the inner polynomial of I2.
template <class T>
T delta3(const ReducedCubic<T>& r)
{
    const T &A = r.A(), &B = r.B(), &C = r.C(), &D = r.D(), &E = r.E(), &F = r.F();
    return C * (T(4) * E + T(7) * B * B + T(2) * A * A - T(8) * B * A - T(2) * D)
         + T(4) * C * C * (T(2) * A - T(3) * B) + T(6) * C * C * C + B * (D - T(3) * E)
         + A * B * B - B * B * B + T(2) * F + T(2) * A * E;
}

/// Shared denominator base of I1 and I2. Equals delta2 - 4 delta1.
template <class T>
T invariant_base(const ReducedCubic<T>& r)
{
    const T &A = r.A(), &B = r.B(), &C = r.C(), &E = r.E();
    return T(4) * E + T(8) * A * C + B * B - T(12) * C * B + T(12) * C * C;
}

struct DeltaTriple
{
    Rat d1, d2, d3;
    friend bool operator==(const DeltaTriple&, const DeltaTriple&) = default;
};

inline DeltaTriple deltas(const ReducedCubic<Rat>& r)
{
    return {delta1(r), delta2(r), delta3(r)};
}

template <class T>
T invariant_i1(const ReducedCubic<T>& r)
{
    T d1 = delta1(r), base = invariant_base(r);
    return r.C() * r.C() * d1 * d1 / (base * base * base);
}

template <class T>
T invariant_i2(const ReducedCubic<T>& r)
{
    T base = invariant_base(r);
    return r.C() * delta3(r) / (base * base);
}

struct InvariantPair
{
    Rat i1, i2;
    bool defined = false;
    friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

inline InvariantPair invariant_pair(const ReducedCubic<Rat>& r)
{
    if (invariant_base(r).is_zero())
        return {Rat(0), Rat(0), false};
    return {invariant_i1(r), invariant_i2(r), true};
}

// One-parameter flows. Flows 1 and 2 are translations by s; flows 3 and 4 take
// s = e^t > 0.

inline void require_positive(const Rat& s)
{
    if (s.sign() <= 0)
        throw Error("flow parameter must be positive");
}
inline void require_positive(const RatInterval& s)
{
    if (s.certain_sign() <= 0)
        throw Error("flow parameter must be positive");
}
template <class T>
void require_positive(const Dual<T>& s)
{
    require_positive(s.v);
}

/// The affine map of flow i at parameter s, acting by substitution.
template <class T>
AffineMap<T> flow_map(int i, const T& s)
{
    switch (i) {
    case 1:
        return AffineMap<T>::translation(s, T(0));
    case 2:
        return AffineMap<T>::translation(T(0), s);
    case 3:
        require_positive(s);
        return AffineMap<T>::linear(s, T(0), T(0), s);
    case 4:
        require_positive(s);
        return AffineMap<T>::linear(T(1), T(0), s - T(1), s);
    default:
        throw Error("flow index must be 1..4");
    }
}

/// Pulls the normal form back along flow i and renormalizes; the result is
/// again in normal form for every flow.
template <class T>
ReducedCubic<T> flow(int i, const T& s, const ReducedCubic<T>& r)
{
    return read_reduced(pullback(flow_map(i, s), r.curve()));
}

/// Vector field on the (A..F) parameter space whose six components are affine:
/// component k = sum_j lin[k][j] * P_j + cst[k].
struct ParamField
{
    std::array<std::array<Rat, 6>, 6> lin{};
    std::array<Rat, 6> cst{};

    template <class T>
    std::array<T, 6> at(const ReducedCubic<T>& r) const
    {
        std::array<T, 6> out;
        for (int k = 0; k < 6; ++k) {
            T acc(cst[k]);
            for (int j = 0; j < 6; ++j)
                if (!lin[k][j].is_zero())
                    acc = acc + T(lin[k][j]) * r[j];
            out[k] = acc;
        }
        return out;
    }

    bool is_zero() const
    {
        for (int k = 0; k < 6; ++k) {
            if (!cst[k].is_zero())
                return false;
            for (int j = 0; j < 6; ++j)
                if (!lin[k][j].is_zero())
                    return false;
        }
        return true;
    }

    ParamField operator-() const
    {
        ParamField out;
        for (int k = 0; k < 6; ++k) {
            out.cst[k] = -cst[k];
            for (int j = 0; j < 6; ++j)
                out.lin[k][j] = -lin[k][j];
        }
        return out;
    }

    /// Component k as text, e.g. "-A + B".
    std::string component_str(int k) const
    {
        std::string out;
        auto put = [&](const Rat& a, const std::string& name) {
            if (a.is_zero())
                return;
            std::string mag = abs(a).str();
            out += out.empty() ? (a.sign() < 0 ? "-" : "") : (a.sign() < 0 ? " - " : " + ");
            if (name.empty())
                out += mag;
            else
                out += (mag == "1" ? "" : mag + "*") + name;
        };
        for (int j = 0; j < 6; ++j)
            put(lin[k][j], kParamNames[j]);
        put(cst[k], "");
        return out.empty() ? "0" : out;
    }

    std::string str() const
    {
        std::string out;
        for (int k = 0; k < 6; ++k)
            out += (k ? ", " : "(") + component_str(k);
        return out + ")";
    }

    friend bool operator==(const ParamField&, const ParamField&) = default;
};

/// Induced infinitesimal generators on the normal-form parameters, as printed.
inline ParamField printed_generator(int i)
{
    ParamField f;
    enum { A, B, C, D, E, F };
    switch (i) {
    case 1: // -3 dA - 2 dB + 2A dD + B dE + D dF
        f.cst[A] = -3;
        f.cst[B] = -2;
        f.lin[D][A] = 2;
        f.lin[E][B] = 1;
        f.lin[F][D] = 1;
        break;
    case 2: // -dA + B dD + 2C dE + E dF
        f.cst[A] = -1;
        f.lin[D][B] = 1;
        f.lin[E][C] = 2;
        f.lin[F][E] = 1;
        break;
    case 3: // -A dA - B dB - C dC - 2D dD - 2E dE - 3F dF
        f.lin[A][A] = -1;
        f.lin[B][B] = -1;
        f.lin[C][C] = -1;
        f.lin[D][D] = -2;
        f.lin[E][E] = -2;
        f.lin[F][F] = -3;
        break;
    case 4: // (B - A) dA + 2C dB + C dC + (E - D) dD - F dF
        f.lin[A][B] = 1;
        f.lin[A][A] = -1;
        f.lin[B][C] = 2;
        f.lin[C][C] = 1;
        f.lin[D][E] = 1;
        f.lin[D][D] = -1;
        f.lin[F][F] = -1;
        break;
    default:
        throw Error("generator index must be 1..4");
    }
    return f;
}

/// Generator obtained by differentiating flow i at the identity parameter,
/// with dual numbers through the substitution.
inline ParamField derived_generator(int i)
{
    using D = Dual<Rat>;
    if (i < 1 || i > 4)
        throw Error("generator index must be 1..4");
    D s = i <= 2 ? D(Rat(0), Rat(1)) : D(Rat(1), Rat(1));
    auto tangent = [&](const ReducedCubic<Rat>& r) {
        auto out = flow(i, s, lift<D>(r));
        std::array<Rat, 6> t;
        for (int k = 0; k < 6; ++k)
            t[k] = out[k].d;
        return t;
    };
    ParamField f;
    f.cst = tangent(ReducedCubic<Rat>());
    for (int j = 0; j < 6; ++j) {
        ReducedCubic<Rat> e;
        e[j] = Rat(1);
        auto t = tangent(e);
        for (int k = 0; k < 6; ++k)
            f.lin[k][j] = t[k] - f.cst[k];
    }
    // The flow is affine in the parameters, so a generic probe must agree.
    ReducedCubic<Rat> probe(Rat(2), Rat(-3), Rat(5), Rat(7, 2), Rat(-1, 3), Rat(11));
    if (tangent(probe) != f.at(probe))
        throw Error("derived generator is not affine in the parameters");
    return f;
}

struct GeneratorMismatch
{
    int generator;
    int component;
    std::string printed, derived;
};

/// Componentwise comparison of printed and derived generators.
inline std::vector<GeneratorMismatch> generator_mismatches()
{
    std::vector<GeneratorMismatch> out;
    for (int i = 1; i <= 4; ++i) {
        ParamField p = printed_generator(i), d = derived_generator(i);
        for (int k = 0; k < 6; ++k)
            if (p.lin[k] != d.lin[k] || p.cst[k] != d.cst[k])
                out.push_back({i, k, p.component_str(k), d.component_str(k)});
    }
    return out;
}

/// Checked generator: the printed field, verified against substitution.
inline ParamField generator(int i)
{
    ParamField p = printed_generator(i), d = derived_generator(i);
    if (!(p == d))
        throw Error("generator X" + std::to_string(i) + " mismatch: printed " + p.str() + " vs derived " + d.str());
    return p;
}

/// [f, g] = f(g) - g(f) computed on the affine component representation.
inline ParamField lie_bracket(const ParamField& f, const ParamField& g)
{
    ParamField out;
    for (int k = 0; k < 6; ++k) {
        for (int j = 0; j < 6; ++j) {
            Rat acc(0);
            for (int m = 0; m < 6; ++m)
                acc += g.lin[k][m] * f.lin[m][j] - f.lin[k][m] * g.lin[m][j];
            out.lin[k][j] = acc;
        }
        Rat acc(0);
        for (int m = 0; m < 6; ++m)
            acc += g.lin[k][m] * f.cst[m] - f.lin[k][m] * g.cst[m];
        out.cst[k] = acc;
    }
    return out;
}

/// Printed commutator table of the plane fields: entry [i][j] is the index of
/// [X_i, X_j] (positive), its negative, or 0.
inline constexpr std::array<std::array<int, 4>, 4> kCommutatorTable{{
    {0, 0, 1, 2},
    {0, 0, 2, 2},
    {-1, -2, 0, 0},
    {-2, -2, 0, 0},
}};

struct BracketCheck
{
    int sigma = 0;                  // +1 or -1 when uniform, 0 otherwise
    std::vector<std::string> issues; // human-readable per-entry failures
};

/// Compares the brackets of the given fields to the printed table, allowing a
/// single global sign.
inline BracketCheck check_bracket_table(const std::array<ParamField, 4>& x)
{
    BracketCheck out;
    for (int sigma : {1, -1}) {
        std::vector<std::string> issues;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                ParamField got = lie_bracket(x[i], x[j]);
                int e = kCommutatorTable[i][j];
                ParamField want;
                if (e != 0)
                    want = sigma * e > 0 ? x[std::abs(e) - 1] : -x[std::abs(e) - 1];
                if (!(got == want))
                    issues.push_back("[X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) + "] = "
                                     + got.str() + ", expected " + want.str());
            }
        if (issues.empty()) {
            out.sigma = sigma;
            out.issues.clear();
            return out;
        }
        if (out.issues.empty() || issues.size() < out.issues.size())
            out.issues = issues;
    }
    return out;
}

/// Directional derivative of a scalar function of the parameters along a
/// field, exact via dual numbers.
template <class Fn>
Rat directional_derivative(const ParamField& field, const ReducedCubic<Rat>& r, Fn&& fn)
{
    using D = Dual<Rat>;
    auto t = field.at(r);
    ReducedCubic<D> rd;
    for (int k = 0; k < 6; ++k)
        rd[k] = D(r[k], t[k]);
    return fn(rd).d;
}

} // namespace cubaff
