#pragma once

#include "cubaff/interval.hpp"
#include "cubaff/rat.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cubaff {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
class UniPoly
{
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rat> c) : c_(c) { trim(); }
    explicit UniPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    static UniPoly monomial(const Rat& coef, int deg)
    {
        std::vector<Rat> c(deg + 1, Rat(0));
        c[deg] = coef;
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    template <class T>
    T eval(const T& x) const
    {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + T(*it);
        return acc;
    }

    int sign_at(const Rat& x) const { return eval(x).sign(); }

    UniPoly derivative() const
    {
        std::vector<Rat> d;
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.push_back(c_[i] * Rat(static_cast<long>(i)));
        return UniPoly(std::move(d));
    }

    UniPoly monic() const
    {
        if (is_zero())
            return *this;
        UniPoly out = *this;
        Rat l = lead();
        for (auto& a : out.c_)
            a /= l;
        return out;
    }

    UniPoly operator-() const
    {
        UniPoly out = *this;
        for (auto& a : out.c_)
            a = -a;
        return out;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i] += b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rat& s, const UniPoly& p)
    {
        std::vector<Rat> c = p.c_;
        for (auto& a : c)
            a *= s;
        return UniPoly(std::move(c));
    }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
    {
        if (b.is_zero())
            throw Error("polynomial division by zero");
        std::vector<Rat> r = a.c_;
        int db = b.degree();
        if (a.degree() < db)
            return {UniPoly{}, a};
        std::vector<Rat> q(a.degree() - db + 1, Rat(0));
        for (int k = a.degree() - db; k >= 0; --k) {
            Rat f = r[k + db] / b.lead();
            q[k] = f;
            if (f.is_zero())
                continue;
            for (int j = 0; j <= db; ++j)
                r[k + j] -= f * b.c_[j];
        }
        r.resize(db);
        return {UniPoly(std::move(q)), UniPoly(std::move(r))};
    }

    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string str(const std::string& var = "x") const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rat& a = c_[i];
            if (a.is_zero())
                continue;
            std::string mag = abs(a).str();
            if (out.empty())
                out += a.sign() < 0 ? "-" : "";
            else
                out += a.sign() < 0 ? " - " : " + ";
            if (i == 0 || mag != "1")
                out += mag + (i > 0 ? "*" : "");
            if (i > 0)
                out += var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Monic greatest common divisor.
inline UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline UniPoly square_free_part(const UniPoly& p)
{
    if (p.degree() <= 0)
        return p;
    UniPoly g = gcd(p, p.derivative());
    return (p / g).monic();
}

} // namespace cubaff
