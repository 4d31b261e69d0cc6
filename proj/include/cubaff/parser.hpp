#pragma once

#include "cubaff/cubic.hpp"

#include <json.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace cubaff {

/// Syntax or semantic error in polynomial text, with a 0-based character offset.
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolyParser
{
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    CubicCurve<Rat> run()
    {
        CubicCurve<Rat> out;
        skip_ws();
        if (at_end())
            throw ParseError("empty polynomial", pos_);
        side(out, Rat(1));
        if (peek() == '=') {
            ++pos_;
            skip_ws();
            if (at_end())
                throw ParseError("missing right-hand side after '='", pos_);
            side(out, Rat(-1));
        }
        if (!at_end()) {
            if (peek() == '=')
                throw ParseError("more than one '='", pos_);
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        if (out.cubic_part_vanishes())
            throw ParseError("not a cubic", 0);
        return out;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    // One side of the equation: signed terms accumulated with the given sign.
    void side(CubicCurve<Rat>& out, const Rat& side_sign)
    {
        bool first = true;
        while (true) {
            skip_ws();
            Rat sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? Rat(-1) : Rat(1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                return;
            }
            term(out, sign * side_sign);
            first = false;
            skip_ws();
            if (peek() != '+' && peek() != '-')
                return;
        }
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    void term(CubicCurve<Rat>& out, const Rat& sign)
    {
        std::size_t start = pos_;
        Rat coef(1);
        bool have_coef = false, have_mono = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '.' || peek() == ',')
                throw ParseError("decimal literals are not supported; write fractions such as 3/2", pos_);
            std::string den = "1";
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t dpos = pos_;
                den = digits();
                if (den.empty())
                    throw ParseError("expected denominator after '/'", dpos);
                if (peek() == '.')
                    throw ParseError("decimal literals are not supported; write fractions such as 3/2", pos_);
                if (Rat::parse(den).is_zero())
                    throw ParseError("zero denominator", dpos);
            }
            coef = Rat::parse(num + "/" + den);
            have_coef = true;
        }
        int ex = 0, ey = 0;
        bool seen_x = false, seen_y = false;
        while (true) {
            skip_ws();
            std::size_t save = pos_;
            if (peek() == '*') {
                if (!have_coef && !have_mono)
                    throw ParseError("unexpected '*'", pos_);
                ++pos_;
                skip_ws();
                if (peek() != 'x' && peek() != 'y')
                    throw ParseError("expected variable after '*'", pos_);
            }
            char v = peek();
            if (v != 'x' && v != 'y') {
                pos_ = save;
                break;
            }
            std::size_t vpos = pos_;
            if ((v == 'x' && (seen_x || seen_y)) || (v == 'y' && seen_y))
                throw ParseError(std::string("variable '") + v + "' out of order or repeated", vpos);
            ++pos_;
            int e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t epos = pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected exponent digit after '^'", epos);
                e = peek() - '0';
                ++pos_;
                if (std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("degree overflow", epos);
            }
            (v == 'x' ? ex : ey) += e;
            (v == 'x' ? seen_x : seen_y) = true;
            have_mono = true;
        }
        if (!have_coef && !have_mono) {
            if (at_end())
                throw ParseError("expected a term", pos_);
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        if (ex + ey > 3)
            throw ParseError("degree overflow", start);
        out.at(ex, ey) += sign * coef;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses "x^3 + x^2 y = y^2 + 1" style text into the coefficient vector of
/// LHS - RHS.
inline CubicCurve<Rat> parse_poly(std::string_view text)
{
    return detail::PolyParser(text).run();
}

/// Renders a curve as "<terms> = 0" in the order x^3, x^2y, xy^2, y^3, x^2, xy,
/// y^2, x, y, 1.
inline std::string format_poly(const CubicCurve<Rat>& c)
{
    static constexpr std::array<const char*, 10> mono{
        "x^3", "x^2*y", "x*y^2", "y^3", "x^2", "x*y", "y^2", "x", "y", "",
    };
    std::string out;
    for (int k = 0; k < 10; ++k) {
        const Rat& a = c[k];
        if (a.is_zero())
            continue;
        std::string mag = abs(a).str();
        if (out.empty())
            out += a.sign() < 0 ? "-" : "";
        else
            out += a.sign() < 0 ? " - " : " + ";
        if (k == 9)
            out += mag;
        else if (mag == "1")
            out += mono[k];
        else
            out += mag + "*" + mono[k];
    }
    if (out.empty())
        out = "0";
    return out + " = 0";
}

inline nlohmann::json curve_to_json(const CubicCurve<Rat>& c)
{
    nlohmann::json j = nlohmann::json::object();
    for (int k = 0; k < 10; ++k)
        j[kCoeffNames[k]] = c[k].str();
    return j;
}

inline CubicCurve<Rat> curve_from_json(const nlohmann::json& j)
{
    CubicCurve<Rat> c;
    for (int k = 0; k < 10; ++k) {
        if (!j.contains(kCoeffNames[k]))
            throw Error(std::string("missing coefficient ") + kCoeffNames[k]);
        c[k] = Rat::parse(j.at(kCoeffNames[k]).get<std::string>());
    }
    c.check();
    return c;
}

} // namespace cubaff
