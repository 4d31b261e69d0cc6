#pragma once

#include "cubaff/rat.hpp"

#include <string>

namespace cubaff {

/// Outcome of replaying a claimed transformation by substitution.
struct Certificate
{
    enum class Status { ExactVerified, IntervalVerified, Unresolved, Failed };

    Status status = Status::Unresolved;
    Rat bound;              // residual bound, IntervalVerified only
    std::string diagnostic; // Unresolved / Failed only

    static Certificate exact() { return {Status::ExactVerified, Rat(0), {}}; }
    static Certificate interval(Rat b) { return {Status::IntervalVerified, std::move(b), {}}; }
    static Certificate unresolved(std::string why) { return {Status::Unresolved, Rat(0), std::move(why)}; }
    static Certificate failed(std::string why) { return {Status::Failed, Rat(0), std::move(why)}; }

    bool verified() const { return status == Status::ExactVerified || status == Status::IntervalVerified; }
};

inline const char* status_name(Certificate::Status s)
{
    switch (s) {
    case Certificate::Status::ExactVerified:
        return "ExactVerified";
    case Certificate::Status::IntervalVerified:
        return "IntervalVerified";
    case Certificate::Status::Unresolved:
        return "Unresolved";
    case Certificate::Status::Failed:
        return "Failed";
    }
    return "?";
}

inline Certificate::Status status_from_name(const std::string& s)
{
    for (auto st : {Certificate::Status::ExactVerified, Certificate::Status::IntervalVerified,
                    Certificate::Status::Unresolved, Certificate::Status::Failed})
        if (s == status_name(st))
            return st;
    throw Error("unknown certificate status '" + s + "'");
}

inline std::string describe(const Certificate& c)
{
    std::string out = status_name(c.status);
    if (c.status == Certificate::Status::IntervalVerified)
        out += " (residual <= " + c.bound.str() + ")";
    if (!c.diagnostic.empty())
        out += ": " + c.diagnostic;
    return out;
}

} // namespace cubaff
