#pragma once

#include "cubaff/cubaff.hpp"

#include <gtest/gtest.h>

namespace cubaff::test {

inline Rat q(long p, long d = 1) { return Rat(p, d); }

inline ReducedCubic<Rat> rc(Rat a, Rat b, Rat c, Rat d, Rat e, Rat f)
{
    return ReducedCubic<Rat>(a, b, c, d, e, f);
}

inline ReducedCubic<Rat> named(const std::string& name)
{
    for (const auto& n : concrete_representatives())
        if (n.name == name)
            return n.params;
    throw Error("no representative " + name);
}

} // namespace cubaff::test
