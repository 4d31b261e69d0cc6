#pragma once

#include "cubaff/cubic.hpp"

#include <cstdint>
#include <random>

namespace cubaff {

/// Seeded source of small rationals for property tests and probes.
class RatSampler
{
public:
    explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

    /// Rational p/q in [lo, hi] with 1 <= q <= max_den.
    Rat uniform(long lo, long hi, long max_den = 6)
    {
        long q = std::uniform_int_distribution<long>(1, max_den)(rng_);
        long p = std::uniform_int_distribution<long>(lo * q, hi * q)(rng_);
        return Rat(p, q);
    }

    Rat nonzero(long lo, long hi, long max_den = 6)
    {
        Rat r;
        do
            r = uniform(lo, hi, max_den);
        while (r.is_zero());
        return r;
    }

    /// Positive rational in [1/max_den, hi].
    Rat positive(long hi, long max_den = 6)
    {
        Rat r;
        do
            r = uniform(0, hi, max_den);
        while (r.sign() <= 0);
        return r;
    }

    int index(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    CubicCurve<Rat> cubic(long bound = 9)
    {
        CubicCurve<Rat> c;
        do
            for (auto& v : c.c)
                v = uniform(-bound, bound);
        while (c.cubic_part_vanishes());
        return c;
    }

    ReducedCubic<Rat> reduced(long bound = 9)
    {
        ReducedCubic<Rat> r;
        for (auto& v : r.p)
            v = uniform(-bound, bound);
        r.p[2] = abs(r.p[2]);
        return r;
    }

    /// Flow parameter: any rational for translations, positive for scalings.
    Rat flow_parameter(int flow)
    {
        return flow <= 2 ? uniform(-4, 4) : positive(4);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace cubaff
