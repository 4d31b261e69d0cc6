// Minimal tour of the library: reduce, classify, compare, act.

#include "cubaff/cubaff.hpp"

#include <iostream>

using namespace cubaff;

int main()
{
    // Cubic part (x + y)^2 (2x - y): a double line, so a normal form exists.
    CubicCurve<Rat> c = parse_poly("2*x^3 + 3*x^2*y - y^3 - y = 4");
    ReductionResult red = reduce(c);
    std::cout << format_poly(c) << "\n  reduce: " << describe(red.certificate) << "\n";
    if (!red.certificate.verified())
        return 1;
    std::cout << "  map: " << describe(red.witness) << "\n"
              << "  normal form: " << format_poly(red.reduced.curve()) << "\n";

    ClassificationReport rep = classify_with_isotropy(red.reduced);
    std::cout << "  family " << rep.family.label() << ", witness " << describe(rep.witness) << ", "
              << describe(rep.certificate) << "\n";

    // Invariants survive the flows exactly.
    ReducedCubic<Rat> r(Rat(1), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0));
    ReducedCubic<Rat> moved = flow(4, Rat(3, 2), flow(1, Rat(-2), r));
    std::cout << "I1 before/after: " << invariant_i1(r).str() << " / " << invariant_i1(moved).str() << "\n";

    Verdict v = equivalent(r, moved);
    std::cout << "equivalent: " << verdict_name(v.kind) << " via " << describe(v.witness) << "\n";

    // The fold is an involution.
    auto t = AffineMap<Rat>::fold();
    std::cout << "fold o fold is identity: " << (compose(t, t).is_identity() ? "yes" : "no") << "\n";
    return 0;
}
