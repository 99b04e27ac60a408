#pragma once

#include "nafield/freepoly.hpp"
#include "nafield/term.hpp"

namespace nafield {

/// The associator rewrite rule on one quartet:
///   (((f b) f) b)  ->  Phi_{m1}(p1) Phi_{m2}(p2) - mu^2_{m1 m2}.
FreePoly reduce_quartet(const QuartetMatch& q);

/// Reduces a term built from quartets and/or bare Phi leaves to observable
/// normal form: each quartet becomes its binomial, bare Phi leaves become
/// singleton words, and partial results multiply in left-to-right leaf
/// order. Throws Error("NotReducible", ...) if any f/b leaf sits outside a
/// recognizable quartet; no reduction rule exists for stray constituents.
FreePoly normalize(const Term& t);

}  // namespace nafield
