#pragma once

#include "shadowq/diagram.hpp"
#include "shadowq/qpoly.hpp"

namespace shadowq {

/// Kauffman bracket of a framed link diagram with every component colored 1,
/// by summing over all 2^n smoothings. A = x^2 = q^(1/2); the empty diagram
/// is 1 and a round circle is -A^2 - A^-2. Throws Unsupported for diagrams with
/// trivalent vertices, non-unit colors, or more than 24 crossings.
QPoly kauffman_bracket(const Diagram& d);

}  // namespace shadowq
