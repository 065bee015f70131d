#pragma once

#include <string>
#include <string_view>

#include "zdg/ring.hpp"

namespace zdg {

// Parses ring expressions such as
//
//   Z/27            GF(9)            Z/4[x]/(x^2)
//   FamA(2,3)       FamB(5)          FamC(3)        FamD(7)
//   Z/2 x GF(3) x Z/4[x]/(x^2+1)
//
// into a normalized RingSpec. Throws SyntaxError (1-based column plus the
// set of expected tokens) or SemanticError (composite prime, GF argument
// that is not a prime power, non-monic modulus, n < 2).
RingSpec parse_ring_spec(std::string_view text);

// Inverse of parse_ring_spec: parse_ring_spec(render_ring_spec(s)) == s for
// every normalized spec.
std::string render_ring_spec(const RingSpec& spec);

}  // namespace zdg
