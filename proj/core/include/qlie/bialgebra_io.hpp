#pragma once

#include <string>

#include "qlie/bialgebra.hpp"

namespace qlie {

// JSON layout:
//   {
//     "name": "optional label",
//     "generators": ["J3", "J+", "J-"],
//     "brackets":      { "A,B": { "C": "<scalar>", ... }, ... },
//     "cocommutators": { "C":   { "A,B": "<scalar>", ... }, ... }
//   }
// A bracket entry "A,B" -> {"C": v} states [A, B] contains v C.  A
// cocommutator entry "C" -> {"A,B": v} states delta(C) contains
// v (B (x) A - A (x) B); note the orientation.  Scalar values use the
// grammar of Scalar::parse ("1/2", "-1*r2", "3*i", ...); bare integers are
// also accepted.  Generator names must not contain commas.
LieBialgebra parse_bialgebra_text(const std::string& json_text);

std::string bialgebra_to_json_text(const LieBialgebra& b, int indent = 2);

} // namespace qlie
