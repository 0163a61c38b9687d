#pragma once

// Internal JSON helpers shared by the IO and report translation units; not
// installed with the public headers.

#include "json.hpp"

#include "qlie/bialgebra.hpp"

namespace qlie {

using ordered_json = nlohmann::ordered_json;

Scalar scalar_from_json(const ordered_json& j);

LieBialgebra bialgebra_from_json(const ordered_json& j);
ordered_json bialgebra_to_json(const LieBialgebra& b);

} // namespace qlie
