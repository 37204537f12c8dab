#pragma once

#include <string>

#include <json.hpp>

#include "hooktab/hooks.hpp"

namespace hooktab {

using json = nlohmann::ordered_json;

// Partition whose diagram is the tableau's inside mask.
[[nodiscard]] Partition inside_partition(const RectTableau& t);

// Fixed-width grid; right-aligned entries, '*' suffix on inside boxes,
// a centered dot for the hole, legend line when the mask is nonempty.
[[nodiscard]] std::string render_ascii(const RectTableau& t);

// A LaTeX tabular; inside entries bold, the hole a \cdot.
[[nodiscard]] std::string render_latex(const RectTableau& t);

[[nodiscard]] json render_json(const RectTableau& t, const std::string& which);

// Inverse of render_json (ignores "which"); exact round-trip.
[[nodiscard]] RectTableau tableau_from_json(const json& j);

} // namespace hooktab
