#pragma once

#include <string>

#include "prab/problem.hpp"

namespace prab {

// Header "t,x,u", one row per node in t-major order, %.17g, '\n' line ends.
std::string format_csv(const SolutionField& field);
void emit_csv(const SolutionField& field, const std::string& path);

// Inverse of format_csv; rebuilds the node vectors from the t-major rows.
SolutionField parse_csv_text(const std::string& text);
SolutionField parse_csv(const std::string& path);

}  // namespace prab
