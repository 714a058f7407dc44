#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrzeta/io.hpp"

namespace arrzeta::fixtures {

/// f = xy(x - y) z^2 (x - z)^4 in C^3.
Arrangement veys();
/// Roots of b_f for the arrangement above, one entry per linear factor of
/// b_f (repeated roots appear repeatedly).
std::vector<Rational> veys_bf_roots();
/// xy(x - y) in C^2.
Arrangement three_lines();
/// xy in C^2.
Arrangement boolean2();
/// F = (x, y(x - y)) in C^2.
Arrangement two_factor();

std::vector<std::string> example_names();
/// Throws Error for an unknown name.
io::ArrangementFile example(const std::string& name);
/// Built-in b_f roots for the named example, when shipped.
std::optional<std::vector<Rational>> example_roots(const std::string& name);

}  // namespace arrzeta::fixtures
