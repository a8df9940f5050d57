#pragma once

#include <string>

#include "indfam/core.hpp"
#include "indfam/ground.hpp"

namespace indfam {

// Line-oriented family format:
//   gamma <n> <k> <r>
//   1.1 2.1
//   1.2 3.1
// one set per line, vertices "i.j" sorted by clique index.
std::string family_to_text(const Family& f);
Family family_from_text(const std::string& text);

// Compact fixture form: lowercase hex of each member's bit vector, sorted,
// comma-joined.  Also the byte string canonical forms are built from.
std::string indset_hex(IndSet x);
std::string family_hex(const Family& f);
Family family_from_hex(const Params& p, const std::string& csv);

// Ground family format:
//   ground <n> <r>
//   1 3
//   -            (the empty set)
std::string ground_to_text(const GroundFamily& g);
GroundFamily ground_from_text(const std::string& text);

} // namespace indfam
