#pragma once
#include <string>

#include "trapgraph/diagram.hpp"

namespace trapgraph {

// .trap text format: first line n, then n lines "a b c d" (base-10, single
// spaces), newline-terminated. serialize/parse round-trip bit-exactly.
TrapezoidDiagram parse_trap(const std::string& text);
std::string serialize_trap(const TrapezoidDiagram& d);

TrapezoidDiagram load_trap_file(const std::string& path);
void save_trap_file(const TrapezoidDiagram& d, const std::string& path);

} // namespace trapgraph
