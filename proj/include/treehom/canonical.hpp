#pragma once

#include <span>
#include <string>

#include "treehom/graph.hpp"

namespace treehom {

// Canonical form of an unlabeled tree, optionally with up to two marked
// vertices. Two trees get equal codes iff they are isomorphic by a map that
// sends mark k of one to mark k of the other. The code is a byte string;
// use code_hex for display.
using Code = std::string;

Code canonical_code(const Tree& t, std::span<const int> marks = {});

std::string code_hex(const Code& c);

bool is_isomorphic(const Tree& a, const Tree& b);

} // namespace treehom
