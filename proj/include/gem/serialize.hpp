#ifndef GEM_SERIALIZE_HPP
#define GEM_SERIALIZE_HPP

#include <optional>
#include <string>

#include "gem/invariants.hpp"
#include "gem/isomorphism.hpp"

namespace gem {

// Canonical document: {"colors": n, "vertices": [...], "edges": [[u,v,c],...]}
// with edges sorted ascending by (u, v, c); UTF-8, newline-terminated.
// encode(decode(t)) == t for canonical t.
std::string encode(const ColoredGraph& g);
ColoredGraph decode(const std::string& text);

std::string encode_isomorphism(const ColoredGraph& g, const ShiftIsomorphism& iso);
ShiftIsomorphism decode_isomorphism(const ColoredGraph& g, const std::string& text);

// Graphviz export, one fixed style per color; when eps is given the vertices
// are laid out in the bicolored-cycle order of its first color pair.
std::string export_dot(const ColoredGraph& g, const std::optional<CyclicPermutation>& eps = {});

}  // namespace gem

#endif
