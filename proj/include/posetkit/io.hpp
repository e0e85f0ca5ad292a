#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetkit/core.hpp"
#include "posetkit/decomposition.hpp"

namespace posetkit {

// {"elements": [...], "relations": [[from, to], ...]}, relations strict.
struct PosetDocument {
  std::vector<ElementId> elements;
  std::vector<std::pair<ElementId, ElementId>> relations;
};

// Throws InputError on malformed JSON or a wrong shape.
PosetDocument parse_document(std::string_view json_text);
std::string emit_document(const PosetDocument& doc);

// Closes the relations; throws like Poset::from_relations.
Poset to_poset(const PosetDocument& doc);
// Writes the Hasse pairs only, in the poset's element order.
PosetDocument to_document(const Poset& p);

// Reads and parses a document file. Throws InputError.
Poset load_poset(const std::string& path);

enum class DotView { kHasse, kInc, kComp };

DotView parse_dot_view(std::string_view name);
// Hasse as a bottom-to-top digraph; inc and comp as undirected graphs.
std::string to_dot(const Poset& p, DotView view);

}  // namespace posetkit
