#include "posetkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace posetkit {

using nlohmann::json;

PosetDocument parse_document(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
    throw InputError("document needs an \"elements\" array");
  }
  PosetDocument doc;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw InputError("element labels must be strings");
    doc.elements.push_back(e.get<std::string>());
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw InputError("\"relations\" must be an array");
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string()) {
        throw InputError("each relation must be a [from, to] pair of labels");
      }
      doc.relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  }
  return doc;
}

std::string emit_document(const PosetDocument& doc) {
  json j;
  j["elements"] = doc.elements;
  j["relations"] = json::array();
  for (const auto& [x, y] : doc.relations) j["relations"].push_back({x, y});
  return j.dump();
}

Poset to_poset(const PosetDocument& doc) {
  return Poset::from_relations(doc.elements, doc.relations);
}

PosetDocument to_document(const Poset& p) {
  return PosetDocument{p.elements(), hasse(p)};
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return to_poset(parse_document(buf.str()));
}

DotView parse_dot_view(std::string_view name) {
  if (name == "hasse") return DotView::kHasse;
  if (name == "inc") return DotView::kInc;
  if (name == "comp") return DotView::kComp;
  throw BadParamsError("unknown view '" + std::string(name) + "'");
}

namespace {

std::string quoted(const std::string& s) {
  // JSON string escaping is valid DOT string escaping for our purposes.
  return json(s).dump();
}

}  // namespace

std::string to_dot(const Poset& p, DotView view) {
  std::ostringstream out;
  if (view == DotView::kHasse) {
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i : p.canonical_order()) out << "  " << quoted(p.label(i)) << ";\n";
    for (const auto& [x, y] : hasse(p)) out << "  " << quoted(x) << " -> " << quoted(y) << ";\n";
  } else {
    const bool inc = view == DotView::kInc;
    const GraphView g = graph_view(p, inc ? GraphKind::kIncomparability : GraphKind::kComparability);
    out << "graph " << (inc ? "inc" : "comp") << " {\n";
    for (std::size_t i : p.canonical_order()) out << "  " << quoted(p.label(i)) << ";\n";
    for (auto [a, b] : g.edges) {
      out << "  " << quoted(g.vertices[a]) << " -- " << quoted(g.vertices[b]) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace posetkit
