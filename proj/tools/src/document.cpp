#include "document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace b1f::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<int>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string factor_text(const EdgeList& edges) {
  std::string out = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ", ";
    out += "[" + std::to_string(edges[i].u) + ", " + std::to_string(edges[i].v) + "]";
  }
  return out + "]";
}

// Line and column (both 1-based) of a byte offset.
std::string position(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw DocumentError(std::string("missing field '") + name + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw DocumentError(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace

Document to_document(const OneFactorisation& f, nlohmann::json meta) {
  Document doc;
  doc.order = f.graph().order();
  doc.connection_set.assign(f.graph().connections().begin(), f.graph().connections().end());
  for (const auto& factor : f.factors()) doc.factors.push_back(factor.edges());
  doc.meta = std::move(meta);
  return doc;
}

OneFactorisation to_factorisation(const Document& doc) {
  const CirculantGraph g(doc.order, doc.connection_set);
  return validate_factorisation(g, std::span<const EdgeList>(doc.factors));
}

std::string emit(const Document& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"order\": " << doc.order << ",\n";
  out << "  \"connection_set\": [" << join(doc.connection_set, ", ") << "],\n";
  out << "  \"factors\": [\n";
  for (std::size_t i = 0; i < doc.factors.size(); ++i) {
    EdgeList edges = doc.factors[i];
    std::sort(edges.begin(), edges.end());
    out << "    " << factor_text(edges) << (i + 1 < doc.factors.size() ? ",\n" : "\n");
  }
  out << "  ],\n";
  out << "  \"meta\": " << doc.meta.dump() << "\n";
  out << "}\n";
  return out.str();
}

std::string emit_compact(const Document& doc) {
  std::string out = "{\"order\": " + std::to_string(doc.order) + ", \"connection_set\": [" +
                    join(doc.connection_set, ", ") + "], \"factors\": [";
  for (std::size_t i = 0; i < doc.factors.size(); ++i) {
    EdgeList edges = doc.factors[i];
    std::sort(edges.begin(), edges.end());
    if (i) out += ", ";
    out += factor_text(edges);
  }
  return out + "], \"meta\": " + doc.meta.dump() + "}";
}

Document parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    throw DocumentError("parse error at " + position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be an object");

  Document doc;
  doc.order = as_int(field(j, "order"), "order");

  const json& set = field(j, "connection_set");
  if (!set.is_array()) throw DocumentError("connection_set: expected a list of integers");
  for (std::size_t i = 0; i < set.size(); ++i) doc.connection_set.push_back(as_int(set[i], "connection_set[" + std::to_string(i) + "]"));

  const json& factors = field(j, "factors");
  if (!factors.is_array()) throw DocumentError("factors: expected a list of factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string where = "factors[" + std::to_string(i) + "]";
    if (!factors[i].is_array()) throw DocumentError(where + ": expected a list of edges");
    EdgeList edges;
    for (std::size_t k = 0; k < factors[i].size(); ++k) {
      const json& e = factors[i][k];
      const std::string at = where + "[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 2) throw DocumentError(at + ": expected a pair of vertices");
      edges.emplace_back(as_int(e[0], at), as_int(e[1], at));
    }
    doc.factors.push_back(std::move(edges));
  }

  if (const auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) throw DocumentError("meta: expected an object");
    doc.meta = *it;
  }
  return doc;
}

Document read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "order,connection_set";
  for (int m : kTableMs) out += ",m" + std::to_string(m);
  out += "\n";
  for (const auto& row : rows) {
    out += std::to_string(row.order) + "," + join(row.connection_set, ";");
    for (int m : kTableMs) out += std::string(",") + to_string(row.cells.at(m));
    out += "\n";
  }
  return out;
}

}  // namespace b1f::cli
