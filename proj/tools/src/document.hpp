#pragma once

// On-disk form of a factorisation:
//
//   {
//     "order": 10,
//     "connection_set": [1, 3],
//     "factors": [
//       [[0, 1], [2, 3], ...],
//       ...
//     ],
//     "meta": {...}
//   }
//
// Edges are written smaller endpoint first and sorted within each factor;
// factor order is kept as given.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "b1f/graph.hpp"
#include "b1f/search.hpp"

namespace b1f::cli {

struct Document {
  int order = 0;
  std::vector<int> connection_set;
  std::vector<EdgeList> factors;
  nlohmann::json meta = nlohmann::json::object();
};

// Malformed text (with line and column) or a missing / mistyped field.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Document to_document(const OneFactorisation& f, nlohmann::json meta = nlohmann::json::object());

// Validates against the circulant named by the document; throws b1f::Error.
OneFactorisation to_factorisation(const Document& doc);

// Multi-line form, one factor per line, trailing newline.
std::string emit(const Document& doc);
// Single-line form for streams of documents.
std::string emit_compact(const Document& doc);

Document parse(std::string_view text);
Document read_file(const std::string& path);

// Header plus one line per row.
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace b1f::cli
