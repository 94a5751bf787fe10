#pragma once

// Exhaustive enumeration of the 1-factorisations of small 3- and 4-regular
// circulants, and m-B1F existence queries built on it.
//
// The search tree is cut at a fixed depth into subtrees that are explored
// independently (in parallel when workers > 1) and merged in depth-first
// order, so results, node counts and budget cut-offs do not depend on the
// number of workers. Nodes spent above the cut are not counted.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "b1f/graph.hpp"

namespace b1f {

struct SearchOptions {
  // Give vertex 0's edges factor indices 0..r-1 in ascending neighbour order,
  // so each partition into factors is produced once.
  bool symmetry_break = true;
  std::optional<std::uint64_t> limit;        // stop after this many results
  std::optional<std::uint64_t> node_budget;  // stop after this many nodes
  unsigned workers = 1;
};

// Throws Error(InvalidParams) for a zero limit, budget or worker count.
void check_options(const SearchOptions& opts);

// Throws Error with NotRegular34 or Disconnected.
void require_searchable(const CirculantGraph& g);

struct EnumerationResult {
  std::uint64_t count = 0;  // results passed to the visitor
  std::uint64_t nodes = 0;
  bool complete = false;    // the whole space was explored
};

// Called on the calling thread in a fixed order; return false to stop.
using Visitor = std::function<bool(const OneFactorisation&)>;

EnumerationResult enumerate_factorisations(const CirculantGraph& g, const SearchOptions& opts, const Visitor& visit);
std::vector<OneFactorisation> collect_factorisations(const CirculantGraph& g, const SearchOptions& opts = {});

struct ExistenceOutcome {
  enum class Status { Found, NotFound, Unknown };

  Status status = Status::Unknown;
  std::optional<OneFactorisation> witness;
  std::uint64_t nodes = 0;
};

const char* to_string(ExistenceOutcome::Status s) noexcept;

// First factorisation (in search order) that is an m-B1F. opts.limit is
// ignored.
ExistenceOutcome exists_mb1f(const CirculantGraph& g, int m, const SearchOptions& opts = {});

// exists_mb1f for several m in one pass over the search space.
std::map<int, ExistenceOutcome> existence_profile(const CirculantGraph& g, std::span<const int> ms,
                                                  const SearchOptions& opts = {});

enum class TableCell { Found, None, Unknown, Infeasible };
const char* to_string(TableCell c) noexcept;

inline constexpr std::array<int, 4> kTableMs{1, 2, 3, 6};

struct TableRow {
  int order = 0;
  std::vector<int> connection_set;  // lexicographically least in its class
  std::map<int, TableCell> cells;   // keyed by m in kTableMs
};

// One row per isomorphism class of connected Circ(order,{a,b}), 4 <= order <=
// max_order, ordered by order then connection set.
std::vector<TableRow> existence_table(int max_order, const SearchOptions& opts = {});

}  // namespace b1f
