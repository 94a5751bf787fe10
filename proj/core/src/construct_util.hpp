#pragma once

#include <vector>

#include "b1f/graph.hpp"

namespace b1f::detail {

// Accumulates edges with endpoints reduced modulo the graph order.
class FactorBuilder {
 public:
  explicit FactorBuilder(const CirculantGraph& g) : graph_(&g) {}

  FactorBuilder& add(long long a, long long b) {
    edges_.emplace_back(graph_->wrap(a), graph_->wrap(b));
    return *this;
  }

  EdgeList take() { return std::move(edges_); }

 private:
  const CirculantGraph* graph_;
  EdgeList edges_;
};

inline OneFactorisation assemble(const CirculantGraph& g, std::vector<EdgeList> factors) {
  return validate_factorisation(g, std::span<const EdgeList>(factors));
}

}  // namespace b1f::detail
