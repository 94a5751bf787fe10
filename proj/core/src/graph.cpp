#include "b1f/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace b1f {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

CirculantGraph::CirculantGraph(int order, std::vector<int> connections)
    : order_(order), connections_(std::move(connections)), regularity_(0) {
  if (order_ < 4 || order_ % 2 != 0) {
    throw Error(ErrorCode::OddOrder, "order must be even and at least 4, got " + std::to_string(order_));
  }
  std::sort(connections_.begin(), connections_.end());
  for (std::size_t i = 0; i < connections_.size(); ++i) {
    const int d = connections_[i];
    if (d < 1 || d > order_ / 2) {
      throw Error(ErrorCode::DistanceOutOfRange,
                  "distance " + std::to_string(d) + " outside [1, " + std::to_string(order_ / 2) + "]");
    }
    if (i > 0 && connections_[i - 1] == d) {
      throw Error(ErrorCode::DuplicateDistance, "distance " + std::to_string(d) + " listed twice");
    }
    regularity_ += (2 * d == order_) ? 1 : 2;
  }
}

int CirculantGraph::distance(Vertex a, Vertex b) const noexcept {
  int d = ((a - b) % order_ + order_) % order_;
  return std::min(d, order_ - d);
}

bool CirculantGraph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a < 0 || b < 0 || a >= order_ || b >= order_ || a == b) return false;
  return std::binary_search(connections_.begin(), connections_.end(), distance(a, b));
}

Vertex CirculantGraph::wrap(long long x) const noexcept {
  return static_cast<Vertex>(((x % order_) + order_) % order_);
}

std::vector<Vertex> CirculantGraph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (int d : connections_) {
    out.push_back(wrap(static_cast<long long>(v) + d));
    if (2 * d != order_) out.push_back(wrap(static_cast<long long>(v) - d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeList CirculantGraph::edges() const {
  EdgeList out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < order_; ++v) {
    for (Vertex w : neighbours(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CirculantGraph::name() const {
  std::ostringstream os;
  os << "Circ(" << order_ << ",{";
  for (std::size_t i = 0; i < connections_.size(); ++i) os << (i ? "," : "") << connections_[i];
  os << "})";
  return os.str();
}

CirculantGraph make_circulant(int order, std::vector<int> connections) {
  return CirculantGraph(order, std::move(connections));
}

bool is_connected(const CirculantGraph& g) {
  int acc = g.order();
  for (int d : g.connections()) acc = std::gcd(acc, d);
  return acc == 1;
}

// ---------------------------------------------------------------------------

OneFactor::OneFactor(int order, std::span<const Edge> edges) : partner_(static_cast<std::size_t>(order), -1) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order || e.u == e.v) {
      throw Error(ErrorCode::NotPerfectMatching, "edge " + to_string(e) + " is not a pair of distinct vertices");
    }
    for (Vertex x : {e.u, e.v}) {
      if (partner_[static_cast<std::size_t>(x)] != -1) {
        throw Error(ErrorCode::NotPerfectMatching, "vertex " + std::to_string(x) + " matched twice");
      }
    }
    partner_[static_cast<std::size_t>(e.u)] = e.v;
    partner_[static_cast<std::size_t>(e.v)] = e.u;
  }
  for (std::size_t v = 0; v < partner_.size(); ++v) {
    if (partner_[v] == -1) {
      throw Error(ErrorCode::NotPerfectMatching, "vertex " + std::to_string(v) + " unmatched");
    }
  }
}

OneFactor::OneFactor(std::vector<Vertex> partner) : partner_(std::move(partner)) {
  const auto n = static_cast<Vertex>(partner_.size());
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = partner_[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n || w == v || partner_[static_cast<std::size_t>(w)] != v) {
      throw Error(ErrorCode::NotPerfectMatching, "partner map is not an involution at vertex " + std::to_string(v));
    }
  }
}

bool OneFactor::contains(const Edge& e) const noexcept {
  return e.u >= 0 && e.v < order() && partner(e.u) == e.v;
}

EdgeList OneFactor::edges() const {
  EdgeList out;
  out.reserve(partner_.size() / 2);
  for (Vertex v = 0; v < order(); ++v) {
    if (v < partner(v)) out.emplace_back(v, partner(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

int CycleType::total() const noexcept {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < lengths_.size();) {
    std::size_t j = i;
    while (j < lengths_.size() && lengths_[j] == lengths_[i]) ++j;
    if (i) os << ',';
    os << lengths_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

CycleType CycleType::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("cycle type must be bracketed: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> lengths;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    const auto caret = item.find('^');
    const int length = parse_int(trim(item.substr(0, caret)));
    const int copies = caret == std::string_view::npos ? 1 : parse_int(trim(item.substr(caret + 1)));
    if (length <= 0 || copies <= 0) throw std::invalid_argument("non-positive entry in cycle type");
    lengths.insert(lengths.end(), static_cast<std::size_t>(copies), length);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (lengths.empty()) throw std::invalid_argument("empty cycle type");
  return CycleType(std::move(lengths));
}

// ---------------------------------------------------------------------------

int OneFactorisation::factor_of(const Edge& e) const noexcept {
  if (!graph_.has_edge(e)) return -1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].contains(e)) return static_cast<int>(i);
  }
  return -1;
}

OneFactorisation OneFactorisation::canonical() const {
  auto sorted = factors_;
  std::sort(sorted.begin(), sorted.end(),
            [](const OneFactor& a, const OneFactor& b) { return a.edges() < b.edges(); });
  return OneFactorisation(graph_, std::move(sorted));
}

OneFactorisation OneFactorisation::relabelled(int sign, int shift) const {
  std::vector<OneFactor> out;
  out.reserve(factors_.size());
  const int n = graph_.order();
  for (const auto& f : factors_) {
    std::vector<Vertex> partner(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      const Vertex image = graph_.wrap(static_cast<long long>(sign) * v + shift);
      partner[static_cast<std::size_t>(image)] = graph_.wrap(static_cast<long long>(sign) * f.partner(v) + shift);
    }
    out.emplace_back(std::move(partner));
  }
  return validate_factorisation(graph_, std::move(out));
}

OneFactorisation OneFactorisation::permuted(std::span<const std::size_t> order) const {
  std::vector<OneFactor> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(factors_.at(i));
  return validate_factorisation(graph_, std::move(out));
}

OneFactorisation validate_factorisation(const CirculantGraph& g, std::vector<OneFactor> factors) {
  const int n = g.order();
  std::vector<int> owner(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const OneFactor& f = factors[i];
    if (f.order() != n) {
      throw Error(ErrorCode::NotPerfectMatching, "factor " + std::to_string(i) + " spans " +
                                                     std::to_string(f.order()) + " vertices, graph has " +
                                                     std::to_string(n));
    }
    for (const Edge& e : f.edges()) {
      if (!g.has_edge(e)) {
        throw Error(ErrorCode::EdgeNotInGraph,
                    "factor " + std::to_string(i) + ": edge " + to_string(e) + " is not an edge of " + g.name());
      }
      int& slot = owner[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)];
      if (slot != -1) {
        throw Error(ErrorCode::OverlappingFactors, "edge " + to_string(e) + " lies in factors " +
                                                       std::to_string(slot) + " and " + std::to_string(i));
      }
      slot = static_cast<int>(i);
      ++covered;
    }
  }
  if (covered != g.edge_count()) {
    throw Error(ErrorCode::IncompleteCover, std::to_string(g.edge_count() - covered) + " of " +
                                                std::to_string(g.edge_count()) + " edges uncovered");
  }
  return OneFactorisation(g, std::move(factors));
}

OneFactorisation validate_factorisation(const CirculantGraph& g, std::span<const EdgeList> factors) {
  // Raw lists may repeat an edge across factors; report that before the
  // per-factor matching check would.
  std::vector<std::pair<Edge, std::size_t>> all;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const Edge& e : factors[i]) {
      if (!g.has_edge(e)) {
        throw Error(ErrorCode::EdgeNotInGraph,
                    "factor " + std::to_string(i) + ": edge " + to_string(e) + " is not an edge of " + g.name());
      }
      all.emplace_back(e, i);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 1; k < all.size(); ++k) {
    if (all[k].first == all[k - 1].first && all[k].second != all[k - 1].second) {
      throw Error(ErrorCode::OverlappingFactors, "edge " + to_string(all[k].first) + " lies in factors " +
                                                     std::to_string(all[k - 1].second) + " and " +
                                                     std::to_string(all[k].second));
    }
  }

  std::vector<OneFactor> built;
  built.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    try {
      built.emplace_back(g.order(), factors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "factor " + std::to_string(i) + ": " + e.what());
    }
  }
  return validate_factorisation(g, std::move(built));
}

// ---------------------------------------------------------------------------

std::vector<Cycle> union_cycles(const OneFactor& f1, const OneFactor& f2) {
  if (f1.order() != f2.order()) {
    throw Error(ErrorCode::OrderMismatch, "factors span different vertex counts");
  }
  const int n = f1.order();
  for (Vertex v = 0; v < n; ++v) {
    if (f1.partner(v) == f2.partner(v)) {
      throw Error(ErrorCode::FactorsShareEdge, "both factors contain " + to_string(Edge(v, f1.partner(v))));
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Cycle> out;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle cycle;
    Vertex v = start;
    bool along_first = true;
    do {
      cycle.push_back(v);
      seen[static_cast<std::size_t>(v)] = 1;
      v = along_first ? f1.partner(v) : f2.partner(v);
      along_first = !along_first;
    } while (v != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType cycle_type(const OneFactor& f1, const OneFactor& f2) {
  std::vector<int> lengths;
  for (const auto& c : union_cycles(f1, f2)) lengths.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(lengths));
}

// ---------------------------------------------------------------------------

bool connection_sets_isomorphic(int order, std::span<const int> d1, std::span<const int> d2) {
  if (d1.size() != 2 || d2.size() != 2) {
    throw Error(ErrorCode::UnsupportedConnectionSetSize, "isomorphism criterion needs exactly two distances");
  }
  const CirculantGraph g1(order, {d1.begin(), d1.end()});
  const CirculantGraph g2(order, {d2.begin(), d2.end()});
  const auto target = g1.connections();
  for (int m = 1; m < order; ++m) {
    if (std::gcd(m, order) != 1) continue;
    std::vector<int> image;
    for (int d : g2.connections()) image.push_back(g2.distance(static_cast<Vertex>((static_cast<long long>(m) * d) % order), 0));
    std::sort(image.begin(), image.end());
    if (std::equal(image.begin(), image.end(), target.begin(), target.end())) return true;
  }
  return false;
}

}  // namespace b1f
