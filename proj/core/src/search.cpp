#include "b1f/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <thread>

#include "b1f/balance.hpp"

namespace b1f {

namespace {

constexpr int kSplitDepth = 6;
constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kNoCutoff = std::numeric_limits<std::size_t>::max();

using Colouring = std::vector<std::int8_t>;
using Assignment = std::pair<int, int>;  // (edge, colour)

struct Problem {
  const CirculantGraph* graph = nullptr;
  int n = 0;
  int r = 0;
  std::vector<Edge> edges;                // by smaller endpoint, then distance
  std::vector<std::vector<int>> incident;  // edge ids per vertex, ascending
  std::vector<Assignment> preset;
};

Problem make_problem(const CirculantGraph& g, bool symmetry_break) {
  Problem p;
  p.graph = &g;
  p.n = g.order();
  p.r = g.regularity();
  p.edges = g.edges();
  std::stable_sort(p.edges.begin(), p.edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    return g.distance(a.u, a.v) < g.distance(b.u, b.v);
  });
  p.incident.assign(static_cast<std::size_t>(p.n), {});
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    p.incident[static_cast<std::size_t>(p.edges[e].u)].push_back(static_cast<int>(e));
    p.incident[static_cast<std::size_t>(p.edges[e].v)].push_back(static_cast<int>(e));
  }
  if (symmetry_break) {
    std::vector<std::pair<Vertex, int>> around;  // (neighbour, edge)
    for (int e : p.incident[0]) {
      const Edge& ed = p.edges[static_cast<std::size_t>(e)];
      around.emplace_back(ed.u == 0 ? ed.v : ed.u, e);
    }
    std::sort(around.begin(), around.end());
    for (std::size_t c = 0; c < around.size(); ++c) p.preset.emplace_back(around[c].second, static_cast<int>(c));
  }
  return p;
}

// Up to four ways to cover the most constrained item. count < 0: every edge
// is coloured; count == 0: dead end.
struct Choice {
  int count = 0;
  std::array<Assignment, 4> options{};
};

class State {
 public:
  explicit State(const Problem& p)
      : p_(&p),
        colour_(p.edges.size(), -1),
        free_(static_cast<std::size_t>(p.n), static_cast<std::uint8_t>((1u << p.r) - 1)) {}

  void assign(int e, int c) {
    const Edge& ed = p_->edges[static_cast<std::size_t>(e)];
    colour_[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(c);
    const auto bit = static_cast<std::uint8_t>(1u << c);
    free_[static_cast<std::size_t>(ed.u)] &= static_cast<std::uint8_t>(~bit);
    free_[static_cast<std::size_t>(ed.v)] &= static_cast<std::uint8_t>(~bit);
    ++assigned_;
  }

  void unassign(int e) {
    const Edge& ed = p_->edges[static_cast<std::size_t>(e)];
    const auto bit = static_cast<std::uint8_t>(1u << colour_[static_cast<std::size_t>(e)]);
    free_[static_cast<std::size_t>(ed.u)] |= bit;
    free_[static_cast<std::size_t>(ed.v)] |= bit;
    colour_[static_cast<std::size_t>(e)] = -1;
    --assigned_;
  }

  const Colouring& colouring() const noexcept { return colour_; }

  Choice choose() const {
    Choice best;
    if (assigned_ == p_->edges.size()) {
      best.count = -1;
      return best;
    }
    int best_count = std::numeric_limits<int>::max();
    int best_edge = -1;
    for (std::size_t e = 0; e < p_->edges.size(); ++e) {
      if (colour_[e] >= 0) continue;
      const int c = std::popcount(static_cast<unsigned>(avail(static_cast<int>(e))));
      if (c == 0) return best;
      if (c < best_count) {
        best_count = c;
        best_edge = static_cast<int>(e);
      }
    }
    int best_vertex = -1;
    int best_colour = -1;
    for (int v = 0; v < p_->n && best_count > 1; ++v) {
      const unsigned fv = free_[static_cast<std::size_t>(v)];
      for (int c = 0; c < p_->r; ++c) {
        if (!(fv & (1u << c))) continue;
        int candidates = 0;
        for (int e : p_->incident[static_cast<std::size_t>(v)]) {
          candidates += colour_[static_cast<std::size_t>(e)] < 0 && (avail(e) & (1u << c));
        }
        if (candidates == 0) return best;
        if (candidates < best_count) {
          best_count = candidates;
          best_vertex = v;
          best_colour = c;
        }
      }
    }
    if (best_vertex >= 0) {
      for (int e : p_->incident[static_cast<std::size_t>(best_vertex)]) {
        if (colour_[static_cast<std::size_t>(e)] < 0 && (avail(e) & (1u << best_colour))) {
          best.options[static_cast<std::size_t>(best.count++)] = {e, best_colour};
        }
      }
    } else {
      const unsigned a = avail(best_edge);
      for (int c = 0; c < p_->r; ++c) {
        if (a & (1u << c)) best.options[static_cast<std::size_t>(best.count++)] = {best_edge, c};
      }
    }
    return best;
  }

 private:
  unsigned avail(int e) const noexcept {
    const Edge& ed = p_->edges[static_cast<std::size_t>(e)];
    return free_[static_cast<std::size_t>(ed.u)] & free_[static_cast<std::size_t>(ed.v)];
  }

  const Problem* p_;
  Colouring colour_;
  std::vector<std::uint8_t> free_;
  std::size_t assigned_ = 0;
};

using Task = std::vector<Assignment>;

void split(State& s, int depth, Task& stack, std::vector<Task>& out) {
  const Choice ch = s.choose();
  if (ch.count == 0) return;
  if (ch.count < 0 || depth == kSplitDepth) {
    out.push_back(stack);
    return;
  }
  for (int i = 0; i < ch.count; ++i) {
    const auto [e, c] = ch.options[static_cast<std::size_t>(i)];
    s.assign(e, c);
    stack.emplace_back(e, c);
    split(s, depth + 1, stack, out);
    stack.pop_back();
    s.unassign(e);
  }
}

std::vector<Task> make_tasks(const Problem& p) {
  State s(p);
  for (const auto& [e, c] : p.preset) s.assign(e, c);
  std::vector<Task> out;
  Task stack;
  split(s, 0, stack, out);
  return out;
}

// Depth-first search below one task. The leaf callback receives the number
// of nodes spent so far and returns false to stop.
class Runner {
 public:
  using Leaf = std::function<bool(const Colouring&, std::uint64_t)>;

  Runner(const Problem& p, const Task& task, std::uint64_t cap, Leaf leaf, std::function<bool()> cancelled = {})
      : state_(p), cap_(cap), leaf_(std::move(leaf)), cancelled_(std::move(cancelled)) {
    for (const auto& [e, c] : p.preset) state_.assign(e, c);
    for (const auto& [e, c] : task) state_.assign(e, c);
  }

  void run() { dfs(); }

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool capped() const noexcept { return capped_; }
  bool stopped() const noexcept { return stop_; }

 private:
  void dfs() {
    const Choice ch = state_.choose();
    if (ch.count < 0) {
      if (!leaf_(state_.colouring(), nodes_)) stop_ = true;
      return;
    }
    for (int i = 0; i < ch.count; ++i) {
      if (nodes_ == cap_) {
        capped_ = stop_ = true;
        return;
      }
      ++nodes_;
      if (cancelled_ && (nodes_ & 0x3ff) == 0 && cancelled_()) {
        stop_ = true;
        return;
      }
      const auto [e, c] = ch.options[static_cast<std::size_t>(i)];
      state_.assign(e, c);
      dfs();
      state_.unassign(e);
      if (stop_) return;
    }
  }

  State state_;
  std::uint64_t cap_;
  Leaf leaf_;
  std::function<bool()> cancelled_;
  std::uint64_t nodes_ = 0;
  bool capped_ = false;
  bool stop_ = false;
};

struct Hit {
  Colouring colour;
  int key = 0;
  std::uint64_t node = 0;
};

using Filter = std::function<std::optional<int>(const Colouring&)>;
using Sink = std::function<bool(const Hit&)>;

struct EngineSpec {
  std::optional<std::uint64_t> budget;
  std::uint64_t per_key_limit = 0;  // 0: unlimited
  std::vector<int> keys;            // the keys that can saturate
  unsigned workers = 1;
};

struct EngineResult {
  std::uint64_t nodes = 0;
  bool complete = false;
};

// Accepted-hit bookkeeping shared by the sequential and parallel paths.
class Tally {
 public:
  explicit Tally(const EngineSpec& spec) : spec_(&spec) {}

  bool wants(int key) const { return spec_->per_key_limit == 0 || count(key) < spec_->per_key_limit; }
  void add(int key) { ++counts_[key]; }
  bool saturated() const {
    if (spec_->per_key_limit == 0) return false;
    return std::all_of(spec_->keys.begin(), spec_->keys.end(),
                       [&](int k) { return count(k) >= spec_->per_key_limit; });
  }

 private:
  std::uint64_t count(int key) const {
    const auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }

  const EngineSpec* spec_;
  std::map<int, std::uint64_t> counts_;
};

EngineResult run_sequential(const Problem& p, const std::vector<Task>& tasks, const EngineSpec& spec,
                            const Filter& filter, const Sink& sink) {
  EngineResult result;
  Tally tally(spec);
  bool stopped = false;
  for (const Task& task : tasks) {
    const std::uint64_t cap = spec.budget ? *spec.budget - result.nodes : kUnlimited;
    Runner runner(p, task, cap, [&](const Colouring& colour, std::uint64_t node) {
      const auto key = filter(colour);
      if (!key || !tally.wants(*key)) return true;
      tally.add(*key);
      if (!sink(Hit{colour, *key, node}) || tally.saturated()) {
        stopped = true;
        return false;
      }
      return true;
    });
    runner.run();
    result.nodes += runner.nodes();
    if (stopped || runner.capped()) return result;
  }
  result.complete = true;
  return result;
}

struct TaskResult {
  std::vector<Hit> hits;
  std::uint64_t nodes = 0;
  bool capped = false;
};

EngineResult run_parallel(const Problem& p, const std::vector<Task>& tasks, const EngineSpec& spec,
                          const Filter& filter, const Sink& sink) {
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cutoff{kNoCutoff};

  auto lower_cutoff = [&](std::size_t t) {
    std::size_t seen = cutoff.load();
    while (t < seen && !cutoff.compare_exchange_weak(seen, t)) {
    }
  };

  auto work = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      if (t > cutoff.load()) continue;
      Tally tally(spec);
      TaskResult& out = results[t];
      Runner runner(
          p, tasks[t], spec.budget.value_or(kUnlimited),
          [&](const Colouring& colour, std::uint64_t node) {
            const auto key = filter(colour);
            if (!key || !tally.wants(*key)) return true;
            tally.add(*key);
            out.hits.push_back(Hit{colour, *key, node});
            if (tally.saturated()) {
              lower_cutoff(t);
              return false;
            }
            return true;
          },
          [&] { return t > cutoff.load(); });
      runner.run();
      out.nodes = runner.nodes();
      out.capped = runner.capped();
    }
  };

  const unsigned count = std::min<std::size_t>(spec.workers, tasks.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  // Replay in task order exactly as the sequential search would have seen it.
  EngineResult result;
  Tally tally(spec);
  for (const TaskResult& task : results) {
    const std::uint64_t room = spec.budget ? *spec.budget - result.nodes : kUnlimited;
    const bool cut = spec.budget && (task.nodes > room || task.capped);
    for (const Hit& hit : task.hits) {
      if (cut && hit.node > room) break;
      if (!tally.wants(hit.key)) continue;
      tally.add(hit.key);
      if (!sink(hit) || tally.saturated()) {
        result.nodes += hit.node;
        return result;
      }
    }
    if (cut) {
      result.nodes += room;
      return result;
    }
    result.nodes += task.nodes;
  }
  result.complete = true;
  return result;
}

EngineResult run_engine(const Problem& p, const EngineSpec& spec, const Filter& filter, const Sink& sink) {
  const auto tasks = make_tasks(p);
  if (spec.workers <= 1) return run_sequential(p, tasks, spec, filter, sink);
  return run_parallel(p, tasks, spec, filter, sink);
}

OneFactorisation to_factorisation(const Problem& p, const Colouring& colour) {
  std::vector<EdgeList> factors(static_cast<std::size_t>(p.r));
  for (std::size_t e = 0; e < p.edges.size(); ++e) factors[static_cast<std::size_t>(colour[e])].push_back(p.edges[e]);
  return validate_factorisation(*p.graph, std::span<const EdgeList>(factors));
}

// The balanced m of a complete colouring, without building a factorisation.
std::optional<int> balanced_m(const Problem& p, const Colouring& colour) {
  const auto n = static_cast<std::size_t>(p.n);
  std::vector<std::vector<Vertex>> partner(static_cast<std::size_t>(p.r), std::vector<Vertex>(n));
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    auto& f = partner[static_cast<std::size_t>(colour[e])];
    f[static_cast<std::size_t>(p.edges[e].u)] = p.edges[e].v;
    f[static_cast<std::size_t>(p.edges[e].v)] = p.edges[e].u;
  }
  std::vector<std::vector<int>> types;
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < partner.size(); ++i) {
    for (std::size_t j = i + 1; j < partner.size(); ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<int> lengths;
      for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) continue;
        int len = 0;
        std::size_t x = v;
        do {
          seen[x] = 1;
          const auto y = static_cast<std::size_t>(partner[i][x]);
          seen[y] = 1;
          x = static_cast<std::size_t>(partner[j][y]);
          len += 2;
        } while (x != v);
        lengths.push_back(len);
      }
      std::sort(lengths.begin(), lengths.end());
      types.push_back(std::move(lengths));
    }
  }
  std::sort(types.begin(), types.end());
  std::vector<std::size_t> runs;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t j = i;
    while (j < types.size() && types[j] == types[i]) ++j;
    runs.push_back(j - i);
    i = j;
  }
  if (std::adjacent_find(runs.begin(), runs.end(), std::not_equal_to<>()) != runs.end()) return std::nullopt;
  return static_cast<int>(runs.size());
}

}  // namespace

void check_options(const SearchOptions& opts) {
  if (opts.limit && *opts.limit == 0) throw Error(ErrorCode::InvalidParams, "limit must be positive");
  if (opts.node_budget && *opts.node_budget == 0) throw Error(ErrorCode::InvalidParams, "node budget must be positive");
  if (opts.workers == 0) throw Error(ErrorCode::InvalidParams, "worker count must be positive");
}

void require_searchable(const CirculantGraph& g) {
  if (g.regularity() != 3 && g.regularity() != 4) {
    throw Error(ErrorCode::NotRegular34, g.name() + " is " + std::to_string(g.regularity()) + "-regular, not 3- or 4-regular");
  }
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, g.name() + " is disconnected");
}

EnumerationResult enumerate_factorisations(const CirculantGraph& g, const SearchOptions& opts, const Visitor& visit) {
  check_options(opts);
  require_searchable(g);
  const Problem p = make_problem(g, opts.symmetry_break);
  EngineSpec spec{opts.node_budget, opts.limit.value_or(0), {0}, opts.workers};
  EnumerationResult out;
  const auto r = run_engine(
      p, spec, [](const Colouring&) { return std::optional<int>(0); },
      [&](const Hit& hit) {
        ++out.count;
        return visit(to_factorisation(p, hit.colour));
      });
  out.nodes = r.nodes;
  out.complete = r.complete;
  return out;
}

std::vector<OneFactorisation> collect_factorisations(const CirculantGraph& g, const SearchOptions& opts) {
  std::vector<OneFactorisation> out;
  enumerate_factorisations(g, opts, [&](const OneFactorisation& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

const char* to_string(ExistenceOutcome::Status s) noexcept {
  switch (s) {
    case ExistenceOutcome::Status::Found: return "Found";
    case ExistenceOutcome::Status::NotFound: return "NotFound";
    case ExistenceOutcome::Status::Unknown: return "Unknown";
  }
  return "?";
}

std::map<int, ExistenceOutcome> existence_profile(const CirculantGraph& g, std::span<const int> ms,
                                                  const SearchOptions& opts) {
  check_options(opts);
  require_searchable(g);
  std::vector<int> keys(ms.begin(), ms.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const Problem p = make_problem(g, opts.symmetry_break);
  EngineSpec spec{opts.node_budget, 1, keys, opts.workers};
  std::map<int, ExistenceOutcome> out;
  const auto r = run_engine(
      p, spec,
      [&](const Colouring& colour) -> std::optional<int> {
        const auto m = balanced_m(p, colour);
        if (m && std::binary_search(keys.begin(), keys.end(), *m)) return m;
        return std::nullopt;
      },
      [&](const Hit& hit) {
        auto& o = out[hit.key];
        o.status = ExistenceOutcome::Status::Found;
        o.witness = to_factorisation(p, hit.colour);
        return true;
      });
  for (int m : keys) {
    auto& o = out[m];
    o.nodes = r.nodes;
    if (!o.witness) o.status = r.complete ? ExistenceOutcome::Status::NotFound : ExistenceOutcome::Status::Unknown;
  }
  return out;
}

ExistenceOutcome exists_mb1f(const CirculantGraph& g, int m, const SearchOptions& opts) {
  const std::array<int, 1> ms{m};
  return existence_profile(g, ms, opts).at(m);
}

const char* to_string(TableCell c) noexcept {
  switch (c) {
    case TableCell::Found: return "found";
    case TableCell::None: return "none";
    case TableCell::Unknown: return "unknown";
    case TableCell::Infeasible: return "infeasible";
  }
  return "?";
}

std::vector<TableRow> existence_table(int max_order, const SearchOptions& opts) {
  if (max_order < 4 || max_order % 2 != 0) throw Error(ErrorCode::InvalidParams, "max order must be even and at least 4");
  check_options(opts);
  SearchOptions search = opts;
  search.limit.reset();

  std::vector<TableRow> rows;
  for (int order = 4; order <= max_order; order += 2) {
    std::vector<std::vector<int>> classes;
    for (int a = 1; a <= order / 2; ++a) {
      for (int b = a + 1; b <= order / 2; ++b) {
        if (std::gcd(order, std::gcd(a, b)) != 1) continue;
        const std::vector<int> set{a, b};
        const bool known = std::any_of(classes.begin(), classes.end(), [&](const std::vector<int>& rep) {
          return connection_sets_isomorphic(order, rep, set);
        });
        if (!known) classes.push_back(set);
      }
    }
    for (const auto& set : classes) {
      const CirculantGraph g(order, set);
      TableRow row{order, set, {}};
      std::vector<int> feasible;
      for (int m : kTableMs) {
        if (is_feasible(g.regularity(), m)) {
          feasible.push_back(m);
        } else {
          row.cells[m] = TableCell::Infeasible;
        }
      }
      for (const auto& [m, outcome] : existence_profile(g, feasible, search)) {
        switch (outcome.status) {
          case ExistenceOutcome::Status::Found: row.cells[m] = TableCell::Found; break;
          case ExistenceOutcome::Status::NotFound: row.cells[m] = TableCell::None; break;
          case ExistenceOutcome::Status::Unknown: row.cells[m] = TableCell::Unknown; break;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace b1f
