#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "b1f/balance.hpp"
#include "b1f/cubic.hpp"
#include "b1f/onetwo.hpp"
#include "b1f/onethree.hpp"
#include "b1f/rotation.hpp"
#include "b1f/search.hpp"
#include "document.hpp"

namespace b1f::cli {

namespace {

using nlohmann::json;

struct ConstructArgs {
  std::string family;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> ell;
  std::optional<int> a;
  std::string variant = "span";
  std::string output;
};

struct FileArgs {
  std::string path;
  std::optional<int> expect_m;
  std::string expect_types;
};

struct EnumerateArgs {
  int order = 0;
  std::vector<int> set;
  std::optional<int> find_m;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
  bool count_only = false;
};

struct TableArgs {
  int max_order = 0;
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
  std::string output;
};

struct IsoArgs {
  int order = 0;
  std::vector<int> set1;
  std::vector<int> set2;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> env_budget() {
  const char* text = std::getenv("B1F_NODE_BUDGET");
  if (!text || !*text) return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0' || value == 0 || text[0] == '-') throw UsageError("B1F_NODE_BUDGET must be a positive integer");
  return value;
}

std::vector<CycleType> distinct_types(const BalanceReport& report) {
  std::vector<CycleType> out;
  for (const auto& [type, count] : report.profile) out.push_back(type);
  return out;
}

json types_json(const std::vector<CycleType>& types) {
  json out = json::array();
  for (const auto& t : types) out.push_back(t.to_string());
  return out;
}

// "[14],[10,4]" or "[14];[10,4]" -> sorted distinct types.
std::vector<CycleType> parse_type_list(const std::string& text) {
  std::vector<CycleType> out;
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string::npos) {
    const std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw UsageError("unbalanced brackets in '" + text + "'");
    try {
      out.push_back(CycleType::parse(text.substr(pos, close - pos + 1)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    pos = close + 1;
  }
  if (out.empty()) throw UsageError("no cycle types in '" + text + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string pair_label(const FactorPair& p) {
  return "F" + std::to_string(p.first) + " u F" + std::to_string(p.second);
}

void print_report(const OneFactorisation& f, const BalanceReport& report, std::ostream& out) {
  out << "graph: " << f.graph().name() << "\n";
  out << "factors: " << f.size() << "\n";
  for (const auto& [pair, type] : report.pair_types) out << pair_label(pair) << ": " << type.to_string() << "\n";
  out << "profile:";
  for (const auto& [type, count] : report.profile) out << " " << type.to_string() << " x" << count;
  out << "\n";
  out << "verdict: " << report.verdict() << "\n";
}

int construct(const ConstructArgs& args, std::ostream& out) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError("--family " + args.family + " needs " + flag);
    return *v;
  };
  auto expect_m = [&](int m) {
    if (args.m && *args.m != m) throw UsageError("--family " + args.family + " only builds " + std::to_string(m) + "-B1Fs");
  };

  json meta{{"family", args.family}};
  std::optional<OneFactorisation> f;
  if (args.family == "one-n" || args.family == "two-n") {
    expect_m(3);
    const int n = need(args.n, "--n");
    f = cubic::construct({args.family == "one-n" ? cubic::Family::OneN : cubic::Family::TwoN, n});
    meta["n"] = n;
  } else if (args.family == "c12") {
    expect_m(2);
    const int n = need(args.n, "--n");
    f = n == 4 ? onetwo::construct_order8() : onetwo::construct_rotation(n);
    meta["n"] = n;
  } else if (args.family == "c13") {
    const int m = need(args.m, "--m");
    const int n = need(args.n, "--n");
    f = onethree::construct_13(m, n);
    meta["m"] = m;
    meta["n"] = n;
  } else if (args.family == "general") {
    const rotation::RotationParams p{need(args.ell, "--ell"), need(args.a, "--a"), rotation::parse_variant(args.variant)};
    expect_m(2);
    f = rotation::construct_general(p);
    meta["ell"] = p.ell;
    meta["a"] = p.a;
    meta["variant"] = rotation::to_string(p.variant);
  } else {
    throw UsageError("unknown family '" + args.family + "'");
  }
  meta["types"] = types_json(distinct_types(classify_balance(*f)));
  write_text(args.output, emit(to_document(*f, std::move(meta))), out);
  return kOk;
}

int verify(const FileArgs& args, std::ostream& out) {
  const auto f = to_factorisation(read_file(args.path));
  out << "valid\n";
  print_report(f, classify_balance(f), out);
  return kOk;
}

int classify(const FileArgs& args, std::ostream& out) {
  const auto f = to_factorisation(read_file(args.path));
  const auto report = classify_balance(f);
  const auto types = distinct_types(report);
  out << "verdict: " << report.verdict() << "\n";
  out << "types:";
  for (const auto& t : types) out << " " << t.to_string();
  out << "\n";

  bool ok = true;
  if (args.expect_m && !report.is_m_balanced(*args.expect_m)) {
    out << "mismatch: expected MBalanced(" << *args.expect_m << ")\n";
    ok = false;
  }
  if (!args.expect_types.empty() && parse_type_list(args.expect_types) != types) {
    out << "mismatch: expected types " << args.expect_types << "\n";
    ok = false;
  }
  return ok ? kOk : kFailure;
}

SearchOptions search_options(std::optional<std::uint64_t> budget, std::optional<std::uint64_t> limit, unsigned workers) {
  SearchOptions opts;
  opts.node_budget = budget ? budget : env_budget();
  opts.limit = limit;
  opts.workers = workers;
  return opts;
}

int enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  const CirculantGraph g(args.order, args.set);
  const auto opts = search_options(args.budget, args.limit, args.workers);

  if (args.find_m) {
    const auto outcome = exists_mb1f(g, *args.find_m, opts);
    err << g.name() << " m=" << *args.find_m << ": " << to_string(outcome.status) << " after " << outcome.nodes
        << " nodes\n";
    switch (outcome.status) {
      case ExistenceOutcome::Status::Found: {
        const auto report = classify_balance(*outcome.witness);
        out << emit(to_document(*outcome.witness, json{{"types", types_json(distinct_types(report))}}));
        return kOk;
      }
      case ExistenceOutcome::Status::NotFound: return kNotFound;
      case ExistenceOutcome::Status::Unknown: return kUnknown;
    }
  }

  const auto result = enumerate_factorisations(g, opts, [&](const OneFactorisation& f) {
    if (!args.count_only) out << emit_compact(to_document(f)) << "\n";
    return true;
  });
  if (args.count_only) out << result.count << "\n";
  err << g.name() << ": " << result.count << " factorisations, " << result.nodes << " nodes, "
      << (result.complete ? "complete" : "incomplete") << "\n";
  if (result.complete || (args.limit && result.count == *args.limit)) return kOk;
  return kUnknown;
}

int table(const TableArgs& args, std::ostream& out) {
  const auto opts = search_options(args.budget, std::nullopt, args.workers);
  write_text(args.output, table_csv(existence_table(args.max_order, opts)), out);
  return kOk;
}

int iso(const IsoArgs& args, std::ostream& out) {
  const bool same = connection_sets_isomorphic(args.order, args.set1, args.set2);
  out << (same ? "isomorphic" : "not isomorphic") << "\n";
  return same ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced 1-factorisations of 3- and 4-regular circulant graphs", "b1f"};
  app.require_subcommand(1, 1);

  ConstructArgs c;
  auto* construct_cmd = app.add_subcommand("construct", "Build a factorisation from a known construction");
  construct_cmd->add_option("--family", c.family, "one-n, two-n, c12, c13 or general")
      ->required()
      ->check(CLI::IsMember({"one-n", "two-n", "c12", "c13", "general"}));
  construct_cmd->add_option("--m", c.m, "number of types");
  construct_cmd->add_option("--n", c.n, "half the order");
  construct_cmd->add_option("--ell", c.ell, "rotation step (general)");
  construct_cmd->add_option("--a", c.a, "number of windows (general)");
  construct_cmd->add_option("--variant", c.variant, "span or double-span (general)");
  construct_cmd->add_option("-o,--output", c.output, "write the document here");

  FileArgs v;
  auto* verify_cmd = app.add_subcommand("verify", "Validate a document and print its pair types");
  verify_cmd->add_option("file", v.path)->required();

  FileArgs k;
  auto* classify_cmd = app.add_subcommand("classify", "Print the balance verdict and compare it to expectations");
  classify_cmd->add_option("file", k.path)->required();
  classify_cmd->add_option("--expect-m", k.expect_m, "expected number of balanced types");
  classify_cmd->add_option("--expect-types", k.expect_types, "expected types, e.g. \"[14],[10,4]\"");

  EnumerateArgs e;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate factorisations or search for an m-B1F");
  enumerate_cmd->add_option("--order", e.order)->required();
  enumerate_cmd->add_option("--set", e.set, "connection set, e.g. 1,3")->required()->delimiter(',');
  enumerate_cmd->add_option("--find-m", e.find_m, "stop at the first m-B1F");
  enumerate_cmd->add_option("--limit", e.limit, "stop after this many factorisations");
  enumerate_cmd->add_option("--budget", e.budget, "node budget (default: $B1F_NODE_BUDGET)");
  enumerate_cmd->add_option("--workers", e.workers, "worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--count", e.count_only, "print only the number of factorisations");

  TableArgs t;
  auto* table_cmd = app.add_subcommand("table", "CSV of m-B1F existence for small 2-distance circulants");
  table_cmd->add_option("--max-order", t.max_order)->required();
  table_cmd->add_option("--budget", t.budget, "node budget per graph (default: $B1F_NODE_BUDGET)");
  table_cmd->add_option("--workers", t.workers, "worker threads")->check(CLI::PositiveNumber);
  table_cmd->add_option("-o,--output", t.output, "write the CSV here");

  IsoArgs i;
  auto* iso_cmd = app.add_subcommand("iso", "Decide whether two connection sets give isomorphic circulants");
  iso_cmd->add_option("--order", i.order)->required();
  iso_cmd->add_option("--set1", i.set1)->required()->delimiter(',');
  iso_cmd->add_option("--set2", i.set2)->required()->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) return construct(c, out);
    if (*verify_cmd) return verify(v, out);
    if (*classify_cmd) return classify(k, out);
    if (*enumerate_cmd) return enumerate(e, out, err);
    if (*table_cmd) return table(t, out);
    if (*iso_cmd) return iso(i, out);
  } catch (const ParameterError& ex) {
    err << "error: " << to_string(ex.code()) << " (" << to_string(ex.reason()) << "): " << ex.what() << "\n";
    return kFailure;
  } catch (const Error& ex) {
    err << "error: " << to_string(ex.code()) << ": " << ex.what() << "\n";
    return kFailure;
  } catch (const DocumentError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace b1f::cli
