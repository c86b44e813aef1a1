#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "shortness/acceptance.hpp"
#include "shortness/assembly.hpp"
#include "shortness/bounds.hpp"
#include "shortness/errors.hpp"
#include "shortness/gluelab.hpp"
#include "shortness/io.hpp"
#include "shortness/oracle.hpp"
#include "shortness/witness.hpp"

using namespace shortness;
using io::Json;

namespace {

constexpr int kOk = 0, kUsage = 1, kVerifyFailed = 2, kBudget = 3;

// Raised for a negative verification outcome (exit 2).
struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t nodes = 10'000'000;
  double secs = 60;

  oracle::SearchBudget budget() const { return {nodes, secs, seed, threads}; }
  Json budget_json() const { return {{"max_nodes", nodes}, {"max_seconds", secs}, {"seed", seed}}; }
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else io::write_file(out, text);
}

Rational parse_rational(const std::string& s) { return Rational::parse(s); }

void add_budget(CLI::App* c, Common& k) {
  c->add_option("--budget-nodes", k.nodes, "node limit")->capture_default_str();
  c->add_option("--budget-secs", k.secs, "wall-clock limit in seconds")->capture_default_str();
}

LabeledBlock named_block(const std::string& name, int r) {
  if (name == "T") return build_T();
  if (name == "F10") return build_F10();
  if (name == "F20") return build_F20();
  if (name == "F10+") return add_apex(build_F10());
  if (name == "F20+") return add_apex(build_F20());
  if (name == "fan") return build_fan(r);
  throw Error(ErrorKind::InvalidInput, "unknown block '" + name + "' (T, F10, F20, F10+, F20+, fan)");
}

// Embedded inputs become labeled blocks so region pruning applies.
struct Input {
  io::GraphDocument doc;
  std::optional<LabeledBlock> block;
  const Graph& graph() const { return doc.graph; }
};

Input load(const std::string& path) {
  Input in{io::load_graph(path), std::nullopt};
  if (in.doc.embedding) {
    LabeledBlock b;
    b.graph = *in.doc.embedding;
    if (in.doc.colors.empty()) b.color.assign(static_cast<std::size_t>(b.order()), Role::Plain);
    else
      for (const auto& c : in.doc.colors) b.color.push_back(parse_role(c));
    refresh_regions(b);
    in.block = std::move(b);
  }
  return in;
}

Json stats_note(const oracle::SearchStats& s) {
  std::fprintf(stderr, "search: %llu nodes, %.3f s, %s\n", static_cast<unsigned long long>(s.nodes), s.seconds,
               s.complete ? "complete" : "incomplete");
  return {{"complete", s.complete}};
}

Json labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(g.label(v));
  return a;
}

// ------------------------------------------------------------------ tables

std::string cell(const bounds::Nat& x) { return bounds::to_string(x); }

std::string fixed6(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.6f", x);
  return b;
}

struct Table {
  std::vector<std::string> head;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream os;
    const auto line = [&](const std::vector<std::string>& r) {
      if (format == "csv") {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      } else {
        os << "|";
        for (const auto& c : r) os << " " << c << " |";
      }
      os << "\n";
    };
    line(head);
    if (format != "csv") line(std::vector<std::string>(head.size(), "---"));
    for (const auto& r : rows) line(r);
    return os.str();
  }
};

std::string p_cell(int family, int n) {
  if (family == 2 && n == 0) return "oracle-only";
  return cell(bounds::p(family, n));
}

Table family_table(int family, int n_max) {
  Table t;
  t.head = {"n", "f", "c", "p"};
  if (family == 3) t.head.insert(t.head.end(), {"s0", "s1", "s2"});
  t.head.push_back("log_f c (lower)");
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::string> r = {std::to_string(n), cell(bounds::f(family, n)), cell(bounds::c(family, n)),
                                  p_cell(family, n)};
    if (family == 3) {
      const auto s = bounds::s_values(n);
      r.insert(r.end(), {cell(s.s0), cell(s.s1), cell(s.s2)});
    }
    r.push_back(fixed6(bounds::shortness_estimate(family, n).lo));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table theorem_table(int n_max) {
  Table t;
  t.head = {"family", "n", "f", "c", "p", "log_f c (lower)", "limit (lower)"};
  for (int i = 1; i <= 3; ++i) {
    const std::string lim = fixed6(bounds::limit_constant(i).lo);
    for (int n = 0; n <= n_max; ++n)
      t.rows.push_back({std::to_string(i), std::to_string(n), cell(bounds::f(i, n)), cell(bounds::c(i, n)), p_cell(i, n),
                        fixed6(bounds::shortness_estimate(i, n).lo), lim});
  }
  return t;
}

// ------------------------------------------------------------------ oracle

Json oracle_run(const std::string& what, const Input& in, const Common& k, const std::string& threshold, int outer,
                bool plain) {
  const Graph& g = in.graph();
  const auto b = k.budget();
  Json j;
  j["query"] = what;
  j["n"] = g.order();
  j["budget"] = k.budget_json();
  if (what == "longest-cycle") {
    oracle::CycleResult r;
    if (outer >= 0) {
      if (!in.block) throw Error(ErrorKind::InvalidInput, "--outer-edges needs an embedded graph");
      r = oracle::longest_cycle_with_outer_edges(*in.block, outer, b);
      j["outer_edges"] = outer;
    } else {
      r = in.block ? oracle::longest_cycle_exact(*in.block, b) : oracle::longest_cycle_exact(g, b);
    }
    j["length"] = r.length;
    j["witness"] = labels_of(g, r.witness.vertices);
    j["stats"] = stats_note(r.stats);
  } else if (what == "longest-path") {
    const auto r = oracle::longest_path_exact(g, b);
    j["length"] = r.length;
    j["witness"] = labels_of(g, r.witness.vertices);
    j["stats"] = stats_note(r.stats);
  } else if (what == "max-white") {
    if (!in.block) throw Error(ErrorKind::InvalidInput, "max-white needs an embedded graph with colors");
    const auto r = oracle::max_white_cycle(*in.block, b);
    j["whites"] = r.whites;
    j["witness"] = labels_of(g, r.witness.vertices);
    j["stats"] = stats_note(r.stats);
  } else if (what == "toughness") {
    oracle::ToughnessReport r;
    if (threshold.empty()) {
      r = oracle::toughness_exact(g, b);
    } else {
      const Rational t = parse_rational(threshold);
      r = in.block ? oracle::toughness_search(*in.block, t, b, !plain) : oracle::toughness_search(g, t, b);
      j["threshold"] = t.str();
      j["reduction"] = r.reduction;
    }
    j["kind"] = oracle::kind_name(r.kind);
    if (r.kind != oracle::ToughnessReport::Kind::NoViolationFound) {
      j["value"] = r.value.str();
      j["cut"] = labels_of(g, r.cut.members);
      j["components"] = r.components;
    }
    j["stats"] = stats_note(r.stats);
  }
  return j;
}

// ------------------------------------------------------------------ main

int run(int argc, char** argv) {
  CLI::App app{"Shortness lab: constructions, exact oracles and certificates for tough maximal planar graphs"};
  app.require_subcommand(1);
  Common k;
  if (const char* env = std::getenv("SHORTNESS_LAB_SEED")) k.seed = std::strtoull(env, nullptr, 10);
  app.add_option("--threads", k.threads, "worker threads (0: available parallelism)");
  app.add_option("--seed", k.seed, "random seed (default: $SHORTNESS_LAB_SEED or 0)");

  // build
  auto* build = app.add_subcommand("build", "build a family member or a block");
  int family = 0, depth = 0, fan_r = 10;
  std::size_t max_vertices = 1'000'000;
  std::string block_name, format = "json", out;
  build->add_option("--family", family)->check(CLI::Range(1, 3));
  build->add_option("--n", depth)->check(CLI::NonNegativeNumber);
  build->add_option("--block", block_name, "T, F10, F20, F10+, F20+ or fan");
  build->add_option("--r", fan_r, "fan size for --block fan")->check(CLI::Range(2, 64));
  build->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "edges"}));
  build->add_option("--out", out, "output path (default stdout)");
  build->add_option("--max-vertices", max_vertices)->capture_default_str();

  // formulas / report
  auto* formulas = app.add_subcommand("formulas", "f, c, p, s and exponent columns");
  int n_max = 5;
  std::string table = "md";
  formulas->add_option("--family", family)->required()->check(CLI::Range(1, 3));
  formulas->add_option("--n-max", n_max)->check(CLI::Range(0, 60));
  formulas->add_option("--table", table)->check(CLI::IsMember({"csv", "md"}));
  formulas->add_option("--out", out);

  auto* report = app.add_subcommand("report", "summary tables");
  bool theorem = false;
  report->add_flag("--theorem-table", theorem)->required();
  report->add_option("--n-max", n_max)->check(CLI::Range(0, 60));
  report->add_option("--table", table)->check(CLI::IsMember({"csv", "md"}));
  report->add_option("--out", out);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exact searches on a graph file");
  oracle_cmd->require_subcommand(1);
  std::string in_path, threshold;
  int outer = -1;
  bool plain = false;
  for (const char* name : {"longest-cycle", "longest-path", "max-white", "toughness"}) {
    auto* c = oracle_cmd->add_subcommand(name);
    c->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
    add_budget(c, k);
    c->add_option("--seed", k.seed);
    c->add_option("--out", out);
    if (std::string(name) == "longest-cycle")
      c->add_option("--outer-edges", outer, "exactly this many outer-face edges")->check(CLI::Range(0, 3));
    if (std::string(name) == "toughness") {
      c->add_option("--threshold", threshold, "search for a violation of p/q instead of the exact value");
      c->add_flag("--no-reduction", plain, "skip the canonical T-region reduction");
    }
  }
  auto* lp = oracle_cmd->add_subcommand("export-lp", "integer program for a toughness violation");
  lp->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
  lp->add_option("--threshold", threshold)->required();
  lp->add_option("--out", out);

  // certificates
  auto* certify = app.add_subcommand("certify", "analytic bound plus witness for F(i,n)");
  certify->add_option("--family", family)->required()->check(CLI::Range(1, 3));
  certify->add_option("--n", depth)->required()->check(CLI::NonNegativeNumber);
  certify->add_option("--out", out);
  certify->add_option("--max-vertices", max_vertices)->capture_default_str();
  add_budget(certify, k);

  auto* verify = app.add_subcommand("verify", "check a witness against a graph");
  std::string witness_path;
  verify->add_option("--in", in_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--witness", witness_path)->required()->check(CLI::ExistingFile);

  // gluelab
  auto* glue_cmd = app.add_subcommand("gluelab", "gluing experiments");
  glue_cmd->require_subcommand(1);
  auto* check = glue_cmd->add_subcommand("check", "evaluate the gluing lemma on a spec");
  std::string spec_path, t_text = "3/2";
  int size_cap = 12;
  check->add_option("--spec", spec_path)->required()->check(CLI::ExistingFile);
  check->add_option("--t", t_text)->required();
  add_budget(check, k);
  auto* hunt = glue_cmd->add_subcommand("hunt", "search for a counterexample to the weak hypothesis");
  hunt->add_option("--t", t_text)->capture_default_str();
  hunt->add_option("--size-cap", size_cap)->check(CLI::Range(4, 20))->capture_default_str();
  hunt->add_option("--seed", k.seed);
  hunt->add_option("--out", out);
  add_budget(hunt, k);

  auto* verify_all = app.add_subcommand("verify-all", "run the acceptance suite");
  bool quick = false;
  verify_all->add_flag("--quick", quick, "smaller randomized harnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (build->parsed()) {
    if (block_name.empty() == (family == 0))
      throw Error(ErrorKind::InvalidInput, "give exactly one of --family/--n and --block");
    const LabeledBlock b = block_name.empty() ? build_family({family, depth}, max_vertices) : named_block(block_name, fan_r);
    const auto colors = b.color_names();
    if (format == "json") emit(out, io::to_json(b.graph, colors).dump(1) + "\n");
    else if (format == "dot") emit(out, io::to_dot(b.graph.graph(), colors));
    else emit(out, io::to_edge_list(b.graph.graph()));
    return kOk;
  }
  if (formulas->parsed()) {
    emit(out, family_table(family, n_max).render(table));
    return kOk;
  }
  if (report->parsed()) {
    std::string text = theorem_table(n_max).render(table);
    if (table == "md")
      text += "\nBudgets: oracle defaults " + std::to_string(k.nodes) + " nodes / " + fixed6(k.secs) +
              " s. p2(0) comes from the oracle (15), not the formula.\n";
    emit(out, text);
    return kOk;
  }
  if (oracle_cmd->parsed()) {
    const Input in = load(in_path);
    if (lp->parsed()) {
      emit(out, oracle::export_lp(in.graph(), parse_rational(threshold)));
      return kOk;
    }
    for (auto* sub : oracle_cmd->get_subcommands()) {
      const Json j = oracle_run(sub->get_name(), in, k, threshold, outer, plain);
      emit(out, j.dump(1) + "\n");
    }
    return kOk;
  }
  if (certify->parsed()) {
    const auto ledger = witness::BaseCaseLedger::run(k.budget());
    for (const auto& c : ledger.cases())
      std::fprintf(stderr, "base case %-18s expected %-14s observed %-14s %s\n", c.name.c_str(), c.expected.c_str(),
                   c.observed.c_str(), c.passed ? "ok" : "FAILED");
    const auto cert = witness::certify_longest_cycle({family, depth}, ledger, max_vertices);
    const auto g = build_family({family, depth}, max_vertices);
    emit(out, witness::to_json(cert, g.graph.graph()).dump(1) + "\n");
    return kOk;
  }
  if (verify->parsed()) {
    const Input in = load(in_path);
    const Json j = Json::parse(io::read_file(witness_path));
    const auto w = witness::witness_from_json(j, in.graph());
    Json r;
    r["valid"] = witness::verify_witness(in.graph(), w);
    r["length"] = w.size();
    r["closed"] = w.closed;
    bool ok = r["valid"].get<bool>();
    if (j.contains("bound")) {
      const bool match = std::to_string(w.size()) == j["bound"].get<std::string>();
      r["matches_bound"] = match;
      ok = ok && match;
    }
    std::cout << r.dump(1) << "\n";
    if (!ok) throw VerificationFailed("witness does not verify");
    return kOk;
  }
  if (check->parsed()) {
    const auto spec = gluelab::glue_spec_from_json(Json::parse(io::read_file(spec_path)));
    const Rational t = parse_rational(t_text);
    const auto v = gluelab::check_glue_preservation(spec, t, k.budget());
    Json r = {{"t", t.str()},
              {"status", gluelab::status_name(v.status)},
              {"toughness", {{"G1+", v.g1_plus.str()}, {"G1", v.g1.str()}, {"G2+", v.g2_plus.str()}, {"G2", v.g2.str()},
                             {"U", v.u.str()}}},
              {"min_bipartite_degree", v.min_degree},
              {"reason", v.reason}};
    std::cout << r.dump(1) << "\n";
    if (v.status == gluelab::Status::Refuted) throw VerificationFailed("gluing lemma refuted: " + v.reason);
    return kOk;
  }
  if (hunt->parsed()) {
    const Rational t = parse_rational(t_text);
    const auto h = gluelab::find_weak_lemma_counterexample(t, size_cap, k.budget(), k.seed);
    const Graph u = gluelab::glue(h.spec);
    Json r = {{"t", t.str()},
              {"spec", gluelab::to_json(h.spec)},
              {"toughness", {{"G1+", h.verdict.g1_plus.str()}, {"G1", h.verdict.g1.str()}, {"G2+", h.verdict.g2_plus.str()},
                             {"G2", h.verdict.g2.str()}, {"U", h.verdict.u.str()}}},
              {"min_bipartite_degree", h.verdict.min_degree},
              {"cut", labels_of(u, h.cut.members)},
              {"components", h.components},
              {"search", {{"pool", h.pool_size}, {"pairs", h.pairs_tried}, {"gluings", h.gluings_tried}}},
              {"budget", k.budget_json()}};
    std::fprintf(stderr, "hunt: %.3f s\n", h.seconds);
    emit(out, r.dump(1) + "\n");
    return kOk;
  }
  if (verify_all->parsed()) {
    acceptance::Options opt;
    opt.quick = quick;
    opt.threads = k.threads;
    if (k.seed) opt.seed = k.seed;
    bool all = true;
    for (int i = 1; i <= acceptance::kCriteria; ++i) {
      const auto c = acceptance::run_criterion(i, opt);
      std::cout << acceptance::format(c) << std::endl;
      all = all && c.passed;
    }
    if (!all) throw VerificationFailed("acceptance suite has failures");
    return kOk;
  }
  return kUsage;
}

void error_json(std::string_view kind, const std::string& msg) {
  std::cerr << Json{{"error", kind}, {"message", msg}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const VerificationFailed& e) {
    error_json("VerificationFailed", e.what());
    return kVerifyFailed;
  } catch (const Error& e) {
    error_json(to_string(e.kind()), e.what());
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded:
      case ErrorKind::NotFoundWithinBudget: return kBudget;
      case ErrorKind::ReconstructionInvalid:
      case ErrorKind::ConstructionFailed:
      case ErrorKind::BaseCaseUnverified: return kVerifyFailed;
      default: return kUsage;
    }
  } catch (const std::exception& e) {
    error_json("InvalidInput", e.what());
    return kUsage;
  }
}
