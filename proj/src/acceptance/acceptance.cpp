#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "shortness/acceptance.hpp"
#include "shortness/assembly.hpp"
#include "shortness/bounds.hpp"
#include "shortness/errors.hpp"
#include "shortness/gluelab.hpp"
#include "shortness/oracle.hpp"
#include "shortness/witness.hpp"

namespace shortness::acceptance {

namespace {

// pinned limits and tolerances
constexpr double kLimit[kCriteria + 1] = {0, 1, 300, 60, 120, 600, 1800, 1, 300, 3600, 600};
constexpr double kEstimateWindow = 0.01;
constexpr int kFormulaDepth = 12;

using Clock = std::chrono::steady_clock;

// Collects failed checks; the criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_.empty(); }
  std::string detail() const {
    std::string out;
    const auto& list = failed_.empty() ? notes_ : failed_;
    if (!failed_.empty()) out = "failed: ";
    for (std::size_t i = 0; i < list.size(); ++i) out += (i ? "; " : "") + list[i];
    if (failed_.empty()) out += (out.empty() ? "" : "; ") + std::to_string(total_) + " checks";
    return out;
  }

 private:
  int total_ = 0;
  std::vector<std::string> failed_, notes_;
};

oracle::SearchBudget budget(const Options& o, double secs) {
  oracle::SearchBudget b;
  b.max_seconds = secs;
  b.max_nodes = 2'000'000'000;
  b.threads = o.threads;
  b.seed = o.seed;
  return b;
}

std::string s(const Rational& r) { return r.str(); }

void blocks(Checks& c, const Options&) {
  const auto t = build_T(), f20 = build_F20(), f10 = build_F10(), f20p = add_apex(f20), f10p = add_apex(f10);
  c.expect(t.order() == 9 && t.graph.graph().size() == 21, "T is 9/21");
  c.expect(simplicial_vertices(t.graph.graph()).size() == 3, "T has 3 simplicial vertices");
  c.expect(f20.order() == 15 && f20.whites().size() == 6, "F20 is 15 vertices / 6 white");
  c.expect(f10.order() == 102 && f10.whites().size() == 30, "F10 is 102 vertices / 30 white");
  c.expect(f20p.regions.size() == 1, "F20+ has one T-region");
  c.expect(f20.regions.size() == 2, "F20 has two T-regions");
  for (const auto* b : {&t, &f20, &f10, &f20p, &f10p}) c.expect(is_maximal_planar(b->graph), "maximal planar");
  c.note("T 9/21/3, F20 15/6, F10 102/30, regions 1 and 2");
}

void longest_cycles(Checks& c, const Options& o) {
  const auto b = budget(o, kLimit[2]);
  const auto check = [&](const LabeledBlock& g, const std::string& name, int expect) {
    const auto r = oracle::longest_cycle_exact(g, b);
    c.expect(r.length == expect && r.stats.complete && oracle::is_cycle(g.graph.graph(), r.witness.vertices),
             name + " longest cycle " + std::to_string(r.length));
  };
  const auto profile = [&](const LabeledBlock& g, const std::string& name, std::array<int, 3> expect) {
    std::string got;
    for (int i = 0; i < 3; ++i) {
      const auto r = oracle::longest_cycle_with_outer_edges(g, i, b);
      got += (i ? "," : "") + std::to_string(r.length);
      c.expect(r.length == expect[static_cast<std::size_t>(i)] && oracle::is_cycle(g.graph.graph(), r.witness.vertices),
               name + " s" + std::to_string(i) + " = " + std::to_string(r.length));
    }
    c.note(name + " (" + got + ")");
  };
  check(build_T(), "T", 9);
  profile(build_T(), "T", {9, 9, 8});
  check(build_F20(), "F20", 14);
  const auto f31 = build_family({3, 1});
  check(f31, "F31", 24);
  profile(f31, "F31", {24, 22, 16});
}

void certified(Checks& c, const Options& o) {
  const auto ledger = witness::BaseCaseLedger::run(budget(o, kLimit[3]));
  for (const auto& bc : ledger.cases()) c.expect(bc.passed, "base case " + bc.name + " observed " + bc.observed);
  const std::vector<FamilyId> ids = {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}};
  for (auto id : ids) {
    const std::string tag = "F(" + std::to_string(id.family) + "," + std::to_string(id.n) + ")";
    const auto cert = witness::certify_longest_cycle(id, ledger);
    const auto g = build_family(id);
    c.expect(cert.bound == bounds::c(id.family, id.n) && bounds::Nat(cert.witness.size()) == cert.bound &&
                 witness::verify_witness(g.graph.graph(), cert.witness),
             tag + " bound " + bounds::to_string(cert.bound));
  }
  const auto c10 = witness::certify_longest_cycle({1, 0}, ledger);
  c.expect(c10.bound == 94 && c10.detail.find("k = 22") != std::string::npos && bounds::fan_white_bound(10) == 22,
           "F10 bound 102 - 30 + 22");
  std::string lengths;
  for (auto id : ids)
    lengths += (lengths.empty() ? "" : id.n == 0 ? "; " : ", ") +
               (id.n == 0 ? "c" + std::to_string(id.family) + " = " : std::string()) +
               bounds::to_string(bounds::c(id.family, id.n));
  c.note(lengths);
}

void white_bound(Checks& c, const Options& o) {
  const auto b = budget(o, kLimit[4]);
  const auto f20 = oracle::max_white_cycle(build_F20(), b);
  c.expect(f20.whites == 5 && f20.stats.complete, "F20 whites " + std::to_string(f20.whites));
  for (int r : {2, 3}) {
    const auto w = oracle::max_white_cycle(build_fan(r), b);
    c.expect(w.whites == bounds::fan_white_bound(r) && w.whites == 2 * r + 2, "fan " + std::to_string(r));
  }
  c.note("F20 5, fan2 6, fan3 8");
}

void toughness_exact(Checks& c, const Options& o) {
  const auto b = budget(o, kLimit[5]);
  const auto t = oracle::toughness_exact(build_T().graph.graph(), b);
  c.expect(!t.value.infinite && t.value.value == Rational(3, 2), "T = " + t.value.str());
  const auto f20 = oracle::toughness_exact(build_F20().graph.graph(), b);
  const auto f20p = oracle::toughness_exact(add_apex(build_F20()).graph.graph(), b);
  c.expect(f20.value.at_least(Rational(8, 7)), "F20 = " + f20.value.str());
  c.expect(f20p.value.at_least(Rational(8, 7)), "F20+ = " + f20p.value.str());
  const auto f31 = oracle::toughness_exact(build_family({3, 1}).graph.graph(), b);
  c.expect(f31.value.greater_than(Rational(1)), "F31 = " + f31.value.str());
  c.note("T 3/2, F20 " + f20.value.str() + ", F20+ " + f20p.value.str() + ", F31 " + f31.value.str());
}

void toughness_evidence(Checks& c, const Options& o) {
  const auto b = budget(o, kLimit[6]);
  const Rational five_four(5, 4);
  for (const auto& [name, g] : {std::pair{"F10", build_F10()}, std::pair{"F10+", add_apex(build_F10())}}) {
    const auto r = oracle::toughness_search(g, five_four, b);
    c.expect(r.kind == oracle::ToughnessReport::Kind::NoViolationFound, std::string(name) + " at 5/4");
    c.note(std::string(name) + " 5/4: " + std::string(oracle::kind_name(r.kind)) +
           (r.stats.complete ? " (complete)" : " (incomplete)"));
  }
  const auto f10 = build_F10();
  const auto v = oracle::toughness_search(f10, Rational(3, 2), b);
  bool ok = v.kind == oracle::ToughnessReport::Kind::Violation;
  if (ok) {
    const int comps = components_after_cut(f10.graph.graph(), v.cut).count;
    const Rational ratio(static_cast<std::int64_t>(v.cut.size()), comps);
    ok = comps >= 2 && ratio <= five_four && ratio == v.value.value;
    c.note("F10 3/2: violation " + s(ratio) + " with |S| = " + std::to_string(v.cut.size()));
  }
  c.expect(ok, "F10 violation at 3/2 with ratio <= 5/4");
}

void formulas(Checks& c, const Options&) {
  using namespace bounds;
  for (int i = 1; i <= 3; ++i)
    for (int n = 0; n <= kFormulaDepth; ++n) {
      c.expect(f(i, n) == f_closed(i, n), "f closed form " + std::to_string(i) + "," + std::to_string(n));
      c.expect(bounds::c(i, n) == c_closed(i, n), "c closed form " + std::to_string(i) + "," + std::to_string(n));
    }
  for (int n = 0; n <= kFormulaDepth; ++n) {
    const auto sv = s_values(n);
    c.expect(sv == s_closed(n), "s closed form " + std::to_string(n));
    c.expect(bounds::c(3, n) == sv.s0, "c3 = s0 at " + std::to_string(n));
    if (n > 0) {
      const auto p = s_values(n - 1);
      c.expect(sv.s0 == 3 * p.s1 - 3 && sv.s1 == 2 * p.s2 + p.s1 - 3 && sv.s2 == 2 * p.s2, "s recurrence");
    }
    c.expect(lemma_cyc_bound(102, 30, 22, n) == bounds::c(1, n), "lemma bound c1");
    c.expect(lemma_cyc_bound(15, 6, 5, n) == bounds::c(2, n), "lemma bound c2");
  }
  c.expect(minimize_fan_exponent(100).argmin == 10, "fan exponent argmin");
  const auto l98 = log_ratio(8, 9), l3022 = limit_constant(1);
  c.expect(l3022.certainly_less(l98), "log_9 8 > log_30 22");
  const auto e20 = shortness_estimate(1, 20);
  c.expect(e20.lo > l3022.hi && e20.hi - l3022.lo < kEstimateWindow, "estimate(1, 20) window");
  for (int n = 0; n < 20; ++n)
    c.expect(shortness_estimate(1, n + 1).certainly_less(shortness_estimate(1, n)), "decreasing at " + std::to_string(n));
  char buf[96];
  std::snprintf(buf, sizeof buf, "estimate(1,20) = %.6f, limit %.6f", e20.lo, l3022.lo);
  c.note(buf);
}

void paths(Checks& c, const Options& o) {
  const auto b = budget(o, kLimit[8]);
  const auto t = oracle::longest_path_exact(build_T().graph.graph(), b);
  c.expect(t.length == 9 && bounds::p(3, 0) == 9 && oracle::is_path(build_T().graph.graph(), t.witness.vertices), "T path");
  const auto f31g = build_family({3, 1});
  const auto f31 = oracle::longest_path_exact(f31g.graph.graph(), b);
  c.expect(f31.length == 24 && bounds::p(3, 1) == 24 && oracle::is_path(f31g.graph.graph(), f31.witness.vertices),
           "F31 path");
  const auto f20 = oracle::longest_path_exact(build_F20().graph.graph(), b);
  c.expect(f20.length == 15 && f20.stats.complete, "F20 path " + std::to_string(f20.length));
  c.note("T 9, F31 24, F20 " + std::to_string(f20.length) + " (p2(0) fixture)");
}

void harnesses(Checks& c, const Options& o) {
  const int glue_n = o.quick ? 50 : 200;
  const auto g = gluelab::glue_harness(glue_n, o.seed, budget(o, 600));
  c.expect(g.instances == glue_n && g.holds == glue_n && g.cut_failures == 0,
           "gluing harness " + std::to_string(g.holds) + "/" + std::to_string(g.instances));
  const auto k = gluelab::constr3_harness(20, o.seed, budget(o, 600));
  c.expect(k.instances == 20 && k.holds == 20, "K4 harness " + std::to_string(k.holds) + "/20");
  const Rational t(3, 2);
  const auto h = gluelab::find_weak_lemma_counterexample(t, 12, budget(o, 3600), o.seed);
  const auto& v = h.verdict;
  c.expect(v.g1_plus.at_least(t) && v.g1.at_least(t) && v.g2_plus.at_least(t) && v.g2.at_least(t) && !v.u.at_least(t),
           "five toughness facts");
  c.expect(v.min_degree >= 1 && v.min_degree < t.ceil(), "weak degree condition only");
  c.note("glue " + std::to_string(g.holds) + "/" + std::to_string(g.instances) + ", K4 " + std::to_string(k.holds) +
         "/20, counterexample |U| = " + std::to_string(glue(h.spec).order()) + " with toughness " + v.u.str());
}

void property_suites(Checks& c, const Options& o) {
  for (const auto& r : properties::run_all(o.seed, o.quick)) {
    c.expect(r.ok(), r.name + (r.messages.empty() ? "" : ": " + r.messages.front()));
    c.note(r.name + " " + std::to_string(r.cases));
  }
}

struct Entry {
  const char* title;
  void (*run)(Checks&, const Options&);
};

constexpr Entry kEntries[kCriteria] = {
    {"block structure", blocks},
    {"longest cycles, exhaustive", longest_cycles},
    {"certified longest cycles", certified},
    {"white bound", white_bound},
    {"toughness, exact", toughness_exact},
    {"toughness, bounded evidence", toughness_evidence},
    {"formula suite", formulas},
    {"path suite", paths},
    {"lemma harnesses", harnesses},
    {"property suites", property_suites},
};

}  // namespace

Criterion run_criterion(int id, const Options& opt) {
  if (id < 1 || id > kCriteria) throw Error(ErrorKind::InvalidInput, "criterion must be 1.." + std::to_string(kCriteria));
  const Entry& e = kEntries[id - 1];
  Criterion out{id, e.title, false, 0, kLimit[id], {}};
  const auto t0 = Clock::now();
  Checks c;
  try {
    e.run(c, opt);
    out.detail = c.detail();
    out.passed = c.ok();
  } catch (const std::exception& ex) {
    out.detail = std::string("error: ") + ex.what();
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (out.passed && out.seconds > out.limit_seconds) {
    out.passed = false;
    out.detail = "over the time limit; " + out.detail;
  }
  return out;
}

std::vector<Criterion> run_all(const Options& opt) {
  std::vector<Criterion> out;
  for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, opt));
  return out;
}

std::string format(const Criterion& c) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d  %s (%.2f s / %.0f s): ", c.passed ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.seconds, c.limit_seconds);
  return head + c.detail;
}

}  // namespace shortness::acceptance
