#include <algorithm>
#include <functional>

#include "shortness/errors.hpp"
#include "shortness/witness.hpp"

namespace shortness::witness {

namespace {

BaseCase check(std::string name, std::string expected, const std::function<std::pair<std::string, oracle::SearchStats>()>& run) {
  BaseCase c{std::move(name), std::move(expected), {}, false, {}};
  try {
    auto [obs, stats] = run();
    c.observed = std::move(obs);
    c.stats = stats;
    c.passed = stats.complete && c.observed == c.expected;
  } catch (const Error& e) {
    c.observed = e.what();
  }
  return c;
}

oracle::SearchStats sum(const oracle::SearchStats& a, const oracle::SearchStats& b) {
  return {a.nodes + b.nodes, a.seconds + b.seconds, a.complete && b.complete};
}

// "(s0, s1, s2)" of a block: longest cycles through 0, 1 and 2 outer edges.
std::pair<std::string, oracle::SearchStats> s_profile(const LabeledBlock& b, const oracle::SearchBudget& budget) {
  std::string out = "(";
  oracle::SearchStats st{0, 0, true};
  for (int i = 0; i < 3; ++i) {
    const auto r = oracle::longest_cycle_with_outer_edges(b, i, budget);
    out += (i ? ", " : "") + std::to_string(r.length);
    st = sum(st, r.stats);
  }
  return {out + ")", st};
}

std::string triple(const bounds::SValues& s) {
  return "(" + bounds::to_string(s.s0) + ", " + bounds::to_string(s.s1) + ", " + bounds::to_string(s.s2) + ")";
}

std::pair<std::string, oracle::SearchStats> fixture(int family) {
  const LabeledBlock b = family == 1 ? build_F10() : build_F20();
  const auto w = base_cycle(family, b);
  return {std::to_string(w.size()), {0, 0, true}};
}

}  // namespace

void BaseCaseLedger::record(BaseCase c) {
  std::erase_if(cases_, [&](const BaseCase& x) { return x.name == c.name; });
  cases_.push_back(std::move(c));
}

bool BaseCaseLedger::verified(std::string_view name) const {
  return std::any_of(cases_.begin(), cases_.end(), [&](const BaseCase& c) { return c.name == name && c.passed; });
}

std::vector<std::string> BaseCaseLedger::required_for(int family) {
  switch (family) {
    case 1: return {"fan2.max-white", "fan3.max-white", "F10.fixture"};
    case 2: return {"F20.max-white", "F20.longest-cycle", "F20.fixture"};
    case 3: return {"T.s-profile", "F31.s-profile"};
  }
  throw Error(ErrorKind::InvalidInput, "family must be 1, 2 or 3");
}

BaseCaseLedger BaseCaseLedger::run(const oracle::SearchBudget& budget) {
  BaseCaseLedger l;
  const auto white = [&](const LabeledBlock& b) {
    const auto r = oracle::max_white_cycle(b, budget);
    return std::pair{std::to_string(r.whites), r.stats};
  };
  l.record(check("F20.max-white", "5", [&] { return white(build_F20()); }));
  l.record(check("fan2.max-white", std::to_string(bounds::fan_white_bound(2)), [&] { return white(build_fan(2)); }));
  l.record(check("fan3.max-white", std::to_string(bounds::fan_white_bound(3)), [&] { return white(build_fan(3)); }));
  l.record(check("F20.longest-cycle", "14", [&] {
    const auto r = oracle::longest_cycle_exact(build_F20(), budget);
    return std::pair{std::to_string(r.length), r.stats};
  }));
  l.record(check("T.s-profile", triple(bounds::s_values(0)), [&] { return s_profile(build_T(), budget); }));
  l.record(check("F31.s-profile", triple(bounds::s_values(1)), [&] { return s_profile(build_family({3, 1}), budget); }));
  l.record(check("F10.fixture", "94", [] { return fixture(1); }));
  l.record(check("F20.fixture", "14", [] { return fixture(2); }));
  return l;
}

std::string_view derivation_name(Derivation d) noexcept {
  return d == Derivation::ArrangedBlock ? "arranged_block" : "s_recurrence";
}

BoundCertificate certify_longest_cycle(FamilyId id, const BaseCaseLedger& ledger, std::size_t max_vertices) {
  const auto need = BaseCaseLedger::required_for(id.family);
  for (const auto& name : need)
    if (!ledger.verified(name)) throw Error(ErrorKind::BaseCaseUnverified, "base case " + name + " has not passed");

  BoundCertificate c;
  c.id = id;
  c.base_cases = need;
  if (id.family == 3) {
    c.derivation = Derivation::SRecurrence;
    c.bound = bounds::s_values(id.n).s0;
    c.detail = "s0 of the s-recurrence from (9, 9, 8) at depth " + std::to_string(id.n);
    c.conditional_on =
        "in a depth-d region the longest cycles through 0, 1, 2 outer edges obey "
        "s0(d) = 3 s1(d-1) - 3, s1(d) = 2 s2(d-1) + s1(d-1) - 3, s2(d) = 2 s2(d-1)";
  } else {
    const ArrangedBlock b = id.family == 1 ? arranged_F10() : arranged_F20();
    c.derivation = Derivation::ArrangedBlock;
    c.bound = bounds::lemma_cyc_bound(b.j, static_cast<int>(b.W.size()), b.k, id.n);
    c.detail = "j = " + std::to_string(b.j) + ", |W| = " + std::to_string(b.W.size()) + ", k = " +
               std::to_string(b.k) + " (" + std::string(certificate_name(b.certificate)) +
               (b.fan_r ? " r = " + std::to_string(b.fan_r) : "") + ")";
    c.conditional_on = "no cycle of the block meets more than k whites, so each substituted copy adds at most j - |W| + k - 1";
  }
  c.witness = build_cycle_witness(id, max_vertices);
  if (bounds::Nat(c.witness.size()) != c.bound)
    throw Error(ErrorKind::ConstructionFailed, "witness length " + std::to_string(c.witness.size()) +
                                                   " differs from the bound " + bounds::to_string(c.bound));
  return c;
}

io::Json to_json(const BoundCertificate& c, const Graph& g) {
  io::Json j;
  j["family"] = c.id.family;
  j["n"] = c.id.n;
  j["bound"] = bounds::to_string(c.bound);
  j["derivation"] = derivation_name(c.derivation);
  j["detail"] = c.detail;
  j["conditional_on"] = c.conditional_on;
  j["base_cases"] = c.base_cases;
  j["closed"] = c.witness.closed;
  auto& w = j["witness"] = io::Json::array();
  for (Vertex v : c.witness.vertices) w.push_back(g.label(v));
  return j;
}

CycleWitness witness_from_json(const io::Json& j, const Graph& g) {
  if (!j.is_object() || !j.contains("witness") || !j["witness"].is_array())
    throw Error(ErrorKind::InvalidInput, "expected an object with a \"witness\" array");
  CycleWitness w;
  w.closed = j.value("closed", true);
  for (const auto& x : j["witness"]) {
    if (x.is_number_integer()) {
      w.vertices.push_back(x.get<Vertex>());
    } else if (x.is_string()) {
      auto v = g.find_label(x.get<std::string>());
      if (!v) throw Error(ErrorKind::InvalidInput, "unknown vertex label '" + x.get<std::string>() + "'");
      w.vertices.push_back(*v);
    } else {
      throw Error(ErrorKind::InvalidInput, "witness entries must be ids or labels");
    }
  }
  return w;
}

}  // namespace shortness::witness
