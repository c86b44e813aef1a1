#include "frontier.hpp"
#include "shortness/errors.hpp"
#include "shortness/oracle.hpp"

namespace shortness::oracle {

namespace {

constexpr const char* kCanonical = "canonical T-region inner sets when |S cap O| >= 2, all inner patterns otherwise";
constexpr const char* kSweep = "exact frontier sweep over all vertices";

ToughnessReport search(const Graph& g, const std::vector<TRegion>& regions, const Rational& t,
                       const SearchBudget& budget, bool canonical) {
  if (t <= Rational(0)) throw Error(ErrorKind::InvalidInput, "threshold must be positive");
  detail::BudgetClock clock(budget);
  // the canonical-set reduction is only sound for t >= 1
  const bool reduce = canonical && !regions.empty() && t >= Rational(1);
  ToughnessReport rep;
  rep.threshold = t;
  rep.reduction = reduce ? std::string(kCanonical) + "; " + kSweep : kSweep;

  Rational at = t;
  bool found = false;
  for (;;) {
    auto r = detail::max_slack(g, at, regions, reduce && at >= Rational(1), clock);
    if (!r.complete) {
      rep.stats = clock.stats(false);
      if (!found) {
        rep.kind = ToughnessReport::Kind::NoViolationFound;
        rep.reduction += " (budget exhausted; search incomplete)";
      }
      return rep;
    }
    if (!r.feasible || r.value <= 0) break;
    // re-verify before reporting, then look for a strictly smaller ratio
    const VertexCut cut(r.cut);
    const int c = components_after_cut(g, cut).count;
    const Rational ratio(static_cast<std::int64_t>(cut.size()), c);
    if (c < 2 || !(ratio < at)) throw Error(ErrorKind::ReconstructionInvalid, "sweep reported a cut that does not verify");
    found = true;
    rep.kind = ToughnessReport::Kind::Violation;
    rep.value = Toughness::of(ratio);
    rep.cut = cut;
    rep.components = c;
    at = ratio;
  }
  if (!found) rep.kind = ToughnessReport::Kind::NoViolationFound;
  rep.stats = clock.stats(true);
  return rep;
}

}  // namespace

ToughnessReport toughness_search(const LabeledBlock& b, const Rational& t, const SearchBudget& budget,
                                 bool canonical) {
  return search(b.graph.graph(), b.regions, t, budget, canonical);
}

ToughnessReport toughness_search(const Graph& g, const Rational& t, const SearchBudget& budget) {
  return search(g, {}, t, budget, false);
}

ToughnessReport toughness_by_search(const LabeledBlock& b, const SearchBudget& budget) {
  const Graph& g = b.graph.graph();
  if (g.is_complete()) {
    ToughnessReport rep;
    rep.value = Toughness::infinity();
    rep.components = g.order() > 0 ? 1 : 0;
    rep.stats.complete = true;
    return rep;
  }
  // every separating set has ratio below n
  auto rep = search(g, b.regions, Rational(g.order()), budget, true);
  if (!rep.stats.complete)
    throw BudgetExceededError("toughness by search: budget exhausted; best ratio so far " +
                                  (rep.kind == ToughnessReport::Kind::Violation ? rep.value.str() : std::string("none")),
                              -1);
  if (rep.kind != ToughnessReport::Kind::Violation) throw Error(ErrorKind::InvalidInput, "no separating set found");
  rep.kind = ToughnessReport::Kind::Exact;
  return rep;
}

}  // namespace shortness::oracle
