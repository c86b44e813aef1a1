#pragma once

#include <cstdint>
#include <vector>

#include "budget.hpp"
#include "shortness/blocks.hpp"
#include "shortness/graph.hpp"
#include "shortness/rational.hpp"

namespace shortness::oracle::detail {

/// max p*c(G-S) - q*|S| over S with c(G-S) >= 2, where t = p/q. Vertices are
/// swept in a fixed order; a state is the in/out pattern of the frontier plus
/// the component partition of its out-vertices.
///
/// For each region in `canonical`, an inner vertex is forced once two or more
/// outer vertices are in S: the cut must then meet the region's inner set in
/// exactly the canonical set (the common grey, or the two lowest greys).
struct SlackResult {
  bool feasible = false;  // some S with c >= 2 exists
  bool complete = true;
  std::int64_t value = 0;
  std::vector<Vertex> cut;
  int components = 0;
  std::size_t peak_states = 0;
  int peak_frontier = 0;
};

/// With force == false the regions only shape the sweep order.
SlackResult max_slack(const Graph& g, const Rational& t, const std::vector<TRegion>& regions, bool force,
                      BudgetClock& clock);

/// Greedy sweep order keeping the frontier small; inner vertices of the
/// given regions come after their region's outer vertices.
std::vector<Vertex> sweep_order(const Graph& g, const std::vector<TRegion>& regions);

}  // namespace shortness::oracle::detail
