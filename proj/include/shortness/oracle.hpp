#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shortness/blocks.hpp"
#include "shortness/graph.hpp"
#include "shortness/rational.hpp"

namespace shortness::oracle {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  bool complete = false;
};

/// Vertex sequence; for a cycle the last vertex is adjacent to the first.
struct Witness {
  std::vector<Vertex> vertices;
  std::size_t size() const noexcept { return vertices.size(); }
};

struct CycleResult {
  int length = 0;  // vertices on the cycle / path
  Witness witness;
  SearchStats stats;
};

struct WhiteResult {
  int whites = 0;
  Witness witness;
  SearchStats stats;
};

/// All searches below throw BudgetExceededError (carrying the best value found)
/// when the budget runs out before the search space is exhausted.

CycleResult longest_cycle_exact(const Graph& g, const SearchBudget& budget = {});
/// Same, with the block's T-regions used for pruning.
CycleResult longest_cycle_exact(const LabeledBlock& b, const SearchBudget& budget = {});
/// Longest cycle containing exactly i of the three outer-face edges (i in 0..3).
/// Throws NoSuchCycle when there is none.
CycleResult longest_cycle_with_outer_edges(const Triangulation& g, int i, const SearchBudget& budget = {});
CycleResult longest_cycle_with_outer_edges(const LabeledBlock& b, int i, const SearchBudget& budget = {});
/// First cycle of length >= target found through exactly i outer edges, or nullopt
/// when the search space is exhausted without one.
std::optional<CycleResult> find_cycle_with_outer_edges(const Triangulation& g, int i, int target,
                                                       const SearchBudget& budget = {});
std::optional<CycleResult> find_cycle_with_outer_edges(const LabeledBlock& b, int i, int target,
                                                       const SearchBudget& budget = {});
CycleResult longest_path_exact(const Graph& g, const SearchBudget& budget = {});
/// Maximum number of white vertices on a cycle.
WhiteResult max_white_cycle(const LabeledBlock& b, const SearchBudget& budget = {});
/// Does some cycle pass through every vertex of `required`?
std::optional<Witness> cycle_through(const Graph& g, const std::vector<Vertex>& required, const SearchBudget& budget = {});

bool is_cycle(const Graph& g, const std::vector<Vertex>& seq);
bool is_path(const Graph& g, const std::vector<Vertex>& seq);

// ---------------------------------------------------------------------------

struct ToughnessReport {
  enum class Kind { Exact, NoViolationFound, Violation };
  Kind kind = Kind::Exact;
  Toughness value;        // Exact: the toughness; Violation: |S| / c(G - S)
  VertexCut cut;          // Exact: lexicographically smallest argmin; Violation: S
  int components = 0;     // c(G - cut)
  Rational threshold{1};  // searches only
  std::string reduction;  // searches only
  SearchStats stats;
};

std::string_view kind_name(ToughnessReport::Kind k) noexcept;

/// Exact toughness by enumeration (n <= 64). With `restricted`, only cuts whose
/// every vertex touches at least two components of G - S are examined.
ToughnessReport toughness_exact(const Graph& g, const SearchBudget& budget = {}, bool restricted = true);

/// S' = (S minus I) plus the region's canonical inner set. NotApplicable when
/// |S cap O| <= 1. Throws ReconstructionInvalid if a violation at t is lost.
VertexCut canonicalize_cut(const Graph& g, const VertexCut& s, const TRegion& region, const Rational& t);

/// Hunts for S with c(G - S) > |S| / t. Inner vertices of b's T-regions are
/// restricted to canonical sets; the rest is an exact sweep over a vertex
/// order, so a complete run is a proof. A violation is refined down to the
/// smallest ratio the sweep can reach.
/// canonical = false keeps every inner pattern (the regions then only order the sweep).
ToughnessReport toughness_search(const LabeledBlock& b, const Rational& t, const SearchBudget& budget = {},
                                 bool canonical = true);
/// Same without region reduction.
ToughnessReport toughness_search(const Graph& g, const Rational& t, const SearchBudget& budget = {});
/// Exact toughness through repeated toughness_search (t := best ratio found).
ToughnessReport toughness_by_search(const LabeledBlock& b, const SearchBudget& budget = {});

/// G minus a simplicial vertex (the smallest one unless v is given).
Graph strip_simplicial(const Graph& g, std::optional<Vertex> v = std::nullopt);

/// CPLEX-LP integer program, feasible iff some S has c(G - S) > |S| / t.
std::string export_lp(const Graph& g, const Rational& t);

}  // namespace shortness::oracle
