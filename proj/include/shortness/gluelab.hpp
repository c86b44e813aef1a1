#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shortness/blocks.hpp"
#include "shortness/io.hpp"
#include "shortness/oracle.hpp"

namespace shortness::gluelab {

/// Two graphs with a marked vertex each; cross edges join N(v1) to N(v2)
/// and are given as (vertex of g1_plus, vertex of g2_plus).
struct GlueSpec {
  Graph g1_plus;
  Vertex v1 = 0;
  Graph g2_plus;
  Vertex v2 = 0;
  std::vector<Edge> cross_edges;
};

/// U = (G1+ - v1) + (G2+ - v2) + cross edges. Vertices of G1 keep their order
/// and come first, then those of G2. Throws InvalidCrossEdge.
Graph glue(const GlueSpec& s);
/// Id in U of vertex u of g1_plus (side 0) or g2_plus (side 1).
Vertex glued_id(const GlueSpec& s, int side, Vertex u);

/// Smallest cross-edge degree over N(v1) and N(v2).
int min_bipartite_degree(const GlueSpec& s);

enum class Status { Holds, NotApplicable, Refuted };
std::string_view status_name(Status s) noexcept;

struct GlueVerdict {
  Status status = Status::NotApplicable;
  Toughness g1_plus, g1, g2_plus, g2, u;
  int min_degree = 0;
  std::string reason;
};

/// If G_i+ and G_i are t-tough and the bipartite degree is at least ceil(t),
/// U must be t-tough. Uses toughness_exact throughout.
GlueVerdict check_glue_preservation(const GlueSpec& s, const Rational& t, const oracle::SearchBudget& budget = {});

struct HuntResult {
  GlueSpec spec;
  GlueVerdict verdict;  // all five values re-verified exactly
  VertexCut cut;        // in U, ratio below t
  int components = 0;
  std::uint64_t pool_size = 0;
  std::uint64_t pairs_tried = 0;
  std::uint64_t gluings_tried = 0;
  double seconds = 0;
};

/// Looks for t-tough G_i+, G_i and cross edges touching every vertex of
/// N(v1) and N(v2) while U is not t-tough. Throws NotFoundWithinBudget.
HuntResult find_weak_lemma_counterexample(const Rational& t, int size_cap, const oracle::SearchBudget& budget,
                                          std::uint64_t seed);

struct Constr3Verdict {
  Status status = Status::NotApplicable;
  Toughness before, after;
  std::string reason;
};

/// Toughness above 1 survives replacing a K4-region by a T-region.
Constr3Verdict check_constr3_preservation(const LabeledBlock& g, const K4Region& region,
                                          const oracle::SearchBudget& budget = {});

/// Random triangulation on n >= 4 vertices: stacked insertions followed by
/// `flips` random edge flips. Labels are v0, v1, ...
Triangulation random_maximal_planar(int n, int flips, std::mt19937_64& rng);

struct HarnessReport {
  int instances = 0;
  int holds = 0;
  int refuted = 0;
  int cut_checks = 0;    // c(U - X) <= c(G1 - X1) + c(G2 - X2) samples
  int cut_failures = 0;
  std::vector<std::string> failures;
};

/// `count` random instances satisfying the gluing hypotheses.
HarnessReport glue_harness(int count, std::uint64_t seed, const oracle::SearchBudget& budget = {});
/// `count` random triangulations of toughness above 1 with a K4-region.
HarnessReport constr3_harness(int count, std::uint64_t seed, const oracle::SearchBudget& budget = {});

io::Json to_json(const GlueSpec& s);
GlueSpec glue_spec_from_json(const io::Json& j);

}  // namespace shortness::gluelab
