#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shortness/assembly.hpp"
#include "shortness/bounds.hpp"
#include "shortness/io.hpp"
#include "shortness/oracle.hpp"

namespace shortness::witness {

/// Vertex sequence of a cycle (closed) or a path.
struct CycleWitness {
  std::vector<Vertex> vertices;
  bool closed = true;
  std::size_t size() const noexcept { return vertices.size(); }
};

/// True iff the vertices are distinct and consecutive pairs (cyclically when
/// closed) are edges.
bool verify_witness(const Graph& g, const CycleWitness& w);

/// Base cycles through one outer-face edge, as vertex labels of build_F10()
/// and build_F20().
const std::vector<std::string>& base_cycle_labels(int family);
/// The fixture resolved to ids in b; checks it is a cycle of length c_i(0)
/// with exactly one outer-face edge (ConstructionFailed otherwise).
CycleWitness base_cycle(int family, const LabeledBlock& b);

struct WitnessedGraph {
  LabeledBlock graph;
  CycleWitness cycle;
};

/// Builds F_{i,n} together with a cycle of length c_i(n).
WitnessedGraph build_witnessed(FamilyId id, std::size_t max_vertices = 1'000'000);
/// The cycle alone; its ids refer to build_family(id).
CycleWitness build_cycle_witness(FamilyId id, std::size_t max_vertices = 1'000'000);

struct BaseCase {
  std::string name;
  std::string expected;
  std::string observed;
  bool passed = false;
  oracle::SearchStats stats;
};

/// Exhaustive checks the analytic bounds lean on.
class BaseCaseLedger {
 public:
  /// Runs every check; takes well under a second on one core.
  static BaseCaseLedger run(const oracle::SearchBudget& budget = {});
  void record(BaseCase c);
  bool verified(std::string_view name) const;
  const std::vector<BaseCase>& cases() const noexcept { return cases_; }
  /// Names of the checks certify_longest_cycle needs for a family.
  static std::vector<std::string> required_for(int family);

 private:
  std::vector<BaseCase> cases_;
};

enum class Derivation { ArrangedBlock, SRecurrence };
std::string_view derivation_name(Derivation d) noexcept;

struct BoundCertificate {
  FamilyId id;
  bounds::Nat bound;
  Derivation derivation = Derivation::ArrangedBlock;
  std::string detail;          // e.g. "k = 22 from fan_count(10)"
  std::string conditional_on;  // the analytic statement the bound rests on
  std::vector<std::string> base_cases;
  CycleWitness witness;
};

/// Upper bound from the derivation plus an exact witness of the same length.
/// Throws BaseCaseUnverified unless the ledger has passed every required check.
BoundCertificate certify_longest_cycle(FamilyId id, const BaseCaseLedger& ledger,
                                       std::size_t max_vertices = 1'000'000);

io::Json to_json(const BoundCertificate& c, const Graph& g);
/// Reads {"witness": [...]} with labels or ids; "closed" defaults to true.
CycleWitness witness_from_json(const io::Json& j, const Graph& g);

}  // namespace shortness::witness
