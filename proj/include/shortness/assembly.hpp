#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "shortness/blocks.hpp"

namespace shortness {

enum class KCertificate { Exhaustive, FanFormula, Supplied };
std::string_view certificate_name(KCertificate k) noexcept;

/// Block G0 together with its order j, white set W, interface triangle O and
/// the per-cycle white bound k.
struct ArrangedBlock {
  LabeledBlock g0;
  int j = 0;
  std::vector<Vertex> W;
  Face O{};
  int k = 0;
  KCertificate certificate = KCertificate::Supplied;
  int fan_r = 0;  // for FanFormula

  /// Fills j, W, O from g0 and checks the invariants (throws InvalidInput).
  static ArrangedBlock make(LabeledBlock g0, int k, KCertificate cert, int fan_r = 0);
};

ArrangedBlock arranged_F10();
ArrangedBlock arranged_F20();

/// Result of one substitution step, with the maps a witness needs to follow
/// vertices from the previous level into the new graph.
struct Expansion {
  LabeledBlock result;
  std::vector<Vertex> old_to_new;               // -1 for replaced whites
  std::vector<Vertex> replaced;                 // old white ids in processing order
  std::vector<std::vector<Vertex>> copy_to_new;  // per copy: g0 vertex -> new id
  std::vector<std::array<Edge, 6>> hexagons;     // gluing edges per copy
};

Expansion expand_once_detailed(const LabeledBlock& prev, const ArrangedBlock& block);
LabeledBlock expand_once(const LabeledBlock& prev, const ArrangedBlock& block);

LabeledBlock replace_K4_with_T(const LabeledBlock& g, const K4Region& region);
/// Replaces every current K4-region at once (family 3 step).
LabeledBlock replace_all_K4(const LabeledBlock& g);

/// F_{3,0}: T with plain labels o1..o3, g1..g3, w1..w3.
LabeledBlock build_F30();

struct FamilyId {
  int family = 1;
  int n = 0;
};

/// Builds F_{i,n}. Throws BudgetExceeded when f_i(n) > max_vertices.
LabeledBlock build_family(FamilyId id, std::size_t max_vertices = 1'000'000);

}  // namespace shortness
