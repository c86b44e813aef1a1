#include <algorithm>

#include "shortness/errors.hpp"
#include "shortness/witness.hpp"

namespace shortness::witness {

namespace {

// Found once by the constrained cycle search; rechecked on every load.
// The pair (back, front) is the outer-face edge.
const std::vector<std::string> kF10 = {
    "u1", "u20", "u19", "u18", "u17", "u16", "u15", "u14", "u13", "u12", "u11", "u10", "u9", "u8", "u7", "u6",
    "c'", "u3", "u4", "u5", "b5", "r3.w1", "r3.g1", "r3.g3", "r3.g2", "r3.w2", "b6", "b7", "r4.w1", "r4.g1",
    "r4.g3", "r4.g2", "r4.w2", "b8", "b9", "r5.w1", "r5.g1", "r5.g3", "r5.g2", "r5.w2", "b10", "b11", "r6.w1",
    "r6.g1", "r6.g3", "r6.g2", "r6.w2", "b12", "b13", "r7.w1", "r7.g1", "r7.g3", "r7.g2", "r7.w2", "b14", "b15",
    "r8.w1", "r8.g1", "r8.g3", "r8.g2", "r8.w2", "b16", "b17", "r9.w1", "r9.g1", "r9.g3", "r9.g2", "r9.w2",
    "b18", "b19", "r10.w1", "r10.g1", "r10.g3", "r10.g2", "r10.w2", "b20", "b1", "r1.w1", "r1.g1", "b2",
    "r1.w2", "r1.g2", "r1.g3", "r1.w3", "c", "r2.w2", "r2.g2", "b4", "r2.w1", "r2.g1", "r2.g3", "r2.w3", "b3",
    "u2",
};

const std::vector<std::string> kF20 = {
    "r2.g1", "r2.w1", "b3", "r1.w1", "r1.g1", "r1.g2", "r1.g3",
    "r1.w3", "b2",    "r2.g2", "r2.w2", "b1", "r2.w3", "r2.g3",
};

bool is_outer_edge(const Face& f, Vertex a, Vertex b) {
  const auto in = [&](Vertex v) { return std::find(f.begin(), f.end(), v) != f.end(); };
  return a != b && in(a) && in(b);
}

}  // namespace

const std::vector<std::string>& base_cycle_labels(int family) {
  if (family == 1) return kF10;
  if (family == 2) return kF20;
  throw Error(ErrorKind::InvalidInput, "base cycles exist for families 1 and 2 only");
}

CycleWitness base_cycle(int family, const LabeledBlock& b) {
  CycleWitness w;
  for (const auto& s : base_cycle_labels(family)) w.vertices.push_back(b.vertex(s));
  const auto& g = b.graph.graph();
  const Face& outer = b.graph.outer_face();
  int on_outer = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    on_outer += is_outer_edge(outer, w.vertices[i], w.vertices[(i + 1) % w.size()]);
  if (!verify_witness(g, w) || on_outer != 1 || !is_outer_edge(outer, w.vertices.back(), w.vertices.front()))
    throw Error(ErrorKind::ConstructionFailed, "base cycle fixture does not fit the block");
  return w;
}

}  // namespace shortness::witness
