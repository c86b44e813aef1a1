#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shortness::properties {

struct Report {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failures
  bool ok() const noexcept { return failures == 0 && cases > 0; }
  void fail(std::string msg);
};

Report embedding_round_trips(std::uint64_t seed, int random_count);
Report witness_validation(std::uint64_t seed, int random_count);
/// Restricted and unrestricted toughness, and the frontier search, against
/// plain subset enumeration on graphs of at most 12 vertices.
Report cut_pruning_soundness(std::uint64_t seed, int random_count);
Report relabeling_invariance(std::uint64_t seed, int random_count);
/// toughness(G) <= toughness(G - v) for every simplicial v.
Report simplicial_monotonicity(std::uint64_t seed, int random_count);

std::vector<Report> run_all(std::uint64_t seed, bool quick);

}  // namespace shortness::properties

namespace shortness::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct Options {
  bool quick = false;  // smaller randomized harnesses
  int threads = 0;
  std::uint64_t seed = 20240601;
};

constexpr int kCriteria = 10;

Criterion run_criterion(int id, const Options& opt);
std::vector<Criterion> run_all(const Options& opt);
/// "PASS  3  certified longest cycles (0.41 s / 60 s): ..."
std::string format(const Criterion& c);

}  // namespace shortness::acceptance
