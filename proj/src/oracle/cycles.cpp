#include <algorithm>
#include <climits>
#include <mutex>

#include "budget.hpp"
#include "shortness/errors.hpp"
#include "shortness/oracle.hpp"
#include "shortness/parallel.hpp"
#include "shortness/simd.hpp"

namespace shortness::oracle {

using simd::VertexSet;

bool is_path(const Graph& g, const std::vector<Vertex>& seq) {
  if (seq.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex v = seq[i];
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, const std::vector<Vertex>& seq) {
  return seq.size() >= 3 && is_path(g, seq) && g.adjacent(seq.back(), seq.front());
}

namespace {

// A T-region as seen by the search: inner vertices have no neighbours outside.
struct RegionMask {
  VertexSet all;
  VertexSet whites;
  std::array<Vertex, 3> outer{};
};

struct Problem {
  simd::BitGraph g;
  std::vector<RegionMask> regions;
  VertexSet positive;
  VertexSet required;
  std::vector<VertexSet> forbid;
  bool closed = true;
  // Stop everything once a value >= target is recorded.
  int target = INT_MAX;
  // Only solutions >= floor are of interest; prunes with it from the start.
  int floor = 0;
};

struct Task {
  std::vector<Vertex> prefix;
  VertexSet allowed;
};

struct Shared {
  explicit Shared(const SearchBudget& b) : clock(b) {}
  detail::BudgetClock clock;
  std::atomic<int> best{-1};
  std::atomic<bool> stop{false};
};

struct TaskResult {
  int value = -1;
  std::vector<Vertex> witness;
};

struct Aborted {};

class Dfs {
 public:
  Dfs(const Problem& p, const Task& t, Shared& s) : P_(p), T_(t), S_(s) {}

  TaskResult run() {
    const auto& pre = T_.prefix;
    root_ = pre.front();
    pos_.assign(static_cast<std::size_t>(P_.g.n), -1);
    for (std::size_t i = 0; i < pre.size(); ++i) {
      const Vertex v = pre[i];
      if (visited_.test(v)) return {};
      if (i > 0 && (!P_.g.rows[static_cast<std::size_t>(pre[i - 1])].test(v) ||
                    P_.forbid[static_cast<std::size_t>(pre[i - 1])].test(v)))
        return {};
      visited_.set(v);
      pos_[static_cast<std::size_t>(v)] = static_cast<int>(path_.size());
      path_.push_back(v);
      weight_ += P_.positive.test(v);
    }
    root_nbrs_ = P_.g.rows[static_cast<std::size_t>(root_)].minus(P_.forbid[static_cast<std::size_t>(root_)]);
    try {
      recurse();
    } catch (const Aborted&) {
    }
    return result_;
  }

 private:
  const Problem& P_;
  const Task& T_;
  Shared& S_;
  Vertex root_ = -1;
  VertexSet visited_;
  VertexSet root_nbrs_;
  std::vector<Vertex> path_;
  std::vector<int> pos_;
  int weight_ = 0;
  TaskResult result_;

  void record() {
    if (weight_ <= result_.value || weight_ < P_.floor) return;
    if (!P_.required.minus(visited_).empty()) return;
    result_.value = weight_;
    result_.witness = path_;
    int cur = S_.best.load();
    while (weight_ > cur && !S_.best.compare_exchange_weak(cur, weight_)) {
    }
    if (weight_ >= P_.target) S_.stop.store(true);
  }

  // Cycle neighbours of o already fixed by the path (the root's closing edge
  // and the end's next edge are still open).
  int known_nbrs(Vertex o, std::array<Vertex, 2>& nb) const {
    const int i = pos_[static_cast<std::size_t>(o)];
    if (i < 0) return 0;
    int k = 0;
    if (i > 0) nb[static_cast<std::size_t>(k++)] = path_[static_cast<std::size_t>(i - 1)];
    if (i + 1 < static_cast<int>(path_.size())) nb[static_cast<std::size_t>(k++)] = path_[static_cast<std::size_t>(i + 1)];
    return k;
  }

  // If a cycle meets a T-region R and leaves it, and holds all three whites
  // of R, its trace in R is a path through the three outer vertices. So each
  // outer vertex of R spends one of its two cycle edges inside R. Regions
  // that cannot get this lose at least one white. Returns a lower bound on
  // positive whites lost, or -1 when a required region is ruled out.
  int region_penalty(const VertexSet& usable) const {
    const std::size_t nr = P_.regions.size();
    std::array<int, 64> pen{};
    std::array<char, 64> live{}, req{};
    int definite = 0;
    const VertexSet touched = visited_ | P_.required;
    for (std::size_t r = 0; r < nr && r < 64; ++r) {
      const RegionMask& R = P_.regions[r];
      if (touched.minus(R.all).empty()) continue;
      const int vw = (visited_ & R.whites).count(), uw = (usable & R.whites).count();
      if (vw + uw < 3) continue;
      req[r] = P_.required.minus(R.whites).count() + 3 == P_.required.count();
      pen[r] = std::max(0, (visited_ & R.whites & P_.positive).count() + (usable & R.whites & P_.positive).count() - 2);
      bool capped = false;
      for (Vertex o : R.outer) {
        if (!visited_.test(o)) {
          if (!usable.test(o)) capped = true;
          continue;
        }
        std::array<Vertex, 2> nb{};
        const int k = known_nbrs(o, nb);
        bool inside = false;
        for (int j = 0; j < k; ++j) inside |= R.all.test(nb[static_cast<std::size_t>(j)]);
        if (k == 2 && !inside) capped = true;
      }
      if (capped) {
        if (req[r]) return -1;
        definite += pen[r];
      } else {
        live[r] = 1;
      }
    }
    // an outer vertex shared by more live regions than it has open edges
    int extra = 0;
    std::array<int, 64> costs{};
    VertexSet seen;
    for (std::size_t r = 0; r < nr && r < 64; ++r) {
      if (!live[r]) continue;
      for (Vertex o : P_.regions[r].outer) {
        if (seen.test(o)) continue;
        seen.set(o);
        std::array<Vertex, 2> nb{};
        const int k = known_nbrs(o, nb);
        int m = 0, reqs = 0;
        for (std::size_t q = 0; q < nr && q < 64; ++q) {
          if (!live[q] || !P_.regions[q].all.test(o)) continue;
          bool inside = false;
          for (int j = 0; j < k; ++j) inside |= P_.regions[q].all.test(nb[static_cast<std::size_t>(j)]);
          if (inside) continue;
          costs[static_cast<std::size_t>(m++)] = pen[q];
          reqs += req[q];
        }
        const int open = 2 - k;
        if (reqs > open) return -1;
        if (m > open) {
          std::sort(costs.begin(), costs.begin() + m);
          int sum = 0;
          for (int j = 0; j < m - open; ++j) sum += costs[static_cast<std::size_t>(j)];
          extra = std::max(extra, sum);
        }
      }
    }
    return definite + extra;
  }

  void recurse() {
    if (S_.clock.tick() || S_.stop.load(std::memory_order_relaxed)) throw Aborted{};
    const Vertex end = path_.back();
    const auto& rows = P_.g.rows;
    if (P_.closed) {
      if (path_.size() >= 3 && root_nbrs_.test(end)) record();
    } else if (path_.size() == 1 || end > root_) {
      record();
    }

    const VertexSet avail = T_.allowed.minus(visited_);
    const VertexSet step = (rows[static_cast<std::size_t>(end)] & avail).minus(P_.forbid[static_cast<std::size_t>(end)]);
    if (step.empty()) return;
    const VertexSet reach = simd::closure(P_.g, step, avail);
    VertexSet cand;
    int bound;
    if (P_.closed) {
      if (!reach.intersects(root_nbrs_)) return;
      VertexSet frame = reach;
      frame.set(end);
      frame.set(root_);
      VertexSet usable;
      reach.for_each([&](int v) {
        if ((rows[static_cast<std::size_t>(v)] & frame).count() >= 2) usable.set(v);
      });
      if (!P_.required.minus(visited_).minus(usable).empty()) return;
      bound = weight_ + (usable & P_.positive).count();
      if (!P_.regions.empty()) {
        const int pen = region_penalty(usable);
        if (pen < 0) return;
        bound -= pen;
      }
      cand = step & usable;
    } else {
      bound = weight_ + (reach & P_.positive).count();
      cand = step;
    }
    if (bound <= result_.value || bound < S_.best.load(std::memory_order_relaxed) || bound < P_.floor) return;

    // fewest onward options first
    std::array<std::pair<int, Vertex>, simd::kMaxVertices> order;
    int k = 0;
    cand.for_each([&](int v) { order[static_cast<std::size_t>(k++)] = {(rows[static_cast<std::size_t>(v)] & avail).count(), v}; });
    std::sort(order.begin(), order.begin() + k);
    for (int i = 0; i < k; ++i) {
      const Vertex v = order[static_cast<std::size_t>(i)].second;
      visited_.set(v);
      pos_[static_cast<std::size_t>(v)] = static_cast<int>(path_.size());
      path_.push_back(v);
      weight_ += P_.positive.test(v);
      recurse();
      weight_ -= P_.positive.test(v);
      path_.pop_back();
      pos_[static_cast<std::size_t>(v)] = -1;
      visited_.reset(v);
    }
  }
};

struct Outcome {
  int value = -1;
  std::vector<Vertex> witness;
  SearchStats stats;
  bool exhausted = false;
};

Outcome solve(const Problem& p, const std::vector<Task>& tasks, const SearchBudget& budget) {
  Shared shared(budget);
  std::vector<TaskResult> results(tasks.size());
  parallel_for(tasks.size(), budget.threads, [&](std::size_t i) {
    if (shared.stop.load() || shared.clock.exhausted()) return;
    results[i] = Dfs(p, tasks[i], shared).run();
  });
  Outcome out;
  for (auto& r : results)
    if (r.value > out.value) {
      out.value = r.value;
      out.witness = std::move(r.witness);
    }
  out.exhausted = shared.clock.exhausted() && !shared.stop.load();
  out.stats = shared.clock.stats(!out.exhausted);
  return out;
}

using Regions = std::vector<RegionMask>;

Regions region_masks(const LabeledBlock& b) {
  Regions out;
  for (const TRegion& r : b.regions) {
    RegionMask m;
    for (Vertex v : r.inner()) m.all.set(v);
    for (Vertex v : r.outer) m.all.set(v);
    for (Vertex v : r.white) m.whites.set(v);
    m.outer = r.outer;
    out.push_back(m);
  }
  return out;
}

Problem base_problem(const Graph& g, const Regions& regions = {}) {
  Problem p;
  p.g = simd::BitGraph::from(g);
  p.regions = regions;
  p.forbid.assign(static_cast<std::size_t>(g.order()), VertexSet{});
  return p;
}

// Root r: the smallest positive vertex of the cycle.
std::vector<Task> rooted_tasks(const Problem& p, int n) {
  std::vector<Task> tasks;
  const VertexSet all = VertexSet::range(n);
  p.positive.for_each([&](int r) {
    VertexSet allowed = all.minus(p.positive);
    for (int v = r + 1; v < n; ++v)
      if (p.positive.test(v)) allowed.set(v);
    tasks.push_back({{r}, allowed});
  });
  return tasks;
}

void forbid_edge(Problem& p, Vertex a, Vertex b) {
  p.forbid[static_cast<std::size_t>(a)].set(b);
  p.forbid[static_cast<std::size_t>(b)].set(a);
}

[[noreturn]] void budget_fail(const char* what, const Outcome& o) {
  throw BudgetExceededError(std::string(what) + ": budget exhausted after " + std::to_string(o.stats.nodes) +
                                " nodes; best verified value " + std::to_string(o.value),
                            o.value);
}

Problem outer_problem(const Triangulation& t, const Regions& regions, int i, std::vector<Task>& tasks) {
  const Graph& g = t.graph();
  const int n = g.order();
  Problem p = base_problem(g, regions);
  p.positive = VertexSet::range(n);
  const Face o = t.outer_face();
  const VertexSet all = VertexSet::range(n);
  switch (i) {
    case 0:
      for (int e = 0; e < 3; ++e) forbid_edge(p, o[static_cast<std::size_t>(e)], o[static_cast<std::size_t>((e + 1) % 3)]);
      tasks = rooted_tasks(p, n);
      break;
    case 1:
      // the one outer edge used is forced as the first step
      for (int e = 0; e < 3; ++e) {
        tasks.push_back({{o[static_cast<std::size_t>(e)], o[static_cast<std::size_t>((e + 1) % 3)]}, all});
      }
      break;
    case 2:
      for (int e = 0; e < 3; ++e) {
        const Vertex y = o[static_cast<std::size_t>(e)], x = o[static_cast<std::size_t>((e + 2) % 3)],
                     z = o[static_cast<std::size_t>((e + 1) % 3)];
        tasks.push_back({{x, y, z}, all});
      }
      break;
    default: throw Error(ErrorKind::InvalidInput, "outer edge count must be 0, 1, 2 or 3");
  }
  return p;
}

// Tasks for i = 1, 2 need per-task forbidden edges; they are solved one by one.
Outcome solve_outer(const Triangulation& t, const Regions& regions, int i, int target, int floor,
                    const SearchBudget& budget) {
  std::vector<Task> tasks;
  Problem p = outer_problem(t, regions, i, tasks);
  p.target = target;
  p.floor = floor;
  if (i == 0) return solve(p, tasks, budget);
  const Face o = t.outer_face();
  Outcome best;
  SearchStats total;
  total.complete = true;
  for (int e = 0; e < 3; ++e) {
    Problem q = p;
    const auto& pre = tasks[static_cast<std::size_t>(e)].prefix;
    // every outer edge not on the prefix is forbidden
    for (int k = 0; k < 3; ++k) {
      const Vertex a = o[static_cast<std::size_t>(k)], b = o[static_cast<std::size_t>((k + 1) % 3)];
      bool used = false;
      for (std::size_t s = 1; s < pre.size(); ++s)
        used |= (pre[s - 1] == a && pre[s] == b) || (pre[s - 1] == b && pre[s] == a);
      if (!used) forbid_edge(q, a, b);
    }
    q.floor = std::max(floor, best.value + 1);
    Outcome r = solve(q, {tasks[static_cast<std::size_t>(e)]}, budget);
    total.nodes += r.stats.nodes;
    total.seconds += r.stats.seconds;
    if (r.value > best.value) {
      best.value = r.value;
      best.witness = r.witness;
    }
    if (r.exhausted) {
      best.exhausted = true;
      total.complete = false;
      break;
    }
    if (best.value >= target) break;
  }
  best.stats = total;
  return best;
}

Outcome solve_through(const Graph& g, const std::vector<Vertex>& required, const SearchBudget& budget) {
  if (required.empty()) throw Error(ErrorKind::InvalidInput, "cycle_through needs at least one vertex");
  const int n = g.order();
  Problem p = base_problem(g);
  for (Vertex v : required) p.required.set(v);
  p.positive = p.required;
  p.target = p.required.count();
  p.floor = p.target;
  const Vertex r = p.required.first();
  return solve(p, {{{r}, VertexSet::range(n)}}, budget);
}

CycleResult longest_cycle_impl(const Graph& g, const Regions& regions, const SearchBudget& budget) {
  const int n = g.order();
  Problem p = base_problem(g, regions);
  p.positive = VertexSet::range(n);
  p.target = n;
  Outcome o = solve(p, rooted_tasks(p, n), budget);
  if (o.exhausted) budget_fail("longest cycle", o);
  if (o.value < 0) throw Error(ErrorKind::NoSuchCycle, "graph is acyclic");
  return {o.value, {o.witness}, o.stats};
}

CycleResult outer_impl(const Triangulation& t, const Regions& regions, int i, const SearchBudget& budget) {
  if (i == 3) {
    const Face o = t.outer_face();
    return {3, {{o[0], o[1], o[2]}}, {0, 0.0, true}};
  }
  Outcome o = solve_outer(t, regions, i, t.order(), 0, budget);
  if (o.exhausted) budget_fail("longest cycle with outer edges", o);
  if (o.value < 0) throw Error(ErrorKind::NoSuchCycle, "no cycle with exactly " + std::to_string(i) + " outer edges");
  return {o.value, {o.witness}, o.stats};
}

std::optional<CycleResult> find_outer_impl(const Triangulation& t, const Regions& regions, int i, int target,
                                           const SearchBudget& budget) {
  Outcome o = solve_outer(t, regions, i, target, target, budget);
  if (o.value >= target) return CycleResult{o.value, {o.witness}, o.stats};
  if (o.exhausted) budget_fail("cycle search", o);
  return std::nullopt;
}

}  // namespace

CycleResult longest_cycle_exact(const Graph& g, const SearchBudget& budget) {
  return longest_cycle_impl(g, {}, budget);
}
CycleResult longest_cycle_exact(const LabeledBlock& b, const SearchBudget& budget) {
  return longest_cycle_impl(b.graph.graph(), region_masks(b), budget);
}

CycleResult longest_cycle_with_outer_edges(const Triangulation& t, int i, const SearchBudget& budget) {
  return outer_impl(t, {}, i, budget);
}
CycleResult longest_cycle_with_outer_edges(const LabeledBlock& b, int i, const SearchBudget& budget) {
  return outer_impl(b.graph, region_masks(b), i, budget);
}

std::optional<CycleResult> find_cycle_with_outer_edges(const Triangulation& t, int i, int target,
                                                       const SearchBudget& budget) {
  return find_outer_impl(t, {}, i, target, budget);
}
std::optional<CycleResult> find_cycle_with_outer_edges(const LabeledBlock& b, int i, int target,
                                                       const SearchBudget& budget) {
  return find_outer_impl(b.graph, region_masks(b), i, target, budget);
}

CycleResult longest_path_exact(const Graph& g, const SearchBudget& budget) {
  const int n = g.order();
  Problem p = base_problem(g);
  p.positive = VertexSet::range(n);
  p.closed = false;
  p.target = n;
  std::vector<Task> tasks;
  for (Vertex s = 0; s < n; ++s) tasks.push_back({{s}, VertexSet::range(n)});
  Outcome o = solve(p, tasks, budget);
  if (o.exhausted) budget_fail("longest path", o);
  return {o.value, {o.witness}, o.stats};
}

WhiteResult max_white_cycle(const LabeledBlock& b, const SearchBudget& budget) {
  const Graph& g = b.graph.graph();
  const int n = g.order();
  Problem p = base_problem(g, region_masks(b));
  for (Vertex w : b.whites()) p.positive.set(w);
  p.target = p.positive.count();
  Outcome o = solve(p, rooted_tasks(p, n), budget);
  if (o.exhausted) throw BudgetExceededError("max white cycle: budget exhausted after " + std::to_string(o.stats.nodes) +
                                                 " nodes; best verified value " + std::to_string(o.value),
                                             o.value);
  return {std::max(0, o.value), {o.witness}, o.stats};
}

std::optional<Witness> cycle_through(const Graph& g, const std::vector<Vertex>& required, const SearchBudget& budget) {
  Outcome o = solve_through(g, required, budget);
  if (o.value >= static_cast<int>(VertexCut(required).size())) return Witness{o.witness};
  if (o.exhausted) budget_fail("cycle through vertex set", o);
  return std::nullopt;
}

}  // namespace shortness::oracle
