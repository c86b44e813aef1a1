#include "frontier.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "shortness/errors.hpp"

namespace shortness::oracle::detail {

namespace {

// One greedy pass: repeatedly add the vertex that leaves the smallest
// frontier. Ties go to more frontier neighbours (by_touch) or to fewer
// outstanding neighbours.
std::vector<Vertex> greedy_order(const Graph& g, const std::vector<int>& owner, const std::vector<TRegion>& regions,
                                 Vertex first, bool by_touch) {
  const int n = g.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0), live(static_cast<std::size_t>(n), 0);
  std::vector<int> open(static_cast<std::size_t>(n));  // neighbours not yet introduced
  for (Vertex v = 0; v < n; ++v) open[static_cast<std::size_t>(v)] = g.degree(v);
  int frontier = 0;
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  auto ready = [&](int r) {
    for (Vertex o : regions[static_cast<std::size_t>(r)].outer)
      if (!in[static_cast<std::size_t>(o)]) return false;
    return true;
  };
  for (int step = 0; step < n; ++step) {
    Vertex pick = step == 0 ? first : -1;
    int best_score = 0, best_tie = 0;
    // a region whose outer triangle is placed is finished before anything else
    int open_region = -1;
    for (std::size_t r = 0; r < regions.size() && open_region < 0; ++r)
      for (Vertex v : regions[r].inner())
        if (!in[static_cast<std::size_t>(v)] && ready(static_cast<int>(r))) {
          open_region = static_cast<int>(r);
          break;
        }
    for (Vertex v = 0; v < n && step > 0; ++v) {
      if (in[static_cast<std::size_t>(v)]) continue;
      const int r = owner[static_cast<std::size_t>(v)];
      if (open_region >= 0 ? r != open_region : (r >= 0 && !ready(r))) continue;
      int closed = 0, touch = 0, mine = g.degree(v);
      for (Vertex u : g.neighbors(v)) {
        if (!in[static_cast<std::size_t>(u)]) continue;
        --mine;
        if (live[static_cast<std::size_t>(u)]) {
          ++touch;
          closed += open[static_cast<std::size_t>(u)] == 1;
        }
      }
      const int score = frontier + 1 - closed - (mine == 0);
      const int tie = by_touch ? touch : -mine;
      if (pick < 0 || score < best_score || (score == best_score && tie > best_tie)) {
        pick = v;
        best_score = score;
        best_tie = tie;
      }
    }
    order.push_back(pick);
    in[static_cast<std::size_t>(pick)] = 1;
    live[static_cast<std::size_t>(pick)] = 1;
    ++frontier;
    for (Vertex u : g.neighbors(pick)) {
      --open[static_cast<std::size_t>(u)];
      if (live[static_cast<std::size_t>(u)] && open[static_cast<std::size_t>(u)] == 0) {
        live[static_cast<std::size_t>(u)] = 0;
        --frontier;
      }
    }
    if (open[static_cast<std::size_t>(pick)] == 0) {
      live[static_cast<std::size_t>(pick)] = 0;
      --frontier;
    }
  }
  return order;
}

// (max frontier, total frontier) of an order
std::pair<int, long> profile(const Graph& g, const std::vector<Vertex>& order, const std::vector<TRegion>& regions) {
  const int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  std::vector<int> delta(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    int l = pos[static_cast<std::size_t>(v)];
    for (Vertex u : g.neighbors(v)) l = std::max(l, pos[static_cast<std::size_t>(u)]);
    for (const auto& r : regions)
      if (r.outer_index(v) >= 0)
        for (Vertex w : r.inner()) l = std::max(l, pos[static_cast<std::size_t>(w)]);
    ++delta[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
    --delta[static_cast<std::size_t>(l)];
  }
  int cur = 0, worst = 0;
  long total = 0;
  for (int k = 0; k < n; ++k) {
    cur += delta[static_cast<std::size_t>(k)];
    worst = std::max(worst, cur);
    total += cur;
  }
  return {worst, total};
}

}  // namespace

std::vector<Vertex> sweep_order(const Graph& g, const std::vector<TRegion>& regions) {
  const int n = g.order();
  if (n == 0) return {};
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t r = 0; r < regions.size(); ++r)
    for (Vertex v : regions[r].inner()) owner[static_cast<std::size_t>(v)] = static_cast<int>(r);
  std::vector<Vertex> starts;
  Vertex lo = -1, hi = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] >= 0) continue;
    if (lo < 0 || g.degree(v) < g.degree(lo)) lo = v;
    if (hi < 0 || g.degree(v) > g.degree(hi)) hi = v;
  }
  if (lo < 0) lo = hi = 0;
  std::vector<Vertex> best;
  std::pair<int, long> best_profile{};
  for (Vertex s : {lo, hi})
    for (bool by_touch : {true, false}) {
      auto order = greedy_order(g, owner, regions, s, by_touch);
      const auto pr = profile(g, order, regions);
      if (best.empty() || pr < best_profile) {
        best = std::move(order);
        best_profile = pr;
      }
    }
  return best;
}

namespace {

struct Entry {
  std::int32_t parent;
  std::uint8_t in_cut;
};

// labels: 0 = in S, k >= 1 = component k among frontier out-vertices
void normalize(std::string& labels) {
  std::array<std::uint8_t, 256> map{};
  std::uint8_t next = 0;
  for (char& ch : labels) {
    const auto l = static_cast<std::uint8_t>(ch);
    if (l == 0) continue;
    if (map[l] == 0) map[l] = ++next;
    ch = static_cast<char>(map[l]);
  }
}

}  // namespace

SlackResult max_slack(const Graph& g, const Rational& t, const std::vector<TRegion>& canonical, bool force,
                      BudgetClock& clock) {
  const int n = g.order();
  const std::int64_t p = t.num(), q = t.den();
  const auto order = sweep_order(g, canonical);
  std::vector<int> pos(static_cast<std::size_t>(n)), last(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  for (Vertex v = 0; v < n; ++v) {
    int l = pos[static_cast<std::size_t>(v)];
    for (Vertex u : g.neighbors(v)) l = std::max(l, pos[static_cast<std::size_t>(u)]);
    last[static_cast<std::size_t>(v)] = l;
  }
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t r = 0; r < canonical.size(); ++r)
    for (Vertex v : canonical[r].inner()) {
      owner[static_cast<std::size_t>(v)] = static_cast<int>(r);
      // outer vertices stay visible until the whole region is placed
      for (Vertex o : canonical[r].outer)
        last[static_cast<std::size_t>(o)] = std::max(last[static_cast<std::size_t>(o)], pos[static_cast<std::size_t>(v)]);
    }

  SlackResult res;
  std::vector<Vertex> frontier;
  // state key: frontier labels followed by one byte min(closed components, 2)
  std::vector<std::string> keys{std::string(1, '\0')};
  std::vector<std::int64_t> values{0};
  std::vector<std::vector<Entry>> layers;
  layers.reserve(static_cast<std::size_t>(n));

  for (int k = 0; k < n; ++k) {
    const Vertex v = order[static_cast<std::size_t>(k)];
    std::vector<Vertex> wide = frontier;
    wide.push_back(v);
    std::vector<char> keep(wide.size());
    std::vector<Vertex> next_frontier;
    for (std::size_t i = 0; i < wide.size(); ++i) {
      keep[i] = last[static_cast<std::size_t>(wide[i])] > k;
      if (keep[i]) next_frontier.push_back(wide[i]);
    }
    std::vector<std::size_t> touching;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      if (g.adjacent(frontier[i], v)) touching.push_back(i);

    // forced choice from the canonical inner set, by outer pattern
    const int forced_region = force ? owner[static_cast<std::size_t>(v)] : -1;
    std::array<std::size_t, 3> outer_at{};
    if (forced_region >= 0) {
      const auto& R = canonical[static_cast<std::size_t>(forced_region)];
      for (int j = 0; j < 3; ++j) {
        auto it = std::find(frontier.begin(), frontier.end(), R.outer[static_cast<std::size_t>(j)]);
        if (it == frontier.end()) throw Error(ErrorKind::InvalidInput, "sweep order broke a region");
        outer_at[static_cast<std::size_t>(j)] = static_cast<std::size_t>(it - frontier.begin());
      }
    }

    std::unordered_map<std::string, std::int32_t> index;
    std::vector<std::string> next_keys;
    std::vector<std::int64_t> next_values;
    std::vector<Entry> entries;
    std::string wide_labels, out;

    for (std::size_t s = 0; s < keys.size(); ++s) {
      const std::string& key = keys[s];
      int allowed = 3;  // bit 0: out, bit 1: in S
      if (forced_region >= 0) {
        const auto& R = canonical[static_cast<std::size_t>(forced_region)];
        std::array<Vertex, 3> on{};
        int m = 0;
        for (int j = 0; j < 3; ++j)
          if (key[outer_at[static_cast<std::size_t>(j)]] == 0) on[static_cast<std::size_t>(m++)] = R.outer[static_cast<std::size_t>(j)];
        if (m == 2) {
          allowed = v == R.common_inner_neighbor(on[0], on[1]) ? 2 : 1;
        } else if (m == 3) {
          auto grey = R.grey;
          std::sort(grey.begin(), grey.end());
          allowed = (v == grey[0] || v == grey[1]) ? 2 : 1;
        }
      }
      for (int dec = 0; dec < 2; ++dec) {
        if (!(allowed & (1 << dec))) continue;
        if (clock.tick()) {
          res.complete = false;
          return res;
        }
        wide_labels.assign(key, 0, frontier.size());
        std::int64_t val = values[s];
        int closed = static_cast<std::uint8_t>(key.back());
        if (dec == 1) {
          wide_labels.push_back('\0');
          val -= q;
        } else {
          const auto fresh = static_cast<std::uint8_t>(frontier.size() + 1);
          std::array<char, 256> merge{};
          for (std::size_t i : touching)
            if (wide_labels[i] != 0) merge[static_cast<std::uint8_t>(wide_labels[i])] = 1;
          for (char& ch : wide_labels)
            if (ch != 0 && merge[static_cast<std::uint8_t>(ch)]) ch = static_cast<char>(fresh);
          wide_labels.push_back(static_cast<char>(fresh));
        }
        out.clear();
        for (std::size_t i = 0; i < wide.size(); ++i)
          if (keep[i]) out.push_back(wide_labels[i]);
        for (std::size_t i = 0; i < wide.size(); ++i) {
          const char l = wide_labels[i];
          if (keep[i] || l == 0) continue;
          bool survives = out.find(l) != std::string::npos;
          // count a closed component once: at its first dropped vertex
          for (std::size_t j = 0; j < i && !survives; ++j) survives = !keep[j] && wide_labels[j] == l;
          if (!survives) {
            val += p;
            closed = std::min(closed + 1, 2);
          }
        }
        normalize(out);
        out.push_back(static_cast<char>(closed));
        auto [it, fresh_key] = index.emplace(out, static_cast<std::int32_t>(next_keys.size()));
        if (fresh_key) {
          next_keys.push_back(out);
          next_values.push_back(val);
          entries.push_back({static_cast<std::int32_t>(s), static_cast<std::uint8_t>(dec)});
        } else if (val > next_values[static_cast<std::size_t>(it->second)]) {
          next_values[static_cast<std::size_t>(it->second)] = val;
          entries[static_cast<std::size_t>(it->second)] = {static_cast<std::int32_t>(s), static_cast<std::uint8_t>(dec)};
        }
      }
    }
    keys = std::move(next_keys);
    values = std::move(next_values);
    layers.push_back(std::move(entries));
    frontier = std::move(next_frontier);
    res.peak_states = std::max(res.peak_states, keys.size());
    res.peak_frontier = std::max(res.peak_frontier, static_cast<int>(frontier.size()));
  }

  int at = -1;
  for (std::size_t s = 0; s < keys.size(); ++s)
    if (static_cast<std::uint8_t>(keys[s].back()) >= 2 && (at < 0 || values[s] > values[static_cast<std::size_t>(at)]))
      at = static_cast<int>(s);
  if (at < 0) return res;
  res.feasible = true;
  res.value = values[static_cast<std::size_t>(at)];
  for (int k = n - 1; k >= 0; --k) {
    const Entry& e = layers[static_cast<std::size_t>(k)][static_cast<std::size_t>(at)];
    if (e.in_cut) res.cut.push_back(order[static_cast<std::size_t>(k)]);
    at = e.parent;
  }
  std::sort(res.cut.begin(), res.cut.end());
  res.components = components_after_cut(g, VertexCut(res.cut)).count;
  return res;
}

}  // namespace shortness::oracle::detail
