#include "xcount/bisection.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "xcount/errors.hpp"

namespace xcount {

namespace {

// Unbiased bounded draw via multiply-shift; keeps results independent of the
// standard library's distribution implementations.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

struct Layout {
  std::vector<int> verts;                    // ascending ids
  std::map<int, int> index;                  // id -> position
  std::vector<std::pair<int, int>> edges;    // endpoint positions (self-loops skipped)
  std::vector<std::size_t> edge_to_graph;    // position in g.edges
};

Layout make_layout(const ClauseGraph& g) {
  Layout L;
  L.verts = g.vertices;
  for (std::size_t i = 0; i < L.verts.size(); ++i) L.index[L.verts[i]] = static_cast<int>(i);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    L.edges.emplace_back(L.index.at(ed.a), L.index.at(ed.b));
    L.edge_to_graph.push_back(e);
  }
  return L;
}

int cut_of(const Layout& L, const std::vector<char>& side) {
  int c = 0;
  for (const auto& [u, v] : L.edges) c += side[u] != side[v];
  return c;
}

std::vector<char> random_sides(const Layout& L, std::mt19937_64& rng) {
  const std::size_t n = L.verts.size();
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[rand_below(rng, i)]);
  std::vector<char> side(n, 0);
  for (std::size_t i = 0; i < n / 2; ++i) side[order[i]] = 1;
  return side;
}

Bisection to_bisection(const ClauseGraph& g, const Layout& L, const std::vector<char>& side) {
  Bisection b;
  for (std::size_t i = 0; i < L.verts.size(); ++i)
    (side[i] ? b.v1 : b.v0).insert(L.verts[i]);
  for (std::size_t k = 0; k < L.edges.size(); ++k)
    if (side[L.edges[k].first] != side[L.edges[k].second])
      b.cut.push_back(L.edge_to_graph[k]);
  return b;
}

// Hill climbing on swap gains. D(u) = external - internal edge weight; a swap
// of u and v on opposite sides improves the cut by D(u) + D(v) - 2 w(u,v), a
// single move (used to rebalance odd sizes) by D(u). Since w >= 0, candidate
// scans can stop once D(u) + D(v) drops to the best gain found.
void local_search(const Layout& L, std::vector<char>& side) {
  const int n = static_cast<int>(L.verts.size());
  const bool odd = (n % 2) != 0;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, weight)
  for (const auto& [u, v] : L.edges) {
    bool merged = false;
    for (auto& [o, w] : adj[u])
      if (o == v) {
        ++w;
        merged = true;
      }
    if (!merged) adj[u].emplace_back(v, 1);
    merged = false;
    for (auto& [o, w] : adj[v])
      if (o == u) {
        ++w;
        merged = true;
      }
    if (!merged) adj[v].emplace_back(u, 1);
  }
  const auto weight_between = [&](int u, int v) {
    for (const auto& [o, w] : adj[u])
      if (o == v) return w;
    return 0;
  };

  std::vector<int> d(n);
  const auto recompute_d = [&] {
    std::fill(d.begin(), d.end(), 0);
    for (int u = 0; u < n; ++u)
      for (const auto& [v, w] : adj[u]) d[u] += side[u] != side[v] ? w : -w;
  };

  for (;;) {
    recompute_d();
    std::vector<int> side0, side1;
    for (int u = 0; u < n; ++u) (side[u] ? side1 : side0).push_back(u);
    const auto by_gain = [&](int a, int b) { return d[a] != d[b] ? d[a] > d[b] : a < b; };
    std::sort(side0.begin(), side0.end(), by_gain);
    std::sort(side1.begin(), side1.end(), by_gain);

    int best_gain = 0;
    int move_u = -1, move_v = -1;  // v == -1 means single move
    for (int u : side0) {
      if (!side1.empty() && d[u] + d[side1.front()] <= best_gain) break;
      for (int v : side1) {
        if (d[u] + d[v] <= best_gain) break;
        const int gain = d[u] + d[v] - 2 * weight_between(u, v);
        if (gain > best_gain) {
          best_gain = gain;
          move_u = u;
          move_v = v;
        }
      }
    }
    if (odd) {
      const auto& larger = side1.size() > side0.size() ? side1 : side0;
      for (int u : larger) {
        if (d[u] <= best_gain) break;
        best_gain = d[u];
        move_u = u;
        move_v = -1;
      }
    }
    if (best_gain <= 0) return;
    if (move_v >= 0) {
      side[move_u] = 1;
      side[move_v] = 0;
    } else {
      side[move_u] = static_cast<char>(1 - side[move_u]);
    }
  }
}

}  // namespace

Bisection compute_bisection(const ClauseGraph& g, std::uint64_t seed, int restarts) {
  if (g.vertices.size() < 2) throw ContractError("bisection: fewer than two vertices");
  const Layout L = make_layout(g);
  std::mt19937_64 rng(seed);
  std::vector<char> best;
  int best_cut = -1;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    std::vector<char> side = random_sides(L, rng);
    local_search(L, side);
    const int c = cut_of(L, side);
    if (best_cut < 0 || c < best_cut) {
      best_cut = c;
      best = side;
    }
  }
  return to_bisection(g, L, best);
}

Bisection random_balanced_bisection(const ClauseGraph& g, std::uint64_t seed) {
  if (g.vertices.size() < 2) throw ContractError("bisection: fewer than two vertices");
  const Layout L = make_layout(g);
  std::mt19937_64 rng(seed);
  std::vector<char> side = random_sides(L, rng);
  return to_bisection(g, L, side);
}

}  // namespace xcount
