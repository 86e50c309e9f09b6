#include "posetdim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace posetdim {

namespace {

bool augment(int u, const BipartiteAdjacency& adj, std::vector<int>& match_left,
             std::vector<int>& match_right, std::vector<char>& seen) {
  for (int v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    int w = match_right[v];
    if (w < 0 || augment(w, adj, match_left, match_right, seen)) {
      match_left[u] = v;
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> max_bipartite_matching(int right, const BipartiteAdjacency& adj) {
  const int left = static_cast<int>(adj.size());
  std::vector<int> match_left(left, -1);
  std::vector<int> match_right(right, -1);
  std::vector<char> seen(right);
  for (int u = 0; u < left; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(u, adj, match_left, match_right, seen);
  }
  return match_left;
}

std::pair<std::vector<int>, std::vector<int>> hall_violator(
    int right, const BipartiteAdjacency& adj, const std::vector<int>& match) {
  const int left = static_cast<int>(adj.size());
  std::vector<int> match_right(right, -1);
  for (int u = 0; u < left; ++u)
    if (match[u] >= 0)
      match_right[match[u]] = u;

  // Alternating search from every unmatched left vertex (Konig's argument).
  std::vector<char> left_seen(left), right_seen(right);
  std::queue<int> queue;
  for (int u = 0; u < left; ++u)
    if (match[u] < 0) {
      left_seen[u] = 1;
      queue.push(u);
    }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : adj[u]) {
      if (right_seen[v]) continue;
      right_seen[v] = 1;
      int w = match_right[v];
      if (w >= 0 && !left_seen[w]) {
        left_seen[w] = 1;
        queue.push(w);
      }
    }
  }
  std::vector<int> s, ns;
  for (int u = 0; u < left; ++u)
    if (left_seen[u]) s.push_back(u);
  for (int v = 0; v < right; ++v)
    if (right_seen[v]) ns.push_back(v);
  return {s, ns};
}

std::optional<std::vector<std::pair<int, int>>> exact_degree_subgraph(
    const BipartiteAdjacency& adj, const std::vector<int>& left_degree,
    const std::vector<int>& right_degree) {
  const int left = static_cast<int>(adj.size());
  const int right = static_cast<int>(right_degree.size());
  const int need = std::accumulate(left_degree.begin(), left_degree.end(), 0);
  if (need != std::accumulate(right_degree.begin(), right_degree.end(), 0))
    return std::nullopt;

  // Unit-capacity flow: source -> left (cap degree) -> right (cap 1) -> sink.
  const int source = left + right, sink = source + 1, nodes = sink + 1;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(nodes);
  auto add = [&](int from, int to, int cap) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  };
  for (int u = 0; u < left; ++u) add(source, u, left_degree[u]);
  for (int u = 0; u < left; ++u)
    for (int v : adj[u]) add(u, left + v, 1);
  for (int v = 0; v < right; ++v) add(left + v, sink, right_degree[v]);

  int flow = 0;
  while (true) {
    std::vector<int> via(nodes, -1);
    std::queue<int> queue;
    queue.push(source);
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      int x = queue.front();
      queue.pop();
      for (int id : out[x]) {
        const Arc& arc = arcs[id];
        if (arc.cap > 0 && via[arc.to] == -1) {
          via[arc.to] = id;
          queue.push(arc.to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      int id = via[x];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      x = arcs[id ^ 1].to;
    }
    ++flow;
  }
  if (flow != need) return std::nullopt;

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < left; ++u)
    for (int id : out[u]) {
      const Arc& arc = arcs[id];
      if ((id & 1) == 0 && arc.to >= left && arc.to < left + right && arc.cap == 0)
        edges.emplace_back(u, arc.to - left);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace posetdim
