#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace posetdim {

/// Adjacency lists of a bipartite graph, indexed by left vertex; right
/// vertices are 0..right-1.
using BipartiteAdjacency = std::vector<std::vector<int>>;

/// Maximum matching by augmenting paths, scanning neighbours in list order.
/// Returns the right partner of every left vertex, or -1.
std::vector<int> max_bipartite_matching(int right, const BipartiteAdjacency& adj);

/// Given a maximum matching that leaves some left vertex unmatched, returns a
/// set S of left vertices with |N(S)| < |S| together with N(S).
std::pair<std::vector<int>, std::vector<int>> hall_violator(
    int right, const BipartiteAdjacency& adj, const std::vector<int>& match);

/// Simple subgraph in which left vertex i has degree left_degree[i] and right
/// vertex j has degree right_degree[j], if one exists. Edges are (left, right).
std::optional<std::vector<std::pair<int, int>>> exact_degree_subgraph(
    const BipartiteAdjacency& adj, const std::vector<int>& left_degree,
    const std::vector<int>& right_degree);

}  // namespace posetdim
