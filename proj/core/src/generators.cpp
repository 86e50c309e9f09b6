#include "posetdim/generators.hpp"

#include <random>
#include <string>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

void require_at_least(int value, int minimum, const char* what) {
  if (value < minimum) throw Error(std::string(what) + " must be at least " + std::to_string(minimum));
}

std::vector<std::array<int, 3>> normalized_vectors(int q) {
  std::vector<std::array<int, 3>> out;
  out.push_back({0, 0, 1});
  for (int z = 0; z < q; ++z) out.push_back({0, 1, z});
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) out.push_back({1, y, z});
  return out;
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

BipartitePoset gen_standard_example(int d) {
  require_at_least(d, 1, "d");
  std::vector<Relation> rel;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) rel.emplace_back(i, d + j);
  std::vector<std::string> labels;
  for (int i = 1; i <= d; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= d; ++i) labels.push_back("b" + std::to_string(i));
  ElementSet a(d);
  for (int i = 0; i < d; ++i) a[i] = i;
  return BipartitePoset(Poset::from_relations(2 * d, rel, std::move(labels)), std::move(a));
}

Poset gen_subsets12(int n) {
  require_at_least(n, 3, "n");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("{" + std::to_string(i) + "}");
  std::vector<Relation> rel;
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rel.emplace_back(i, next);
      rel.emplace_back(j, next);
      labels.push_back("{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
      ++next;
    }
  return Poset::from_relations(next, rel, std::move(labels));
}

Poset gen_canonical_interval(int n) {
  require_at_least(n, 2, "n");
  std::vector<std::pair<int, int>> intervals;
  std::vector<std::string> labels;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      intervals.emplace_back(a, b);
      labels.push_back("[" + std::to_string(a) + "," + std::to_string(b) + "]");
    }
  std::vector<Relation> rel;
  const int m = static_cast<int>(intervals.size());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (intervals[x].second < intervals[y].first) rel.emplace_back(x, y);
  return Poset::from_relations(m, rel, std::move(labels));
}

PlaneIncidence projective_plane(int q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
  PlaneIncidence plane;
  plane.q = q;
  plane.points = normalized_vectors(q);
  plane.lines = plane.points;
  const std::size_t n = plane.points.size();
  plane.incidence.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = plane.points[i];
      const auto& l = plane.lines[j];
      plane.incidence[i][j] = (x[0] * l[0] + x[1] * l[1] + x[2] * l[2]) % q == 0;
    }
  return plane;
}

PlanePoset gen_projective_plane(int q) {
  auto plane = projective_plane(q);
  const int n = static_cast<int>(plane.points.size());
  std::vector<Relation> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!plane.incidence[i][j]) rel.emplace_back(i, n + j);
  auto coords = [](const std::array<int, 3>& v) {
    return std::to_string(v[0]) + ":" + std::to_string(v[1]) + ":" + std::to_string(v[2]);
  };
  std::vector<std::string> labels;
  for (const auto& v : plane.points) labels.push_back("p(" + coords(v) + ")");
  for (const auto& v : plane.lines) labels.push_back("l[" + coords(v) + "]");
  ElementSet a(n);
  for (int i = 0; i < n; ++i) a[i] = i;
  BipartitePoset bp(Poset::from_relations(2 * n, rel, std::move(labels)), std::move(a));
  return {std::move(bp), std::move(plane)};
}

BipartitePoset gen_random_bipartite(int n, double p, std::uint64_t seed) {
  require_at_least(n, 0, "n");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Relation> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // 53 high bits give a uniform double in [0, 1) independent of the
      // standard library's distribution implementation.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) rel.emplace_back(i, n + j);
    }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  ElementSet a(n);
  for (int i = 0; i < n; ++i) a[i] = i;
  return BipartitePoset(Poset::from_relations(2 * n, rel, std::move(labels)), std::move(a));
}

Poset gen_stacked(int m, int q) {
  require_at_least(m, 1, "m");
  auto plane = gen_projective_plane(q);
  const Poset& core = plane.poset.poset();
  const int n = static_cast<int>(plane.plane.points.size());
  const int offset = 2 * m;
  std::vector<Relation> rel;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) rel.emplace_back(i, m + j);
  for (auto [x, y] : core.relations()) rel.emplace_back(offset + x, offset + y);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) {
      rel.emplace_back(i, offset + n + k);
      rel.emplace_back(offset + k, m + i);
    }
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= m; ++i) labels.push_back("b" + std::to_string(i));
  for (const auto& l : core.labels()) labels.push_back(l);
  return Poset::from_relations(offset + 2 * n, rel, std::move(labels));
}

Poset gen_chain(int n) {
  require_at_least(n, 0, "n");
  std::vector<Relation> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel);
}

Poset gen_antichain(int n) {
  require_at_least(n, 0, "n");
  return Poset::from_relations(n, {});
}

}  // namespace posetdim
