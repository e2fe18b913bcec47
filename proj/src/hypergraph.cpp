#include "linideal/hypergraph.hpp"

#include <algorithm>
#include <queue>

#include "linideal/linear_quotients.hpp"

namespace linideal {

bool Hypergraph::is_uniform() const {
  if (edges.empty()) return true;
  std::size_t d = edges.front().size();
  return std::all_of(edges.begin(), edges.end(),
                     [d](const std::set<std::size_t>& e) { return e.size() == d; });
}

std::size_t Hypergraph::uniform_degree() const {
  if (edges.empty()) throw DomainError("uniform_degree: hypergraph has no edges");
  if (!is_uniform()) throw DomainError("uniform_degree: hypergraph is not uniform");
  return edges.front().size();
}

MonomialIdeal edge_ideal(const Hypergraph& H) {
  RingPtr ring = make_x_ring(H.vertex_count);
  std::vector<Monomial> gens;
  for (const auto& edge : H.edges) {
    ExponentVec e(H.vertex_count, 0);
    for (std::size_t v : edge) {
      if (v >= H.vertex_count)
        throw ArgumentError("edge_ideal: vertex index out of range");
      e[v] = 1;
    }
    if (edge.empty()) throw ArgumentError("edge_ideal: empty edge");
    gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

Hypergraph from_ideal(const MonomialIdeal& I) {
  if (!is_squarefree(I)) throw DomainError("from_ideal: ideal is not squarefree");
  Hypergraph H;
  H.vertex_count = I.ring()->size();
  for (const auto& g : I.generators()) {
    auto support = g.support();
    H.edges.emplace_back(support.begin(), support.end());
  }
  return H;
}

namespace {

std::size_t intersection_size(const std::set<std::size_t>& a,
                              const std::set<std::size_t>& b) {
  std::size_t count = 0;
  for (std::size_t v : a) count += b.count(v);
  return count;
}

std::size_t edge_index(const Hypergraph& H, const std::set<std::size_t>& E,
                       const char* where) {
  for (std::size_t k = 0; k < H.edges.size(); ++k)
    if (H.edges[k] == E) return k;
  throw ArgumentError(std::string(where) + ": not an edge of the hypergraph");
}

/// All-sources shortest proper-chain lengths from edge `from`. A shortest
/// proper chain is automatically irredundant.
std::vector<std::size_t> proper_distances(const Hypergraph& H, std::size_t from,
                                          std::size_t d) {
  std::vector<std::size_t> dist(H.edges.size(), kInfiniteDistance);
  std::queue<std::size_t> work;
  dist[from] = 0;
  work.push(from);
  while (!work.empty()) {
    std::size_t k = work.front();
    work.pop();
    for (std::size_t t = 0; t < H.edges.size(); ++t) {
      if (dist[t] != kInfiniteDistance) continue;
      if (intersection_size(H.edges[k], H.edges[t]) != d - 1) continue;
      dist[t] = dist[k] + 1;
      work.push(t);
    }
  }
  return dist;
}

}  // namespace

std::size_t distance(const Hypergraph& H, const std::set<std::size_t>& E,
                     const std::set<std::size_t>& Eprime) {
  std::size_t d = H.uniform_degree();
  std::size_t from = edge_index(H, E, "distance");
  std::size_t to = edge_index(H, Eprime, "distance");
  return proper_distances(H, from, d)[to];
}

bool is_properly_connected(const Hypergraph& H) {
  if (H.edges.empty()) return true;
  std::size_t d = H.uniform_degree();
  for (std::size_t k = 0; k < H.edges.size(); ++k) {
    std::vector<std::size_t> dist = proper_distances(H, k, d);
    for (std::size_t t = 0; t < H.edges.size(); ++t) {
      std::size_t common = intersection_size(H.edges[k], H.edges[t]);
      if (common == 0) continue;
      if (dist[t] != d - common) return false;
    }
  }
  return true;
}

std::size_t diameter(const Hypergraph& H) {
  if (H.edges.empty()) return 0;
  std::size_t d = H.uniform_degree();
  std::size_t best = 0;
  for (std::size_t k = 0; k < H.edges.size(); ++k) {
    std::vector<std::size_t> dist = proper_distances(H, k, d);
    for (std::size_t t = 0; t < H.edges.size(); ++t) {
      if (dist[t] == kInfiniteDistance) return kInfiniteDistance;
      best = std::max(best, dist[t]);
    }
  }
  return best;
}

bool is_triangulated(const Hypergraph& H, std::size_t max_vertices) {
  std::size_t d = H.uniform_degree();
  std::size_t n = H.vertex_count;
  if (n > max_vertices)
    throw ResourceError("is_triangulated: vertex count exceeds cap");
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    auto in_w = [&](std::size_t v) { return (mask >> v) & 1; };
    // Edges of the induced hypergraph H_W.
    std::vector<const std::set<std::size_t>*> induced;
    for (const auto& edge : H.edges) {
      bool inside = std::all_of(edge.begin(), edge.end(), in_w);
      if (inside) induced.push_back(&edge);
    }
    bool found = false;
    for (std::size_t v = 0; v < n && !found; ++v) {
      if (!in_w(v)) continue;
      std::set<std::size_t> closed = {v};  // N(v) in H_W, plus v
      for (const auto* edge : induced)
        if (edge->count(v)) closed.insert(edge->begin(), edge->end());
      // H_W restricted to the closed neighborhood must be d-complete.
      std::size_t present = 0;
      for (const auto* edge : induced) {
        bool inside = std::all_of(edge->begin(), edge->end(),
                                  [&](std::size_t w) { return closed.count(w); });
        if (inside) ++present;
      }
      long long expected = binomial(static_cast<long long>(closed.size()),
                                    static_cast<long long>(d));
      found = static_cast<long long>(present) == expected;
    }
    if (!found) return false;
  }
  return true;
}

CriterionOutcome linear_resolution_criterion(const Hypergraph& H) {
  if (H.edges.empty() || !H.is_uniform()) return CriterionOutcome::Inapplicable;
  if (!is_properly_connected(H)) return CriterionOutcome::Inapplicable;
  if (!is_triangulated(H)) return CriterionOutcome::Inapplicable;
  std::size_t d = H.uniform_degree();
  std::size_t diam = diameter(H);
  if (diam != kInfiniteDistance && diam <= d) return CriterionOutcome::Linear;
  return CriterionOutcome::NotLinear;
}

}  // namespace linideal
