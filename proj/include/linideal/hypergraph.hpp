#ifndef LINIDEAL_HYPERGRAPH_HPP
#define LINIDEAL_HYPERGRAPH_HPP

#include <optional>
#include <set>
#include <vector>

#include "linideal/ideal.hpp"

namespace linideal {

/// A hypergraph on vertices {0, ..., n-1}; edges are nonempty vertex sets.
struct Hypergraph {
  std::size_t vertex_count = 0;
  std::vector<std::set<std::size_t>> edges;

  bool is_uniform() const;
  /// Common edge cardinality; throws DomainError if not uniform or empty.
  std::size_t uniform_degree() const;
};

/// Edge ideal I_H in K[x1..xn]; inverse of from_ideal.
MonomialIdeal edge_ideal(const Hypergraph& H);
/// Hypergraph of a squarefree ideal (vertices = ring variables).
Hypergraph from_ideal(const MonomialIdeal& I);

inline constexpr std::size_t kInfiniteDistance = static_cast<std::size_t>(-1);

/// Minimal length of a proper irredundant chain between two edges of a
/// d-uniform hypergraph (BFS over proper adjacency; a shortest proper chain
/// is automatically irredundant). kInfiniteDistance when disconnected.
std::size_t distance(const Hypergraph& H, const std::set<std::size_t>& E,
                     const std::set<std::size_t>& Eprime);

bool is_properly_connected(const Hypergraph& H);
/// Enumerates induced vertex subsets; capped at max_vertices (2^n loop).
bool is_triangulated(const Hypergraph& H, std::size_t max_vertices = 16);
std::size_t diameter(const Hypergraph& H);

enum class CriterionOutcome { Linear, NotLinear, Inapplicable };

/// Diameter <= d test for linear resolution; Inapplicable when the
/// properly-connected / triangulated hypotheses fail.
CriterionOutcome linear_resolution_criterion(const Hypergraph& H);

}  // namespace linideal

#endif
