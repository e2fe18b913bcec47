#ifndef LINIDEAL_ORACLE_HPP
#define LINIDEAL_ORACLE_HPP

#include <map>

#include "linideal/betti_table.hpp"
#include "linideal/equification.hpp"

namespace linideal {

struct MultidegreeKeyLess {
  bool operator()(const std::pair<int, Monomial>& a,
                  const std::pair<int, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return LexLess{}(a.second, b.second);
  }
};

/// Multigraded Betti numbers: (i, multidegree) -> count. Nonzero entries
/// occur only at lcm-lattice multidegrees.
struct MultigradedBetti {
  std::map<std::pair<int, Monomial>, long long, MultidegreeKeyLess> entries;
};

struct OracleResult {
  MultigradedBetti multigraded;
  BettiTable graded;
};

/// Independent Betti computation: for each lattice multidegree b, the rank
/// of reduced simplicial homology of the upper Koszul complex at b, with
/// exact integer rank computation (fraction-free elimination over Z).
/// Throws ResourceError when the ideal has more than cap generators.
OracleResult oracle_betti(const MonomialIdeal& I, std::size_t cap = 12);

/// Oracle-backed linearity test: the graded table is nonzero only in row d.
bool is_linear_resolution(const MonomialIdeal& I, std::size_t cap = 12);

/// beta_{ij}(I) = beta_{ij}(J) + beta_{ij}(K) + beta_{i-1,j}(J cap K) for
/// all i, j, all four tables from the oracle. G(I) must be the disjoint
/// union of G(J) and G(K).
bool betti_splitting_check(const MonomialIdeal& I, const MonomialIdeal& J,
                           const MonomialIdeal& K, std::size_t cap = 12);

/// Ranks of the Taylor complex of the ideal: rank F_i = C(m, i+1).
std::vector<long long> taylor_ranks(const MonomialIdeal& I);

}  // namespace linideal

#endif
