#ifndef LINIDEAL_SQUAREFREE_HPP
#define LINIDEAL_SQUAREFREE_HPP

#include <map>

#include "linideal/linear_quotients.hpp"

namespace linideal {

/// Edge multiplicities and cluster counts of a squarefree equigenerated
/// ideal: a (d-1)-edge is a squarefree degree-(d-1) divisor of a generator,
/// its multiplicity the number of generators it divides. C[j] counts maximal
/// j-clusters for j >= 2; N is the largest such j (1 when none).
struct ClusterProfile {
  std::map<Monomial, std::size_t, LexLess> edges;  // edge -> multiplicity
  std::map<std::size_t, std::size_t> C;            // j -> count, j >= 2 only
  std::size_t N = 1;
  std::size_t m = 0;
  Exponent d = 0;
  std::size_t n = 0;  // number of X variables in the ring
};

ClusterProfile cluster_profile(const MonomialIdeal& I);

/// Closed-form Betti numbers of LIN(I) for squarefree equigenerated I:
/// beta_i = C(i+d-1,d-1) C(n,i+d) + C(n-d+1,i)(md - sum (j-1)C_j)
///        + sum_j C_j sum_{k=2..j} C(n-d+k, i), at internal degree i + d.
BettiTable betti_closed_form(const MonomialIdeal& I);

/// pd(LIN(I)) = n - d + N and depth(R/LIN(I)) = m + d - N - 1, with R the
/// extended ring on n + m variables.
std::pair<long, long> pd_and_depth(const MonomialIdeal& I);

/// beta_i of the squarefree Veronese (x_1..x_n)^d_sqf.
long long veronese_betti(std::size_t n, Exponent d, int i);

/// r-value histogram of the complete part: r in 0..n-d occurs
/// C(r+d-1, d-1) times.
std::map<std::size_t, long long> complete_part_rk_histogram(std::size_t n, Exponent d);

}  // namespace linideal

#endif
