#ifndef LINIDEAL_LINEAR_QUOTIENTS_HPP
#define LINIDEAL_LINEAR_QUOTIENTS_HPP

#include <optional>
#include <vector>

#include "linideal/betti_table.hpp"
#include "linideal/ideal.hpp"

namespace linideal {

/// A generator sequence together with its colon-sequence data: at position k
/// the minimal generators of (g_1,...,g_{k-1}) : g_k and their count r_k.
struct OrderedGenerators {
  MonomialIdeal ideal;
  std::vector<std::size_t> order;  // permutation of generator indices
  std::vector<std::vector<Monomial>> colon_gens;  // per position
  std::vector<std::size_t> r;                     // r[k] = colon_gens[k].size()

  const Monomial& generator_at(std::size_t position) const {
    return ideal.generator(order[position]);
  }
};

OrderedGenerators colon_sequence(const MonomialIdeal& I,
                                 const std::vector<std::size_t>& order);

/// Identity-order convenience.
OrderedGenerators colon_sequence(const MonomialIdeal& I);

/// True iff every successive colon ideal is generated by variables.
bool has_linear_quotients(const OrderedGenerators& og);
bool has_linear_quotients(const MonomialIdeal& I,
                          const std::vector<std::size_t>& order);

/// Independent pairwise-witness criterion: for all j < i there are k < i and
/// a variable x_l with u_k/gcd(u_k,u_i) = x_l dividing u_j/gcd(u_j,u_i).
bool has_linear_quotients_pairwise(const MonomialIdeal& I,
                                   const std::vector<std::size_t>& order);

/// beta_i = sum_k C(r_k, i), placed at internal degree i + d. Requires
/// linear quotients and an equigenerated ideal.
BettiTable betti_from_quotients(const OrderedGenerators& og);

enum class OrderSearchStatus { Found, NoneExists, Inconclusive };

struct OrderSearchResult {
  OrderSearchStatus status;
  std::optional<std::vector<std::size_t>> order;  // set iff Found
};

/// Searches for an order with linear quotients; exhaustive DFS with prefix
/// pruning, returning the lexicographically least successful permutation.
/// budget caps node expansions; exceeding it yields Inconclusive.
OrderSearchResult find_linear_quotient_order(const MonomialIdeal& I,
                                             std::size_t budget = 1000000);

/// Exact binomial coefficient C(n, k) as long long (small arguments only).
long long binomial(long long n, long long k);

}  // namespace linideal

#endif
