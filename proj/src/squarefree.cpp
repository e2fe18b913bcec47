#include "linideal/squarefree.hpp"

#include <algorithm>

namespace linideal {

namespace {

void require_squarefree_input(const MonomialIdeal& I, const char* where) {
  if (I.is_zero()) throw DomainError(std::string(where) + ": zero ideal");
  if (I.is_unit()) throw DomainError(std::string(where) + ": unit ideal");
  if (!is_squarefree(I))
    throw DomainError(std::string(where) + ": ideal is not squarefree");
  if (!is_equigenerated(I))
    throw DomainError(std::string(where) + ": ideal is not equigenerated");
  for (std::size_t i = 0; i < I.ring()->size(); ++i)
    if (I.ring()->role(i) != VarRole::X)
      throw DomainError(std::string(where) + ": ring must have only x variables");
}

}  // namespace

ClusterProfile cluster_profile(const MonomialIdeal& I) {
  require_squarefree_input(I, "cluster_profile");
  ClusterProfile profile;
  profile.m = I.num_generators();
  profile.d = generator_degree(I);
  profile.n = I.ring()->size();

  // Every squarefree degree-(d-1) divisor of a generator, with the number of
  // generators it divides. Distinct edges of multiplicity >= 2 divide
  // distinct generator sets, so each one is a maximal cluster.
  for (const auto& f : I.generators()) {
    for (std::size_t k : f.support()) {
      Monomial edge = shift_exponent(f, k, -1);
      if (profile.edges.count(edge)) continue;
      std::size_t mult = 0;
      for (const auto& g : I.generators())
        if (divides(edge, g)) ++mult;
      profile.edges.emplace(std::move(edge), mult);
    }
  }
  for (const auto& [edge, mult] : profile.edges)
    if (mult >= 2) ++profile.C[mult];
  profile.N = profile.C.empty() ? 1 : profile.C.rbegin()->first;
  return profile;
}

long long veronese_betti(std::size_t n, Exponent d, int i) {
  return binomial(static_cast<long long>(i) + d - 1, d - 1) *
         binomial(static_cast<long long>(n), static_cast<long long>(i) + d);
}

std::map<std::size_t, long long> complete_part_rk_histogram(std::size_t n,
                                                            Exponent d) {
  if (d < 1 || static_cast<Exponent>(n) < d)
    throw ArgumentError("complete_part_rk_histogram: need 1 <= d <= n");
  std::map<std::size_t, long long> hist;
  for (std::size_t r = 0; r + static_cast<std::size_t>(d) <= n; ++r)
    hist[r] = binomial(static_cast<long long>(r) + d - 1, d - 1);
  return hist;
}

BettiTable betti_closed_form(const MonomialIdeal& I) {
  ClusterProfile p = cluster_profile(I);
  long long n = static_cast<long long>(p.n);
  long long d = p.d;
  long long m = static_cast<long long>(p.m);

  long long clustered = 0;  // sum (j-1) C_j
  for (const auto& [j, cj] : p.C)
    clustered += (static_cast<long long>(j) - 1) * static_cast<long long>(cj);

  long long i_max = n - d + static_cast<long long>(p.N);
  BettiTable table;
  for (long long i = 0; i <= i_max; ++i) {
    long long beta = veronese_betti(p.n, p.d, static_cast<int>(i));
    beta += binomial(n - d + 1, i) * (m * d - clustered);
    for (const auto& [j, cj] : p.C)
      for (long long k = 2; k <= static_cast<long long>(j); ++k)
        beta += static_cast<long long>(cj) * binomial(n - d + k, i);
    table.add(static_cast<int>(i), static_cast<long>(i + d), beta);
  }
  return table;
}

std::pair<long, long> pd_and_depth(const MonomialIdeal& I) {
  ClusterProfile p = cluster_profile(I);
  long pd = static_cast<long>(p.n) - static_cast<long>(p.d) +
            static_cast<long>(p.N);
  long depth = static_cast<long>(p.m) + static_cast<long>(p.d) -
               static_cast<long>(p.N) - 1;
  return {pd, depth};
}

}  // namespace linideal
