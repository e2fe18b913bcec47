#include "linideal/linear_quotients.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace linideal {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    long long num = n - k + i;
    // (result * num) is divisible by i at every step.
    if (result > std::numeric_limits<long long>::max() / num)
      throw ResourceError("binomial: overflow");
    result = result * num / i;
  }
  return result;
}

namespace {

void check_order(const MonomialIdeal& I, const std::vector<std::size_t>& order) {
  if (order.size() != I.num_generators())
    throw ArgumentError("colon_sequence: order length mismatch");
  std::vector<bool> seen(order.size(), false);
  for (std::size_t k : order) {
    if (k >= order.size() || seen[k])
      throw ArgumentError("colon_sequence: order is not a permutation");
    seen[k] = true;
  }
}

bool generated_by_variables(const std::vector<Monomial>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Monomial& g) { return g.degree() == 1; });
}

}  // namespace

OrderedGenerators colon_sequence(const MonomialIdeal& I,
                                 const std::vector<std::size_t>& order) {
  check_order(I, order);
  OrderedGenerators og{I, order, {}, {}};
  og.colon_gens.reserve(order.size());
  og.r.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Monomial& g = I.generator(order[pos]);
    std::vector<Monomial> quots;
    quots.reserve(pos);
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const Monomial& f = I.generator(order[prev]);
      quots.push_back(quotient(f, gcd(f, g)));
    }
    og.colon_gens.push_back(minimalize(I.ring(), std::move(quots)));
    og.r.push_back(og.colon_gens.back().size());
  }
  return og;
}

OrderedGenerators colon_sequence(const MonomialIdeal& I) {
  std::vector<std::size_t> order(I.num_generators());
  std::iota(order.begin(), order.end(), 0);
  return colon_sequence(I, order);
}

bool has_linear_quotients(const OrderedGenerators& og) {
  return std::all_of(og.colon_gens.begin(), og.colon_gens.end(),
                     generated_by_variables);
}

bool has_linear_quotients(const MonomialIdeal& I,
                          const std::vector<std::size_t>& order) {
  return has_linear_quotients(colon_sequence(I, order));
}

bool has_linear_quotients_pairwise(const MonomialIdeal& I,
                                   const std::vector<std::size_t>& order) {
  check_order(I, order);
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    const Monomial& u_i = I.generator(order[pos]);
    for (std::size_t pj = 0; pj < pos; ++pj) {
      const Monomial& u_j = I.generator(order[pj]);
      Monomial qj = quotient(u_j, gcd(u_j, u_i));
      if (qj.degree() == 1) continue;  // witnessed by itself
      bool witnessed = false;
      for (std::size_t pk = 0; pk < pos && !witnessed; ++pk) {
        const Monomial& u_k = I.generator(order[pk]);
        Monomial qk = quotient(u_k, gcd(u_k, u_i));
        if (qk.degree() == 1 && divides(qk, qj)) witnessed = true;
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

BettiTable betti_from_quotients(const OrderedGenerators& og) {
  if (!has_linear_quotients(og))
    throw DomainError("betti_from_quotients: order lacks linear quotients");
  if (!is_equigenerated(og.ideal))
    throw DomainError("betti_from_quotients: ideal is not equigenerated");
  BettiTable table;
  if (og.ideal.is_zero()) return table;
  long d = static_cast<long>(generator_degree(og.ideal));
  std::size_t pd = *std::max_element(og.r.begin(), og.r.end());
  for (int i = 0; i <= static_cast<int>(pd); ++i) {
    long long beta = 0;
    for (std::size_t rk : og.r)
      beta += binomial(static_cast<long long>(rk), i);
    table.add(i, d + i, beta);
  }
  return table;
}

namespace {

struct SearchState {
  const MonomialIdeal& I;
  std::size_t budget;
  std::size_t expansions = 0;
  bool budget_hit = false;
  std::vector<std::size_t> chosen;
  std::vector<bool> used;

  explicit SearchState(const MonomialIdeal& ideal, std::size_t b)
      : I(ideal), budget(b), used(ideal.num_generators(), false) {}

  bool admissible(std::size_t next) const {
    const Monomial& g = I.generator(next);
    std::vector<Monomial> quots;
    quots.reserve(chosen.size());
    for (std::size_t prev : chosen) {
      const Monomial& f = I.generator(prev);
      quots.push_back(quotient(f, gcd(f, g)));
    }
    return generated_by_variables(minimalize(I.ring(), std::move(quots)));
  }

  bool dfs() {
    if (chosen.size() == used.size()) return true;
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used[k]) continue;
      if (++expansions > budget) {
        budget_hit = true;
        return false;
      }
      if (!admissible(k)) continue;
      used[k] = true;
      chosen.push_back(k);
      if (dfs()) return true;
      chosen.pop_back();
      used[k] = false;
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

OrderSearchResult find_linear_quotient_order(const MonomialIdeal& I,
                                             std::size_t budget) {
  if (I.is_zero() || I.num_generators() == 1)
    return {OrderSearchStatus::Found,
            std::vector<std::size_t>(I.num_generators(), 0)};
  SearchState state(I, budget);
  if (state.dfs()) return {OrderSearchStatus::Found, state.chosen};
  if (state.budget_hit) return {OrderSearchStatus::Inconclusive, std::nullopt};
  return {OrderSearchStatus::NoneExists, std::nullopt};
}

}  // namespace linideal
