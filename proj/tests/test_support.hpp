#ifndef LINIDEAL_TEST_SUPPORT_HPP
#define LINIDEAL_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "linideal/io.hpp"

namespace linideal::testing {

inline Monomial mono(const RingPtr& ring, const std::string& text) {
  return parse_monomial(ring, text);
}

inline MonomialIdeal ideal(const RingPtr& ring, const std::string& text) {
  return parse_ideal(ring, text);
}

inline std::vector<std::string> rendered_generators(const MonomialIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators()) out.push_back(render(g));
  return out;
}

/// Random equigenerated ideal: n variables, m distinct degree-d monomials
/// with exponents at most max_exp. Retries until m monomials exist.
inline MonomialIdeal random_equigenerated(std::mt19937& rng, std::size_t n,
                                          Exponent d, std::size_t m,
                                          Exponent max_exp = 3) {
  RingPtr ring = make_x_ring(n);
  std::set<ExponentVec> seen;
  std::vector<Monomial> gens;
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  for (int attempt = 0; attempt < 2000 && gens.size() < m; ++attempt) {
    ExponentVec e(n, 0);
    for (Exponent k = 0; k < d; ++k) {
      std::size_t i = var(rng);
      int retries = 0;
      while (e[i] >= max_exp && retries++ < 50) i = var(rng);
      ++e[i];
    }
    if (*std::max_element(e.begin(), e.end()) > max_exp) continue;
    if (seen.insert(e).second) gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

/// Random squarefree equigenerated ideal: m distinct degree-d squarefree
/// monomials in n variables (d <= n).
inline MonomialIdeal random_squarefree(std::mt19937& rng, std::size_t n,
                                       Exponent d, std::size_t m) {
  RingPtr ring = make_x_ring(n);
  std::vector<std::size_t> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = i;
  std::set<ExponentVec> seen;
  std::vector<Monomial> gens;
  for (int attempt = 0; attempt < 2000 && gens.size() < m; ++attempt) {
    std::shuffle(vars.begin(), vars.end(), rng);
    ExponentVec e(n, 0);
    for (Exponent k = 0; k < d; ++k) e[vars[static_cast<std::size_t>(k)]] = 1;
    if (seen.insert(e).second) gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

/// Random (not necessarily equigenerated) ideal after minimalization.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n,
                                  Exponent max_deg, std::size_t m,
                                  Exponent max_exp = 3) {
  RingPtr ring = make_x_ring(n);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<Exponent> deg(1, max_deg);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < m; ++k) {
    ExponentVec e(n, 0);
    Exponent d = deg(rng);
    for (Exponent t = 0; t < d; ++t) {
      std::size_t i = var(rng);
      int retries = 0;
      while (e[i] >= max_exp && retries++ < 50) i = var(rng);
      if (e[i] < max_exp) ++e[i];
    }
    if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x > 0; }))
      gens.emplace_back(ring, std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace linideal::testing

#endif
