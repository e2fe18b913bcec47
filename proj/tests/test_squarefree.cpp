#include <doctest.h>

#include <random>

#include "linideal/linearization.hpp"
#include "linideal/oracle.hpp"
#include "linideal/squarefree.hpp"
#include "test_support.hpp"

using namespace linideal;
using namespace linideal::testing;

namespace {

std::string render_colon(const RingPtr& ring, const std::vector<Monomial>& gens) {
  return render(MonomialIdeal(ring, gens));
}

}  // namespace

// I = (x1x2x3, x1x2x4, x1x2x5): three triangles sharing the edge x1x2
TEST_CASE("three triangles sharing an edge") {
  RingPtr R = make_x_ring(5);
  MonomialIdeal I = ideal(R, "x1*x2*x3, x1*x2*x4, x1*x2*x5");
  Linearized L = star_lin(I);
  CHECK(L.ideal.num_generators() == 19);
  CHECK(L.complete_count == 10);
  CHECK(L.ideal == lin(I).ideal);

  OrderedGenerators og = canonical_order(L);
  CHECK(has_linear_quotients(og));

  const RingPtr& ring = L.ideal.ring();
  std::vector<std::string> expected = {
      "(0)",
      "(x3)",
      "(x3, x4)",
      "(x2)",
      "(x2, x4)",
      "(x2, x3)",
      "(x1)",
      "(x1, x4)",
      "(x1, x3)",
      "(x1, x2)",
      "(x1, x4, x5)",
      "(x2, x4, x5)",
      "(x3, x4, x5)",
      "(x1, x3, x5)",
      "(x2, x3, x5)",
      "(x3, x4, x5, y1)",
      "(x1, x3, x4)",
      "(x2, x3, x4)",
      "(x3, x4, x5, y1, y2)",
  };
  REQUIRE(og.colon_gens.size() == 19);
  for (std::size_t k = 0; k < 19; ++k)
    CHECK(render_colon(ring, og.colon_gens[k]) == expected[k]);

  BettiTable from_quotients = betti_from_quotients(og);
  BettiTable closed = betti_closed_form(I);
  std::vector<long long> row = {19, 45, 43, 21, 6, 1};
  CHECK(from_quotients.totals() == row);
  CHECK(closed.totals() == row);
  CHECK(from_quotients == closed);
  for (int i = 0; i < 6; ++i) CHECK(closed.at(i, 3 + i) == row[static_cast<std::size_t>(i)]);

  ClusterProfile p = cluster_profile(I);
  CHECK(p.edges.at(mono(R, "x1*x2")) == 3);
  CHECK(p.C == std::map<std::size_t, std::size_t>{{3, 1}});
  CHECK(p.N == 3);
  CHECK(p.m == 3);
  CHECK(p.d == 3);
  CHECK(p.n == 5);
  CHECK(pd_and_depth(I) == std::pair<long, long>{5, 2});
}

TEST_CASE("squarefree veronese betti numbers") {
  CHECK(veronese_betti(5, 3, 0) == 10);
  CHECK(veronese_betti(5, 3, 1) == 15);
  CHECK(veronese_betti(5, 3, 2) == 6);
  CHECK(veronese_betti(5, 3, 3) == 0);
  // the squarefree Veronese is the complete part bound: cross-check directly
  RingPtr R = make_x_ring(5);
  MonomialIdeal V = power_complete(R, 3, ExponentBound{{1, 1, 1, 1, 1}});
  OrderedGenerators og = colon_sequence(V);
  CHECK(has_linear_quotients(og));
  BettiTable t = betti_from_quotients(og);
  CHECK(t.totals() == std::vector<long long>{10, 15, 6});
}

TEST_CASE("complete part r-value histogram") {
  auto hist = complete_part_rk_histogram(5, 3);
  // r = j occurs C(j+d-1, d-1) times; sums to C(n, d)
  CHECK(hist == std::map<std::size_t, long long>{{0, 1}, {1, 3}, {2, 6}});
  long long total = 0;
  for (const auto& [r, c] : hist) total += c;
  CHECK(total == binomial(5, 3));

  // against the actual colon sequence of the squarefree Veronese
  RingPtr R = make_x_ring(5);
  MonomialIdeal V = power_complete(R, 3, ExponentBound{{1, 1, 1, 1, 1}});
  OrderedGenerators og = colon_sequence(V);
  std::map<std::size_t, long long> seen;
  for (std::size_t rk : og.r) ++seen[rk];
  CHECK(seen == hist);
}

TEST_CASE("cluster multiplicities on an edge-disjoint example") {
  RingPtr R = make_x_ring(4);
  MonomialIdeal I = ideal(R, "x1*x2, x3*x4");
  ClusterProfile p = cluster_profile(I);
  CHECK(p.C.empty());
  CHECK(p.N == 1);
  CHECK(pd_and_depth(I) == std::pair<long, long>{3, 2});
}

TEST_CASE("closed form agrees with linear quotients at random") {
  std::mt19937 rng(20240822);
  std::uniform_int_distribution<std::size_t> nn(2, 6);
  int done = 0;
  for (int t = 0; t < 80 && done < 50; ++t) {
    std::size_t n = nn(rng);
    std::uniform_int_distribution<Exponent> dd(1, static_cast<Exponent>(n));
    Exponent d = dd(rng);
    std::size_t max_m = 1;
    for (Exponent k = 0; k < d; ++k) max_m = max_m * (n - static_cast<std::size_t>(k)) / static_cast<std::size_t>(k + 1);
    std::uniform_int_distribution<std::size_t> mm(1, std::min<std::size_t>(max_m, 6));
    MonomialIdeal I = random_squarefree(rng, n, d, mm(rng));
    if (I.is_zero() || I.is_unit()) continue;
    BettiTable closed = betti_closed_form(I);
    BettiTable quot = betti_from_quotients(canonical_order(star_lin(I)));
    CHECK(closed == quot);
    auto [pd, depth] = pd_and_depth(I);
    CHECK(pd == closed.projective_dimension());
    CHECK(depth == static_cast<long>(I.ring()->size() + I.num_generators()) -
                       1 - pd);  // Auslander-Buchsbaum in the extended ring
    ++done;
  }
  CHECK(done >= 50);
}

TEST_CASE("squarefree analysis rejects bad input") {
  RingPtr R = make_x_ring(3);
  CHECK_THROWS_AS(cluster_profile(ideal(R, "x1^2*x2, x2*x3")), DomainError);
  CHECK_THROWS_AS(betti_closed_form(ideal(R, "x1, x2*x3")), DomainError);
  CHECK_THROWS_AS(cluster_profile(MonomialIdeal(R)), DomainError);
}
