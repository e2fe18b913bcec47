#ifndef LINIDEAL_LINEARIZATION_HPP
#define LINIDEAL_LINEARIZATION_HPP

#include <map>
#include <vector>

#include "linideal/linear_quotients.hpp"

namespace linideal {

enum class LinMode { Lin, StarLin };
enum class YIndexing { Positional, ByMonomial };

/// Result of the linearization construction: the ideal in the extended ring
/// (base variables plus one y per source generator), the canonical generator
/// order, and the bookkeeping to retrieve the source.
struct Linearized {
  MonomialIdeal ideal;
  LinMode mode;
  YIndexing y_indexing;

  /// Generators in canonical order: complete part in decreasing lex, then
  /// last part by increasing source index j, then increasing variable k.
  std::vector<Monomial> ordered_generators;
  std::size_t complete_count;  // ordered_generators[0..complete_count) = complete part

  /// y ring-variable index -> source generator of I (in the base ring).
  std::map<std::size_t, Monomial> source_map;

  /// Canonical order as a permutation into ideal.generators().
  std::vector<std::size_t> canonical_permutation() const;
};

/// Lin(I): complete part bounded by the per-variable maxima (M_1..M_n), plus
/// last part {f_j y_j / x_k}. I must be nonzero, proper, equigenerated, with
/// no y variables in its ring. Z-tagged variables are treated as part of the
/// base block.
Linearized lin(const MonomialIdeal& I, YIndexing indexing = YIndexing::Positional);

/// LIN(I): same with the uniform bound M = max_i M_i.
Linearized star_lin(const MonomialIdeal& I, YIndexing indexing = YIndexing::Positional);

/// Inverse of lin/star_lin on structurally valid input; returns the source
/// ideal in the base (y-free) ring.
MonomialIdeal retrieve_source(const Linearized& L);

/// The Theorem-3.6 order with its colon sequence.
OrderedGenerators canonical_order(const Linearized& L);

/// Exchange-property check over all ordered generator pairs.
bool is_polymatroidal(const MonomialIdeal& J);

/// sqrt(LIN(I)) by the closed description: all squarefree monomials of
/// degree a+sign(b) in the x variables plus one radical generator per
/// "pathological" generator of I (single exponent-1 variable, all other
/// exponents equal to M). Requires M >= 2 and a >= 1 where d = aM + b.
struct RadicalStarLin {
  MonomialIdeal ideal;  // in the extended ring with all m y variables
  Exponent a = 0;
  Exponent b = 0;
  /// (generator index in G(I), variable index) per pathological generator.
  std::vector<std::pair<std::size_t, std::size_t>> pathological;
  /// Canonical order: squarefree part decreasing lex, then pathological
  /// radicals by increasing generator index.
  std::vector<Monomial> ordered_generators;
};

RadicalStarLin radical_star_lin(const MonomialIdeal& I);

/// Closed-form Betti numbers of sqrt(LIN(I)):
/// beta_i = C(i+a+sign(b)-1, a+sign(b)-1) C(n, i+a+sign(b)) + sum_l C(n-a+t_l, i).
BettiTable radical_star_lin_betti(const MonomialIdeal& I);

/// Verifies Lin(I)+Lin(J) inside Lin(I+J) and likewise for LIN, using
/// by-monomial y indexing in a common ring. I, J equigenerated in one degree.
bool sum_compatibility_check(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace linideal

#endif
