#ifndef LINIDEAL_EQUIFICATION_HPP
#define LINIDEAL_EQUIFICATION_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "linideal/linearization.hpp"

namespace linideal {

/// I^eq: each generator f_j becomes f_j z^(d - deg f_j) in the ring extended
/// by one z-tagged variable (placed after the base block, before any y).
MonomialIdeal equify(const MonomialIdeal& I);

/// Sets z = 1: drops the z coordinate and minimalizes, returning an ideal in
/// the ring without z. Identity on z-free rings.
MonomialIdeal deequify(const MonomialIdeal& J);

/// Reduced trivial syzygy redundancy data for a generator pair.
struct SyzygyPair {
  std::size_t i = 0, j = 0;  // 0-based indices into the canonical generators
  Monomial lcm_ij;
  bool redundant = false;
  std::optional<std::size_t> witness;  // least witnessing k, iff redundant
};

/// sigma_ij redundant iff some k outside {i,j} has lcm(f_k,f_i) and
/// lcm(f_k,f_j) dividing lcm(f_i,f_j).
SyzygyPair syzygy_redundant(const MonomialIdeal& I, std::size_t i, std::size_t j);
/// The equified criterion additionally requires min(d_i, d_j) <= d_k.
SyzygyPair syzygy_redundant_eq(const MonomialIdeal& I, std::size_t i, std::size_t j);

/// Lin for arbitrary ideals: lin(equify(I)) with z as an ordinary base
/// variable.
Linearized lin_general(const MonomialIdeal& I);

/// The z = 1 image of lin_general(I): power_complete(delta, v) plus the last
/// part restricted to minimal-degree generators. Computed by the closed
/// description and cross-checked against the direct z = 1 evaluation.
MonomialIdeal lin_general_z1(const MonomialIdeal& I);

/// The lcm-lattice: all lcms of generator subsets (bottom = 1) ordered by
/// divisibility, with its Hasse covers.
struct LcmLattice {
  RingPtr ring;
  std::vector<Monomial> elements;  // sorted, elements[0] = 1
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::size_t bottom = 0;
  std::size_t top = 0;
};

LcmLattice lcm_lattice(const MonomialIdeal& I);
std::string lcm_lattice_dot(const LcmLattice& L);

/// Checks the concrete rendering of the L_I -> L_{I^eq} embedding claim:
/// subset lcms commute with z = 1 and the z = 1 map L_{I^eq} -> L_I is a
/// well-defined surjection separating distinct elements of L_I.
bool lattice_embedding_check(const MonomialIdeal& I);

/// Rooted complex of the z = 1 rooting map on L_{I^eq}: all generator
/// subsets whose every nonempty subset U contains the generator with
/// z = 1 image equal to the z = 1 image of lcm(U). Faces returned as sorted
/// index sets, including the empty face.
std::vector<std::vector<std::size_t>> rooted_complex(const MonomialIdeal& Ieq);

}  // namespace linideal

#endif
