#ifndef LINIDEAL_IDEAL_HPP
#define LINIDEAL_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "linideal/monomial.hpp"

namespace linideal {

/// A vector of per-variable exponent bounds, used for cropping.
struct ExponentBound {
  ExponentVec bounds;
};

/// A monomial ideal stored by its unique minimal generating set, kept in
/// decreasing lexicographic order. The zero ideal has no generators; the
/// unit ideal is generated by 1.
class MonomialIdeal {
public:
  explicit MonomialIdeal(RingPtr ring);  // zero ideal
  /// Minimalizes and sorts the given generators.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  const Monomial& generator(std::size_t k) const { return generators_[k]; }
  std::size_t num_generators() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const {
    return generators_.size() == 1 && generators_[0].is_one();
  }

  bool operator==(const MonomialIdeal& other) const;
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Monomial> generators_;
};

/// Render as e.g. "(x1^2*x2, x3)"; "(0)" for the zero ideal.
std::string render(const MonomialIdeal& I);

/// Divisibility-minimal subset of gens, deduplicated, decreasing lex.
std::vector<Monomial> minimalize(const RingPtr& ring, std::vector<Monomial> gens);

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u);
MonomialIdeal crop(const MonomialIdeal& I, const ExponentBound& v);

/// All degree-d monomials in the given variable indices with exponents
/// bounded by v (v indexed over the full ring), decreasing lex.
MonomialIdeal power_complete(const RingPtr& ring,
                             const std::vector<std::size_t>& vars,
                             Exponent d, const ExponentBound& v);
/// Same over all X-tagged variables.
MonomialIdeal power_complete(const RingPtr& ring, Exponent d,
                             const ExponentBound& v);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal radical(const MonomialIdeal& I);
bool is_squarefree(const MonomialIdeal& I);
/// Intersection of the variable ideals of generator supports; squarefree
/// input required.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

ExponentBound max_exponent_vector(const MonomialIdeal& I);
bool is_equigenerated(const MonomialIdeal& I);
/// Degree of the generators of an equigenerated nonzero ideal.
Exponent generator_degree(const MonomialIdeal& I);
bool membership(const MonomialIdeal& I, const Monomial& u);

}  // namespace linideal

#endif
