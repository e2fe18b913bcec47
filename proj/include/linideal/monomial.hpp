#ifndef LINIDEAL_MONOMIAL_HPP
#define LINIDEAL_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "linideal/ring.hpp"

namespace linideal {

using Exponent = std::int64_t;
using ExponentVec = std::vector<Exponent>;

/// A monomial as a dense exponent vector over a fixed ring context.
/// Immutable value type; all operations are pure.
class Monomial {
public:
  /// The constant monomial 1.
  explicit Monomial(RingPtr ring);
  Monomial(RingPtr ring, ExponentVec exponents);

  const RingPtr& ring() const { return ring_; }
  const ExponentVec& exponents() const { return exponents_; }
  Exponent exponent(std::size_t i) const { return exponents_[i]; }
  Exponent degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;
  std::size_t support_size() const;
  Exponent max_exponent() const;
  bool is_squarefree() const { return max_exponent() <= 1; }

  /// Largest variable index in the support; throws DomainError on 1.
  std::size_t max_support_index() const;

  bool operator==(const Monomial& other) const;
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  std::string str() const;

private:
  RingPtr ring_;
  ExponentVec exponents_;
  Exponent degree_;
};

/// Lexicographic comparison in ring variable order: u > v iff the leftmost
/// nonzero entry of exponents(u) - exponents(v) is positive.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);
inline bool lex_greater(const Monomial& u, const Monomial& v) {
  return lex_compare(u, v) == std::strong_ordering::greater;
}
/// Total order usable as a std::map key: lex on exponent vectors.
struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) == std::strong_ordering::less;
  }
};

bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
/// v / u; throws DomainError unless u divides v.
Monomial quotient(const Monomial& v, const Monomial& u);
Monomial product(const Monomial& u, const Monomial& v);
/// Product of the support variables of u.
Monomial radical_monomial(const Monomial& u);
/// u with the exponent of variable i bumped by delta (>= 0 result required).
Monomial shift_exponent(const Monomial& u, std::size_t i, Exponent delta);

/// Render as e.g. "x1^2*x2*y3"; the constant monomial renders as "1".
std::string render(const Monomial& u);

}  // namespace linideal

#endif
