#ifndef LINIDEAL_IO_HPP
#define LINIDEAL_IO_HPP

#include <map>
#include <string>

#include "linideal/ideal.hpp"

namespace linideal {

/// Parses a ring declaration body (the part after the "ring" keyword):
///   x1..x5                  range form
///   a, b, c                 explicit names
/// optional role sections separated by ';':
///   x1..x4 ; y y1..y3 ; z z
RingPtr parse_ring(const std::string& text);

/// "x1^2*x2*y3" with '*' separators and caret exponents; "1" is the
/// constant monomial.
Monomial parse_monomial(const RingPtr& ring, const std::string& text);

/// Comma-separated monomial terms; empty text is the zero ideal.
MonomialIdeal parse_ideal(const RingPtr& ring, const std::string& text);

/// Canonical JSON form: variables, roles, generator exponent vectors.
std::string ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const std::string& json_text);

/// A parsed input script: one ring declaration plus named ideals, e.g.
///   ring x1..x5
///   I = x1*x2*x3, x1*x2*x4
struct Session {
  RingPtr ring;
  std::map<std::string, MonomialIdeal> ideals;
  std::vector<std::string> order;  // declaration order
};

Session parse_session(const std::string& text);

}  // namespace linideal

#endif
