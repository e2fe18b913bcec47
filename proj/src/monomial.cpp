#include "linideal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace linideal {

namespace {
Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw DomainError("monomial exponent overflow");
  return a + b;
}
}  // namespace

Monomial::Monomial(RingPtr ring)
    : ring_(std::move(ring)), exponents_(ring_->size(), 0), degree_(0) {}

Monomial::Monomial(RingPtr ring, ExponentVec exponents)
    : ring_(std::move(ring)), exponents_(std::move(exponents)), degree_(0) {
  if (exponents_.size() != ring_->size())
    throw ContextError("Monomial: exponent vector length does not match ring");
  for (Exponent e : exponents_) {
    if (e < 0) throw ArgumentError("Monomial: negative exponent");
    degree_ = checked_add(degree_, e);
  }
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > 0) out.push_back(i);
  return out;
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(exponents_.begin(), exponents_.end(),
                    [](Exponent e) { return e > 0; }));
}

Exponent Monomial::max_exponent() const {
  Exponent m = 0;
  for (Exponent e : exponents_) m = std::max(m, e);
  return m;
}

std::size_t Monomial::max_support_index() const {
  for (std::size_t i = exponents_.size(); i-- > 0;)
    if (exponents_[i] > 0) return i;
  throw DomainError("max_support_index: constant monomial has empty support");
}

bool Monomial::operator==(const Monomial& other) const {
  return same_context(ring_, other.ring_) && exponents_ == other.exponents_;
}

std::string Monomial::str() const { return render(*this); }

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  require_same_context(u.ring(), v.ring(), "lex_compare");
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_context(u.ring(), v.ring(), "divides");
  for (std::size_t i = 0; i < u.exponents().size(); ++i)
    if (u.exponent(i) > v.exponent(i)) return false;
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_context(u.ring(), v.ring(), "lcm");
  ExponentVec e(u.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(u.exponent(i), v.exponent(i));
  return Monomial(u.ring(), std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_context(u.ring(), v.ring(), "gcd");
  ExponentVec e(u.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(u.exponent(i), v.exponent(i));
  return Monomial(u.ring(), std::move(e));
}

Monomial quotient(const Monomial& v, const Monomial& u) {
  require_same_context(u.ring(), v.ring(), "quotient");
  ExponentVec e(u.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (u.exponent(i) > v.exponent(i))
      throw DomainError("quotient: " + render(u) + " does not divide " + render(v));
    e[i] = v.exponent(i) - u.exponent(i);
  }
  return Monomial(v.ring(), std::move(e));
}

Monomial product(const Monomial& u, const Monomial& v) {
  require_same_context(u.ring(), v.ring(), "product");
  ExponentVec e(u.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = checked_add(u.exponent(i), v.exponent(i));
  return Monomial(u.ring(), std::move(e));
}

Monomial radical_monomial(const Monomial& u) {
  ExponentVec e(u.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = u.exponent(i) > 0 ? 1 : 0;
  return Monomial(u.ring(), std::move(e));
}

Monomial shift_exponent(const Monomial& u, std::size_t i, Exponent delta) {
  ExponentVec e = u.exponents();
  if (i >= e.size()) throw ArgumentError("shift_exponent: variable index out of range");
  if (delta >= 0) {
    e[i] = checked_add(e[i], delta);
  } else {
    if (e[i] + delta < 0) throw DomainError("shift_exponent: negative exponent");
    e[i] += delta;
  }
  return Monomial(u.ring(), std::move(e));
}

std::string render(const Monomial& u) {
  if (u.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < u.exponents().size(); ++i) {
    Exponent e = u.exponent(i);
    if (e == 0) continue;
    if (!first) out << '*';
    first = false;
    out << u.ring()->name(i);
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace linideal
