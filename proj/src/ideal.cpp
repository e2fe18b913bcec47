#include "linideal/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace linideal {

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  generators_ = minimalize(ring_, std::move(generators));
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return same_context(ring_, other.ring_) && generators_ == other.generators_;
}

std::string MonomialIdeal::str() const { return render(*this); }

std::string render(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < I.num_generators(); ++k) {
    if (k) out << ", ";
    out << render(I.generator(k));
  }
  out << ')';
  return out.str();
}

std::vector<Monomial> minimalize(const RingPtr& ring, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    require_same_context(ring, g.ring(), "minimalize");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return lex_greater(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool divided = false;
    for (const auto& h : gens) {
      if (&h == &g || h == g) continue;
      if (divides(h, g)) {
        divided = true;
        break;
      }
    }
    if (!divided) out.push_back(g);
  }
  return out;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& u) {
  require_same_context(I.ring(), u.ring(), "colon_by_monomial");
  std::vector<Monomial> gens;
  gens.reserve(I.num_generators());
  for (const auto& f : I.generators())
    gens.push_back(quotient(f, gcd(f, u)));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal crop(const MonomialIdeal& I, const ExponentBound& v) {
  if (v.bounds.size() != I.ring()->size())
    throw ContextError("crop: bound length does not match ring");
  std::vector<Monomial> gens;
  for (const auto& f : I.generators()) {
    bool keep = true;
    for (std::size_t i = 0; i < v.bounds.size(); ++i)
      if (f.exponent(i) > v.bounds[i]) {
        keep = false;
        break;
      }
    if (keep) gens.push_back(f);
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal power_complete(const RingPtr& ring,
                             const std::vector<std::size_t>& vars, Exponent d,
                             const ExponentBound& v) {
  if (d < 1) throw ArgumentError("power_complete: degree must be >= 1");
  if (v.bounds.size() != ring->size())
    throw ContextError("power_complete: bound length does not match ring");
  std::vector<Monomial> gens;
  ExponentVec current(ring->size(), 0);
  std::function<void(std::size_t, Exponent)> rec = [&](std::size_t pos,
                                                       Exponent remaining) {
    if (pos == vars.size()) {
      if (remaining == 0) gens.emplace_back(ring, current);
      return;
    }
    std::size_t var = vars[pos];
    Exponent cap = std::min<Exponent>(v.bounds[var], remaining);
    for (Exponent e = 0; e <= cap; ++e) {
      current[var] = e;
      rec(pos + 1, remaining - e);
    }
    current[var] = 0;
  };
  rec(0, d);
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal power_complete(const RingPtr& ring, Exponent d,
                             const ExponentBound& v) {
  return power_complete(ring, ring->indices_with_role(VarRole::X), d, v);
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I.ring(), J.ring(), "sum");
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I.ring(), J.ring(), "product");
  std::vector<Monomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(product(f, g));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I.ring(), J.ring(), "intersection");
  std::vector<Monomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(lcm(f, g));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.num_generators());
  for (const auto& f : I.generators()) gens.push_back(radical_monomial(f));
  return MonomialIdeal(I.ring(), std::move(gens));
}

bool is_squarefree(const MonomialIdeal& I) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [](const Monomial& f) { return f.is_squarefree(); });
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("alexander_dual: zero ideal");
  if (!is_squarefree(I)) throw DomainError("alexander_dual: ideal is not squarefree");
  // Intersection of the variable ideals of the generator supports, expanded
  // by iterated pairwise lcms.
  MonomialIdeal acc(I.ring());
  bool first = true;
  for (const auto& f : I.generators()) {
    std::vector<Monomial> vars;
    for (std::size_t i : f.support()) {
      ExponentVec e(I.ring()->size(), 0);
      e[i] = 1;
      vars.emplace_back(I.ring(), std::move(e));
    }
    MonomialIdeal varIdeal(I.ring(), std::move(vars));
    acc = first ? varIdeal : intersection(acc, varIdeal);
    first = false;
  }
  return acc;
}

ExponentBound max_exponent_vector(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("max_exponent_vector: zero ideal");
  ExponentVec v(I.ring()->size(), 0);
  for (const auto& f : I.generators())
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = std::max(v[i], f.exponent(i));
  return ExponentBound{std::move(v)};
}

bool is_equigenerated(const MonomialIdeal& I) {
  if (I.is_zero()) return true;
  Exponent d = I.generator(0).degree();
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [d](const Monomial& f) { return f.degree() == d; });
}

Exponent generator_degree(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("generator_degree: zero ideal");
  if (!is_equigenerated(I))
    throw DomainError("generator_degree: ideal is not equigenerated");
  return I.generator(0).degree();
}

bool membership(const MonomialIdeal& I, const Monomial& u) {
  require_same_context(I.ring(), u.ring(), "membership");
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [&u](const Monomial& f) { return divides(f, u); });
}

}  // namespace linideal
