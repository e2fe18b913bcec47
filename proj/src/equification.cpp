#include "linideal/equification.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace linideal {

namespace {

Monomial transport(const Monomial& f, const RingPtr& target) {
  ExponentVec e(target->size(), 0);
  for (std::size_t i : f.support())
    e[target->index_of(f.ring()->name(i))] = f.exponent(i);
  return Monomial(target, std::move(e));
}

Monomial set_z_to_one(const Monomial& u, std::size_t z, const RingPtr& target) {
  ExponentVec e;
  e.reserve(target->size());
  for (std::size_t i = 0; i < u.exponents().size(); ++i)
    if (i != z) e.push_back(u.exponent(i));
  return Monomial(target, std::move(e));
}

RingPtr ring_without_z(const RingPtr& ring, std::size_t z) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i == z) continue;
    names.push_back(ring->name(i));
    roles.push_back(ring->role(i));
  }
  return make_ring(std::move(names), std::move(roles));
}

void require_subset_scale(std::size_t m, const char* where) {
  if (m > 20)
    throw ResourceError(std::string(where) +
                        ": too many generators for subset enumeration");
}

}  // namespace

MonomialIdeal equify(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("equify: zero ideal");
  if (I.ring()->z_index() != RingContext::npos)
    throw DomainError("equify: ring already has a z variable");
  if (I.ring()->has_variable("z"))
    throw ArgumentError("equify: variable name 'z' already in use");

  // z goes after the base block and before any y variables.
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  std::size_t z = I.ring()->size();
  for (std::size_t i = 0; i < I.ring()->size(); ++i)
    if (I.ring()->role(i) != VarRole::Y) {
      names.push_back(I.ring()->name(i));
      roles.push_back(I.ring()->role(i));
    }
  z = names.size();
  names.push_back("z");
  roles.push_back(VarRole::Z);
  for (std::size_t i = 0; i < I.ring()->size(); ++i)
    if (I.ring()->role(i) == VarRole::Y) {
      names.push_back(I.ring()->name(i));
      roles.push_back(I.ring()->role(i));
    }
  RingPtr ext = make_ring(std::move(names), std::move(roles));

  Exponent d = 0;
  for (const auto& f : I.generators()) d = std::max(d, f.degree());
  std::vector<Monomial> gens;
  gens.reserve(I.num_generators());
  for (const auto& f : I.generators())
    gens.push_back(shift_exponent(transport(f, ext), z, d - f.degree()));
  return MonomialIdeal(ext, std::move(gens));
}

MonomialIdeal deequify(const MonomialIdeal& J) {
  std::size_t z = J.ring()->z_index();
  if (z == RingContext::npos) return J;
  RingPtr base = ring_without_z(J.ring(), z);
  std::vector<Monomial> gens;
  gens.reserve(J.num_generators());
  for (const auto& g : J.generators())
    gens.push_back(set_z_to_one(g, z, base));
  return MonomialIdeal(base, std::move(gens));
}

namespace {

SyzygyPair syzygy_pair_impl(const MonomialIdeal& I, std::size_t i,
                            std::size_t j, bool equified) {
  if (i == j || i >= I.num_generators() || j >= I.num_generators())
    throw ArgumentError("syzygy_redundant: bad generator pair");
  const Monomial& fi = I.generator(i);
  const Monomial& fj = I.generator(j);
  SyzygyPair pair{i, j, lcm(fi, fj), false, std::nullopt};
  Exponent dmin = std::min(fi.degree(), fj.degree());
  for (std::size_t k = 0; k < I.num_generators(); ++k) {
    if (k == i || k == j) continue;
    const Monomial& fk = I.generator(k);
    if (!divides(lcm(fk, fi), pair.lcm_ij)) continue;
    if (!divides(lcm(fk, fj), pair.lcm_ij)) continue;
    if (equified && dmin > fk.degree()) continue;
    pair.redundant = true;
    pair.witness = k;
    break;
  }
  return pair;
}

}  // namespace

SyzygyPair syzygy_redundant(const MonomialIdeal& I, std::size_t i,
                            std::size_t j) {
  return syzygy_pair_impl(I, i, j, false);
}

SyzygyPair syzygy_redundant_eq(const MonomialIdeal& I, std::size_t i,
                               std::size_t j) {
  return syzygy_pair_impl(I, i, j, true);
}

Linearized lin_general(const MonomialIdeal& I) { return lin(equify(I)); }

MonomialIdeal lin_general_z1(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("lin_general_z1: zero ideal");
  if (I.is_unit()) throw DomainError("lin_general_z1: unit ideal");

  // Closed description: bounded power-complete part in the minimal generator
  // degree plus the last part of the minimal-degree generators.
  Linearized L = lin_general(I);
  std::size_t base_size = I.ring()->size();
  RingPtr ext = ring_without_z(L.ideal.ring(), base_size);

  Exponent delta = I.generator(0).degree();
  for (const auto& f : I.generators()) delta = std::min(delta, f.degree());

  ExponentVec bounds(ext->size(), 0);
  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < base_size; ++i) {
    xs.push_back(i);
    for (const auto& f : I.generators())
      bounds[i] = std::max(bounds[i], f.exponent(i));
  }
  MonomialIdeal complete = power_complete(ext, xs, delta, ExponentBound{bounds});

  std::vector<Monomial> gens = complete.generators();
  for (std::size_t j = 0; j < I.num_generators(); ++j) {
    const Monomial& f = I.generator(j);
    if (f.degree() != delta) continue;
    Monomial fj = transport(f, ext);
    std::size_t yj = base_size + j;
    for (std::size_t k : fj.support())
      gens.push_back(shift_exponent(shift_exponent(fj, k, -1), yj, 1));
  }
  MonomialIdeal closed(ext, std::move(gens));

  MonomialIdeal direct = deequify(L.ideal);
  if (closed != direct)
    throw DomainError("lin_general_z1: closed description disagrees with "
                      "direct z=1 evaluation");
  return closed;
}

LcmLattice lcm_lattice(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("lcm_lattice: zero ideal");
  std::set<Monomial, LexLess> seen;
  std::queue<Monomial> work;
  Monomial one(I.ring());
  seen.insert(one);
  for (const auto& f : I.generators())
    if (seen.insert(f).second) work.push(f);
  while (!work.empty()) {
    Monomial u = work.front();
    work.pop();
    for (const auto& f : I.generators()) {
      Monomial v = lcm(u, f);
      if (seen.insert(v).second) work.push(v);
    }
  }

  LcmLattice L;
  L.ring = I.ring();
  L.elements.assign(seen.begin(), seen.end());
  std::stable_sort(L.elements.begin(), L.elements.end(),
                   [](const Monomial& a, const Monomial& b) {
                     if (a.degree() != b.degree()) return a.degree() < b.degree();
                     return lex_compare(a, b) == std::strong_ordering::less;
                   });
  L.bottom = 0;
  Monomial top = one;
  for (const auto& f : I.generators()) top = lcm(top, f);
  for (std::size_t k = 0; k < L.elements.size(); ++k)
    if (L.elements[k] == top) L.top = k;

  // Hasse covers by transitive reduction of proper divisibility.
  std::size_t s = L.elements.size();
  for (std::size_t lo = 0; lo < s; ++lo) {
    for (std::size_t hi = 0; hi < s; ++hi) {
      if (lo == hi || !divides(L.elements[lo], L.elements[hi])) continue;
      bool cover = true;
      for (std::size_t mid = 0; mid < s && cover; ++mid) {
        if (mid == lo || mid == hi) continue;
        if (divides(L.elements[lo], L.elements[mid]) &&
            divides(L.elements[mid], L.elements[hi]))
          cover = false;
      }
      if (cover) L.covers.emplace_back(lo, hi);
    }
  }
  return L;
}

std::string lcm_lattice_dot(const LcmLattice& L) {
  std::ostringstream out;
  out << "digraph lcm_lattice {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t k = 0; k < L.elements.size(); ++k)
    out << "  n" << k << " [label=\"" << render(L.elements[k]) << "\"];\n";
  for (const auto& [lo, hi] : L.covers)
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

bool lattice_embedding_check(const MonomialIdeal& I) {
  require_subset_scale(I.num_generators(), "lattice_embedding_check");
  MonomialIdeal Ieq = equify(I);
  std::size_t z = Ieq.ring()->z_index();
  RingPtr base = ring_without_z(Ieq.ring(), z);

  LcmLattice LI = lcm_lattice(I);
  LcmLattice Leq = lcm_lattice(Ieq);

  // Subset lcms commute with setting z = 1.
  std::size_t m = I.num_generators();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Monomial u(I.ring());
    Monomial v(Ieq.ring());
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (std::size_t{1} << j)) {
        u = lcm(u, I.generator(j));
        v = lcm(v, Ieq.generator(j));
      }
    if (transport(u, base) != set_z_to_one(v, z, base)) return false;
  }

  // z = 1 maps L_{I^eq} onto L_I, and distinct elements of L_I come from
  // disjoint (in particular distinct) preimage classes.
  std::set<Monomial, LexLess> li_set;
  for (const auto& w : LI.elements) li_set.insert(transport(w, base));
  std::set<Monomial, LexLess> image;
  for (const auto& v : Leq.elements) {
    Monomial w = set_z_to_one(v, z, base);
    if (!li_set.count(w)) return false;
    image.insert(w);
  }
  return image.size() == li_set.size();
}

std::vector<std::vector<std::size_t>> rooted_complex(const MonomialIdeal& Ieq) {
  if (Ieq.is_zero()) throw DomainError("rooted_complex: zero ideal");
  std::size_t z = Ieq.ring()->z_index();
  if (z == RingContext::npos)
    throw DomainError("rooted_complex: ideal has no z variable");
  std::size_t m = Ieq.num_generators();
  require_subset_scale(m, "rooted_complex");
  RingPtr base = ring_without_z(Ieq.ring(), z);

  std::vector<Monomial> bar;  // z = 1 images of the generators
  bar.reserve(m);
  for (const auto& g : Ieq.generators())
    bar.push_back(set_z_to_one(g, z, base));

  std::size_t count = std::size_t{1} << m;
  std::vector<char> unbroken(count, 0), rooted(count, 0);
  std::vector<Monomial> subset_lcm(count, Monomial(Ieq.ring()));
  rooted[0] = unbroken[0] = 1;
  for (std::size_t mask = 1; mask < count; ++mask) {
    std::size_t j = 0;
    while (!(mask & (std::size_t{1} << j))) ++j;
    subset_lcm[mask] =
        lcm(subset_lcm[mask & (mask - 1)], Ieq.generator(j));
    Monomial h = set_z_to_one(subset_lcm[mask], z, base);
    for (std::size_t i = 0; i < m; ++i)
      if ((mask & (std::size_t{1} << i)) && bar[i] == h) {
        unbroken[mask] = 1;
        break;
      }
    if (!unbroken[mask]) continue;
    rooted[mask] = 1;
    for (std::size_t i = 0; i < m && rooted[mask]; ++i)
      if (mask & (std::size_t{1} << i))
        rooted[mask] &= rooted[mask & ~(std::size_t{1} << i)];
  }

  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (!rooted[mask]) continue;
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) face.push_back(i);
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace linideal
