#include "linideal/linearization.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace linideal {

namespace {

std::vector<std::size_t> base_indices(const RingPtr& ring) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (ring->role(i) != VarRole::Y) out.push_back(i);
  return out;
}

void require_linearizable(const MonomialIdeal& I, const char* where) {
  if (I.is_zero()) throw DomainError(std::string(where) + ": zero ideal");
  if (I.is_unit()) throw DomainError(std::string(where) + ": unit ideal");
  if (!is_equigenerated(I))
    throw DomainError(std::string(where) + ": ideal is not equigenerated");
  if (!I.ring()->indices_with_role(VarRole::Y).empty())
    throw DomainError(std::string(where) + ": ring already has y variables");
}

std::string y_name(const MonomialIdeal& I, std::size_t j, YIndexing indexing) {
  if (indexing == YIndexing::Positional) return "y" + std::to_string(j + 1);
  return "y[" + render(I.generator(j)) + "]";
}

/// Extends the ring of I by one Y variable per generator.
RingPtr extend_with_y(const MonomialIdeal& I, YIndexing indexing) {
  std::vector<std::string> names = I.ring()->names();
  std::vector<VarRole> roles = I.ring()->roles();
  for (std::size_t j = 0; j < I.num_generators(); ++j) {
    std::string name = y_name(I, j, indexing);
    if (I.ring()->has_variable(name))
      throw ArgumentError("linearization: variable name '" + name +
                          "' already in use");
    names.push_back(std::move(name));
    roles.push_back(VarRole::Y);
  }
  return make_ring(std::move(names), std::move(roles));
}

/// f in a subring of target, matched by variable names.
Monomial transport(const Monomial& f, const RingPtr& target) {
  ExponentVec e(target->size(), 0);
  for (std::size_t i : f.support())
    e[target->index_of(f.ring()->name(i))] = f.exponent(i);
  return Monomial(target, std::move(e));
}

Linearized lin_impl(const MonomialIdeal& I, LinMode mode, YIndexing indexing) {
  require_linearizable(I, mode == LinMode::Lin ? "lin" : "star_lin");
  Exponent d = generator_degree(I);
  if (d < 1) throw DomainError("linearization: generators must be nonconstant");

  RingPtr ext = extend_with_y(I, indexing);
  std::size_t base_size = I.ring()->size();
  std::vector<std::size_t> base = base_indices(I.ring());

  ExponentVec bounds(ext->size(), 0);
  Exponent M = 0;
  for (std::size_t i : base) {
    Exponent Mi = 0;
    for (const auto& f : I.generators()) Mi = std::max(Mi, f.exponent(i));
    bounds[i] = Mi;
    M = std::max(M, Mi);
  }
  if (mode == LinMode::StarLin)
    for (std::size_t i : base) bounds[i] = M;

  MonomialIdeal complete =
      power_complete(ext, base, d, ExponentBound{bounds});

  Linearized L{MonomialIdeal(ext), mode, indexing, {}, 0, {}};
  L.ordered_generators = complete.generators();
  L.complete_count = L.ordered_generators.size();
  for (std::size_t j = 0; j < I.num_generators(); ++j) {
    const Monomial fj = transport(I.generator(j), ext);
    std::size_t yj = base_size + j;
    for (std::size_t k : fj.support()) {
      Monomial g = shift_exponent(shift_exponent(fj, k, -1), yj, 1);
      L.ordered_generators.push_back(std::move(g));
    }
    L.source_map.emplace(yj, I.generator(j));
  }
  L.ideal = MonomialIdeal(ext, L.ordered_generators);
  return L;
}

}  // namespace

Linearized lin(const MonomialIdeal& I, YIndexing indexing) {
  return lin_impl(I, LinMode::Lin, indexing);
}

Linearized star_lin(const MonomialIdeal& I, YIndexing indexing) {
  return lin_impl(I, LinMode::StarLin, indexing);
}

std::vector<std::size_t> Linearized::canonical_permutation() const {
  std::map<Monomial, std::size_t, LexLess> where;
  for (std::size_t k = 0; k < ideal.num_generators(); ++k)
    where.emplace(ideal.generator(k), k);
  std::vector<std::size_t> perm;
  perm.reserve(ordered_generators.size());
  for (const auto& g : ordered_generators) {
    auto it = where.find(g);
    if (it == where.end())
      throw DomainError("canonical_permutation: generator lists disagree");
    perm.push_back(it->second);
  }
  if (perm.size() != ideal.num_generators())
    throw DomainError("canonical_permutation: generator lists disagree");
  return perm;
}

OrderedGenerators canonical_order(const Linearized& L) {
  return colon_sequence(L.ideal, L.canonical_permutation());
}

MonomialIdeal retrieve_source(const Linearized& L) {
  const RingPtr& ext = L.ideal.ring();
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  std::vector<std::size_t> base = base_indices(ext);
  for (std::size_t i : base) {
    names.push_back(ext->name(i));
    roles.push_back(ext->role(i));
  }
  RingPtr base_ring = make_ring(std::move(names), std::move(roles));

  Exponent d = generator_degree(L.ideal);
  std::vector<Monomial> sources;
  if (d == 1) {
    // each last-part entry is a bare y_j; recover the sources from the
    // stored map, or failing that from the y-free generators
    if (!L.source_map.empty()) {
      for (const auto& [yj, f] : L.source_map)
        sources.push_back(transport(f, base_ring));
    } else {
      for (const auto& g : L.ideal.generators()) {
        bool pure = true;
        for (std::size_t i : g.support())
          if (ext->role(i) == VarRole::Y) pure = false;
        if (pure) sources.push_back(transport(g, base_ring));
      }
    }
    return MonomialIdeal(base_ring, std::move(sources));
  }
  for (std::size_t yi : ext->indices_with_role(VarRole::Y)) {
    std::vector<Monomial> x_parts;
    for (const auto& g : L.ideal.generators())
      if (g.exponent(yi) > 0) x_parts.push_back(shift_exponent(g, yi, -1));
    if (x_parts.empty())
      throw DomainError("retrieve_source: unused y variable " + ext->name(yi));
    Monomial f(ext);
    if (x_parts.size() >= 2) {
      f = x_parts.front();
      for (std::size_t t = 1; t < x_parts.size(); ++t) f = lcm(f, x_parts[t]);
    } else {
      const Monomial& u = x_parts.front();
      if (u.support_size() != 1 || u.degree() != d - 1)
        throw DomainError("retrieve_source: malformed single last-part entry");
      f = shift_exponent(u, u.support().front(), 1);
    }
    sources.push_back(transport(f, base_ring));
  }
  return MonomialIdeal(base_ring, std::move(sources));
}

bool is_polymatroidal(const MonomialIdeal& J) {
  if (J.is_zero()) return true;
  if (!is_equigenerated(J))
    throw DomainError("is_polymatroidal: ideal is not equigenerated");
  std::set<ExponentVec> gens;
  for (const auto& g : J.generators()) gens.insert(g.exponents());
  for (const auto& u : J.generators()) {
    for (const auto& v : J.generators()) {
      for (std::size_t i = 0; i < u.exponents().size(); ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < u.exponents().size() && !exchanged; ++j) {
          if (u.exponent(j) >= v.exponent(j)) continue;
          ExponentVec e = u.exponents();
          --e[i];
          ++e[j];
          exchanged = gens.count(e) > 0;
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

RadicalStarLin radical_star_lin(const MonomialIdeal& I) {
  require_linearizable(I, "radical_star_lin");
  for (std::size_t i = 0; i < I.ring()->size(); ++i)
    if (I.ring()->role(i) != VarRole::X)
      throw DomainError("radical_star_lin: ring must have only x variables");
  Exponent d = generator_degree(I);
  Exponent M = 0;
  for (const auto& f : I.generators()) M = std::max(M, f.max_exponent());
  if (M < 2)
    throw DomainError("radical_star_lin: largest exponent must be at least 2");
  Exponent a = d / M;
  Exponent b = d % M;

  RingPtr ext = extend_with_y(I, YIndexing::Positional);
  std::size_t base_size = I.ring()->size();
  Exponent delta = a + (b > 0 ? 1 : 0);

  ExponentVec bounds(ext->size(), 0);
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < base_size; ++i) {
    bounds[i] = 1;
    base.push_back(i);
  }
  MonomialIdeal sqfree = power_complete(ext, base, delta, ExponentBound{bounds});

  RadicalStarLin R{MonomialIdeal(ext), a, b, {}, {}};
  R.ordered_generators = sqfree.generators();
  for (std::size_t j = 0; j < I.num_generators(); ++j) {
    const Monomial& f = I.generator(j);
    std::size_t ones = 0, k = 0;
    bool others_maximal = true;
    for (std::size_t i : f.support()) {
      if (f.exponent(i) == 1) {
        ++ones;
        k = i;
      } else if (f.exponent(i) != M) {
        others_maximal = false;
      }
    }
    if (ones != 1 || !others_maximal) continue;
    R.pathological.emplace_back(j, k);
    ExponentVec e(ext->size(), 0);
    for (std::size_t i : f.support())
      if (i != k) e[i] = 1;
    e[base_size + j] = 1;
    R.ordered_generators.emplace_back(ext, std::move(e));
  }
  R.ideal = MonomialIdeal(ext, R.ordered_generators);
  return R;
}

BettiTable radical_star_lin_betti(const MonomialIdeal& I) {
  RadicalStarLin R = radical_star_lin(I);
  long long n = static_cast<long long>(I.ring()->size());
  long long a = R.a;
  long long delta = a + (R.b > 0 ? 1 : 0);

  std::vector<long long> t;  // t[l] per pathological generator, in order
  for (std::size_t l = 0; l < R.pathological.size(); ++l) {
    auto [jl, kl] = R.pathological[l];
    Monomial ul = quotient(I.generator(jl),
                           shift_exponent(Monomial(I.ring()), kl, 1));
    long long tl = 0;
    for (std::size_t s = 0; s < l; ++s) {
      auto [js, ks] = R.pathological[s];
      Monomial us = quotient(I.generator(js),
                             shift_exponent(Monomial(I.ring()), ks, 1));
      if (us == ul) ++tl;
    }
    t.push_back(tl);
  }

  BettiTable table;
  long long i_max = n - delta;
  for (long long tl : t) i_max = std::max(i_max, n - a + tl);
  for (long long i = 0; i <= i_max; ++i) {
    long long beta =
        binomial(i + delta - 1, delta - 1) * binomial(n, i + delta);
    for (long long tl : t) beta += binomial(n - a + tl, i);
    table.add(static_cast<int>(i), static_cast<long>(i + delta), beta);
  }
  return table;
}

bool sum_compatibility_check(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I.ring(), J.ring(), "sum_compatibility_check");
  if (I.is_zero() || J.is_zero())
    throw DomainError("sum_compatibility_check: zero ideal");
  if (generator_degree(I) != generator_degree(J))
    throw DomainError("sum_compatibility_check: generator degrees differ");
  MonomialIdeal IJ = sum(I, J);
  for (LinMode mode : {LinMode::Lin, LinMode::StarLin}) {
    auto build = [&](const MonomialIdeal& K) {
      return mode == LinMode::Lin ? lin(K, YIndexing::ByMonomial)
                                  : star_lin(K, YIndexing::ByMonomial);
    };
    Linearized big = build(IJ);
    for (const MonomialIdeal* part : {&I, &J}) {
      Linearized small = build(*part);
      for (const auto& g : small.ideal.generators())
        if (!membership(big.ideal, transport(g, big.ideal.ring())))
          return false;
    }
  }
  return true;
}

}  // namespace linideal
