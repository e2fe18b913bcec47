#include "linideal/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linideal/linear_quotients.hpp"

namespace linideal {

namespace {

using BigInt = boost::multiprecision::cpp_int;

using SparseRow = std::map<std::size_t, BigInt>;

void gcd_reduce(SparseRow& row) {
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

/// Rank over the rationals by sparse fraction-free elimination.  Boundary
/// matrices are 0/±1, so unit pivots on short rows keep entries small;
/// gcd reduction catches the rest.
std::size_t exact_rank(std::vector<SparseRow> rows) {
  std::size_t rank = 0;
  while (true) {
    std::size_t best = rows.size();
    bool best_unit = false;
    std::size_t best_nnz = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) continue;
      bool unit = false;
      for (const auto& [c, v] : rows[i])
        if (v == 1 || v == -1) {
          unit = true;
          break;
        }
      std::size_t nnz = rows[i].size();
      if (best == rows.size() || (unit && !best_unit) ||
          (unit == best_unit && nnz < best_nnz)) {
        best = i;
        best_unit = unit;
        best_nnz = nnz;
      }
    }
    if (best == rows.size()) break;
    SparseRow piv = std::move(rows[best]);
    rows[best].clear();
    std::size_t col = piv.begin()->first;
    if (best_unit)
      for (const auto& [c, v] : piv)
        if (v == 1 || v == -1) {
          col = c;
          break;
        }
    const BigInt p = piv.at(col);
    for (auto& row : rows) {
      auto it = row.find(col);
      if (it == row.end()) continue;
      const BigInt a = it->second;
      for (auto& [c, v] : row) v *= p;
      for (const auto& [c, v] : piv) {
        BigInt& slot = row[c];
        slot -= a * v;
        if (slot == 0) row.erase(c);
      }
      gcd_reduce(row);
    }
    ++rank;
  }
  return rank;
}

/// Faces of the upper Koszul complex at multidegree b, grouped by
/// cardinality; faces[c] is sorted by subset mask.
std::vector<std::vector<std::vector<std::size_t>>> koszul_faces(
    const MonomialIdeal& I, const Monomial& b) {
  std::vector<std::size_t> vars = b.support();
  std::size_t v = vars.size();
  std::vector<std::vector<std::vector<std::size_t>>> faces(v + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << v); ++mask) {
    ExponentVec e = b.exponents();
    std::vector<std::size_t> tau;
    for (std::size_t t = 0; t < v; ++t)
      if (mask & (std::size_t{1} << t)) {
        --e[vars[t]];
        tau.push_back(vars[t]);
      }
    if (membership(I, Monomial(b.ring(), std::move(e))))
      faces[tau.size()].push_back(std::move(tau));
  }
  return faces;
}

std::size_t boundary_rank(
    const std::vector<std::vector<std::size_t>>& lower,
    const std::vector<std::vector<std::size_t>>& upper) {
  if (lower.empty() || upper.empty()) return 0;
  std::map<std::vector<std::size_t>, std::size_t> lower_index;
  for (std::size_t k = 0; k < lower.size(); ++k) lower_index.emplace(lower[k], k);
  std::vector<SparseRow> A(upper.size());
  for (std::size_t k = 0; k < upper.size(); ++k) {
    int sign = 1;
    for (std::size_t drop = 0; drop < upper[k].size(); ++drop) {
      std::vector<std::size_t> sub = upper[k];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      auto it = lower_index.find(sub);
      // Subsets of Koszul faces stay in the complex, so the face must exist.
      if (it != lower_index.end()) A[k][it->second] = sign;
      sign = -sign;
    }
  }
  return exact_rank(std::move(A));
}

}  // namespace

OracleResult oracle_betti(const MonomialIdeal& I, std::size_t cap) {
  if (I.is_zero()) throw DomainError("oracle_betti: zero ideal");
  if (I.num_generators() > cap)
    throw ResourceError("oracle_betti: generator count " +
                        std::to_string(I.num_generators()) +
                        " exceeds cap " + std::to_string(cap));
  OracleResult result;
  LcmLattice L = lcm_lattice(I);
  for (const auto& b : L.elements) {
    if (b.is_one()) continue;
    auto faces = koszul_faces(I, b);
    std::size_t v = b.support_size();
    std::vector<std::size_t> ranks(v + 2, 0);  // ranks[c] = rank of d_c
    for (std::size_t c = 1; c <= v; ++c)
      ranks[c] = boundary_rank(faces[c - 1], faces[c]);
    for (std::size_t c = 0; c <= v; ++c) {
      long long h = static_cast<long long>(faces[c].size()) -
                    static_cast<long long>(ranks[c]) -
                    static_cast<long long>(ranks[c + 1]);
      if (h == 0) continue;
      int i = static_cast<int>(c);
      result.multigraded.entries[{i, b}] += h;
      result.graded.add(i, static_cast<long>(b.degree()), h);
    }
  }
  return result;
}

bool is_linear_resolution(const MonomialIdeal& I, std::size_t cap) {
  if (I.is_zero()) throw DomainError("is_linear_resolution: zero ideal");
  if (!is_equigenerated(I))
    throw DomainError("is_linear_resolution: ideal is not equigenerated");
  long d = static_cast<long>(generator_degree(I));
  OracleResult r = oracle_betti(I, cap);
  for (const auto& [key, count] : r.graded.entries())
    if (count != 0 && key.second != key.first + d) return false;
  return true;
}

bool betti_splitting_check(const MonomialIdeal& I, const MonomialIdeal& J,
                           const MonomialIdeal& K, std::size_t cap) {
  require_same_context(I.ring(), J.ring(), "betti_splitting_check");
  require_same_context(I.ring(), K.ring(), "betti_splitting_check");
  std::set<Monomial, LexLess> parts;
  for (const auto& g : J.generators()) parts.insert(g);
  for (const auto& g : K.generators())
    if (!parts.insert(g).second)
      throw ArgumentError("betti_splitting_check: generator sets overlap");
  std::set<Monomial, LexLess> whole(I.generators().begin(),
                                    I.generators().end());
  if (parts != whole)
    throw ArgumentError(
        "betti_splitting_check: G(I) is not the union of G(J) and G(K)");

  BettiTable bI = oracle_betti(I, cap).graded;
  BettiTable bJ = oracle_betti(J, cap).graded;
  BettiTable bK = oracle_betti(K, cap).graded;
  BettiTable bJK = oracle_betti(intersection(J, K), cap).graded;

  std::set<BettiTable::Key> keys;
  for (const auto& [key, count] : bI.entries()) keys.insert(key);
  for (const auto& [key, count] : bJ.entries()) keys.insert(key);
  for (const auto& [key, count] : bK.entries()) keys.insert(key);
  for (const auto& [key, count] : bJK.entries())
    keys.insert({key.first + 1, key.second});
  for (const auto& [i, j] : keys)
    if (bI.at(i, j) != bJ.at(i, j) + bK.at(i, j) + bJK.at(i - 1, j))
      return false;
  return true;
}

std::vector<long long> taylor_ranks(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("taylor_ranks: zero ideal");
  long long m = static_cast<long long>(I.num_generators());
  std::vector<long long> ranks;
  for (long long i = 0; i < m; ++i) ranks.push_back(binomial(m, i + 1));
  return ranks;
}

}  // namespace linideal
