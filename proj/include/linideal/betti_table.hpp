#ifndef LINIDEAL_BETTI_TABLE_HPP
#define LINIDEAL_BETTI_TABLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace linideal {

/// Graded Betti numbers: (homological index i, internal degree j) -> count.
/// Rendered in the usual row convention, entry beta_{i,i+j} in row j.
class BettiTable {
public:
  using Key = std::pair<int, long>;  // (i, j)

  void add(int i, long j, long long count);
  long long at(int i, long j) const;
  const std::map<Key, long long>& entries() const { return entries_; }

  long long total(int i) const;
  std::vector<long long> totals() const;  // index 0..projective_dimension
  int projective_dimension() const;       // -1 for the empty table

  bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }
  bool operator!=(const BettiTable& other) const { return !(*this == other); }

  /// Paper-style ASCII rendering: columns i, rows labelled j - i, dashes
  /// for zeros, totals row at the bottom.
  std::string render_ascii() const;

private:
  std::map<Key, long long> entries_;  // only nonzero entries kept
};

}  // namespace linideal

#endif
