#include "linideal/betti_table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace linideal {

void BettiTable::add(int i, long j, long long count) {
  if (count == 0) return;
  auto key = Key{i, j};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, count);
  } else {
    it->second += count;
    if (it->second == 0) entries_.erase(it);
  }
}

long long BettiTable::at(int i, long j) const {
  auto it = entries_.find(Key{i, j});
  return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [key, count] : entries_)
    if (key.first == i) t += count;
  return t;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, count] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::vector<long long> BettiTable::totals() const {
  int pd = projective_dimension();
  std::vector<long long> out(static_cast<std::size_t>(pd + 1), 0);
  for (const auto& [key, count] : entries_)
    out[static_cast<std::size_t>(key.first)] += count;
  return out;
}

std::string BettiTable::render_ascii() const {
  if (entries_.empty()) return "(empty)\n";
  int pd = projective_dimension();
  long row_min = 0, row_max = 0;
  bool first = true;
  for (const auto& [key, count] : entries_) {
    long row = key.second - key.first;
    if (first) {
      row_min = row_max = row;
      first = false;
    } else {
      row_min = std::min(row_min, row);
      row_max = std::max(row_max, row);
    }
  }
  auto cell = [&](int i, long row) -> std::string {
    long long v = at(i, row + i);
    return v == 0 ? "-" : std::to_string(v);
  };
  std::vector<long long> tot = totals();

  std::vector<std::size_t> widths(static_cast<std::size_t>(pd + 1), 1);
  for (int i = 0; i <= pd; ++i) {
    widths[i] = std::max(widths[i], std::to_string(i).size());
    widths[i] = std::max(widths[i], std::to_string(tot[i]).size());
    for (long row = row_min; row <= row_max; ++row)
      widths[i] = std::max(widths[i], cell(i, row).size());
  }
  std::size_t label_width = std::max<std::size_t>(
      std::to_string(row_max).size(), std::string("total").size());

  std::ostringstream out;
  out << std::setw(static_cast<int>(label_width)) << "";
  for (int i = 0; i <= pd; ++i)
    out << "  " << std::setw(static_cast<int>(widths[i])) << i;
  out << '\n';
  for (long row = row_min; row <= row_max; ++row) {
    out << std::setw(static_cast<int>(label_width)) << row;
    for (int i = 0; i <= pd; ++i)
      out << "  " << std::setw(static_cast<int>(widths[i])) << cell(i, row);
    out << '\n';
  }
  out << std::setw(static_cast<int>(label_width)) << "total";
  for (int i = 0; i <= pd; ++i)
    out << "  " << std::setw(static_cast<int>(widths[i])) << tot[i];
  out << '\n';
  return out.str();
}

}  // namespace linideal
