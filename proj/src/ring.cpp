#include "linideal/ring.hpp"

#include <algorithm>
#include <set>

namespace linideal {

namespace {
void validate(const std::vector<std::string>& names,
              const std::vector<VarRole>& roles) {
  if (names.size() != roles.size())
    throw ArgumentError("RingContext: names/roles size mismatch");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ArgumentError("RingContext: empty variable name");
    if (!seen.insert(n).second)
      throw ArgumentError("RingContext: duplicate variable name '" + n + "'");
  }
  if (std::count(roles.begin(), roles.end(), VarRole::Z) > 1)
    throw ArgumentError("RingContext: more than one z variable");
}
}  // namespace

RingContext::RingContext(std::vector<std::string> names, std::vector<VarRole> roles)
    : names_(std::move(names)), roles_(std::move(roles)) {
  validate(names_, roles_);
}

RingContext::RingContext(std::vector<std::string> names)
    : names_(std::move(names)), roles_(names_.size(), VarRole::X) {
  validate(names_, roles_);
}

std::vector<std::size_t> RingContext::indices_with_role(VarRole r) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roles_.size(); ++i)
    if (roles_[i] == r) out.push_back(i);
  return out;
}

std::size_t RingContext::z_index() const {
  for (std::size_t i = 0; i < roles_.size(); ++i)
    if (roles_[i] == VarRole::Z) return i;
  return npos;
}

std::size_t RingContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw ArgumentError("RingContext: unknown variable '" + name + "'");
}

bool RingContext::has_variable(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr make_x_ring(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<VarRole> roles(n, VarRole::X);
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return std::make_shared<RingContext>(std::move(names), std::move(roles));
}

}  // namespace linideal
