#ifndef LINIDEAL_RING_HPP
#define LINIDEAL_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "linideal/errors.hpp"

namespace linideal {

/// Role of a ring variable. X variables are the original ones, Y variables
/// are added by linearization, the (single) Z variable by equification.
enum class VarRole { X, Y, Z };

/// An ordered list of named variables with role tags. Immutable after
/// construction; shared between all monomials and ideals living in it.
class RingContext {
public:
  RingContext(std::vector<std::string> names, std::vector<VarRole> roles);

  /// All-X ring with the given variable names.
  explicit RingContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  VarRole role(std::size_t i) const { return roles_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VarRole>& roles() const { return roles_; }

  /// Indices of variables with the given role, in ring order.
  std::vector<std::size_t> indices_with_role(VarRole r) const;

  /// Index of the unique Z variable, or npos if there is none.
  std::size_t z_index() const;

  /// Variable index by name; throws ArgumentError if absent.
  std::size_t index_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  bool operator==(const RingContext& other) const {
    return names_ == other.names_ && roles_ == other.roles_;
  }
  bool operator!=(const RingContext& other) const { return !(*this == other); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Convenience: ring K[x1,...,xn], all variables role X.
RingPtr make_x_ring(std::size_t n, const std::string& prefix = "x");

inline RingPtr make_ring(std::vector<std::string> names, std::vector<VarRole> roles) {
  return std::make_shared<RingContext>(std::move(names), std::move(roles));
}

/// Two contexts are compatible when structurally equal (same names, roles).
inline bool same_context(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_context(const RingPtr& a, const RingPtr& b,
                                 const char* where) {
  if (!same_context(a, b))
    throw ContextError(std::string(where) + ": mismatched ring contexts");
}

}  // namespace linideal

#endif
