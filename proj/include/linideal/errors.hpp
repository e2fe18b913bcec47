#ifndef LINIDEAL_ERRORS_HPP
#define LINIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linideal {

/// Mixing monomials or ideals from different ring contexts.
class ContextError : public std::invalid_argument {
public:
  explicit ContextError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation applied outside its mathematical domain (e.g. colon formula
/// without linear quotients, Alexander dual of a non-squarefree ideal).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed caller input: bad permutation, index out of range, ...
class ArgumentError : public std::invalid_argument {
public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured work cap was exceeded (oracle generator cap, search budget).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Text input could not be parsed; carries a 0-based character position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace linideal

#endif
