#include "linideal/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace linideal {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '[' &&
        c != ']' && c != '^' && c != '*')
      return false;
  // '^' and '*' never belong to a name; they are operators.
  return s.find('^') == std::string::npos && s.find('*') == std::string::npos;
}

/// Expands one variable specification: either a range "x1..x5" or a
/// comma-separated list of names.
std::vector<std::string> expand_names(const std::string& spec) {
  std::size_t dots = spec.find("..");
  if (dots != std::string::npos) {
    std::string lo = trim(spec.substr(0, dots));
    std::string hi = trim(spec.substr(dots + 2));
    auto digits_at = [](const std::string& s) {
      std::size_t k = s.size();
      while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
      return k;
    };
    std::size_t klo = digits_at(lo), khi = digits_at(hi);
    if (klo == lo.size() || khi == hi.size())
      throw ParseError("range endpoints must end in digits", dots);
    std::string plo = lo.substr(0, klo), phi = hi.substr(0, khi);
    if (plo != phi) throw ParseError("range endpoints have different prefixes", dots);
    long from = std::stol(lo.substr(klo));
    long to = std::stol(hi.substr(khi));
    if (from > to) throw ParseError("empty variable range", dots);
    std::vector<std::string> names;
    for (long i = from; i <= to; ++i) names.push_back(plo + std::to_string(i));
    return names;
  }
  std::vector<std::string> names;
  for (const std::string& piece : split(spec, ',')) {
    std::string name = trim(piece);
    if (!valid_name(name)) throw ParseError("bad variable name '" + name + "'", 0);
    names.push_back(name);
  }
  return names;
}

const char* role_tag(VarRole r) {
  switch (r) {
    case VarRole::X: return "x";
    case VarRole::Y: return "y";
    case VarRole::Z: return "z";
  }
  return "x";
}

VarRole parse_role_tag(const std::string& s) {
  if (s == "x") return VarRole::X;
  if (s == "y") return VarRole::Y;
  if (s == "z") return VarRole::Z;
  throw ParseError("unknown variable role '" + s + "'", 0);
}

}  // namespace

RingPtr parse_ring(const std::string& text) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  std::vector<std::string> sections = split(text, ';');
  for (std::size_t k = 0; k < sections.size(); ++k) {
    std::string body = trim(sections[k]);
    VarRole role = VarRole::X;
    if (k > 0) {
      std::size_t space = body.find_first_of(" \t");
      if (space == std::string::npos)
        throw ParseError("role section needs a role tag and variables", 0);
      role = parse_role_tag(trim(body.substr(0, space)));
      body = trim(body.substr(space + 1));
    }
    for (std::string& name : expand_names(body)) {
      names.push_back(std::move(name));
      roles.push_back(role);
    }
  }
  try {
    return make_ring(std::move(names), std::move(roles));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
}

Monomial parse_monomial(const RingPtr& ring, const std::string& text) {
  std::string body = trim(text);
  if (body.empty()) throw ParseError("empty monomial", 0);
  if (body == "1") return Monomial(ring);
  ExponentVec e(ring->size(), 0);
  std::size_t offset = 0;
  for (const std::string& piece : split(body, '*')) {
    std::string factor = trim(piece);
    if (factor.empty()) throw ParseError("empty factor", offset);
    std::size_t caret = factor.find('^');
    std::string name = trim(factor.substr(0, caret));
    Exponent exp = 1;
    if (caret != std::string::npos) {
      std::string exp_text = trim(factor.substr(caret + 1));
      try {
        std::size_t used = 0;
        exp = std::stoll(exp_text, &used);
        if (used != exp_text.size()) throw std::invalid_argument(exp_text);
      } catch (const std::exception&) {
        throw ParseError("bad exponent '" + exp_text + "'", offset);
      }
      if (exp < 1) throw ParseError("exponent must be positive", offset);
    }
    if (!ring->has_variable(name))
      throw ParseError("unknown variable '" + name + "'", offset);
    e[ring->index_of(name)] += exp;
    offset += piece.size() + 1;
  }
  return Monomial(ring, std::move(e));
}

MonomialIdeal parse_ideal(const RingPtr& ring, const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = trim(body.substr(1, body.size() - 2));
  if (body.empty() || body == "0") return MonomialIdeal(ring);
  std::vector<Monomial> gens;
  for (const std::string& piece : split(body, ','))
    gens.push_back(parse_monomial(ring, piece));
  return MonomialIdeal(ring, std::move(gens));
}

std::string ideal_to_json(const MonomialIdeal& I) {
  nlohmann::json j;
  j["variables"] = I.ring()->names();
  std::vector<std::string> roles;
  for (VarRole r : I.ring()->roles()) roles.push_back(role_tag(r));
  j["roles"] = roles;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : I.generators()) j["generators"].push_back(g.exponents());
  return j.dump(2);
}

MonomialIdeal ideal_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), static_cast<std::size_t>(e.byte));
  }
  try {
    std::vector<std::string> names = j.at("variables");
    std::vector<VarRole> roles;
    for (const std::string& tag : j.at("roles")) roles.push_back(parse_role_tag(tag));
    RingPtr ring = make_ring(std::move(names), std::move(roles));
    std::vector<Monomial> gens;
    for (const auto& entry : j.at("generators"))
      gens.emplace_back(ring, ExponentVec(entry.begin(), entry.end()));
    return MonomialIdeal(ring, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
}

Session parse_session(const std::string& text) {
  Session session;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!session.ring) {
      if (line.rfind("ring", 0) != 0)
        throw ParseError("expected a ring declaration first", line_start);
      session.ring = parse_ring(trim(line.substr(4)));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'name = generators'", line_start);
    std::string name = trim(line.substr(0, eq));
    if (!valid_name(name)) throw ParseError("bad ideal name '" + name + "'", line_start);
    if (session.ideals.count(name))
      throw ParseError("duplicate ideal name '" + name + "'", line_start);
    session.ideals.emplace(name, parse_ideal(session.ring, line.substr(eq + 1)));
    session.order.push_back(name);
  }
  if (!session.ring) throw ParseError("missing ring declaration", 0);
  return session;
}

}  // namespace linideal
