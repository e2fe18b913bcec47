#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linideal/equification.hpp"
#include "linideal/hypergraph.hpp"
#include "linideal/io.hpp"
#include "linideal/linear_quotients.hpp"
#include "linideal/linearization.hpp"
#include "linideal/oracle.hpp"
#include "linideal/squarefree.hpp"

namespace {

using namespace linideal;

struct Options {
  std::string input = "-";
  std::string ideal_name;
  bool json = false;
  std::size_t oracle_cap = 12;
  unsigned seed = 0;  // reserved for randomized subcommands
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Session load_session(const Options& opt) { return parse_session(slurp(opt.input)); }

const MonomialIdeal& pick_ideal(const Session& session, const Options& opt) {
  if (session.ideals.empty())
    throw ArgumentError("input declares no ideals");
  const std::string& name =
      opt.ideal_name.empty() ? session.order.front() : opt.ideal_name;
  auto it = session.ideals.find(name);
  if (it == session.ideals.end())
    throw ArgumentError("no ideal named '" + name + "' in input");
  return it->second;
}

void print_ideal(const MonomialIdeal& I, const Options& opt) {
  if (opt.json)
    std::cout << ideal_to_json(I) << "\n";
  else
    std::cout << render(I) << "\n";
}

void print_linearized(const Linearized& L, const Options& opt) {
  if (opt.json) {
    print_ideal(L.ideal, opt);
    return;
  }
  std::cout << "(";
  for (std::size_t k = 0; k < L.ordered_generators.size(); ++k) {
    if (k) std::cout << ", ";
    std::cout << render(L.ordered_generators[k]);
  }
  std::cout << ")\n";
  std::cout << "complete part: " << L.complete_count
            << " generators, last part: "
            << L.ordered_generators.size() - L.complete_count << "\n";
}

std::vector<std::size_t> parse_order_flag(const std::string& text,
                                          std::size_t m) {
  std::vector<std::size_t> order;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    long k = std::stol(item);
    if (k < 1 || static_cast<std::size_t>(k) > m)
      throw ArgumentError("order positions must be 1-based generator indices");
    order.push_back(static_cast<std::size_t>(k - 1));
  }
  return order;
}

ExponentBound parse_bound_flag(const std::string& text, std::size_t n) {
  ExponentVec bounds;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) bounds.push_back(std::stoll(item));
  if (bounds.size() != n)
    throw ArgumentError("bound must list one value per ring variable");
  return ExponentBound{std::move(bounds)};
}

Hypergraph parse_hypergraph(const std::string& text) {
  Hypergraph H;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::set<std::size_t> edge;
    long v;
    while (row >> v) {
      if (v < 1) throw ArgumentError("vertices are 1-based positive integers");
      edge.insert(static_cast<std::size_t>(v - 1));
      H.vertex_count = std::max(H.vertex_count, static_cast<std::size_t>(v));
    }
    if (!edge.empty()) H.edges.push_back(std::move(edge));
  }
  return H;
}

std::set<std::size_t> parse_edge_flag(const std::string& text) {
  std::set<std::size_t> edge;
  std::istringstream in(text);
  long v;
  while (in >> v) {
    if (v < 1) throw ArgumentError("vertices are 1-based positive integers");
    edge.insert(static_cast<std::size_t>(v - 1));
  }
  return edge;
}

void print_betti(const BettiTable& table, const Options& opt) {
  if (opt.json) {
    std::ostringstream out;
    out << "{\"rows\": {";
    std::map<long, std::map<int, long long>> rows;
    for (const auto& [key, count] : table.entries())
      rows[key.second - key.first][key.first] = count;
    bool first_row = true;
    for (const auto& [row, cells] : rows) {
      if (!first_row) out << ", ";
      first_row = false;
      out << "\"" << row << "\": {";
      bool first = true;
      for (const auto& [i, count] : cells) {
        if (!first) out << ", ";
        first = false;
        out << "\"" << i << "\": " << count;
      }
      out << "}";
    }
    out << "}, \"totals\": [";
    auto totals = table.totals();
    for (std::size_t i = 0; i < totals.size(); ++i)
      out << (i ? ", " : "") << totals[i];
    out << "]}";
    std::cout << out.str() << "\n";
  } else {
    std::cout << table.render_ascii();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operations on monomial ideals: linearization, equification, "
               "linear quotients, Betti numbers, lattices, hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* cap = std::getenv("LINIDEAL_ORACLE_CAP"))
    opt.oracle_cap = static_cast<std::size_t>(std::strtoul(cap, nullptr, 10));
  app.add_option("-f,--input", opt.input, "input file ('-' for stdin)");
  app.add_option("-i,--ideal", opt.ideal_name, "ideal name (default: first)");
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--oracle-cap", opt.oracle_cap,
                 "generator cap for the homological oracle");
  app.add_option("--seed", opt.seed, "seed for randomized subcommands");

  auto* cmd_lin = app.add_subcommand("lin", "linearization of an equigenerated ideal");
  auto* cmd_star = app.add_subcommand("star-lin", "*-linearization (uniform bound)");
  auto* cmd_equify = app.add_subcommand("equify", "equification");
  auto* cmd_lingen = app.add_subcommand("lin-general",
                                        "linearization via equification");
  bool lingen_z1 = false;
  cmd_lingen->add_flag("--set-z-one", lingen_z1, "print the z=1 image");

  auto* cmd_betti = app.add_subcommand("betti", "graded Betti numbers");
  std::string method = "oracle";
  cmd_betti->add_option("--method", method, "quotients | closed-form | oracle")
      ->check(CLI::IsMember({"quotients", "closed-form", "oracle"}));
  std::string target = "self";
  cmd_betti->add_option("--of", target, "self | lin | star-lin")
      ->check(CLI::IsMember({"self", "lin", "star-lin"}));

  auto* cmd_lq = app.add_subcommand("lq-check", "linear-quotients check");
  std::string order_flag;
  cmd_lq->add_option("--order", order_flag,
                     "comma-separated 1-based generator positions");

  auto* cmd_radical = app.add_subcommand("radical", "radical of the ideal");
  std::string radical_target = "self";
  cmd_radical->add_option("--of", radical_target, "self | star-lin")
      ->check(CLI::IsMember({"self", "star-lin"}));

  auto* cmd_dual = app.add_subcommand("dual", "Alexander dual (squarefree)");
  auto* cmd_crop = app.add_subcommand("crop", "crop generators by a bound");
  std::string bound_flag;
  cmd_crop->add_option("--bound", bound_flag, "comma-separated exponent bounds")
      ->required();

  auto* cmd_clusters = app.add_subcommand(
      "clusters", "(d-1)-edge multiplicities and cluster counts");
  auto* cmd_lattice = app.add_subcommand("lcm-lattice", "lcm-lattice of the ideal");
  bool lattice_dot = false, lattice_eq = false;
  cmd_lattice->add_flag("--dot", lattice_dot, "DOT output");
  cmd_lattice->add_flag("--eq", lattice_eq, "lattice of the equification");

  auto* cmd_hyper = app.add_subcommand("hypergraph",
                                       "hypergraph distance/diameter/criterion");
  std::string hyper_op = "criterion";
  cmd_hyper->add_option("op", hyper_op, "distance | diam | criterion")
      ->check(CLI::IsMember({"distance", "diam", "criterion"}));
  std::string edge_from, edge_to;
  cmd_hyper->add_option("--from", edge_from, "edge as space-separated vertices");
  cmd_hyper->add_option("--to", edge_to, "edge as space-separated vertices");

  auto* cmd_split = app.add_subcommand("splitting-check",
                                       "Betti splitting identity via the oracle");
  std::string whole = "I", part_j = "J", part_k = "K";
  cmd_split->add_option("--whole", whole, "name of the candidate split ideal");
  cmd_split->add_option("--left", part_j, "name of the first part");
  cmd_split->add_option("--right", part_k, "name of the second part");

  auto* cmd_retrieve = app.add_subcommand(
      "retrieve", "source ideal of a linearized ideal (needs y roles)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cmd_lin) || app.got_subcommand(cmd_star)) {
      Session s = load_session(opt);
      Linearized L = app.got_subcommand(cmd_lin) ? lin(pick_ideal(s, opt))
                                                 : star_lin(pick_ideal(s, opt));
      print_linearized(L, opt);
    } else if (app.got_subcommand(cmd_equify)) {
      Session s = load_session(opt);
      print_ideal(equify(pick_ideal(s, opt)), opt);
    } else if (app.got_subcommand(cmd_lingen)) {
      Session s = load_session(opt);
      if (lingen_z1)
        print_ideal(lin_general_z1(pick_ideal(s, opt)), opt);
      else
        print_linearized(lin_general(pick_ideal(s, opt)), opt);
    } else if (app.got_subcommand(cmd_betti)) {
      Session s = load_session(opt);
      const MonomialIdeal& I = pick_ideal(s, opt);
      if (method == "closed-form") {
        if (target != "star-lin")
          throw DomainError("closed-form Betti numbers describe the "
                            "*-linearization; use --of star-lin");
        print_betti(betti_closed_form(I), opt);
      } else {
        MonomialIdeal J = target == "self" ? I
                          : target == "lin" ? lin(I).ideal
                                            : star_lin(I).ideal;
        if (method == "oracle") {
          print_betti(oracle_betti(J, opt.oracle_cap).graded, opt);
        } else {
          if (target != "self") {
            Linearized L = target == "lin" ? lin(I) : star_lin(I);
            print_betti(betti_from_quotients(canonical_order(L)), opt);
          } else {
            auto found = find_linear_quotient_order(J);
            if (found.status != OrderSearchStatus::Found)
              throw DomainError("no linear-quotient order found; use the oracle");
            print_betti(betti_from_quotients(colon_sequence(J, *found.order)), opt);
          }
        }
      }
    } else if (app.got_subcommand(cmd_lq)) {
      Session s = load_session(opt);
      const MonomialIdeal& I = pick_ideal(s, opt);
      std::vector<std::size_t> order;
      if (!order_flag.empty()) {
        order = parse_order_flag(order_flag, I.num_generators());
      } else {
        auto found = find_linear_quotient_order(I);
        if (found.status == OrderSearchStatus::Inconclusive)
          throw ResourceError("linear-quotient order search budget exceeded");
        if (found.status == OrderSearchStatus::NoneExists) {
          std::cout << "linear quotients: no (no order works)\n";
          return 0;
        }
        order = *found.order;
      }
      OrderedGenerators og = colon_sequence(I, order);
      if (has_linear_quotients(og)) {
        std::cout << "linear quotients: yes; r = ";
        for (std::size_t k = 0; k < og.r.size(); ++k)
          std::cout << (k ? "," : "") << og.r[k];
        std::cout << "\n";
      } else {
        std::cout << "linear quotients: no; first non-linear colon ideal: ";
        for (std::size_t k = 0; k < og.colon_gens.size(); ++k) {
          bool linear = true;
          for (const auto& g : og.colon_gens[k]) linear &= g.degree() == 1;
          if (linear) continue;
          std::cout << render(MonomialIdeal(I.ring(), og.colon_gens[k])) << "\n";
          break;
        }
      }
    } else if (app.got_subcommand(cmd_radical)) {
      Session s = load_session(opt);
      const MonomialIdeal& I = pick_ideal(s, opt);
      if (radical_target == "self") {
        print_ideal(radical(I), opt);
      } else {
        RadicalStarLin R = radical_star_lin(I);
        print_ideal(R.ideal, opt);
        std::cout << "pathological generators: " << R.pathological.size() << "\n";
      }
    } else if (app.got_subcommand(cmd_dual)) {
      Session s = load_session(opt);
      print_ideal(alexander_dual(pick_ideal(s, opt)), opt);
    } else if (app.got_subcommand(cmd_crop)) {
      Session s = load_session(opt);
      const MonomialIdeal& I = pick_ideal(s, opt);
      print_ideal(crop(I, parse_bound_flag(bound_flag, I.ring()->size())), opt);
    } else if (app.got_subcommand(cmd_clusters)) {
      Session s = load_session(opt);
      ClusterProfile p = cluster_profile(pick_ideal(s, opt));
      std::cout << "edges:\n";
      for (const auto& [edge, mult] : p.edges)
        std::cout << "  " << render(edge) << " : " << mult << "\n";
      std::cout << "clusters:";
      if (p.C.empty()) std::cout << " none";
      for (const auto& [j, cj] : p.C) std::cout << " C_" << j << "=" << cj;
      std::cout << "\nN = " << p.N << "\n";
      auto [pd, depth] = pd_and_depth(pick_ideal(s, opt));
      std::cout << "pd(LIN) = " << pd << ", depth(R/LIN) = " << depth << "\n";
    } else if (app.got_subcommand(cmd_lattice)) {
      Session s = load_session(opt);
      MonomialIdeal I = pick_ideal(s, opt);
      if (lattice_eq) I = equify(I);
      LcmLattice L = lcm_lattice(I);
      if (lattice_dot) {
        std::cout << lcm_lattice_dot(L);
      } else {
        std::cout << L.elements.size() << " elements, " << L.covers.size()
                  << " covers; top = " << render(L.elements[L.top]) << "\n";
      }
    } else if (app.got_subcommand(cmd_hyper)) {
      Hypergraph H = parse_hypergraph(slurp(opt.input));
      if (hyper_op == "distance") {
        if (edge_from.empty() || edge_to.empty())
          throw ArgumentError("distance needs --from and --to edges");
        std::size_t d =
            distance(H, parse_edge_flag(edge_from), parse_edge_flag(edge_to));
        if (d == kInfiniteDistance)
          std::cout << "infinity\n";
        else
          std::cout << d << "\n";
      } else if (hyper_op == "diam") {
        std::size_t d = diameter(H);
        if (d == kInfiniteDistance)
          std::cout << "infinity\n";
        else
          std::cout << d << "\n";
      } else {
        switch (linear_resolution_criterion(H)) {
          case CriterionOutcome::Linear: std::cout << "linear\n"; break;
          case CriterionOutcome::NotLinear: std::cout << "not linear\n"; break;
          case CriterionOutcome::Inapplicable: std::cout << "inapplicable\n"; break;
        }
      }
    } else if (app.got_subcommand(cmd_split)) {
      Session s = load_session(opt);
      auto need = [&](const std::string& name) -> const MonomialIdeal& {
        auto it = s.ideals.find(name);
        if (it == s.ideals.end())
          throw ArgumentError("no ideal named '" + name + "' in input");
        return it->second;
      };
      bool ok = betti_splitting_check(need(whole), need(part_j), need(part_k),
                                      opt.oracle_cap);
      std::cout << (ok ? "Betti splitting: yes" : "Betti splitting: no") << "\n";
    } else if (app.got_subcommand(cmd_retrieve)) {
      Session s = load_session(opt);
      Linearized L{pick_ideal(s, opt), LinMode::Lin, YIndexing::Positional,
                   {}, 0, {}};
      print_ideal(retrieve_source(L), opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 4;
  } catch (const ContextError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
