#include "cli.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "rgconj/delta.hpp"
#include "rgconj/dlo.hpp"
#include "rgconj/graph_reduction.hpp"
#include "rgconj/invariants.hpp"
#include "rgconj/rado.hpp"
#include "rgconj/text_format.hpp"

namespace rgconj::cli {

namespace {

constexpr const char* kGrammar = R"(Commands:
  rado adj <i> <j>
  rado witness <u1,u2,...|-> <v1,v2,...|->
  delta adj <graphfile> <i,j> <k,l>
  delta witness <graphfile> <U> <V>     U, V: i,j,k,l,... read as (i,j),(k,l),...; '-' for empty
  reduce order <orderfile> [--depth n]  prints 'map i j' on enumeration indices
  reduce graph <graphfile> [--depth n]  prints 'map a b' for stage n of phi_x
  conjugate <xfile> <yfile> [--iso <mapfile>] [--depth n] [--budget b]
  orbitals <orderfile> [--depth n]      prints 'orbital <index> <fixed|up|down>'
  cycletype <mapfile> [--prefix n]      prints 'cycles k:count ... open m'
Defaults: --depth 50, --prefix 100, --budget 1000000.
)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Nat parse_nat(const std::string& text) {
  Nat value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError("expected a natural, got '" + text + "'");
  return value;
}

std::vector<Nat> parse_list(const std::string& text) {
  std::vector<Nat> out;
  if (text == "-") return out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_nat(item));
  if (out.empty() || text.back() == ',') throw UsageError("malformed list '" + text + "'");
  return out;
}

std::vector<VertexCode> parse_vertices(const std::string& text) {
  const auto flat = parse_list(text);
  if (flat.size() % 2 != 0) throw UsageError("vertex list needs row,column pairs: '" + text + "'");
  std::vector<VertexCode> out;
  for (std::size_t k = 0; k < flat.size(); k += 2) out.push_back({flat[k], flat[k + 1]});
  return out;
}

VertexCode parse_vertex(const std::string& text) {
  const auto v = parse_vertices(text);
  if (v.size() != 1) throw UsageError("expected one vertex 'i,j', got '" + text + "'");
  return v.front();
}

const char* boolean(bool b) { return b ? "true" : "false"; }

ReductionOptions reduction_options(Nat depth) {
  ReductionOptions options;
  options.stage_budget = depth;
  return options;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy reductions into Aut(Q) and Aut(random graph)", "rgconj"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  Nat depth = 50;
  Nat prefix = 100;
  Nat budget = 1'000'000;
  std::string a1, a2, a3, iso_file;

  auto* rado = app.add_subcommand("rado", "random graph queries");
  rado->require_subcommand(1);
  auto* rado_adj_cmd = rado->add_subcommand("adj", "adjacency");
  rado_adj_cmd->add_option("i", a1)->required();
  rado_adj_cmd->add_option("j", a2)->required();
  auto* rado_witness_cmd = rado->add_subcommand("witness", "extension witness");
  rado_witness_cmd->add_option("U", a1)->required();
  rado_witness_cmd->add_option("V", a2)->required();

  auto* delta = app.add_subcommand("delta", "row graph queries");
  delta->require_subcommand(1);
  auto* delta_adj_cmd = delta->add_subcommand("adj", "adjacency");
  delta_adj_cmd->add_option("graphfile", a1)->required();
  delta_adj_cmd->add_option("u", a2)->required();
  delta_adj_cmd->add_option("v", a3)->required();
  auto* delta_witness_cmd = delta->add_subcommand("witness", "extension witness");
  delta_witness_cmd->add_option("graphfile", a1)->required();
  delta_witness_cmd->add_option("U", a2)->required();
  delta_witness_cmd->add_option("V", a3)->required();

  auto* reduce = app.add_subcommand("reduce", "reduction maps");
  reduce->require_subcommand(1);
  auto* reduce_order = reduce->add_subcommand("order", "linear order to Aut(Q)");
  reduce_order->add_option("file", a1)->required();
  reduce_order->add_option("--depth", depth);
  auto* reduce_graph = reduce->add_subcommand("graph", "graph to Aut(random graph)");
  reduce_graph->add_option("file", a1)->required();
  reduce_graph->add_option("--depth", depth);

  auto* conjugate = app.add_subcommand("conjugate", "conjugacy of two reduced graphs");
  conjugate->add_option("xfile", a1)->required();
  conjugate->add_option("yfile", a2)->required();
  conjugate->add_option("--iso", iso_file);
  conjugate->add_option("--depth", depth);
  conjugate->add_option("--budget", budget);

  auto* orbitals = app.add_subcommand("orbitals", "orbital parities of the reduced order");
  orbitals->add_option("file", a1)->required();
  orbitals->add_option("--depth", depth);

  auto* cycletype = app.add_subcommand("cycletype", "cycle type of a finite map");
  cycletype->add_option("mapfile", a1)->required();
  cycletype->add_option("--prefix", prefix);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*rado_adj_cmd) {
      out << boolean(rado_adj(parse_nat(a1), parse_nat(a2))) << "\n";
    } else if (*rado_witness_cmd) {
      const auto U = parse_list(a1);
      const auto V = parse_list(a2);
      out << to_string(rado_witness(U, V)) << "\n";
    } else if (*delta_adj_cmd) {
      const auto x = parse_graph(read_file(a1));
      out << boolean(delta_adj(x, parse_vertex(a2), parse_vertex(a3))) << "\n";
    } else if (*delta_witness_cmd) {
      (void)parse_graph(read_file(a1));  // the witness rule is independent of x
      const auto w = delta_witness(parse_vertices(a2), parse_vertices(a3));
      out << w.row << "," << w.column.str() << "\n";
    } else if (*reduce_order) {
      const auto x = parse_order(read_file(a1));
      out << format_map(dlo_reduce(x).stage(depth));
    } else if (*reduce_graph) {
      const Reduction r(parse_graph(read_file(a1)), reduction_options(depth));
      out << format_map(r.phi().stage(depth));
    } else if (*conjugate) {
      const Reduction x(parse_graph(read_file(a1)), reduction_options(depth));
      const Reduction y(parse_graph(read_file(a2)), reduction_options(depth));
      if (!iso_file.empty()) {
        const auto a = parse_map(read_file(iso_file));
        const StagedMap gamma = graph_conjugator(x, y, a);
        check_commuting(gamma, x.phi(), y.phi(), 200, depth);
        out << format_map(gamma.stage(depth)) << "verdict conjugate\n";
      } else {
        const Verdict v = decide_conjugate_reduced(x, y, budget);
        if (v.kind == Verdict::Kind::Conjugate) {
          out << format_map(graph_conjugator(x, y, v.isomorphism).stage(depth));
        }
        out << "verdict " << verdict_name(v.kind) << "\n";
      }
    } else if (*orbitals) {
      const DloAutomorphism phi = build_phi_dlo(closed_embed(parse_order(read_file(a1))));
      for (Nat k = 0; k < depth; ++k) {
        out << "orbital " << k << " " << parity_name(orbital_classify(phi, cw_rational(k))) << "\n";
      }
    } else if (*cycletype) {
      const auto pairs = parse_map(read_file(a1));
      // points the file never mentions are fixed
      auto forward = std::make_shared<std::map<Nat, Nat>>();
      std::set<Nat> mentioned;
      for (auto [a, b] : pairs) {
        forward->emplace(a, b);
        mentioned.insert(a);
        mentioned.insert(b);
      }
      std::vector<MapPair> completed;
      for (Nat k = 0; k < prefix; ++k) {
        auto it = forward->find(k);
        if (it != forward->end()) {
          completed.emplace_back(k, it->second);
        } else if (mentioned.count(k) == 0) {
          completed.emplace_back(k, k);
        }
      }
      out << format_cycle_type(cycle_type(StagedMap::from_pairs(completed), prefix)) << "\n";
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error " << e.name() << ": " << e.detail() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error IO: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rgconj::cli
