#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "flowext/flowext.hpp"
#include "flowext/json_io.hpp"

using namespace flowext;
using io::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

bool json_errors = false;

// Diagnostics go to stderr, either as one line of text or as a JSON object.
int report_error(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  if (json_errors) {
    extra["error"] = kind;
    extra["message"] = message;
    extra["exit_code"] = code;
    std::cerr << extra.dump() << '\n';
  } else {
    std::cerr << "flowext: " << kind << ": " << message << '\n';
  }
  return code;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json path_to_json(const Path& p) { return p.arcs; }

Network load_network(const std::string& path) { return io::network_from_json(io::read_json_file(path)); }

void store_or_print(const json& j, const std::string& out) {
  if (out.empty()) {
    emit(j);
  } else {
    io::write_json_file(out, j);
  }
}

Sense parse_sense(const std::string& text) {
  if (text == "min") return Sense::min;
  if (text == "max") return Sense::max;
  throw InputError("sense must be 'min' or 'max', got '" + text + "'");
}

struct Options {
  std::string kind;
  std::string network;
  std::string out;
  std::string dfa;
  std::string weights;
  std::string objective;
  std::string delta;
  std::string sense = "min";
  std::string face_sense = "max";
  std::string oracle_name;
  std::size_t n = 0;
  std::optional<std::size_t> limit;
  std::size_t budget = oracle::default_budget;
};

int cmd_build(const Options& o) {
  Network net = [&] {
    if (o.kind == "bipartite") return bipartite_matching_network(o.n);
    if (o.kind == "matching") return nonbipartite_matching_network(o.n);
    if (o.kind == "tsp") return held_karp_network(o.n);
    if (o.dfa.empty()) throw InputError("build dfa needs --dfa FILE");
    return dfa_network(io::dfa_from_json(io::read_json_file(o.dfa)), o.n);
  }();
  store_or_print(io::network_to_json(net), o.out);
  if (!o.out.empty()) {
    emit({{"nodes", net.node_count()}, {"arcs", net.arc_count()}, {"dimension", net.dimension()},
          {"out", o.out}});
  }
  return exit_ok;
}

int cmd_stats(const Options& o) {
  Network net = load_network(o.network);
  const ValidationReport& r = validate(net);
  json j{{"nodes", net.node_count()},
         {"arcs", net.arc_count()},
         {"dimension", net.dimension()},
         {"acyclic", r.acyclic},
         {"valid", r.ok},
         {"unreachable_nodes", r.unreachable_nodes},
         {"dead_end_nodes", r.dead_end_nodes},
         {"negative_column_arcs", r.negative_column_arcs}};
  j["paths"] = r.acyclic ? json(count_st_paths(net).get_str()) : json(nullptr);
  emit(j);
  return exit_ok;
}

int cmd_paths(const Options& o) {
  Network net = load_network(o.network);
  json out = json::array();
  for (const Path& p : enumerate_st_paths(net, o.limit)) out.push_back(path_to_json(p));
  emit(out);
  return exit_ok;
}

int cmd_vertices(const Options& o) {
  Network net = load_network(o.network);
  emit(io::point_set_to_json(vertex_image(net, o.limit)));
  return exit_ok;
}

int cmd_solve(const Options& o) {
  Network net = load_network(o.network);
  auto c = io::objective_from_json(io::read_json_file(o.weights), net.dimension());
  OptResult r = optimize_linear(net, c, parse_sense(o.sense));
  emit({{"sense", to_string(r.sense)},
        {"value", io::rational_to_json(r.value)},
        {"path", path_to_json(r.path)},
        {"vertex", io::rational_vector_to_json(r.vertex)}});
  return exit_ok;
}

int cmd_verify(const Options& o) {
  Network net = load_network(o.network);
  PointSet expected = [&] {
    if (o.oracle_name == "bipartite-matching") return oracle::perfect_matchings_bipartite(o.n, o.budget);
    if (o.oracle_name == "matching") return oracle::perfect_matchings_complete(o.n, o.budget);
    if (o.oracle_name == "tsp") return oracle::hamiltonian_cycles(o.n, o.budget);
    if (o.dfa.empty()) throw InputError("verify --oracle dfa needs --dfa FILE");
    return oracle::language_vectors(io::dfa_from_json(io::read_json_file(o.dfa)), o.n, o.budget);
  }();
  if (expected.dimension() != net.dimension()) {
    throw InputError("network dimension " + std::to_string(net.dimension()) + " does not match the " +
                     o.oracle_name + " oracle dimension " + std::to_string(expected.dimension()));
  }
  PointSet image = vertex_image(net, o.budget);
  auto diff = oracle::compare_point_sets(image, expected);
  emit({{"equal", diff.equal},
        {"network_points", image.size()},
        {"oracle_points", expected.size()},
        {"only_in_network_count", diff.only_in_first_count},
        {"only_in_oracle_count", diff.only_in_second_count},
        {"only_in_network", io::point_set_to_json(PointSet(image.dimension(), diff.only_in_first))},
        {"only_in_oracle", io::point_set_to_json(PointSet(image.dimension(), diff.only_in_second))}});
  return diff.equal ? exit_ok : exit_failed;
}

int cmd_face(const Options& o) {
  Network net = load_network(o.network);
  auto c = io::objective_from_json(io::read_json_file(o.objective), net.dimension());
  Network face = restrict_to_face(net, c, parse_rational(o.delta), parse_sense(o.face_sense));
  store_or_print(io::network_to_json(face), o.out);
  if (!o.out.empty()) emit({{"nodes", face.node_count()}, {"arcs", face.arc_count()}, {"out", o.out}});
  return exit_ok;
}

int cmd_nonneg(const Options& o) {
  Network net = load_network(o.network);
  store_or_print(io::network_to_json(nonnegativize(net)), o.out);
  return exit_ok;
}

int cmd_certificate(const Options& o) {
  Network net = load_network(o.network);
  CertificateReport r = support_certificate(net, o.n);
  bool holds = Rational(static_cast<unsigned long>(r.count)) >= r.bound;
  emit({{"count", r.count},
        {"bound", io::rational_to_json(r.bound)},
        {"middle_nodes", r.middle_nodes},
        {"crossing_arcs", r.crossing_arcs},
        {"count_at_least_bound", holds}});
  return holds ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flow-based extended formulations: build, transform, optimize and verify s-t path networks"};
  app.require_subcommand(1);
  app.add_flag("--json", json_errors, "Report errors on stderr as JSON");

  Options o;
  auto network_arg = [&](CLI::App* sub) {
    sub->add_option("network", o.network, "Network JSON file")->required();
  };

  auto* build = app.add_subcommand("build", "Build a canonical network");
  build->add_option("kind", o.kind, "dfa, bipartite, matching or tsp")
      ->required()
      ->check(CLI::IsMember({"dfa", "bipartite", "matching", "tsp"}));
  build->add_option("--n", o.n, "Size parameter")->required();
  build->add_option("--dfa", o.dfa, "Automaton JSON file (for dfa)");
  build->add_option("--out", o.out, "Output file (default: stdout)");

  auto* stats = app.add_subcommand("stats", "Node, arc and path counts");
  network_arg(stats);

  auto* paths = app.add_subcommand("paths", "List source-sink paths as arc ids");
  network_arg(paths);
  paths->add_option("--limit", o.limit, "Stop after this many paths");

  auto* vertices = app.add_subcommand("vertices", "Projected vertex set");
  network_arg(vertices);
  vertices->add_option("--limit", o.limit, "Refuse networks with more paths than this");

  auto* solve = app.add_subcommand("solve", "Optimize a linear objective");
  network_arg(solve);
  solve->add_option("--weights", o.weights, "Objective JSON: list, or square matrix")->required();
  solve->add_option("--sense", o.sense, "min or max")->check(CLI::IsMember({"min", "max"}));

  auto* verify = app.add_subcommand("verify", "Compare the vertex set with a brute-force oracle");
  network_arg(verify);
  verify->add_option("--oracle", o.oracle_name, "Oracle")
      ->required()
      ->check(CLI::IsMember({"bipartite-matching", "matching", "tsp", "dfa"}));
  verify->add_option("--n", o.n, "Size parameter")->required();
  verify->add_option("--dfa", o.dfa, "Automaton JSON file (for dfa)");
  verify->add_option("--budget", o.budget, "Enumeration budget");

  auto* face = app.add_subcommand("face", "Restrict to the face where the objective attains its optimum");
  network_arg(face);
  face->add_option("--objective", o.objective, "Objective JSON")->required();
  face->add_option("--delta", o.delta, "Claimed optimum (rational)")->required();
  face->add_option("--sense", o.face_sense, "max or min")->check(CLI::IsMember({"min", "max"}));
  face->add_option("--out", o.out, "Output file (default: stdout)");

  auto* nonneg = app.add_subcommand("nonneg", "Make every projection column nonnegative");
  network_arg(nonneg);
  nonneg->add_option("--out", o.out, "Output file (default: stdout)");

  auto* certificate = app.add_subcommand("certificate", "Support-counting certificate for K_{n,n} matchings");
  network_arg(certificate);
  certificate->add_option("--n", o.n, "Side size of K_{n,n}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(exit_input, "usage", e.what());
  }

  try {
    if (*build) return cmd_build(o);
    if (*stats) return cmd_stats(o);
    if (*paths) return cmd_paths(o);
    if (*vertices) return cmd_vertices(o);
    if (*solve) return cmd_solve(o);
    if (*verify) return cmd_verify(o);
    if (*face) return cmd_face(o);
    if (*nonneg) return cmd_nonneg(o);
    if (*certificate) return cmd_certificate(o);
  } catch (const InfeasibleProjectionError& e) {
    return report_error(exit_failed, "infeasible", e.what(),
                        {{"coordinate", e.coordinate()},
                         {"witness_path", path_to_json(e.witness())},
                         {"value", io::rational_to_json(e.value())}});
  } catch (const FaceMismatchError& e) {
    return report_error(exit_failed, "face_mismatch", e.what(), {{"optimum", io::rational_to_json(e.optimum())}});
  } catch (const TooLargeError& e) {
    return report_error(exit_input, "too_large", e.what());
  } catch (const PreconditionError& e) {
    return report_error(exit_input, "precondition", e.what());
  } catch (const Error& e) {
    return report_error(exit_input, "input", e.what());
  } catch (const json::exception& e) {
    return report_error(exit_input, "input", e.what());
  }
  return exit_input;
}
