// semiconj: command-line front end.
//
//   semiconj classify a.json
//   semiconj conj a.json b.json --family p [--witness]
//   semiconj census --family t --n 3 --mode both [--out report.json]
//   semiconj abstract table.txt --relation c [--classes] [--check-axioms]
//   semiconj dot a.json [--show-isolated]
//
// Exit status: 0 success (or conjugate), 1 not conjugate, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "semiconj/census.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/digraph.hpp"
#include "semiconj/semigroup.hpp"
#include "semiconj/transform.hpp"

namespace {

  using nlohmann::json;
  using namespace semiconj;

  constexpr int exit_ok           = 0;
  constexpr int exit_not_conjugate = 1;
  constexpr int exit_input_error  = 2;

  std::string slurp(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open \"" + path + "\"");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  json read_json(std::string const& path) {
    try {
      return json::parse(slurp(path));
    } catch (json::parse_error const& e) {
      throw Error(path + ": malformed JSON: " + e.what());
    }
  }

  PartialTransformation read_transformation(std::string const& path) {
    try {
      return read_json(path).get<PartialTransformation>();
    } catch (Error const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  FiniteSemigroup read_table(std::string const& path) {
    try {
      if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        return cayley_from_json(read_json(path));
      }
      std::istringstream in(slurp(path));
      return read_cayley_text(in);
    } catch (Error const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  int run_classify(std::string const& file) {
    auto const alpha = read_transformation(file);
    auto const inv   = invariant(alpha);
    json       comps = json::array();
    for (auto const& c : decompose(alpha)) {
      comps.push_back(c);
    }
    json out{{"transformation", alpha},
             {"components", std::move(comps)},
             {"cs", inv.cs},
             {"s", inv.s}};
    std::cout << out.dump(2) << '\n';
    return exit_ok;
  }

  int run_conj(std::string const& a, std::string const& b,
               std::string const& family, bool witness) {
    auto const f     = parse_family(family);
    auto const alpha = read_transformation(a);
    auto const beta  = read_transformation(b);
    auto const v     = decide(alpha, beta, f, witness);
    json       out   = v;
    out["family"]    = family_name(f);
    std::cout << out.dump(2) << '\n';
    return v.conjugate ? exit_ok : exit_not_conjugate;
  }

  int run_census(std::string const& family, std::size_t n,
                 std::string const& mode, std::string const& out_path,
                 std::size_t threads, std::string const& engine) {
    CensusOptions opts;
    opts.threads = threads;
    if (engine == "table") {
      opts.engine = BruteforceEngine::table;
    } else if (engine == "oracle") {
      opts.engine = BruteforceEngine::oracle;
    }
    auto const rep = census(parse_family(family), n, parse_mode(mode), opts);
    json const out = rep;
    if (out_path.empty()) {
      std::cout << out.dump(2) << '\n';
    } else {
      std::ofstream os(out_path);
      if (!os) {
        throw Error("cannot write \"" + out_path + "\"");
      }
      os << out.dump(2) << '\n';
      std::cout << "class_count_invariant="
                << (rep.class_count_invariant
                        ? std::to_string(*rep.class_count_invariant)
                        : "n/a")
                << " class_count_bruteforce="
                << (rep.class_count_bruteforce
                        ? std::to_string(*rep.class_count_bruteforce)
                        : "n/a")
                << '\n';
    }
    if (rep.partitions_identical && !*rep.partitions_identical) {
      std::cerr << "census: invariant and bruteforce partitions differ\n";
      return exit_not_conjugate;
    }
    return exit_ok;
  }

  int run_abstract(std::string const& file, std::string const& rel,
                   bool want_classes, bool want_axioms) {
    auto const s    = read_table(file);
    auto const kind = parse_relation(rel);
    auto const r    = relation(s, kind);
    json       pairs = json::array();
    for (std::size_t a = 0; a < r.size(); ++a) {
      for (std::size_t b = 0; b < r.size(); ++b) {
        if (r(a, b)) {
          pairs.push_back({a, b});
        }
      }
    }
    json out{{"order", s.order()},
             {"relation", relation_name(kind)},
             {"pairs", std::move(pairs)},
             {"diagonal", r.is_diagonal()},
             {"equivalence", r.is_equivalence()}};
    if (s.zero()) {
      out["zero"] = *s.zero();
    }
    if (want_classes) {
      auto const cls   = classes(s, kind);
      out["classes"]     = cls;
      out["class_count"] = cls.size();
    }
    if (want_axioms) {
      out["axioms"] = check_axioms(s);
    }
    std::cout << out.dump(2) << '\n';
    return exit_ok;
  }

  int run_dot(std::string const& file, bool show_isolated) {
    std::cout << to_dot(read_transformation(file), show_isolated);
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy in finite transformation semigroups"};
  app.require_subcommand(1);

  std::string file_a, file_b, family = "p", mode = "both", out_path, rel,
                                engine = "auto";
  std::size_t n = 0, threads = 0;
  bool witness = false, want_classes = false, want_axioms = false,
       show_isolated = false;

  auto* cmd_classify = app.add_subcommand("classify", "components and invariants");
  cmd_classify->add_option("file", file_a, "transformation JSON")->required();

  auto* cmd_conj = app.add_subcommand("conj", "decide conjugacy of two elements");
  cmd_conj->add_option("a", file_a, "first transformation JSON")->required();
  cmd_conj->add_option("b", file_b, "second transformation JSON")->required();
  cmd_conj->add_option("--family", family, "p, t, i or sym")->required();
  cmd_conj->add_flag("--witness", witness, "include rp-homomorphism witnesses");

  auto* cmd_census = app.add_subcommand("census", "conjugacy classes of a family");
  cmd_census->add_option("--family", family, "p, t, i or sym")->required();
  cmd_census->add_option("--n", n, "number of points")->required();
  cmd_census->add_option("--mode", mode, "invariant, bruteforce or both");
  cmd_census->add_option("--out", out_path, "write the report here");
  cmd_census->add_option("--threads", threads, "worker threads (0 = all cores)");
  cmd_census->add_option("--engine", engine, "bruteforce engine")
      ->check(CLI::IsMember({"auto", "table", "oracle"}));

  auto* cmd_abstract = app.add_subcommand("abstract", "relations on a Cayley table");
  cmd_abstract->add_option("table", file_a, "table file (text or .json)")->required();
  cmd_abstract->add_option("--relation", rel, "l, o, p, pstar or c")->required();
  cmd_abstract->add_flag("--classes", want_classes, "list equivalence classes");
  cmd_abstract->add_flag("--check-axioms", want_axioms, "run the axiom checks");

  auto* cmd_dot = app.add_subcommand("dot", "functional digraph in DOT");
  cmd_dot->add_option("file", file_a, "transformation JSON")->required();
  cmd_dot->add_flag("--show-isolated", show_isolated, "list isolated vertices");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (cmd_classify->parsed()) {
      return run_classify(file_a);
    }
    if (cmd_conj->parsed()) {
      return run_conj(file_a, file_b, family, witness);
    }
    if (cmd_census->parsed()) {
      return run_census(family, n, mode, out_path, threads, engine);
    }
    if (cmd_abstract->parsed()) {
      return run_abstract(file_a, rel, want_classes, want_axioms);
    }
    if (cmd_dot->parsed()) {
      return run_dot(file_a, show_isolated);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}
