// Command-line surface for the Dyer graph toolkit.
//
// Subcommands: validate, classify, quotient, witness, oracle, gen.
// Exit codes: 0 success, 1 validation/parse failure of an input document,
// 2 usage errors.  Classification verdicts never affect the exit code.

#include <CLI11.hpp>

#include <iostream>

#include "dyer/report.hpp"
#include "dyer/random_graph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

dyer::DyerGraph load_or_exit(const std::string& path) {
  std::string text;
  try {
    text = dyer::io::read_file(path);
  } catch (const dyer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitUsage);
  }
  try {
    return dyer::io::parse_dyg(text);
  } catch (const dyer::Error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    std::exit(kExitInvalid);
  }
}

int run_validate(const std::string& path) {
  load_or_exit(path);
  std::cout << path << ": valid Dyer graph\n";
  return kExitOk;
}

int run_classify(const std::string& path, bool json, bool with_oracle) {
  auto g = load_or_exit(path);
  auto report = dyer::io::classify_graph(g, with_oracle);
  if (json)
    std::cout << dyer::io::report_json(report).dump(2) << "\n";
  else
    std::cout << dyer::io::report_text(report);
  return kExitOk;
}

int run_quotient(const std::string& path, const std::string& out) {
  auto g = load_or_exit(path);
  auto quotient = dyer::even_quotient(g);
  auto text = dyer::io::canonical_print(quotient.graph);
  if (out.empty())
    std::cout << text;
  else
    dyer::io::write_file(out, text);
  return kExitOk;
}

int run_witness(const std::string& path) {
  auto g = load_or_exit(path);
  auto decomposition = dyer::join_decompose(g);
  if (!decomposition.indecomposable()) {
    std::cout << "join of " << decomposition.factors.size() << " factors:\n";
    for (const auto& factor : decomposition.factors) {
      std::cout << " ";
      for (const auto& v : factor) std::cout << " " << v;
      std::cout << "\n";
    }
    return kExitOk;
  }
  std::cout << "indecomposable\n";
  if (g.vertex_count() < 3) {
    std::cout << "no 3-vertex witness: graph has fewer than 3 vertices\n";
    return kExitOk;
  }
  auto w = dyer::find_indecomposable_witness(g);
  if (w.kind == dyer::IndecomposableWitness::Kind::Gamma1)
    std::cout << "witness Gamma1 (three isolated vertices): " << w.vertices[0]
              << " " << w.vertices[1] << " " << w.vertices[2] << "\n";
  else
    std::cout << "witness Gamma2 (edge {" << w.vertices[0] << ","
              << w.vertices[1] << "}, isolated " << w.vertices[2] << ")\n";
  return kExitOk;
}

int run_oracle(const std::string& path, std::int64_t max_cosets) {
  auto g = load_or_exit(path);
  const auto p = dyer::oracle::build_presentation(g);
  std::cout << "generators: " << p.generators.size()
            << ", relators: " << p.relators.size() << "\n";

  auto show = [](const dyer::oracle::AbelianInvariants& inv) {
    std::ostringstream os;
    os << "torsion [";
    for (std::size_t i = 0; i < inv.torsion.size(); ++i)
      os << (i ? "," : "") << inv.torsion[i];
    os << "] free_rank " << inv.free_rank;
    return os.str();
  };
  const auto ab = dyer::oracle::abelianize_snf(p);
  std::cout << "abelianization: " << show(ab) << "\n";

  auto enumeration = dyer::oracle::todd_coxeter(p, max_cosets);
  if (enumeration) {
    std::cout << "coset enumeration: " << enumeration->size() << " cosets\n";
    if (enumeration->size() <= 4096) {
      auto gt = dyer::oracle::finite_group_table(*enumeration);
      std::cout << "derived series sizes:";
      for (auto s : dyer::oracle::derived_series_sizes(gt))
        std::cout << " " << s;
      std::cout << "\nderived length: " << dyer::oracle::derived_length_finite(gt)
                << "\n";
    } else {
      std::cout << "group too large for the derived-series table\n";
    }
  } else {
    std::cout << "coset enumeration: exceeded " << max_cosets
              << " cosets (inconclusive)\n";
  }

  if (ab.free_rank == 0) {
    auto table = dyer::oracle::derived_subgroup_coset_table(p);
    auto sub = dyer::oracle::reidemeister_schreier(p, table);
    auto sub_ab = dyer::oracle::abelianize_snf(sub);
    std::cout << "derived subgroup index: " << table.size() << "\n";
    std::cout << "derived subgroup abelianization: " << show(sub_ab) << "\n";
    std::cout << "quasi_perfect (oracle): "
              << (sub_ab.trivial() ? "true" : "false") << "\n";
  } else {
    std::cout << "derived subgroup: inapplicable: infinite abelianization\n";
  }
  return kExitOk;
}

std::vector<dyer::VertexOrder> parse_f_pool(const std::string& csv) {
  std::vector<dyer::VertexOrder> pool;
  std::istringstream is(csv);
  std::string token;
  while (std::getline(is, token, ',')) {
    if (token == "inf")
      pool.push_back(dyer::VertexOrder::inf());
    else
      pool.push_back(dyer::VertexOrder(std::stoul(token)));
  }
  return pool;
}

std::vector<int> parse_m_pool(const std::string& csv) {
  std::vector<int> pool;
  std::istringstream is(csv);
  std::string token;
  while (std::getline(is, token, ',')) pool.push_back(std::stoi(token));
  return pool;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyer graph toolkit: structural classification of Dyer groups "
               "with a literal group-computation oracle"};
  app.require_subcommand(1);

  std::string file, out;
  bool json = false, with_oracle = false;
  std::int64_t max_cosets = 1000000;

  auto* validate = app.add_subcommand("validate", "check a .dyg file");
  validate->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "full classification report");
  classify->add_option("file", file)->required();
  classify->add_flag("--json", json, "machine-readable report");
  classify->add_flag("--oracle", with_oracle,
                     "verify by literal group computation");

  auto* quotient =
      app.add_subcommand("quotient", "write the even quotient graph");
  quotient->add_option("file", file)->required();
  quotient->add_option("-o,--output", out, "output path (default stdout)");

  auto* witness = app.add_subcommand(
      "witness", "indecomposability witness or join factors");
  witness->add_option("file", file)->required();

  auto* oracle = app.add_subcommand("oracle", "literal group computation");
  oracle->add_option("file", file)->required();
  oracle->add_option("--max-cosets", max_cosets, "enumeration cap")
      ->check(CLI::PositiveNumber);

  int gen_vertices = 4;
  std::uint64_t gen_seed = 0;
  double edge_prob = 0.5;
  std::string f_pool = "2,3,4,inf", m_pool = "2,3,4,5,6";
  auto* gen = app.add_subcommand("gen", "generate a random Dyer graph");
  gen->add_option("--vertices", gen_vertices, "vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "random seed")->required();
  gen->add_option("--edge-prob", edge_prob, "edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--f-pool", f_pool, "vertex orders, e.g. 2,3,inf");
  gen->add_option("--m-pool", m_pool, "edge labels, e.g. 2,3,4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(file);
    if (classify->parsed()) return run_classify(file, json, with_oracle);
    if (quotient->parsed()) return run_quotient(file, out);
    if (witness->parsed()) return run_witness(file);
    if (oracle->parsed()) return run_oracle(file, max_cosets);
    if (gen->parsed()) {
      dyer::io::GenOptions opt;
      opt.vertices = gen_vertices;
      opt.seed = gen_seed;
      opt.edge_prob = edge_prob;
      opt.f_pool = parse_f_pool(f_pool);
      opt.m_pool = parse_m_pool(m_pool);
      std::cout << dyer::io::canonical_print(dyer::io::gen_random(opt));
      return kExitOk;
    }
  } catch (const dyer::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dyer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
