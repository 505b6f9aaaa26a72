#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "barlat/barcode.hpp"
#include "barlat/distances.hpp"
#include "barlat/error.hpp"
#include "barlat/generate.hpp"
#include "barlat/io.hpp"
#include "barlat/lattice.hpp"
#include "barlat/multiperm.hpp"
#include "barlat/polytope.hpp"

namespace {

using namespace barlat;
namespace fs = std::filesystem;

enum Exit : int {
  kOk = 0,
  kFailed = 1,
  kInput = 2,
  kPrecondition = 3,
  kTooLarge = 4,
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidBar:
      return kInput;
    case ErrorKind::TooLarge:
      return kTooLarge;
    case ErrorKind::Internal:
      return kFailed;
    default:
      return kPrecondition;
  }
}

struct Options {
  std::string input;
  std::string format;
  unsigned k = 0;
  bool labeled = false;
  bool verbose = false;
  std::string a, b;
  int n = 2;
  std::string dot_path, json_path;
  std::string op = "meet";
  std::string metric = "bottleneck";
  double q = 2.0;
  bool align_first = false;
  bool witness = false;
  std::string vertices_path;
  bool dim = false;
  std::uint64_t seed = 0;
  double spread = 1.0;
  bool contained = false;
};

std::optional<io::BarcodeFormat> format_override(const Options& o) {
  if (o.format.empty()) return std::nullopt;
  return o.format == "json" ? io::BarcodeFormat::Json : io::BarcodeFormat::Csv;
}

Barcode load(const std::string& path, const Options& o) {
  return io::read_barcode(path, format_override(o));
}

void print_invariant(const Options& o) {
  const Barcode barcode = load(o.input, o);
  if (o.labeled) {
    std::cout << labeled_word(barcode, o.k).to_string() << "\n";
  } else {
    std::cout << power_invariant(barcode, o.k).to_string() << "\n";
  }
}

void print_rank(const Options& o) {
  const Barcode barcode = load(o.input, o);
  const auto s = power_invariant(barcode, o.k);
  std::cout << rank(s) << "\n";
  if (o.verbose && o.k == 0) {
    for (std::size_t i = 1; i <= barcode.size(); ++i) {
      for (std::size_t j = i + 1; j <= barcode.size(); ++j) {
        std::cout << "cross(" << i << "," << j
                  << ") = " << crossing_number(barcode, i, j) << "\n";
      }
    }
  }
}

// A file argument is read as a barcode; anything else as a word.
CanonicalInvariant element_argument(const std::string& arg, const Options& o) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return power_invariant(load(arg, o), o.k);
  Multiperm word = [&] {
    try {
      return Multiperm::from_word(io::parse_word(arg));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse,
                  "'" + arg + "' is neither a barcode file nor a word: " + e.what());
    }
  }();
  return canonicalize(word);
}

void print_compare(const Options& o) {
  const auto s = element_argument(o.a, o);
  const auto t = element_argument(o.b, o);
  if (s.alphabet_size() != t.alphabet_size() ||
      s.multiplicity() != t.multiplicity()) {
    throw Error(ErrorKind::ShapeMismatch,
                "the two elements belong to different lattices");
  }
  const bool le = newman_leq(s.multiperm(), t.multiperm());
  const bool ge = newman_leq(t.multiperm(), s.multiperm());
  std::cout << (le && ge ? "EQ" : le ? "LT" : ge ? "GT" : "INCOMPARABLE") << "\n";
}

LatticeSpec lattice_spec(const Options& o) {
  LatticeSpec spec{o.n, o.k};
  spec.validate();
  return spec;
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
  } else {
    io::write_file(path, text);
  }
}

void print_hasse(const Options& o) {
  const auto diagram = enumerate(lattice_spec(o));
  if (!o.json_path.empty()) emit(o.json_path, io::hasse_to_json(diagram));
  if (!o.dot_path.empty() || o.json_path.empty()) {
    emit(o.dot_path.empty() ? "-" : o.dot_path, io::hasse_to_dot(diagram));
  }
}

CanonicalInvariant lattice_element(const std::string& arg,
                                   const LatticeSpec& spec) {
  const auto s = canonicalize(Multiperm::from_word(io::parse_word(arg)));
  if (s.alphabet_size() != spec.n || s.multiplicity() != spec.multiplicity()) {
    throw Error(ErrorKind::NotAnElement,
                "'" + arg + "' is not an element of the lattice for n=" +
                    std::to_string(spec.n) + ", k=" + std::to_string(spec.k));
  }
  return s;
}

void print_meetjoin(const Options& o) {
  const auto spec = lattice_spec(o);
  const auto s = lattice_element(o.a, spec);
  const auto t = lattice_element(o.b, spec);
  const auto diagram = enumerate(spec);
  const auto r = o.op == "join" ? join(diagram, s, t) : meet(diagram, s, t);
  std::cout << r.to_string() << "\n";
}

void print_distance(const Options& o) {
  const Barcode a = load(o.a, o);
  Barcode b = load(o.b, o);
  if (o.align_first) {
    const Alignment t = align(a, b);
    b = affine_transform(b, t.alpha, t.delta);
  }
  const DistanceResult result =
      o.metric == "wasserstein" ? wasserstein(a, b, o.q) : bottleneck(a, b);
  std::cout << io::format_number(result.distance) << "\n";
  if (o.witness) {
    for (const MatchedPair& p : result.witness.pairs) {
      auto side = [](std::size_t label) {
        return label == MatchedPair::kDiagonal ? std::string("diag")
                                               : std::to_string(label);
      };
      std::cout << side(p.left) << " " << side(p.right) << " "
                << io::format_number(p.cost) << "\n";
    }
  }
}

int print_bound_check(const Options& o) {
  const auto report = check_convergence_bounds(load(o.a, o), load(o.b, o), o.k, o.q);
  std::cout << io::convergence_report_to_json(report);
  return report.pass ? kOk : kFailed;
}

void print_polytope(const Options& o) {
  const auto spec = lattice_spec(o);
  if (!o.vertices_path.empty()) {
    const auto set = vertices(spec);
    const bool json = fs::path(o.vertices_path).extension() == ".json";
    emit(o.vertices_path,
         json ? io::vertices_to_json(set) : io::vertices_to_csv(set));
  }
  if (o.dim || o.vertices_path.empty()) {
    std::cout << io::dimension_report_to_json(dimension_report(spec));
  }
}

void print_generated(const Options& o) {
  GenerateOptions g;
  g.n = static_cast<std::size_t>(o.n);
  g.seed = o.seed;
  g.k = o.k;
  g.spread = o.spread;
  g.contained = o.contained;
  const Barcode barcode = generate_barcode(g);
  if (!is_k_strict(barcode, o.k) ||
      (o.contained && containing_bar(barcode) == 0)) {
    throw Error(ErrorKind::Internal, "generated barcode failed its recheck");
  }
  std::cout << (o.format == "json" ? io::barcode_to_json(barcode)
                                   : io::barcode_to_csv(barcode));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial barcode invariants, lattices, distances and polytopes"};
  app.require_subcommand(1);
  Options o;

  const auto level = CLI::Range(0u, kMaxPowerLevel);
  const auto formats = CLI::IsMember({"csv", "json"});

  auto* invariant = app.add_subcommand("invariant", "Print the power-k invariant of a barcode");
  invariant->add_option("--input", o.input, "Barcode file")->required()->check(CLI::ExistingFile);
  invariant->add_option("--k", o.k, "Power level")->check(level);
  invariant->add_flag("--labeled", o.labeled, "Print the labeled word instead");
  invariant->add_option("--format", o.format, "Input format")->check(formats);

  auto* rank_cmd = app.add_subcommand("rank", "Print the rank of the power-k invariant");
  rank_cmd->add_option("--input", o.input, "Barcode file")->required()->check(CLI::ExistingFile);
  rank_cmd->add_option("--k", o.k, "Power level")->check(level);
  rank_cmd->add_flag("--verbose", o.verbose, "Per-pair crossing numbers (k = 0)");
  rank_cmd->add_option("--format", o.format, "Input format")->check(formats);

  auto* compare = app.add_subcommand("compare", "Compare two elements: LT, GT, EQ or INCOMPARABLE");
  compare->add_option("--k", o.k, "Power level for barcode files")->check(level);
  compare->add_option("a", o.a, "Barcode file or word")->required();
  compare->add_option("b", o.b, "Barcode file or word")->required();
  compare->add_option("--format", o.format, "Input format")->check(formats);

  auto* hasse = app.add_subcommand("hasse", "Export the Hasse diagram");
  hasse->add_option("--n", o.n, "Number of bars")->required()->check(CLI::PositiveNumber);
  hasse->add_option("--k", o.k, "Power level")->check(level);
  hasse->add_option("--dot", o.dot_path, "DOT output file, '-' for stdout");
  hasse->add_option("--json", o.json_path, "JSON output file, '-' for stdout");

  auto* meetjoin = app.add_subcommand("meetjoin", "Meet or join of two lattice elements");
  meetjoin->add_option("--n", o.n, "Number of bars")->required()->check(CLI::PositiveNumber);
  meetjoin->add_option("--k", o.k, "Power level")->check(level);
  meetjoin->add_option("--op", o.op, "meet or join")->check(CLI::IsMember({"meet", "join"}));
  meetjoin->add_option("s", o.a, "First word")->required();
  meetjoin->add_option("t", o.b, "Second word")->required();

  auto* distance = app.add_subcommand("distance", "Bottleneck or q-Wasserstein distance");
  distance->add_option("--metric", o.metric, "bottleneck or wasserstein")
      ->check(CLI::IsMember({"bottleneck", "wasserstein"}));
  distance->add_option("--q", o.q, "Wasserstein exponent (>= 1)")->check(CLI::Range(1.0, 1e300));
  distance->add_flag("--align", o.align_first, "Align the second barcode onto the first");
  distance->add_flag("--witness", o.witness, "Print the optimal matching");
  distance->add_option("a", o.a, "First barcode file")->required()->check(CLI::ExistingFile);
  distance->add_option("b", o.b, "Second barcode file")->required()->check(CLI::ExistingFile);
  distance->add_option("--format", o.format, "Input format")->check(formats);

  auto* bound = app.add_subcommand("bound-check", "Check the aligned distance bounds");
  bound->add_option("--k", o.k, "Power level")->check(level);
  bound->add_option("--q", o.q, "Wasserstein exponent (>= 1)")->check(CLI::Range(1.0, 1e300));
  bound->add_option("a", o.a, "First barcode file")->required()->check(CLI::ExistingFile);
  bound->add_option("b", o.b, "Second barcode file")->required()->check(CLI::ExistingFile);
  bound->add_option("--format", o.format, "Input format")->check(formats);

  auto* polytope = app.add_subcommand("polytope", "Barcode polytope vertices and dimension");
  polytope->add_option("--n", o.n, "Number of bars")->required()->check(CLI::PositiveNumber);
  polytope->add_option("--k", o.k, "Power level")->check(level);
  polytope->add_option("--vertices", o.vertices_path, "Vertex output (.csv or .json), '-' for stdout");
  polytope->add_flag("--dim", o.dim, "Print the dimension report");

  auto* gen = app.add_subcommand("gen", "Generate a seeded k-strict barcode");
  gen->add_option("--n", o.n, "Number of bars")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Seed");
  gen->add_option("--k", o.k, "Power level")->check(level);
  gen->add_option("--spread", o.spread, "Endpoint range [0, spread]")->check(CLI::PositiveNumber);
  gen->add_flag("--contained", o.contained, "Force a bar containing all others");
  gen->add_option("--format", o.format, "Output format")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*invariant) print_invariant(o);
    if (*rank_cmd) print_rank(o);
    if (*compare) print_compare(o);
    if (*hasse) print_hasse(o);
    if (*meetjoin) print_meetjoin(o);
    if (*distance) print_distance(o);
    if (*bound) return print_bound_check(o);
    if (*polytope) print_polytope(o);
    if (*gen) print_generated(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
