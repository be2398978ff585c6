// Command-line interface: membership checks, PSD projection, worst-case
// matrix construction, closed-form bound evaluation, and seeded
// verification reports. Exit codes: 0 success/member, 2 non-member or
// verification violation, 1 error. Identical invocations produce
// byte-identical output; all randomness flows from --seed.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conedist/analysis.hpp"
#include "conedist/cones.hpp"
#include "conedist/constructions.hpp"
#include "conedist/eig.hpp"
#include "conedist/matrix_io.hpp"
#include "conedist/version.hpp"

namespace {

using nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string checksum_hex(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

void write_manifest(const std::string& path, const std::string& command,
                    const ordered_json& parameters,
                    std::optional<std::uint64_t> seed,
                    std::string_view output_bytes) {
  ordered_json manifest{
      {"command", command},
      {"parameters", parameters},
      {"seed", seed ? ordered_json(*seed) : ordered_json(nullptr)},
      {"version", conedist::kVersion},
      {"output_checksum", checksum_hex(output_bytes)}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << manifest.dump(2) << '\n';
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

std::vector<int> parse_signs(const std::string& text, int expected) {
  if (static_cast<int>(text.size()) != expected) {
    throw std::invalid_argument("signs: expected " + std::to_string(expected) +
                                " characters over {+,-}, got '" + text + "'");
  }
  std::vector<int> signs(expected);
  for (int i = 0; i < expected; ++i) {
    if (text[i] == '+') {
      signs[i] = 1;
    } else if (text[i] == '-') {
      signs[i] = -1;
    } else {
      throw std::invalid_argument("signs: invalid character '" +
                                  std::string(1, text[i]) + "'");
    }
  }
  return signs;
}

// "A..B" or a single integer.
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("range: expected A..B or a single integer, got '" +
                                text + "'");
  }
}

struct MembershipArgs {
  std::string cone;
  std::string input;
  int k = 0;
  double tol = -1.0;  // < 0 means the relative default
  std::string manifest;
};

int run_membership(const MembershipArgs& args) {
  const conedist::SymMat x = conedist::read_sym_mat_file(args.input);
  const double tol = args.tol < 0.0 ? conedist::default_tol(x) : args.tol;

  conedist::MembershipReport report{conedist::Cone::kPsd, false, {}};
  if (args.cone == "psd") {
    report = conedist::psd_contains(x, tol);
  } else if (args.cone == "dd-star") {
    report = conedist::dd_star_contains(x, tol);
  } else if (args.cone == "sdd-star") {
    report = conedist::sdd_star_contains(x, tol);
  } else if (args.cone == "k-psd") {
    if (args.k == 0) {
      throw std::invalid_argument("membership: --cone k-psd requires --k");
    }
    report = conedist::k_psd_contains(x, args.k, tol);
  } else if (args.cone == "dd") {
    report = conedist::dd_primal_contains(x, tol);
  } else {
    throw std::invalid_argument("membership: unknown cone '" + args.cone +
                                "' (psd, dd-star, sdd-star, k-psd, dd)");
  }

  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"constraint", v.constraint},
                          {"residual", v.residual}});
  }
  ordered_json doc{{"cone", std::string(conedist::cone_name(report.cone))},
                   {"n", x.order()},
                   {"tol", tol},
                   {"verdict", report.verdict},
                   {"violations", violations}};
  const std::string output = doc.dump(2) + "\n";
  std::cout << output;

  if (!args.manifest.empty()) {
    ordered_json params{{"cone", args.cone},
                        {"input", args.input},
                        {"tol", tol}};
    if (args.cone == "k-psd") params["k"] = args.k;
    write_manifest(args.manifest, "membership", params, std::nullopt, output);
  }
  return report.verdict ? 0 : 2;
}

struct ProjectArgs {
  std::string input;
  std::string output;
  std::string manifest;
};

int run_project(const ProjectArgs& args) {
  const conedist::SymMat x = conedist::read_sym_mat_file(args.input);
  const conedist::PsdDistance result = conedist::dist_to_psd(x);
  const std::string matrix_text = conedist::to_matrix_text(result.projection);
  write_file(args.output, matrix_text);
  std::cout << conedist::format_double(result.distance) << '\n';

  if (!args.manifest.empty()) {
    ordered_json params{{"input", args.input}, {"output", args.output}};
    write_manifest(args.manifest, "project", params, std::nullopt, matrix_text);
  }
  return 0;
}

struct MakeArgs {
  std::string kind;
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  int q = 0;  // 1-based
  std::string signs;
  std::string output;
  std::string manifest;
};

int run_make(const MakeArgs& args) {
  conedist::SymMat m(1);
  if (args.kind == "g") {
    m = conedist::make_g(args.a, args.b, args.n);
  } else if (args.kind == "star") {
    m = conedist::make_star(args.n, parse_signs(args.signs, args.n - 1));
  } else if (args.kind == "worst-sdd") {
    m = conedist::sdd_trace_worst(args.n);
  } else if (args.kind == "candidate") {
    if (args.q < 1 || args.q > args.n) {
      throw std::invalid_argument("make candidate: --q must be in [1, n]");
    }
    conedist::ExtremeCandidate c{args.n, args.q - 1,
                                 parse_signs(args.signs, args.n - 1)};
    m = c.realize();
  } else {
    throw std::invalid_argument("make: unknown kind '" + args.kind + "'");
  }

  const std::string matrix_text = conedist::to_matrix_text(m);
  if (args.output.empty()) {
    std::cout << matrix_text;
  } else {
    write_file(args.output, matrix_text);
  }

  if (!args.manifest.empty()) {
    ordered_json params{{"kind", args.kind}, {"n", args.n}};
    if (args.kind == "g") {
      params["a"] = args.a;
      params["b"] = args.b;
    }
    if (args.kind == "star" || args.kind == "candidate") {
      params["signs"] = args.signs;
    }
    if (args.kind == "candidate") params["q"] = args.q;
    if (!args.output.empty()) params["output"] = args.output;
    write_manifest(args.manifest, "make", params, std::nullopt, matrix_text);
  }
  return 0;
}

struct VerifyArgs {
  int theorem = 0;
  std::string range;
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  int mixture = 4;
  std::string csv_path;
  std::string json_path;
  std::string manifest;
};

int run_verify(const VerifyArgs& args) {
  const auto [n_lo, n_hi] = parse_range(args.range);
  conedist::SamplerConfig cfg;
  cfg.seed = args.seed;
  cfg.count = args.samples;
  cfg.mixture = args.mixture;

  const conedist::TheoremReport report =
      conedist::verify_theorem(args.theorem, n_lo, n_hi, cfg);
  const std::string csv = conedist::to_csv(report);
  std::cout << csv;
  if (!args.csv_path.empty()) write_file(args.csv_path, csv);
  if (!args.json_path.empty()) write_file(args.json_path, conedist::to_json(report));

  if (!args.manifest.empty()) {
    ordered_json params{{"theorem", args.theorem},
                        {"n", args.range},
                        {"samples", args.samples},
                        {"seed", args.seed},
                        {"mixture", args.mixture}};
    write_manifest(args.manifest, "verify", params, args.seed, csv);
  }
  return report.any_violation() ? 2 : 0;
}

struct BoundsArgs {
  int n = 0;
  int k = 0;
  std::string manifest;
};

int run_bounds(const BoundsArgs& args) {
  const conedist::SnkBounds b = conedist::snk_bounds(args.n, args.k);
  ordered_json doc{{"n", args.n},
                   {"k", args.k},
                   {"lower", b.lower},
                   {"upper", b.upper}};
  const std::string output = doc.dump(2) + "\n";
  std::cout << output;

  if (!args.manifest.empty()) {
    ordered_json params{{"n", args.n}, {"k", args.k}};
    write_manifest(args.manifest, "bounds", params, std::nullopt, output);
  }
  return 0;
}

int run_app(int argc, char** argv) {
  CLI::App app{"Distances between the PSD cone and its dd-star / sdd-star "
               "outer approximations"};
  app.set_version_flag("--version", conedist::kVersion);
  app.require_subcommand(1);

  MembershipArgs membership;
  auto* membership_cmd = app.add_subcommand(
      "membership", "Test cone membership of a matrix file");
  membership_cmd->add_option("--cone", membership.cone,
                             "psd | dd-star | sdd-star | k-psd | dd")
      ->required();
  membership_cmd->add_option("--input", membership.input, "matrix file")
      ->required();
  membership_cmd->add_option("--k", membership.k,
                             "submatrix order for --cone k-psd");
  membership_cmd->add_option(
      "--tol", membership.tol,
      "absolute residual tolerance, default 1e-9 * max(1, |X|_F)");
  membership_cmd->add_option("--manifest", membership.manifest,
                             "write a run manifest to this path");

  ProjectArgs project;
  auto* project_cmd = app.add_subcommand(
      "project", "Project a matrix onto the PSD cone; prints the distance");
  project_cmd->add_option("--input", project.input, "matrix file")->required();
  project_cmd->add_option("--output", project.output, "projection file")
      ->required();
  project_cmd->add_option("--manifest", project.manifest,
                          "write a run manifest to this path");

  MakeArgs make;
  auto* make_cmd =
      app.add_subcommand("make", "Construct a named worst-case matrix");
  make_cmd->add_option("kind", make.kind, "g | star | worst-sdd | candidate")
      ->required();
  make_cmd->add_option("--a", make.a, "off-diagonal magnitude for g");
  make_cmd->add_option("--b", make.b, "diagonal value for g");
  make_cmd->add_option("--n", make.n, "matrix order")->required();
  make_cmd->add_option("--q", make.q,
                       "1-based distinguished index for candidate");
  make_cmd->add_option("--signs", make.signs,
                       "length n-1 string over {+,-}; use --signs=-... for a "
                       "leading minus");
  make_cmd->add_option("--output", make.output,
                       "output file (default: stdout)");
  make_cmd->add_option("--manifest", make.manifest,
                       "write a run manifest to this path");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Verify a closed-form distance value against witnesses, enumeration "
      "and seeded sampling; prints a CSV report");
  verify_cmd->add_option("--theorem", verify.theorem,
                         "1 = Frobenius-normalized distance of both sets, "
                         "2 = trace-normalized sdd-star distance, "
                         "3 = trace-normalized dd-star distance")
      ->required();
  verify_cmd->add_option("--n", verify.range, "order range A..B")->required();
  verify_cmd->add_option("--samples", verify.samples,
                         "samples per order (default 1000)");
  verify_cmd->add_option("--seed", verify.seed, "PRNG seed")->required();
  verify_cmd->add_option("--mixture", verify.mixture,
                         "candidates per dd-star trace sample (default 4)");
  verify_cmd->add_option("--csv", verify.csv_path, "also write the CSV here");
  verify_cmd->add_option("--json", verify.json_path,
                         "also write a JSON mirror here");
  verify_cmd->add_option("--manifest", verify.manifest,
                         "write a run manifest to this path");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Closed-form distance bounds for the k-PSD closure");
  bounds_cmd->add_option("--n", bounds.n, "matrix order")->required();
  bounds_cmd->add_option("--k", bounds.k, "submatrix order")->required();
  bounds_cmd->add_option("--manifest", bounds.manifest,
                         "write a run manifest to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (membership_cmd->parsed()) return run_membership(membership);
  if (project_cmd->parsed()) return run_project(project);
  if (make_cmd->parsed()) return run_make(make);
  if (verify_cmd->parsed()) return run_verify(verify);
  if (bounds_cmd->parsed()) return run_bounds(bounds);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
