#include "holecert/tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "holecert/certificate.hpp"
#include "holecert/constructions.hpp"
#include "holecert/error.hpp"
#include "holecert/exact.hpp"
#include "holecert/holes.hpp"
#include "holecert/text_format.hpp"
#include "holecert/tools/scan.hpp"
#include "holecert/verifier.hpp"

namespace holecert::tools {

namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

int input_error(Streams io, const std::string& path, const std::exception& e) {
  io.err << "error: " << path << ": " << e.what() << '\n';
  return kExitInput;
}

int cmd_analyze(Streams io, const std::string& path, std::size_t cap) {
  Graph g;
  try {
    g = load_graph(path);
  } catch (const Error& e) {
    return input_error(io, path, e);
  }
  io.out << render_report(analyze(g, cap));
  return kExitOk;
}

int cmd_certify(Streams io, const std::string& path, const std::string& out_path,
                const CertifyOptions& options) {
  Graph g;
  try {
    g = load_graph(path);
  } catch (const Error& e) {
    return input_error(io, path, e);
  }
  Certificate cert;
  try {
    cert = certify(g, options);
  } catch (const CertifyBudgetExhausted& e) {
    io.err << "budget exhausted: " << e.what() << '\n';
    if (!e.partial_derivation().empty()) io.err << "partial derivation:\n" << e.partial_derivation();
    return kExitBudget;
  } catch (const BudgetExhausted& e) {
    io.err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  }
  if (auto verdict = verify::verify_certificate(g, cert); !verdict) {
    io.err << "internal certificate rejected (clause " << verdict.failed_clause
           << "): " << verdict.diagnostic << '\n';
    return kExitRejected;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << serialize_certificate(cert);
  if (!file.flush()) {
    io.err << "error: cannot write " << out_path << '\n';
    return kExitInput;
  }
  io.out << "k<=" << cert.k << " fallback=" << (cert.fallback_used ? 1 : 0) << '\n';
  return kExitOk;
}

int cmd_exact(Streams io, const std::string& path, const SolveBudget& budget,
              const std::string& out_path) {
  Graph g;
  try {
    g = load_graph(path);
  } catch (const Error& e) {
    return input_error(io, path, e);
  }
  ExactResult result;
  try {
    result = exact_k(g, budget);
  } catch (const BudgetExhausted& e) {
    io.err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  }
  io.out << "k=" << result.k << '\n';
  const std::string witness = serialize_digraph(result.witness);
  if (out_path.empty()) {
    io.out << witness;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << witness;
  if (!file.flush()) {
    io.err << "error: cannot write " << out_path << '\n';
    return kExitInput;
  }
  return kExitOk;
}

int cmd_verify(Streams io, const std::string& graph_path, const std::string& cert_path) {
  Graph g;
  Certificate cert;
  try {
    g = load_graph(graph_path);
  } catch (const Error& e) {
    return input_error(io, graph_path, e);
  }
  try {
    cert = parse_certificate(read_text_file(cert_path), g);
  } catch (const Error& e) {
    return input_error(io, cert_path, e);
  }
  auto verdict = verify::verify_certificate(g, cert);
  if (!verdict) {
    io.err << "rejected (clause " << verdict.failed_clause << "): " << verdict.diagnostic << '\n';
    return kExitRejected;
  }
  io.out << "accepted k<=" << cert.k << '\n';
  return kExitOk;
}

int cmd_compete(Streams io, const std::string& path) {
  Digraph d;
  try {
    d = parse_digraph(read_text_file(path));
  } catch (const Error& e) {
    return input_error(io, path, e);
  }
  io.out << serialize_graph(verify::competition_graph(d));
  return kExitOk;
}

int cmd_scan(Streams io, const ScanConfig& config) {
  if (auto why = validate(config)) {
    io.err << "error: invalid scan config: " << *why << '\n';
    return kExitInput;
  }
  auto summary = run_scan(config);
  write_table(io.out, config, summary);
  return summary.clean() ? kExitOk : (summary.violations ? kExitRejected : kExitBudget);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Streams io{out, err};
  CLI::App app{"Certified competition-number bounds for graphs with few holes", "holecert"};
  app.require_subcommand(1);

  std::string file;
  std::string second;
  std::string out_path;
  std::size_t cap = 3;
  SolveBudget budget;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report holes, X sets and structural checks");
  analyze_cmd->add_option("file", file, "Graph file")->required();
  analyze_cmd->add_option("--cap", cap, "Stop after this many holes")->check(CLI::PositiveNumber);

  auto* certify_cmd = app.add_subcommand("certify", "Build and verify a certificate");
  certify_cmd->add_option("file", file, "Graph file")->required();
  certify_cmd->add_option("-o,--output", out_path, "Certificate output path")->required();
  certify_cmd->add_option("--cap", cap, "Hole enumeration cap")->check(CLI::Range(2, 1000));
  certify_cmd->add_option("--nodes", budget.node_limit, "Exact solver node limit");
  certify_cmd->add_option("--max-k", budget.max_k, "Largest k the exact solver tries");

  auto* exact_cmd = app.add_subcommand("exact", "Compute k(G) with the exact solver");
  exact_cmd->add_option("file", file, "Graph file")->required();
  exact_cmd->add_option("--max-k", budget.max_k, "Largest k to try");
  exact_cmd->add_option("--nodes", budget.node_limit, "Search node limit");
  exact_cmd->add_option("-o,--output", out_path, "Write the witness here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("graph", file, "Graph file")->required();
  verify_cmd->add_option("certificate", second, "Certificate file")->required();

  auto* compete_cmd = app.add_subcommand("compete", "Print the competition graph of a digraph");
  compete_cmd->add_option("file", file, "Digraph file")->required();

  ScanConfig scan;
  std::string range = "1..5";
  std::string mode = "exhaustive";
  std::string p = "1/2";
  auto* scan_cmd = app.add_subcommand("scan", "Cross-check certificates and exact k on a corpus");
  scan_cmd->add_option("--n", range, "Vertex counts A..B")->required();
  scan_cmd->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  scan_cmd->add_option("--samples", scan.samples, "Random instances");
  scan_cmd->add_option("--p", p, "Edge probability, decimal or num/den");
  scan_cmd->add_option("--seed", scan.seed, "Random seed");
  scan_cmd->add_option("--cap", scan.hole_cap, "Hole enumeration cap");
  scan_cmd->add_option("--nodes", budget.node_limit, "Exact solver node limit per instance");
  scan_cmd->add_option("--max-k", budget.max_k, "Largest k the exact solver tries");
  scan_cmd->add_option("--threads", scan.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(io, file, cap);
    if (*certify_cmd) return cmd_certify(io, file, out_path, CertifyOptions{cap, budget});
    if (*exact_cmd) return cmd_exact(io, file, budget, out_path);
    if (*verify_cmd) return cmd_verify(io, file, second);
    if (*compete_cmd) return cmd_compete(io, file);
    if (*scan_cmd) {
      std::tie(scan.n_min, scan.n_max) = parse_range(range);
      scan.mode = mode == "random" ? ScanMode::Random : ScanMode::Exhaustive;
      scan.p = corpus::Rational::parse(p);
      scan.budget = budget;
      return cmd_scan(io, scan);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace holecert::tools
