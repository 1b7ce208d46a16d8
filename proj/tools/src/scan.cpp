#include "holecert/tools/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <random>
#include <stdexcept>
#include <thread>

#include "holecert/constructions.hpp"
#include "holecert/error.hpp"
#include "holecert/holes.hpp"
#include "holecert/verifier.hpp"

namespace holecert::tools {

namespace {

constexpr std::size_t kExhaustiveMax = 6;
constexpr std::size_t kRandomMax = kExactMaxVertices;

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw PreconditionError("bad vertex count '" + std::string(s) + "'");
  }
  return v;
}

std::vector<Graph> build_corpus(const ScanConfig& config) {
  std::vector<Graph> out;
  if (config.mode == ScanMode::Exhaustive) {
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
      const std::uint64_t total = std::uint64_t{1} << corpus::pair_count(n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        out.push_back(corpus::graph_from_mask(n, mask));
      }
    }
    return out;
  }
  std::mt19937_64 rng(config.seed);
  const std::size_t span = config.n_max - config.n_min + 1;
  for (std::size_t i = 0; i < config.samples; ++i) {
    std::size_t n = config.n_min + rng() % span;
    out.push_back(corpus::random_graph(n, config.p, rng));
  }
  return out;
}

void flag(ScanRow& row, const std::string& why) {
  row.status = RowStatus::Violation;
  if (!row.detail.empty()) row.detail += ';';
  row.detail += why;
}

}  // namespace

std::optional<std::string> validate(const ScanConfig& config) {
  if (config.n_min == 0) return "vertex counts start at 1";
  if (config.n_min > config.n_max) return "empty vertex range";
  if (config.mode == ScanMode::Exhaustive && config.n_max > kExhaustiveMax) {
    return "exhaustive mode is limited to n <= " + std::to_string(kExhaustiveMax);
  }
  if (config.mode == ScanMode::Random) {
    if (config.n_max > kRandomMax) return "random mode is limited to n <= " + std::to_string(kRandomMax);
    if (config.samples == 0) return "samples must be positive";
  }
  if (config.p.den == 0 || config.p.num > config.p.den) return "p must lie in [0, 1]";
  if (config.hole_cap < 2) return "hole cap must be at least 2";
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::size_t n = parse_size(text);
    return {n, n};
  }
  return {parse_size(std::string_view(text).substr(0, dots)),
          parse_size(std::string_view(text).substr(dots + 2))};
}

ScanRow scan_one(const Graph& g, const ScanConfig& config) {
  ScanRow row;
  row.n = g.size();
  row.m = g.edge_count();
  row.code = corpus::edge_code(g);
  auto holes = enumerate_holes(g, config.hole_cap);
  row.capped = holes.capped;
  row.holes = holes.holes.size();
  const bool bounded = !row.capped && row.holes <= 2;
  bool budget_hit = false;

  if (bounded) {
    try {
      CertifyOptions options{config.hole_cap, config.budget};
      Certificate cert = certify(g, options);
      auto verdict = verify::verify_certificate(g, cert);
      row.cert_k = cert.k;
      row.fallback = cert.fallback_used;
      if (!verdict) flag(row, "certificate rejected: " + verdict.diagnostic);
      if (cert.k > row.holes + 1) flag(row, "certificate k above bound");
    } catch (const BudgetExhausted&) {
      budget_hit = true;
    }
  }

  try {
    row.exact_k = exact_k(g, config.budget).k;
  } catch (const BudgetExhausted&) {
    budget_hit = true;
  }
  if (row.exact_k) {
    if (bounded && *row.exact_k > row.holes + 1) flag(row, "exact k above bound");
    if (row.cert_k && *row.exact_k > *row.cert_k) flag(row, "exact k above certificate k");
    if (!bounded && !row.capped && *row.exact_k > row.holes + 1) row.conjecture_exceeded = true;
  }
  if (budget_hit && row.status == RowStatus::Ok) row.status = RowStatus::BudgetExhausted;
  return row;
}

ScanSummary run_scan(const ScanConfig& config) {
  if (auto why = validate(config)) throw PreconditionError("scan: " + *why);
  const std::vector<Graph> graphs = build_corpus(config);
  ScanSummary summary;
  summary.rows.resize(graphs.size());

  std::size_t workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(graphs.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      summary.rows[i] = scan_one(graphs[i], config);
      summary.rows[i].index = i;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  for (const auto& row : summary.rows) {
    if (row.status == RowStatus::Violation) ++summary.violations;
    if (row.status == RowStatus::BudgetExhausted) ++summary.budget_exhausted;
    if (row.fallback.value_or(false)) ++summary.fallbacks;
    if (row.conjecture_exceeded) ++summary.conjecture_exceeded;
    if (row.exact_k) {
      std::size_t h = row.capped ? config.hole_cap + 1 : row.holes;
      ++summary.distribution[{h, *row.exact_k}];
    }
  }
  return summary;
}

void write_table(std::ostream& os, const ScanConfig& config, const ScanSummary& summary) {
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  os << "# scan mode=" << (config.mode == ScanMode::Exhaustive ? "exhaustive" : "random")
     << " n=" << config.n_min << ".." << config.n_max;
  if (config.mode == ScanMode::Random) {
    os << " samples=" << config.samples << " p=" << config.p.num << '/' << config.p.den
       << " seed=" << config.seed;
  }
  os << " cap=" << config.hole_cap << '\n';
  os << "# index n m holes cert_k exact_k fallback status edges\n";
  for (const auto& row : summary.rows) {
    os << row.index << ' ' << row.n << ' ' << row.m << ' '
       << (row.capped ? ">" + std::to_string(config.hole_cap) : std::to_string(row.holes)) << ' '
       << opt(row.cert_k) << ' ' << opt(row.exact_k) << ' '
       << (row.fallback ? (*row.fallback ? "1" : "0") : "-") << ' ';
    switch (row.status) {
      case RowStatus::Ok: os << "ok"; break;
      case RowStatus::Violation: os << "VIOLATION(" << row.detail << ')'; break;
      case RowStatus::BudgetExhausted: os << "budget"; break;
    }
    os << ' ' << row.code << '\n';
  }
  for (const auto& [key, count] : summary.distribution) {
    os << "dist holes=";
    if (key.first > config.hole_cap) {
      os << '>' << config.hole_cap;
    } else {
      os << key.first;
    }
    os << " exact_k=" << key.second << " count=" << count << '\n';
  }
  os << "instances=" << summary.rows.size() << '\n';
  os << "conjecture_exceeded=" << summary.conjecture_exceeded << '\n';
  os << "violations=" << summary.violations << '\n';
  os << "fallbacks=" << summary.fallbacks << '\n';
  os << "budget_exhausted=" << summary.budget_exhausted << '\n';
}

}  // namespace holecert::tools
