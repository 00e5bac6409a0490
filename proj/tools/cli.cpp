// Copyright 2026 The kpell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kpell/counting.hpp"
#include "kpell/embed.hpp"
#include "kpell/error.hpp"
#include "kpell/export.hpp"
#include "kpell/graph.hpp"
#include "kpell/seqs.hpp"

namespace kpell::cli {
namespace {

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Json poly_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(big(c));
  return a;
}

Json check(const char* name, const char* statement, const char* status, Json data = Json::object()) {
  Json c;
  c["check"] = name;
  c["statement"] = statement;
  c["status"] = status;
  c["data"] = std::move(data);
  return c;
}

Json skipped(const char* name, const char* statement, const std::string& reason) {
  return check(name, statement, "skipped", Json{{"reason", reason}});
}

const char* pass_if(bool ok) { return ok ? "pass" : "fail"; }

class Stopwatch {
 public:
  explicit Stopwatch(Json* sink) : sink_(sink) {}
  void lap(const char* phase) {
    auto now = std::chrono::steady_clock::now();
    if (sink_) (*sink_)[phase] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  Json* sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Json verify_instance(unsigned n, unsigned k, const VerifyOptions& o) {
  Json record;
  record["n"] = n;
  record["k"] = k;
  Json timings = Json::object();
  Stopwatch clock(o.timings ? &timings : nullptr);
  Json checks = Json::array();

  const LabeledGraph g = build_kpell_graph(n, k, o.budget);
  const std::uint64_t count = g.num_vertices();
  record["vertices"] = count;
  record["edges"] = g.num_edges();
  clock.lap("build");

  {
    const BigInt expected = k_fibonacci(n + 1, k);
    bool ordered = true;
    for (Vertex v = 1; v < count && ordered; ++v) {
      auto a = g.word(v - 1), b = g.word(v);
      ordered = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    checks.push_back(check("vertex_count", "|V| = F(n+1,k), words in lexicographic order",
                           pass_if(expected == count && ordered),
                           {{"built", count}, {"expected", big(expected)}, {"ordered", ordered}}));
  }

  {
    const BigInt rec = edge_count_recurrence(n, k);
    const BigInt sum = edge_count_sum_formula(n, k);
    const BigInt gf = gf_coefficients(edge_count_gf(k), n + 1)[n];
    const bool ok = rec == g.num_edges() && sum == g.num_edges() && gf == g.num_edges();
    checks.push_back(check("edge_count", "|E| = recurrence = sum formula = generating function coefficient",
                           pass_if(ok),
                           {{"built", g.num_edges()}, {"recurrence", big(rec)}, {"sum", big(sum)}, {"gf", big(gf)}}));
  }
  clock.lap("counts");

  if (count <= o.bfs_budget) {
    const EccentricityProfile p = eccentricity_profile(g, o.threads, o.bfs_budget);
    const auto rad = closed_form_radius(n, k), diam = closed_form_diameter(n, k);
    Json data{{"radius", p.radius}, {"expected_radius", rad}, {"diameter", p.diameter},
              {"expected_diameter", diam}, {"bfs_runs", p.bfs_runs}};
    bool ok = p.radius == rad && p.diameter == diam;
    if (n >= 1) {
      const std::vector<Letter> w(n, static_cast<Letter>(k / 2));
      const Vertex witness = *g.find(w);
      data["witness"] = g.label(witness);
      data["witness_ecc"] = p.ecc[witness];
      ok = ok && p.ecc[witness] == rad;
    }
    checks.push_back(check("radius_diameter", "rad = floor(kn/2), diam = nk - ceil(n/2)", pass_if(ok), data));

    if (n >= 2) {
      const auto predicted = predicted_center(g);
      const BigInt formula = center_family_size(n, k);
      const bool same = predicted == p.center && formula == p.center.size();
      const char* family = k % 2 == 0 ? "Theta" : (n % 2 == 0 ? "Phi" : "Psi");
      checks.push_back(check("center", "BFS center equals the Theta/Phi/Psi word family", pass_if(same),
                             {{"family", family},
                              {"center_size", p.center.size()},
                              {"predicted_size", predicted.size()},
                              {"formula_size", big(formula)}}));
      if (k % 2 == 0) {
        checks.push_back(check("center_fibonacci_cube", "k even: center induces the Fibonacci cube of dimension n",
                               pass_if(center_induces_fibonacci_cube(g, p.center)),
                               {{"center_size", p.center.size()}}));
      }
    } else {
      checks.push_back(check("center", "n < 2: center computed by BFS only", "pass",
                             {{"center_size", p.center.size()}}));
    }
    if (n >= 1) {
      checks.push_back(check("periphery_shape",
                             "periphery = words built from 00 and kk (odd n: plus one 0 or k-1)",
                             pass_if(verify_periphery_shape(g, p)), {{"periphery_size", p.periphery.size()}}));
    }
  } else {
    const std::string why = "over BFS budget " + std::to_string(o.bfs_budget);
    checks.push_back(skipped("radius_diameter", "rad = floor(kn/2), diam = nk - ceil(n/2)", why));
    checks.push_back(skipped("center", "BFS center equals the Theta/Phi/Psi word family", why));
  }
  clock.lap("metrics");

  {
    const IntPolynomial rec = cube_polynomial_recurrence(n, k);
    const IntPolynomial closed = cube_polynomial_closed_form(n, k);
    Json data{{"recurrence", poly_json(rec)}};
    bool ok = rec == closed && rec.degree() == static_cast<int>(n) && rec.coefficient(0) == count &&
              rec.coefficient(1) == g.num_edges();
    data["closed_form_agrees"] = rec == closed;
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < count; ++v) max_deg = std::max(max_deg, g.degree(v));
    if (count <= o.cube_budget && max_deg <= 40) {
      const IntPolynomial brute = cube_polynomial_bruteforce(g, {o.cube_budget, 40, o.threads});
      data["bruteforce_agrees"] = brute == rec;
      ok = ok && brute == rec;
    } else {
      data["bruteforce_agrees"] = nullptr;
    }
    if (n <= 12) {
      const bool gf_ok = gf_coefficients(cube_polynomial_gf(k), n + 1)[n] == rec;
      data["gf_agrees"] = gf_ok;
      ok = ok && gf_ok;
    }
    checks.push_back(check("cube_polynomial", "brute force = recurrence = closed form = generating function",
                           pass_if(ok), data));
  }
  clock.lap("cubes");

  {
    const DegreeCensus census = degree_census(g);
    bool formula_ok = true;
    std::string mismatch;
    std::uint64_t degree_sum = 0;
    for (Vertex v = 0; v < count; ++v) {
      degree_sum += g.degree(v);
      if (formula_ok && degree_formula(g.word(v), k) != g.degree(v)) {
        formula_ok = false;
        mismatch = g.label(v);
      }
    }
    Json hist = Json::object();
    for (const auto& [d, c] : census.histogram) hist[std::to_string(d)] = c;
    Json data{{"histogram", hist}, {"min", census.min_degree}, {"max", census.max_degree}};
    bool ok = formula_ok && degree_sum == 2 * g.num_edges();
    if (!formula_ok) data["formula_mismatch"] = mismatch;
    if (n >= 1) {
      const std::size_t delta = k == 2 ? 2 * n - 1 : 2 * n;
      const std::size_t small = (n + 1) / 2;
      data["expected_max"] = delta;
      data["expected_min"] = small;
      ok = ok && census.max_degree == delta && census.min_degree == small;
    }
    checks.push_back(check("degrees", "degree formula = adjacency degree; max and min degree closed forms",
                           pass_if(ok), data));
    if (k >= 3 && n >= 1) {
      const DeltaMinusOneRecord r = count_degree_delta_minus_1(g);
      const char* status = !r.shape_matches ? "fail" : (r.formula_matches() ? "pass" : "informational");
      Json d{{"formula", big(r.formula)},
             {"census", r.census},
             {"swapped_exponent_formula", big(r.swapped)},
             {"shape_matches", r.shape_matches},
             {"formula_matches", r.formula_matches()}};
      if (!r.formula_matches()) {
        d["note"] =
            "n(n-1)^(k-2) + sum (n-l+1)(n-l)^(k-2) disagrees with the census, which is ground truth; "
            "n(k-2)^(n-1) + sum (n-l+1)(k-2)^(n-l) is reported alongside";
      }
      checks.push_back(check("delta_minus_one", "count of degree 2n-1 vertices", status, d));
    }
  }
  clock.lap("degrees");

  if (count <= o.median_budget) {
    MedianOptions mo;
    mo.sample_size = o.median_sample;
    mo.seed = o.seed;
    mo.matrix_budget = o.median_budget;
    mo.threads = o.threads;
    const MedianReport m = verify_median_graph(g, mo);
    Json data{{"exhaustive", m.exhaustive}, {"checked", m.checked}, {"seed", m.seed}};
    if (m.counterexample) {
      const auto& t = *m.counterexample;
      data["counterexample"] = {g.label(t[0]), g.label(t[1]), g.label(t[2])};
    }
    checks.push_back(check("median", "every checked triple has exactly one median", pass_if(m.all_unique), data));
  } else {
    checks.push_back(skipped("median", "every checked triple has exactly one median",
                             "over median budget " + std::to_string(o.median_budget)));
  }
  clock.lap("median");

  if (n >= 1 && count <= o.bfs_budget) {
    const EmbeddingCertificate c = verify_embedding(g, o.threads);
    Json data{{"target_dim", c.target_dim},       {"images_valid", c.images_valid},
              {"injective", c.injective},         {"edges_preserved", c.edges_preserved},
              {"checked_edges", c.checked_edges}, {"target_materialized", c.target_materialized}};
    if (!c.valid()) data["failure"] = c.failure;
    checks.push_back(check("embedding", "phi embeds the graph into the Fibonacci cube of dimension (2k-2)n-1",
                           pass_if(c.valid()), data));
  }
  clock.lap("embedding");

  if (count <= o.hamilton_budget) {
    bool ok;
    Json data;
    try {
      const auto path = hamiltonian_path(g);
      ok = validate_path(g, path);
      data = {{"first", g.label(path.front())}, {"last", g.label(path.back())}};
    } catch (const InternalError& e) {
      ok = false;
      data = {{"error", e.what()}};
    }
    checks.push_back(check("hamiltonian_path", "constructed vertex order is a Hamiltonian path", pass_if(ok), data));
  } else {
    checks.push_back(skipped("hamiltonian_path", "constructed vertex order is a Hamiltonian path",
                             "over Hamiltonian path budget " + std::to_string(o.hamilton_budget)));
  }
  clock.lap("hamiltonian");

  record["checks"] = std::move(checks);
  if (o.timings) record["timings_ms"] = std::move(timings);
  return record;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
}

unsigned single_k(const std::string& text) {
  auto ks = parse_k_set(text);
  if (ks.size() != 1) throw DomainError("this command needs exactly one k, got \"" + text + "\"");
  return ks.front();
}

}  // namespace

std::vector<unsigned> parse_k_set(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4) {
      throw DomainError("bad k value \"" + s + "\"");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(item));
    } else {
      unsigned lo = number(item.substr(0, dash)), hi = number(item.substr(dash + 1));
      if (lo > hi) throw DomainError("empty k range \"" + item + "\"");
      for (unsigned k = lo; k <= hi; ++k) out.push_back(k);
    }
  }
  if (out.empty()) throw DomainError("empty k set");
  for (unsigned k : out) {
    if (k < 2 || k > kMaxK) throw DomainError("k must lie in [2, " + std::to_string(kMaxK) + "]");
  }
  return out;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("KPELL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultVertexBudget;
}

Json run_verify(const VerifyOptions& o) {
  Json report;
  report["tool"] = "kpell";
  report["version"] = kToolVersion;
  report["seed"] = o.seed;
  report["options"] = {{"n_max", o.n_max},
                       {"k", o.k_set},
                       {"budget", o.budget},
                       {"bfs_budget", o.bfs_budget},
                       {"cube_budget", o.cube_budget},
                       {"median_budget", o.median_budget},
                       {"hamilton_budget", o.hamilton_budget},
                       {"median_sample", o.median_sample}};
  Json records = Json::array();
  Json over = Json::array();
  for (unsigned k : o.k_set) {
    for (unsigned n = 0; n <= o.n_max; ++n) {
      const BigInt size = kpell_count(n, k);
      if (size > o.budget) {
        over.push_back({{"n", n}, {"k", k}, {"vertices", big(size)}});
        continue;
      }
      records.push_back(verify_instance(n, k, o));
    }
  }
  std::uint64_t total = 0, passed = 0, failed = 0, info = 0, skip = 0;
  for (const auto& r : records) {
    for (const auto& c : r["checks"]) {
      ++total;
      const auto s = c["status"].get<std::string>();
      if (s == "pass") ++passed;
      else if (s == "fail") ++failed;
      else if (s == "informational") ++info;
      else ++skip;
    }
  }
  report["records"] = std::move(records);
  report["over_budget"] = std::move(over);
  report["summary"] = {{"checks", total},       {"passed", passed}, {"failed", failed},
                       {"informational", info}, {"skipped", skip},  {"ok", failed == 0}};
  return report;
}

bool report_passed(const Json& report) { return report["summary"]["failed"].get<std::uint64_t>() == 0; }

std::string render_verify_text(const Json& report) {
  std::ostringstream out;
  for (const auto& r : report["records"]) {
    out << "n=" << r["n"] << " k=" << r["k"] << "  |V|=" << r["vertices"] << " |E|=" << r["edges"] << "\n";
    for (const auto& c : r["checks"]) {
      out << "  " << std::left << std::setw(14) << c["status"].get<std::string>() << std::setw(24)
          << c["check"].get<std::string>() << c["statement"].get<std::string>() << "\n";
      if (c["status"] == "informational" && c["data"].contains("note")) {
        out << "  " << std::setw(14) << "" << "formula " << c["data"]["formula"] << " vs census "
            << c["data"]["census"] << ": " << c["data"]["note"].get<std::string>() << "\n";
      }
    }
  }
  for (const auto& s : report["over_budget"]) {
    out << "n=" << s["n"] << " k=" << s["k"] << "  skipped: " << s["vertices"] << " vertices over budget\n";
  }
  const auto& s = report["summary"];
  out << "checks " << s["checks"] << ", passed " << s["passed"] << ", failed " << s["failed"] << ", informational "
      << s["informational"] << ", skipped " << s["skipped"] << "\n";
  return out.str();
}

Json metrics_report(unsigned n, unsigned k, std::uint64_t seed, unsigned threads, std::uint64_t bfs_budget,
                    std::uint64_t median_budget) {
  const LabeledGraph g = build_kpell_graph(n, k);
  const EccentricityProfile p = eccentricity_profile(g, threads, bfs_budget);
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["radius"] = p.radius;
  j["diameter"] = p.diameter;
  j["center_size"] = p.center.size();
  if (n >= 2) j["center_matches_prediction"] = predicted_center(g) == p.center;
  else j["center_matches_prediction"] = nullptr;
  if (g.num_vertices() <= median_budget) {
    MedianOptions mo;
    mo.seed = seed;
    mo.threads = threads;
    mo.matrix_budget = median_budget;
    const MedianReport m = verify_median_graph(g, mo);
    j["median_checked"] = m.checked;
    j["median_unique"] = m.all_unique;
  } else {
    j["median_checked"] = 0;
    j["median_unique"] = nullptr;
  }
  j["seed"] = seed;
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct k-Pell graphs and Fibonacci cubes and check their invariants.", "kpell"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  unsigned n = 2;
  std::string k_text = "2";
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = default_budget();
  unsigned threads = 0;
  bool json = false;
  std::string out_path;
  app.add_option("-n,--n", n, "Word length (n, or m for Fibonacci cubes)")->capture_default_str();
  app.add_option("-k,--k", k_text, "k, or a set such as 2,3 or 2-6 for verify and table-center")
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--budget", budget, "Vertex budget for graph construction (env KPELL_BUDGET)")
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_option("--out", out_path, "Write the main output to this file");

  std::string format = "dot";
  bool fibonacci = false;
  auto* generate = app.add_subcommand("generate", "Write a graph as DOT, GraphML or adjacency JSON");
  generate->add_option("--format", format, "dot, graphml or json")
      ->check(CLI::IsMember({"dot", "graphml", "json"}))
      ->capture_default_str();
  generate->add_flag("--fibonacci", fibonacci, "Build the Fibonacci cube of dimension --n instead");

  VerifyOptions vo;
  bool k_given = false;
  auto* verify = app.add_subcommand("verify", "Check every invariant for all n <= n-max and k in the set");
  verify->add_option("--n-max", vo.n_max, "Largest n")->capture_default_str();
  verify->add_option("--bfs-budget", vo.bfs_budget, "Vertex limit for eccentricities and embedding")
      ->capture_default_str();
  verify->add_option("--cube-budget", vo.cube_budget, "Vertex limit for brute-force cube counting")
      ->capture_default_str();
  verify->add_option("--median-budget", vo.median_budget, "Vertex limit for median checks")->capture_default_str();
  verify->add_option("--hamilton-budget", vo.hamilton_budget, "Vertex limit for Hamiltonian paths")
      ->capture_default_str();
  verify->add_option("--median-sample", vo.median_sample, "Sampled triples above 300 vertices")
      ->capture_default_str();
  verify->add_flag("--timings", vo.timings, "Include wall-clock timings (report no longer reproducible)");

  unsigned table_n_max = 10;
  std::uint64_t table_bfs_budget = kDefaultBfsBudget;
  auto* table = app.add_subcommand("table-center", "Center sizes by BFS next to the predicted sizes");
  table->add_option("--n-max", table_n_max, "Largest n")->capture_default_str();
  table->add_option("--bfs-budget", table_bfs_budget, "Vertex limit for eccentricities")->capture_default_str();

  auto* cube = app.add_subcommand("cube-poly", "Cube polynomial by recurrence, closed form and brute force");
  auto* degrees = app.add_subcommand("degrees", "Degree census and the degree 2n-1 count");
  auto* embed = app.add_subcommand("embed", "Certificate for the embedding into a Fibonacci cube");
  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian path of the graph");
  std::uint64_t metrics_bfs_budget = kDefaultBfsBudget, metrics_median_budget = kDefaultMatrixBudget;
  auto* metrics = app.add_subcommand("metrics", "Radius, diameter, center and median summary");
  metrics->add_option("--bfs-budget", metrics_bfs_budget)->capture_default_str();
  metrics->add_option("--median-budget", metrics_median_budget)->capture_default_str();

  std::uint64_t node_budget = 10'000'000;
  unsigned max_m = 0;
  auto* probe = app.add_subcommand("probe", "Experimental searches on tiny instances");
  probe->require_subcommand(1);
  auto* probe_cycle = probe->add_subcommand("hamilton-cycle", "Exhaustive Hamiltonian cycle search");
  auto* probe_dim = probe->add_subcommand("embed-dim", "Smallest Fibonacci cube containing the graph");
  probe->add_option("--node-budget", node_budget, "Search node limit")->capture_default_str();
  probe_dim->add_option("--max-m", max_m, "Largest dimension to try (default (2k-2)n-1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  k_given = app.count("--k") > 0;

  try {
    std::ostringstream text;
    int status = kOk;
    if (generate->parsed()) {
      const LabeledGraph g = fibonacci ? build_fib_cube(n, budget) : build_kpell_graph(n, single_k(k_text), budget);
      if (format == "dot") text << to_dot(g);
      else if (format == "graphml") text << to_graphml(g);
      else text << to_adjacency_json(g);
    } else if (verify->parsed()) {
      vo.k_set = k_given ? parse_k_set(k_text) : std::vector<unsigned>{2, 3};
      vo.seed = seed;
      vo.budget = budget;
      vo.threads = threads;
      const Json report = run_verify(vo);
      if (json) text << report.dump(2) << "\n";
      else text << render_verify_text(report);
      if (!report_passed(report)) status = kCheckFailed;
    } else if (table->parsed()) {
      const auto ks = k_given ? parse_k_set(k_text) : parse_k_set("2-9");
      Json rows = Json::array();
      bool all_match = true;
      text << "k \\ n";
      for (unsigned m = 1; m <= table_n_max; ++m) text << std::setw(7) << m;
      text << "\n";
      for (unsigned k : ks) {
        Json cells = Json::array();
        text << std::left << std::setw(5) << k << std::right;
        for (unsigned m = 1; m <= table_n_max; ++m) {
          if (kpell_count(m, k) > table_bfs_budget) {
            text << std::setw(7) << "-";
            continue;
          }
          const LabeledGraph g = build_kpell_graph(m, k, budget);
          const auto p = eccentricity_profile(g, threads, table_bfs_budget);
          Json cell{{"n", m}, {"bfs", p.center.size()}};
          std::string shown = std::to_string(p.center.size());
          if (m >= 2) {
            const BigInt predicted = center_family_size(m, k);
            cell["predicted"] = big(predicted);
            const bool match = predicted == p.center.size() && predicted_center(g) == p.center;
            cell["match"] = match;
            if (!match) {
              all_match = false;
              shown += "!";
            }
          }
          text << std::setw(7) << shown;
          cells.push_back(cell);
        }
        text << "\n";
        rows.push_back({{"k", k}, {"cells", cells}});
      }
      text << (all_match ? "all BFS centers match the predicted families\n"
                         : "cells marked ! differ from the predicted family\n");
      if (json) {
        text.str("");
        text << Json{{"rows", rows}, {"all_match", all_match}}.dump(2) << "\n";
      }
      if (!all_match) status = kCheckFailed;
    } else if (cube->parsed()) {
      const unsigned k = single_k(k_text);
      const IntPolynomial rec = cube_polynomial_recurrence(n, k);
      const IntPolynomial closed = cube_polynomial_closed_form(n, k);
      std::optional<IntPolynomial> brute;
      if (kpell_count(n, k) <= 5'000) {
        const LabeledGraph g = build_kpell_graph(n, k, budget);
        try {
          brute = cube_polynomial_bruteforce(g, {5'000, 40, threads});
        } catch (const BudgetError&) {
        }
      }
      const bool ok = rec == closed && (!brute || *brute == rec);
      if (json) {
        Json j{{"n", n}, {"k", k}, {"recurrence", poly_json(rec)}, {"closed_form", poly_json(closed)}};
        j["bruteforce"] = brute ? poly_json(*brute) : Json(nullptr);
        j["agree"] = ok;
        text << j.dump(2) << "\n";
      } else {
        text << "recurrence   " << rec.to_string() << "\n";
        text << "closed form  " << closed.to_string() << "\n";
        text << "brute force  " << (brute ? brute->to_string() : std::string("(over budget)")) << "\n";
        text << (ok ? "all routes agree\n" : "routes DISAGREE\n");
      }
      if (!ok) status = kCheckFailed;
    } else if (degrees->parsed()) {
      const unsigned k = single_k(k_text);
      const LabeledGraph g = build_kpell_graph(n, k, budget);
      const DegreeCensus c = degree_census(g);
      bool formula_ok = true;
      for (Vertex v = 0; v < g.num_vertices(); ++v) formula_ok = formula_ok && degree_formula(g.word(v), k) == g.degree(v);
      Json j{{"n", n}, {"k", k}, {"min", c.min_degree}, {"max", c.max_degree}, {"formula_matches_adjacency", formula_ok}};
      Json hist = Json::object();
      for (const auto& [d, cnt] : c.histogram) hist[std::to_string(d)] = cnt;
      j["histogram"] = hist;
      if (k >= 3 && n >= 1) {
        const DeltaMinusOneRecord r = count_degree_delta_minus_1(g);
        j["delta_minus_one"] = {{"formula", big(r.formula)},
                                {"census", r.census},
                                {"swapped_exponent_formula", big(r.swapped)},
                                {"formula_matches", r.formula_matches()},
                                {"shape_matches", r.shape_matches}};
      }
      if (json) {
        text << j.dump(2) << "\n";
      } else {
        text << "degree histogram:";
        for (const auto& [d, cnt] : c.histogram) text << " " << d << ":" << cnt;
        text << "\nmin " << c.min_degree << ", max " << c.max_degree << ", formula "
             << (formula_ok ? "matches" : "DOES NOT match") << " adjacency\n";
        if (j.contains("delta_minus_one")) {
          const auto& d = j["delta_minus_one"];
          text << "degree 2n-1 vertices: census " << d["census"] << ", formula " << d["formula"]
               << ", swapped-exponent formula " << d["swapped_exponent_formula"] << "\n";
        }
      }
      if (!formula_ok) status = kCheckFailed;
    } else if (embed->parsed()) {
      const unsigned k = single_k(k_text);
      const LabeledGraph g = build_kpell_graph(n, k, budget);
      const EmbeddingCertificate c = verify_embedding(g, threads);
      Json j{{"n", c.n},
             {"k", c.k},
             {"target_dim", c.target_dim},
             {"injective", c.injective},
             {"edges_preserved", c.edges_preserved},
             {"checked_edges", c.checked_edges}};
      if (!c.valid()) j["failure"] = c.failure;
      if (json) {
        text << j.dump(2) << "\n";
      } else {
        text << "target dimension " << c.target_dim << ", " << c.checked_edges << " edges checked: "
             << (c.valid() ? "valid" : "INVALID: " + c.failure) << "\n";
      }
      if (!c.valid()) status = kCheckFailed;
    } else if (hamilton->parsed()) {
      const LabeledGraph g = build_kpell_graph(n, single_k(k_text), budget);
      const auto path = hamiltonian_path(g);
      if (json) {
        Json labels = Json::array();
        for (Vertex v : path) labels.push_back(g.label(v));
        text << Json{{"n", n}, {"k", g.k()}, {"valid", validate_path(g, path)}, {"path", labels}}.dump(2) << "\n";
      } else {
        for (Vertex v : path) text << g.label(v) << "\n";
      }
    } else if (metrics->parsed()) {
      const Json j = metrics_report(n, single_k(k_text), seed, threads, metrics_bfs_budget, metrics_median_budget);
      if (json) {
        text << j.dump(2) << "\n";
      } else {
        text << "radius " << j["radius"] << ", diameter " << j["diameter"] << ", center size " << j["center_size"]
             << ", matches prediction " << j["center_matches_prediction"] << ", median triples " << j["median_checked"]
             << " unique " << j["median_unique"] << "\n";
      }
    } else if (probe_cycle->parsed()) {
      const LabeledGraph g = build_kpell_graph(n, single_k(k_text), std::min<std::uint64_t>(budget, 200));
      const CycleSearch s = search_hamiltonian_cycle(g, node_budget);
      const char* verdict = s.cycle ? "cycle found" : (s.exhausted ? "no cycle" : "undetermined");
      Json j{{"experimental", true},   {"method", "exhaustive backtracking"},
             {"n", n},                 {"k", g.k()},
             {"vertices", g.num_vertices()}, {"result", verdict},
             {"nodes", s.nodes}};
      if (s.cycle) {
        Json labels = Json::array();
        for (Vertex v : *s.cycle) labels.push_back(g.label(v));
        j["cycle"] = labels;
      }
      if (json) text << j.dump(2) << "\n";
      else text << "[experimental] Hamiltonian cycle search on " << g.num_vertices() << " vertices: " << verdict
                << " (" << s.nodes << " nodes)\n";
    } else if (probe_dim->parsed()) {
      const unsigned k = single_k(k_text);
      const LabeledGraph g = build_kpell_graph(n, k, std::min<std::uint64_t>(budget, 64));
      const unsigned limit = max_m > 0 ? max_m : (n >= 1 ? embedding_dimension(n, k) : 0);
      const EmbedDimSearch s = search_min_embedding_dimension(g, limit, node_budget);
      Json j{{"experimental", true}, {"method", "exhaustive subgraph search"}, {"n", n}, {"k", k},
             {"max_m", limit}, {"exhausted", s.exhausted}, {"nodes", s.nodes}};
      j["smallest_m"] = s.dimension ? Json(*s.dimension) : Json(nullptr);
      if (n >= 1) j["phi_dimension"] = embedding_dimension(n, k);
      if (json) {
        text << j.dump(2) << "\n";
      } else {
        text << "[experimental] smallest Fibonacci cube containing the graph: ";
        if (s.dimension) text << "dimension " << *s.dimension << "\n";
        else text << (s.exhausted ? "none up to " + std::to_string(limit) : std::string("undetermined")) << "\n";
      }
    }
    write_output(text.str(), out_path, out);
    return status;
  } catch (const BudgetError& e) {
    err << "kpell: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    err << "kpell: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "kpell: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace kpell::cli
