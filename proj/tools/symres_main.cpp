// symres: exact computations and verification sweeps for symmetric-group
// restriction coefficients, the Lyndon symmetric function, and truncated
// Chevalley-Eilenberg complexes of g = L (x) C^n.
//
// Exit codes: 0 = computed / all checks PASS, 1 = a verification FAILED,
// 2 = usage error or violated precondition.
//
// Every run is a pure function of its configuration: stdout is byte-stable
// across runs. Timing is reported out of band (stderr in text/csv modes,
// the "timing_ms" field in JSON mode), which is the documented mask for
// byte-identity comparisons.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "symres/cecomplex.hpp"
#include "symres/reports.hpp"
#include "symres/version.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace symres;

std::string display(const Partition& p) { return "(" + p.to_text() + ")"; }

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string symfn_text(const SymFn& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += rational_text(c);
    out += "*";
    out += basis_name(f.basis());
    out += "[" + idx.to_text() + "]";
  }
  return out;
}

struct CommandResult {
  int exit_code = 0;
  std::string text;          // stdout payload in text mode
  std::string csv;           // stdout payload in csv mode; empty = unsupported
  Json result;               // "result" field in json mode
};

struct SweepCell {
  std::string kind;
  Json config;
  std::string label;
  bool pass = false;
};

CommandResult run_sweep(const std::shared_ptr<SymEngine>& sym, int max_mu_size, int max_n,
                        int max_m, int grid_n, int threads) {
  // Enumerate cells up front; evaluation may be parallel but output order is
  // the enumeration order.
  struct Task {
    std::string kind;
    Partition mu;
    int n = 0, m = 0, i = 0, size = 0;
  };
  std::vector<Task> tasks;
  for (int s = 0; s <= max_mu_size; ++s)
    for (const Partition& mu : partitions_of(s))
      for (int n = std::max(1, mu.size() + mu.part(0)); n <= max_n; ++n)
        tasks.push_back({"inversion", mu, n, 0, 0, 0});
  if (max_mu_size >= 1) tasks.push_back({"littlewood", Partition{}, 0, 0, 0, max_mu_size});
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= grid_n; ++n)
      for (int i = 0; i <= std::min(n, 3) + 1; ++i)
        tasks.push_back({"exactness", Partition{}, n, m, i, 0});

  std::vector<SweepCell> cells(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    CoefficientEngine coeffs(sym);
    CEVerifier verifier(sym);
    while (true) {
      size_t at = next.fetch_add(1);
      if (at >= tasks.size()) break;
      const Task& task = tasks[at];
      SweepCell cell;
      cell.kind = task.kind;
      if (task.kind == "inversion") {
        auto r = coeffs.verify_inversion(task.mu, task.n);
        cell.pass = r.pass;
        cell.config = Json{{"mu", task.mu.parts()}, {"n", task.n}};
        cell.label = "inversion mu=" + display(task.mu) + " n=" + std::to_string(task.n);
      } else if (task.kind == "littlewood") {
        auto r = coeffs.verify_littlewood(task.size);
        cell.pass = r.pass;
        cell.config = Json{{"max_size", task.size}};
        cell.label = "littlewood max-size=" + std::to_string(task.size);
      } else {
        auto r = verifier.verify_exactness(task.m, task.n, task.i);
        cell.pass = r.pass;
        cell.config = Json{{"m", task.m}, {"n", task.n}, {"i", task.i}};
        cell.label = "exactness m=" + std::to_string(task.m) + " n=" + std::to_string(task.n) +
                     " i=" + std::to_string(task.i);
      }
      cells[at] = std::move(cell);
    }
  };
  std::vector<std::thread> pool;
  int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CommandResult out;
  long long pass_count = 0, fail_count = 0;
  Json jcells = Json::array();
  for (const SweepCell& cell : cells) {
    (cell.pass ? pass_count : fail_count)++;
    out.text += (cell.pass ? "PASS " : "FAIL ") + cell.label + "\n";
    Json jc = Json{{"kind", cell.kind}};
    for (auto& [key, value] : cell.config.items()) jc[key] = value;
    jc["pass"] = cell.pass;
    jcells.push_back(std::move(jc));
  }
  out.text += "SUMMARY cells=" + std::to_string(cells.size()) +
              " pass=" + std::to_string(pass_count) + " fail=" + std::to_string(fail_count) + "\n";
  out.result = Json{{"cells", std::move(jcells)},
                    {"pass_count", pass_count},
                    {"fail_count", fail_count},
                    {"pass", fail_count == 0}};
  out.exit_code = fail_count == 0 ? 0 : 1;
  return out;
}

std::string freelie_text(const GAlgebra& g) {
  std::string out;
  for (int idx = 0; idx < g.dim(); ++idx) {
    const GVector& v = g.vec(idx);
    out += "basis " + std::to_string(idx) + ": word=" + v.word +
           " copy=" + std::to_string(v.copy) + " degree=" + std::to_string(g.degree(idx)) + "\n";
  }
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      auto entry = g.bracket(i, j);
      if (entry.empty()) continue;
      out += "[" + std::to_string(i) + "," + std::to_string(j) + "] =";
      for (const auto& [idx, c] : entry) out += " " + rational_text(c) + "*" + std::to_string(idx);
      out += "\n";
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symres: exact symmetric-function and Lie-cohomology verification"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  int threads = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output_path, "Write the payload to a file instead of stdout");
  app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::Range(1, 512));

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Restriction / inversion coefficients");
  coeff->require_subcommand(1);
  std::string co_lambda, co_mu, co_method = "plethysm";
  int co_degree = -1;
  auto* coeff_a = coeff->add_subcommand("a", "Stable restriction multiplicity a_mu^lambda");
  coeff_a->add_option("--lambda", co_lambda, "Partition lambda (\"3,2,1\"; empty = ())")->required();
  coeff_a->add_option("--mu", co_mu, "Partition mu")->required();
  coeff_a->add_option("--method", co_method)->check(CLI::IsMember({"plethysm", "character"}));
  auto* coeff_b = coeff->add_subcommand("b", "Assaf-Speyer coefficient b_lambda^mu");
  coeff_b->add_option("--lambda", co_lambda, "Partition lambda")->required();
  coeff_b->add_option("--mu", co_mu, "Partition mu")->required();
  coeff_b->add_option("--degree", co_degree, "Lyndon series truncation (default |mu|)");

  // expand
  auto* expand = app.add_subcommand("expand", "Expansions in the Grothendieck ring");
  expand->require_subcommand(1);
  std::string ex_mu;
  auto* expand_m = expand->add_subcommand("m", "[M_n^mu] over restricted Schur functors");
  expand_m->add_option("--mu", ex_mu, "Partition mu")->required();

  // lyndon
  auto* lyndon = app.add_subcommand("lyndon", "Lyndon symmetric function L_k");
  int ly_k = 1;
  std::string ly_basis = "p";
  lyndon->add_option("--k", ly_k, "Degree")->required()->check(CLI::Range(1, 64));
  lyndon->add_option("--basis", ly_basis)->check(CLI::IsMember({"p", "s"}));

  // chartable
  auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
  int ct_n = 1;
  chartable->add_option("--n", ct_n)->required()->check(CLI::Range(1, 16));

  // freelie
  auto* freelie = app.add_subcommand("freelie", "Basis and bracket table of L (x) C^n");
  int fl_m = 1, fl_deg = 1, fl_copies = 1;
  freelie->add_option("--m", fl_m, "Alphabet size")->required()->check(CLI::Range(0, 9));
  freelie->add_option("--max-degree", fl_deg)->required()->check(CLI::Range(0, 12));
  freelie->add_option("--copies", fl_copies)->check(CLI::Range(1, 32));

  // verify
  auto* verify = app.add_subcommand("verify", "Exact verifications");
  verify->require_subcommand(1);
  std::string vf_mu;
  int vf_n = 0, vf_m = 0, vf_i = 0, vf_size = 1;
  bool vf_inject = false;
  auto* v_inv = verify->add_subcommand("inversion", "Grothendieck-ring inversion for M_n^mu");
  v_inv->add_option("--mu", vf_mu)->required();
  v_inv->add_option("--n", vf_n)->required();
  v_inv->add_flag("--inject-failure", vf_inject, "Test hook: corrupt one coefficient")->group("");
  auto* v_lw = verify->add_subcommand("littlewood", "Littlewood delta-identity sweep");
  v_lw->add_option("--max-size", vf_size)->required()->check(CLI::Range(1, 8));
  auto* v_ex = verify->add_subcommand("exactness", "Cohomology of one CE slice");
  v_ex->add_option("--m", vf_m)->required()->check(CLI::Range(0, 9));
  v_ex->add_option("--n", vf_n)->required()->check(CLI::Range(1, 32));
  v_ex->add_option("--i", vf_i)->required()->check(CLI::Range(0, 8));
  auto* v_res = verify->add_subcommand("resolution", "Resolution of M_n^mu at desk scale");
  v_res->add_option("--mu", vf_mu)->required();
  v_res->add_option("--m", vf_m)->required()->check(CLI::Range(0, 9));
  v_res->add_option("--n", vf_n)->required()->check(CLI::Range(1, 32));
  auto* v_orth = verify->add_subcommand("orthogonality", "MN character orthonormality");
  v_orth->add_option("--n", vf_n)->required()->check(CLI::Range(1, 12));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Aggregated verification sweep");
  int sw_mu_size = 3, sw_max_n = 7, sw_max_m = 2, sw_grid_n = -1;
  sweep->add_option("--max-mu-size", sw_mu_size)->check(CLI::Range(0, 6));
  sweep->add_option("--max-n", sw_max_n)->check(CLI::Range(1, 10));
  sweep->add_option("--max-m", sw_max_m)->check(CLI::Range(1, 3));
  sweep->add_option("--grid-n", sw_grid_n, "Exactness-grid n bound (default min(max-n,3))");

  // Let --format/--output/--threads appear anywhere on the command line.
  for (CLI::App* level1 : {coeff, expand, lyndon, chartable, freelie, verify, sweep}) {
    level1->fallthrough();
    for (CLI::App* level2 : {coeff_a, coeff_b, expand_m, v_inv, v_lw, v_ex, v_res, v_orth})
      if (level2->get_parent() == level1) level2->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  std::string command;
  Json config;
  CommandResult res;

  try {
    auto sym = std::make_shared<SymEngine>();
    CoefficientEngine coeffs(sym);
    CEVerifier verifier(sym);
    const CharacterEngine& chars = sym->characters();

    if (coeff_a->parsed() || coeff_b->parsed()) {
      Partition lambda = Partition::parse(co_lambda);
      Partition mu = Partition::parse(co_mu);
      long long value;
      if (coeff_a->parsed()) {
        command = "coeff a";
        config = Json{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"method", co_method}};
        value = coeffs.a_coeff(lambda, mu,
                               co_method == "plethysm" ? AMethod::plethysm : AMethod::character);
      } else {
        command = "coeff b";
        config = Json{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"degree", co_degree}};
        value = coeffs.b_coeff(lambda, mu, co_degree);
      }
      res.text = std::to_string(value) + "\n";
      res.result = Json{{"value", value}};
    } else if (expand_m->parsed()) {
      command = "expand m";
      Partition mu = Partition::parse(ex_mu);
      config = Json{{"mu", mu.parts()}};
      Expansion e = coeffs.m_expansion(mu);
      for (const ExpansionTerm& t : e.terms)
        res.text += display(t.lambda) + "\t" + std::to_string(t.coeff) + "\n";
      res.csv = csv_expansion(e);
      res.result = Json::parse(json_expansion(e));
    } else if (lyndon->parsed()) {
      command = "lyndon";
      config = Json{{"k", ly_k}, {"basis", ly_basis}};
      SymFn f = sym->lyndon_sym(ly_k);
      if (ly_basis == "s") f = sym->to_schur(f);
      res.text = symfn_text(f) + "\n";
      res.result = Json::parse(json_symfn(f));
    } else if (chartable->parsed()) {
      command = "chartable";
      config = Json{{"n", ct_n}};
      res.csv = csv_chartable(chars, ct_n);
      res.text = res.csv;
      res.result = Json::parse(json_chartable(chars, ct_n));
    } else if (freelie->parsed()) {
      command = "freelie";
      config = Json{{"m", fl_m}, {"max_degree", fl_deg}, {"copies", fl_copies}};
      GAlgebra g(fl_m, fl_copies, fl_deg);
      res.text = freelie_text(g);
      res.result = Json::parse(json_freelie(g));
    } else if (v_inv->parsed()) {
      command = "verify inversion";
      Partition mu = Partition::parse(vf_mu);
      config = Json{{"mu", mu.parts()}, {"n", vf_n}};
      Expansion e = coeffs.m_expansion(mu);
      if (vf_inject) {
        if (e.terms.empty()) e.terms.push_back({Partition{}, 0});
        e.terms.front().coeff += 1;
      }
      InversionReport r = coeffs.verify_inversion_against(e, vf_n);
      res.exit_code = r.pass ? 0 : 1;
      res.text = std::string(r.pass ? "PASS" : "FAIL") + " inversion mu=" + display(mu) +
                 " n=" + std::to_string(vf_n);
      if (r.witness)
        res.text += " at rho=" + display(r.witness->rho) + ": lhs=" + rational_text(r.witness->lhs) +
                    " rhs=" + rational_text(r.witness->rhs);
      res.text += "\n";
      res.result = Json::parse(json_inversion(r));
    } else if (v_lw->parsed()) {
      command = "verify littlewood";
      config = Json{{"max_size", vf_size}};
      LittlewoodReport r = coeffs.verify_littlewood(vf_size);
      res.exit_code = r.pass ? 0 : 1;
      res.text = std::string(r.pass ? "PASS" : "FAIL") +
                 " littlewood max-size=" + std::to_string(vf_size) +
                 " pairs=" + std::to_string(r.pairs_checked);
      if (r.first_failure)
        res.text += " first-failure lambda=" + display(r.first_failure->lambda) +
                    " mu=" + display(r.first_failure->mu);
      res.text += "\n";
      res.result = Json::parse(json_littlewood(r));
    } else if (v_ex->parsed()) {
      command = "verify exactness";
      config = Json{{"m", vf_m}, {"n", vf_n}, {"i", vf_i}};
      SliceReport r = verifier.verify_exactness(vf_m, vf_n, vf_i);
      res.exit_code = r.pass ? 0 : 1;
      res.text = std::string(r.pass ? "PASS" : "FAIL") + " exactness m=" + std::to_string(vf_m) +
                 " n=" + std::to_string(vf_n) + " i=" + std::to_string(vf_i) +
                 " far-left=" + std::to_string(r.cohomology.back()) +
                 " expected=" + std::to_string(r.far_left_expected) + "\n";
      res.result = Json::parse(json_slice(r));
    } else if (v_res->parsed()) {
      command = "verify resolution";
      Partition mu = Partition::parse(vf_mu);
      config = Json{{"mu", mu.parts()}, {"m", vf_m}, {"n", vf_n}};
      ResolutionReport r = verifier.verify_resolution(mu, vf_m, vf_n);
      res.exit_code = r.pass ? 0 : 1;
      res.text = std::string(r.pass ? "PASS" : "FAIL") + " resolution mu=" + display(mu) +
                 " m=" + std::to_string(vf_m) + " n=" + std::to_string(vf_n) + "\n";
      res.result = Json::parse(json_resolution(r));
    } else if (v_orth->parsed()) {
      command = "verify orthogonality";
      config = Json{{"n", vf_n}};
      OrthogonalityReport r = verify_orthogonality(chars, vf_n);
      res.exit_code = r.pass ? 0 : 1;
      res.text = std::string(r.pass ? "PASS" : "FAIL") + " orthogonality n=" + std::to_string(vf_n) +
                 " pairs=" + std::to_string(r.pairs_checked) + "\n";
      res.result = Json::parse(json_orthogonality(r));
    } else if (sweep->parsed()) {
      command = "sweep";
      if (sw_grid_n < 0) sw_grid_n = std::min(sw_max_n, 3);
      config = Json{{"max_mu_size", sw_mu_size},
                    {"max_n", sw_max_n},
                    {"max_m", sw_max_m},
                    {"grid_n", sw_grid_n}};
      res = run_sweep(sym, sw_mu_size, sw_max_n, sw_max_m, sw_grid_n, threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "symres: error: " << e.what() << "\n";
    return 2;
  }

  const auto finished = std::chrono::steady_clock::now();
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(finished - started).count();

  std::string payload;
  if (format == "json") {
    Json envelope = Json{{"version", kVersion},
                         {"command", command},
                         {"config", config},
                         {"result", res.result},
                         {"timing_ms", elapsed_ms}};
    payload = envelope.dump() + "\n";
  } else if (format == "csv") {
    if (res.csv.empty()) {
      std::cerr << "symres: error: csv output is not defined for '" << command << "'\n";
      return 2;
    }
    payload = res.csv;
  } else {
    payload = res.text;
  }

  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "symres: error: cannot open output file '" << output_path << "'\n";
      return 2;
    }
    out << payload;
  } else {
    std::cout << payload;
  }
  if (format != "json")
    std::cerr << "symres " << kVersion << " " << command << " config=" << config.dump()
              << " time_ms=" << elapsed_ms << "\n";
  return res.exit_code;
}
