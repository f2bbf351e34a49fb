// Command-line front end: classification, Betti tables, s-sequence
// verdicts, symmetric-algebra invariants, and exhaustive sweeps over
// desk-scale ranges. Exit status is 0 exactly when every closed-form /
// oracle pair that the command touches agrees.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "sqlex/report.hpp"

namespace {

using namespace sqlex;

struct IdealInput {
  std::string path;    // JSON file, or "-" for stdin
  std::string inline_gens;
  int n = 0;
};

void add_ideal_options(CLI::App* cmd, IdealInput& input) {
  cmd->add_option("--input", input.path,
                  "ideal as JSON {\"n\":..., \"generators\":[...]} (file or '-')");
  cmd->add_option("--gens", input.inline_gens,
                  "inline generators, e.g. \"x1*x2, x1*x3*x4\" (needs --n)");
  cmd->add_option("--n", input.n, "ambient variable count for --gens");
}

SqIdeal read_ideal(const IdealInput& input) {
  if (!input.path.empty()) {
    Json j;
    if (input.path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(input.path);
      if (!in) throw std::runtime_error("cannot open " + input.path);
      in >> j;
    }
    return ideal_from_json(j);
  }
  if (input.inline_gens.empty())
    throw std::runtime_error("no ideal given: use --input or --gens with --n");
  if (input.n < 1) throw std::runtime_error("--gens needs --n");
  return parse_ideal_text(input.inline_gens, input.n);
}

void emit(const Json& j, const std::string& format, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int run_classify(const IdealInput& input, int m_max, const std::string& format) {
  SqIdeal ideal = read_ideal(input);
  const bool lex = is_lexsegment(ideal);
  const bool stable = is_squarefree_stable(ideal);
  const bool usli = is_usli_structural(ideal);
  const bool ausli = ideal.generators().size() >= 2 && is_ausli(ideal);
  const int depth = m_max >= 0 ? m_max : default_extension_depth(ideal);
  BruteforceReport bf = usli_bruteforce_report(ideal, depth);

  Json j;
  j["ideal"] = ideal_to_json(ideal);
  j["lexsegment"] = lex;
  j["squarefree_stable"] = stable;
  j["usli"] = usli;
  j["ausli"] = ausli;
  Json bj;
  bj["m_max"] = bf.m_max;
  bj["universal"] = bf.universal;
  if (bf.failed_m) {
    bj["failed_m"] = *bf.failed_m;
    bj["witness"] = to_string(bf.violation->non_member);
    bj["member"] = to_string(bf.violation->member);
  }
  j["bruteforce"] = std::move(bj);

  std::ostringstream text;
  text << "ideal: " << ideal_to_json(ideal).dump() << '\n'
       << "lexsegment:        " << (lex ? "yes" : "no") << '\n'
       << "squarefree stable: " << (stable ? "yes" : "no") << '\n'
       << "universal (USLI):  " << (usli ? "yes" : "no") << '\n'
       << "almost (AUSLI):    " << (ausli ? "yes" : "no") << '\n';
  text << "bruteforce (m <= " << bf.m_max << "): "
       << (bf.universal ? "still lexsegment in every extension" : "fails");
  if (bf.failed_m)
    text << " at m = " << *bf.failed_m << " (witness "
         << to_string(bf.violation->non_member) << " above member "
         << to_string(bf.violation->member) << ")";
  text << '\n';

  const bool cross_ok = (usli == bf.universal);
  j["cross_check"] = cross_ok;
  text << "cross-check structural vs bruteforce: " << (cross_ok ? "ok" : "DISAGREE")
       << '\n';
  emit(j, format, text.str());
  return cross_ok ? 0 : 2;
}

DegreeSequence parse_degrees(const std::string& text) {
  std::map<int, int> entries;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const auto colon = piece.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("--degrees expects d:k[,d:k...]");
    entries[std::stoi(piece.substr(0, colon))] += std::stoi(piece.substr(colon + 1));
  }
  return DegreeSequence(entries);
}

int run_generate(const std::string& degrees, int n, const std::string& format) {
  DegreeSequence ds = parse_degrees(degrees);
  const int ambient = n > 0 ? n : min_ambient(ds);
  SqIdeal ideal = generate_usli(ds, ambient);
  RProfile r = compute_r_profile(ds);

  Json j;
  j["degrees"] = Json::object();
  for (const auto& [d, k] : ds.entries()) j["degrees"][std::to_string(d)] = k;
  j["min_ambient"] = min_ambient(ds);
  j["ideal"] = ideal_to_json(ideal);
  Json rp = Json::object();
  for (const auto& [jj, v] : r.values) rp[std::to_string(jj)] = v;
  j["r_profile"] = std::move(rp);
  const bool cross_ok = is_usli_structural(ideal);
  j["cross_check"] = cross_ok;

  std::ostringstream text;
  text << "ideal: " << ideal_to_json(ideal).dump() << '\n' << "R profile:";
  for (const auto& [jj, v] : r.values) text << " R_" << jj << "=" << v;
  text << '\n'
       << "structural recheck: " << (cross_ok ? "ok" : "DISAGREE") << '\n';
  emit(j, format, text.str());
  return cross_ok ? 0 : 2;
}

int run_betti(const IdealInput& input, int ceiling, const std::string& format) {
  SqIdeal ideal = read_ideal(input);
  BettiTable table = betti_table_stable(ideal);  // rejects non-stable input
  std::vector<ExtremalBetti> extremal = extremal_betti(ideal, table);

  Json j;
  j["ideal"] = ideal_to_json(ideal);
  j["betti"] = betti_to_json(table);
  j["extremal"] = extremal_to_json(extremal);
  j["reg_stable"] = reg_stable(ideal);

  bool cross_ok = true;
  bool oracle_used = false;
  if (ideal.ambient() <= ceiling) {
    oracle_used = true;
    BettiTable oracle = betti_table_oracle(ideal, ceiling);
    cross_ok = (oracle.entries == table.entries);
    j["oracle_agrees"] = cross_ok;
  }
  if (is_usli_structural(ideal)) {
    UsliInvariants inv = usli_invariants(ideal);
    Json ji;
    ji["projdim"] = inv.projdim;
    ji["reg"] = inv.reg;
    ji["depth_of_quotient"] = inv.depth_of_quotient;
    ji["unique_extremal"] =
        Json::array({inv.unique_extremal.k, inv.unique_extremal.ell,
                     inv.unique_extremal.value});
    j["usli_invariants"] = std::move(ji);
    cross_ok = cross_ok && inv.projdim == table.projdim() &&
               inv.reg == table.reg() && extremal.size() == 1 &&
               extremal.front() == inv.unique_extremal;
  }

  std::ostringstream text;
  text << betti_diagram(table) << "projdim " << table.projdim() << ", reg "
       << table.reg() << '\n';
  text << "extremal:";
  for (const auto& e : extremal)
    text << "  beta_{" << e.k << "," << e.k + e.ell << "} = " << e.value;
  text << '\n';
  if (oracle_used)
    text << "Koszul oracle: " << (cross_ok ? "agrees" : "DISAGREES") << '\n';
  emit(j, format, text.str());
  return cross_ok ? 0 : 2;
}

int run_ssequence(const IdealInput& input, bool full_basis,
                  const std::string& format) {
  SqIdeal ideal = read_ideal(input);
  SSequenceVerdict v = is_s_sequence(ideal.generators(), ideal.ambient());

  Json j;
  j["ideal"] = ideal_to_json(ideal);
  j.update(verdict_to_json(v, full_basis));

  std::ostringstream text;
  text << "s-sequence: " << (v.verdict ? "yes" : "no")
       << "  (reduction test " << (v.route_a ? "pass" : "fail")
       << ", initial-ideal match " << (v.route_b ? "pass" : "fail") << ")\n"
       << "strong: " << (v.strong ? "yes" : "no") << '\n';
  text << "annihilators:";
  for (std::size_t i = 0; i < v.annihilators.ideals.size(); ++i) {
    text << "  I_" << (i + 1) << "=(";
    const auto& gens = v.annihilators.ideals[i];
    for (std::size_t k = 0; k < gens.size(); ++k)
      text << (k ? "," : "") << to_string(gens[k]);
    text << (gens.empty() ? "0)" : ")");
  }
  text << '\n'
       << "reduced basis: " << v.basis_size << " elements, max T-degree "
       << v.max_t_degree << '\n';
  if (full_basis)
    for (const auto& g : v.reduced_basis) text << "  " << to_string(g) << '\n';
  emit(j, format, text.str());
  return (v.route_a == v.route_b) ? 0 : 2;
}

int run_sym(const IdealInput& input, int ceiling, const std::string& format) {
  SqIdeal ideal = read_ideal(input);
  SymComparison cmp = sym_compare(ideal, std::max(ceiling, 14), 10);

  Json j;
  j["ideal"] = ideal_to_json(ideal);
  j.update(sym_comparison_to_json(cmp));

  std::ostringstream text;
  auto line = [&](const char* name, const SymReport& r) {
    text << name << ": dim " << r.dim << ", e " << r.multiplicity;
    if (r.reg) text << ", reg " << *r.reg;
    if (r.depth) text << ", depth " << *r.depth;
    text << '\n';
  };
  text << "classified: " << cmp.classification << '\n';
  line("closed form       ", cmp.closed_form);
  line("subset formula    ", cmp.hrt);
  line("facet oracle      ", cmp.facet);
  if (cmp.homological) line("homological oracle", *cmp.homological);
  text << (cmp.agree ? "all sources agree" : "DISAGREEMENT") << '\n';
  emit(j, format, text.str());
  return cmp.agree ? 0 : 2;
}

// ---------------------------------------------------------------- sweeps

struct SweepResult {
  Json cells = Json::array();
  int mismatches = 0;
  std::ostringstream text;
};

void sweep_structural(int n_max, SweepResult& out) {
  // equigenerated prefixes: universal iff q <= n-d+1, almost universal
  // iff q = n-d+2, both verified against the brute-force extension scan
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 1; d <= n; ++d) {
      const long long total = binomial(n, d);
      for (int q = 1; q <= total; ++q) {
        SqIdeal prefix = lexsegment_prefix(d, q, n);
        const bool usli = is_usli_structural(prefix);
        const bool ausli = prefix.generators().size() >= 2 && is_ausli(prefix);
        const bool expected_usli = q <= n - d + 1;
        const bool expected_ausli = q == n - d + 2;
        const bool brute = is_usli_bruteforce(
            prefix, std::min(default_extension_depth(prefix), 12));
        const bool ok = usli == expected_usli && ausli == expected_ausli &&
                        brute == usli;
        if (!ok) ++out.mismatches;
        out.cells.push_back(Json{{"n", n}, {"d", d}, {"q", q},
                                 {"usli", usli}, {"ausli", ausli}, {"ok", ok}});
        if (!ok)
          out.text << "  mismatch at n=" << n << " d=" << d << " q=" << q << '\n';
      }
    }
  }
}

void sweep_prefix_theorem(int n_max, SweepResult& out) {
  // cells are independent pure computations; fan out per (n, d) and
  // collect in a fixed order so the report stays deterministic
  std::vector<std::pair<int, int>> grid;
  for (int n = 3; n <= n_max; ++n)
    for (int d = 2; d < n; ++d) grid.emplace_back(n, d);
  std::vector<std::future<std::vector<SweepCell>>> futures;
  futures.reserve(grid.size());
  for (const auto& [n, d] : grid)
    futures.push_back(std::async(std::launch::async, theorem_prefix_cells, d, n));
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto [n, d] = grid[g];
    for (const auto& cell : futures[g].get()) {
      const bool ok = cell.verdict == cell.expected;
      if (!ok) ++out.mismatches;
      out.cells.push_back(Json{{"n", n}, {"d", d}, {"q", cell.q},
                               {"verdict", cell.verdict},
                               {"expected", cell.expected}, {"ok", ok}});
      if (!ok)
        out.text << "  bound not matched at n=" << n << " d=" << d
                 << " q=" << cell.q << " (verdict "
                 << (cell.verdict ? "s-sequence" : "not") << ")\n";
    }
  }
}

void sweep_annihilators(int n_max, SweepResult& out) {
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 1; d <= n; ++d) {
      const int q_top = std::min<long long>(n - d + 2, binomial(n, d));
      for (int q = 1; q <= q_top; ++q) {
        if (q == n - d + 2 && d < 2) continue;  // no almost-universal case
        SqIdeal prefix = lexsegment_prefix(d, q, n);
        AnnihilatorIdeals ann = annihilator_ideals(prefix.generators(), n);
        bool ok = ann.ideals[0].empty();
        for (int i = 2; i <= q && ok; ++i) {
          std::vector<SqMonomial> expected;
          if (i == n - d + 2) {
            expected.push_back(SqMonomial{std::vector<int>{d - 1}});
          } else {
            for (int v = d; v <= d + i - 2; ++v)
              expected.push_back(SqMonomial{std::vector<int>{v}});
          }
          ok = (ann.ideals[static_cast<std::size_t>(i - 1)] ==
                minimalize(expected));
        }
        if (!ok) ++out.mismatches;
        out.cells.push_back(Json{{"n", n}, {"d", d}, {"q", q}, {"ok", ok}});
        if (!ok)
          out.text << "  annihilators off at n=" << n << " d=" << d
                   << " q=" << q << '\n';
      }
    }
  }
}

void sweep_sym(int n_max, bool almost, SweepResult& out) {
  for (int n = 2; n <= n_max; ++n) {
    for (int d = almost ? 2 : 1; d <= n; ++d) {
      const long long total = binomial(n, d);
      std::vector<int> qs;
      if (almost) {
        if (d <= n - 1 && n - d + 2 <= total) qs.push_back(n - d + 2);
      } else {
        for (int q = 1; q <= std::min<long long>(n - d + 1, total); ++q)
          qs.push_back(q);
      }
      for (int q : qs) {
        SqIdeal prefix = lexsegment_prefix(d, q, n);
        SymComparison cmp = sym_compare(prefix);
        const long long expected_e = almost ? 2LL * q - 2 : q;
        const bool ok = cmp.agree && cmp.closed_form.dim == n + 1 &&
                        cmp.closed_form.multiplicity == expected_e;
        if (!ok) ++out.mismatches;
        out.cells.push_back(Json{{"n", n}, {"d", d}, {"q", q},
                                 {"dim", cmp.closed_form.dim},
                                 {"e", cmp.closed_form.multiplicity},
                                 {"ok", ok}});
        if (!ok)
          out.text << "  sym disagreement at n=" << n << " d=" << d
                   << " q=" << q << '\n';
      }
    }
  }
}

SqIdeal random_stable_ideal(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> deg_dist(1, std::max(1, n - 1));
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::vector<SqMonomial> gens;
  const int seeds = count_dist(rng);
  for (int s = 0; s < seeds; ++s) {
    const int d = deg_dist(rng);
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> sup(pool.begin(), pool.begin() + d);
    std::sort(sup.begin(), sup.end());
    gens.emplace_back(std::move(sup));
  }
  // close under the stability exchange
  while (true) {
    SqIdeal ideal(n, gens);
    bool grew = false;
    for (const auto& u : ideal.generators()) {
      const int m = max_index(u);
      for (int jv = 1; jv < m && !grew; ++jv) {
        if (u.contains(jv)) continue;
        std::vector<int> sup;
        for (int v : u.support())
          if (v != m) sup.push_back(v);
        sup.push_back(jv);
        std::sort(sup.begin(), sup.end());
        SqMonomial moved{std::move(sup)};
        if (!ideal.contains(moved)) {
          gens = ideal.generators();
          gens.push_back(std::move(moved));
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) return ideal;
  }
}

SqIdeal random_usli(std::mt19937& rng, int n_cap) {
  while (true) {
    std::uniform_int_distribution<int> t_dist(1, 3);
    std::uniform_int_distribution<int> deg_dist(1, 5);
    std::uniform_int_distribution<int> count_dist(1, 3);
    std::map<int, int> entries;
    const int t = t_dist(rng);
    for (int i = 0; i < t; ++i) entries[deg_dist(rng)] = count_dist(rng);
    DegreeSequence ds(entries);
    const int lo = min_ambient(ds);
    if (lo > n_cap) continue;
    std::uniform_int_distribution<int> n_dist(lo, n_cap);
    return generate_usli(ds, n_dist(rng));
  }
}

void sweep_betti(int samples_stable, int samples_usli, SweepResult& out) {
  std::mt19937 rng(20240915);
  std::uniform_int_distribution<int> n_dist(2, 6);
  int checked = 0;
  for (int s = 0; s < samples_stable; ++s) {
    SqIdeal ideal = random_stable_ideal(rng, n_dist(rng));
    const bool ok =
        betti_table_stable(ideal).entries == betti_table_oracle(ideal).entries;
    if (!ok) {
      ++out.mismatches;
      out.text << "  oracle mismatch on " << ideal_to_json(ideal).dump() << '\n';
    }
    ++checked;
  }
  out.cells.push_back(Json{{"stable_samples", checked}});
  checked = 0;
  for (int s = 0; s < samples_usli; ++s) {
    SqIdeal ideal = random_usli(rng, 8);
    BettiTable table = betti_table_stable(ideal);
    UsliInvariants inv = usli_invariants(ideal);
    auto extremal = extremal_betti(ideal, table);
    const int q = static_cast<int>(ideal.generators().size());
    bool ok = inv.projdim == q - 1 && inv.reg == ideal.max_generator_degree() &&
              inv.depth_of_quotient == ideal.ambient() - q &&
              extremal.size() == 1 && extremal.front() == inv.unique_extremal &&
              table.projdim() == inv.projdim && table.reg() == inv.reg;
    if (ok && ideal.ambient() <= 6)
      ok = betti_table_oracle(ideal).entries == table.entries;
    if (!ok) {
      ++out.mismatches;
      out.text << "  invariants mismatch on " << ideal_to_json(ideal).dump()
               << '\n';
    }
    ++checked;
  }
  out.cells.push_back(Json{{"usli_samples", checked}});
}

int run_golden(const std::string& id, const std::string& format);

int run_one_sweep(const std::string& theorem, int n_max,
                  const std::string& format) {
  SweepResult out;
  if (theorem == "char")
    sweep_structural(n_max, out);
  else if (theorem == "T*")
    sweep_prefix_theorem(n_max, out);
  else if (theorem == "P1")
    sweep_annihilators(n_max, out);
  else if (theorem == "sym-usli")
    sweep_sym(n_max, false, out);
  else if (theorem == "sym-ausli")
    sweep_sym(n_max, true, out);
  else if (theorem == "betti")
    sweep_betti(200, 100, out);
  else
    throw std::runtime_error("unknown --theorem " + theorem);

  Json j;
  j["theorem"] = theorem;
  j["cells"] = std::move(out.cells);
  j["mismatches"] = out.mismatches;

  std::ostringstream text;
  text << "sweep " << theorem << ": " << j["cells"].size() << " cells, "
       << out.mismatches << " mismatches\n"
       << out.text.str();
  emit(j, format, text.str());
  return out.mismatches == 0 ? 0 : 2;
}

int run_sweep(const std::string& theorem, int n_max, const std::string& golden,
              const std::string& format) {
  if (!golden.empty()) return run_golden(golden, format);
  if (theorem != "all") return run_one_sweep(theorem, n_max, format);
  int status = 0;
  for (const char* one : {"char", "T*", "P1", "sym-usli", "sym-ausli", "betti"})
    status = std::max(status, run_one_sweep(one, n_max, format));
  return status;
}

// Worked examples embedded as named golden cases.
int run_golden(const std::string& id, const std::string& format) {
  if (id == "list") {
    std::cout << "usli-pair ausli-triple four-extremal five-gen-t2 "
                 "veronese-boundary\n";
    return 0;
  }
  IdealInput input;
  if (id == "usli-pair") {
    input.inline_gens = "x1*x2, x1*x3*x4";
    input.n = 4;
    return run_classify(input, -1, format);
  }
  if (id == "ausli-triple") {
    input.inline_gens = "x1*x2, x1*x3*x4, x2*x3*x4";
    input.n = 4;
    return run_classify(input, -1, format);
  }
  if (id == "four-extremal") {
    input.inline_gens =
        "x1*x2,x1*x3,x1*x4,x1*x5,x1*x6,x1*x7,x2*x3*x4,x2*x3*x5,x2*x3*x6,"
        "x2*x3*x7,x2*x4*x5*x6,x2*x4*x5*x7,x3*x4*x5*x6*x7";
    input.n = 7;
    return run_betti(input, 7, format);
  }
  if (id == "five-gen-t2") {
    input.inline_gens = "x1*x2,x1*x3,x1*x4,x2*x3,x2*x4";
    input.n = 4;
    return run_ssequence(input, true, format);
  }
  if (id == "veronese-boundary") {
    SweepResult out;
    for (int d : {2, 3}) {
      SqIdeal veronese = lexsegment_prefix(d, static_cast<int>(binomial(4, d)), 4);
      const bool verdict = is_s_sequence(veronese.generators(), 4).verdict;
      const bool expected = (d == 3);
      if (verdict != expected) ++out.mismatches;
      out.cells.push_back(Json{{"d", d}, {"verdict", verdict}, {"ok", verdict == expected}});
    }
    Json j;
    j["golden"] = id;
    j["cells"] = std::move(out.cells);
    emit(j, format,
         out.mismatches == 0 ? "veronese boundary at n=4: ok\n"
                             : "veronese boundary at n=4: MISMATCH\n");
    return out.mismatches == 0 ? 0 : 2;
  }
  throw std::runtime_error("unknown golden id " + id + " (try --golden list)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squarefree lexsegment ideal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  IdealInput input;
  int m_max = -1;
  int oracle_ceiling = 7;
  int n_max = 5;
  bool full_basis = false;
  std::string degrees;
  int generate_n = 0;
  std::string theorem = "T*";
  std::string golden;

  auto* classify = app.add_subcommand("classify", "lexsegment / stable / USLI / AUSLI");
  add_ideal_options(classify, input);
  classify->add_option("--m-max", m_max, "extension depth (default d_t + |G|)");

  auto* generate = app.add_subcommand("generate", "universal ideal from a degree sequence");
  generate->add_option("--degrees", degrees, "d:k[,d:k...]")->required();
  generate->add_option("--n", generate_n, "ambient (default: smallest feasible)");

  auto* betti = app.add_subcommand("betti", "Betti table, extremal entries, invariants");
  add_ideal_options(betti, input);
  betti->add_option("--oracle-ceiling", oracle_ceiling,
                    "largest ambient for the Koszul cross-check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* ssequence = app.add_subcommand("ssequence", "s-sequence verdict and annihilators");
  add_ideal_options(ssequence, input);
  ssequence->add_flag("--full-basis", full_basis, "print the reduced basis");

  auto* sym = app.add_subcommand("sym", "symmetric-algebra invariants, all sources");
  add_ideal_options(sym, input);
  sym->add_option("--oracle-ceiling", oracle_ceiling, "facet oracle ceiling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "exhaustive desk-scale verification");
  sweep->add_option("--theorem", theorem,
                    "char | T* | P1 | sym-usli | sym-ausli | betti | all")
      ->capture_default_str();
  sweep->add_option("--n-max", n_max, "largest ambient variable count")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  sweep->add_option("--golden", golden, "run a named worked example (or 'list')");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return run_classify(input, m_max, format);
    if (*generate) return run_generate(degrees, generate_n, format);
    if (*betti) return run_betti(input, oracle_ceiling, format);
    if (*ssequence) return run_ssequence(input, full_basis, format);
    if (*sym) return run_sym(input, oracle_ceiling, format);
    if (*sweep) return run_sweep(theorem, n_max, golden, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
