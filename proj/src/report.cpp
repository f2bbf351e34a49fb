#include "sqlex/report.hpp"

#include <algorithm>
#include <sstream>

namespace sqlex {

Json ideal_to_json(const SqIdeal& ideal) {
  Json j;
  j["n"] = ideal.ambient();
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  return j;
}

SqIdeal ideal_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("generators"))
    throw std::invalid_argument("ideal json: expected keys \"n\" and \"generators\"");
  const int n = j.at("n").get<int>();
  std::vector<SqMonomial> gens;
  for (const auto& item : j.at("generators"))
    gens.push_back(parse_squarefree(item.get<std::string>(), n));
  return SqIdeal(n, std::move(gens));
}

SqIdeal parse_ideal_text(const std::string& generators, int n) {
  std::vector<SqMonomial> gens;
  std::stringstream ss(generators);
  std::string piece;
  while (std::getline(ss, piece, ','))
    if (piece.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(parse_squarefree(piece, n));
  return SqIdeal(n, std::move(gens));
}

Json betti_to_json(const BettiTable& table) {
  Json j;
  j["subject"] = table.subject == BettiTable::Subject::ideal ? "ideal" : "quotient";
  j["n"] = table.n;
  Json entries = Json::array();
  for (const auto& [ij, v] : table.entries)
    entries.push_back(Json::array({ij.first, ij.second, v}));
  j["entries"] = std::move(entries);
  j["projdim"] = table.projdim();
  j["reg"] = table.reg();
  return j;
}

std::string betti_diagram(const BettiTable& table) {
  if (table.entries.empty()) return "(empty table)\n";
  int imax = 0, smin = 0, smax = 0;
  bool first = true;
  for (const auto& [ij, v] : table.entries) {
    const int shift = ij.second - ij.first;
    imax = std::max(imax, ij.first);
    if (first) {
      smin = smax = shift;
      first = false;
    } else {
      smin = std::min(smin, shift);
      smax = std::max(smax, shift);
    }
  }
  std::size_t width = 6;
  std::ostringstream out;
  out << std::string(width, ' ');
  for (int s = smin; s <= smax; ++s) {
    std::string head = std::to_string(s);
    out << std::string(width - head.size(), ' ') << head;
  }
  out << '\n';
  for (int i = 0; i <= imax; ++i) {
    std::string head = "i=" + std::to_string(i);
    out << std::string(width - head.size(), ' ') << head;
    for (int s = smin; s <= smax; ++s) {
      const long long v = table.at(i, i + s);
      std::string cell = v == 0 ? "." : std::to_string(v);
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

Json extremal_to_json(const std::vector<ExtremalBetti>& extremal) {
  Json j = Json::array();
  for (const auto& e : extremal) j.push_back(Json::array({e.k, e.ell, e.value}));
  return j;
}

Json annihilators_to_json(const AnnihilatorIdeals& ann) {
  Json j = Json::array();
  for (const auto& ideal : ann.ideals) {
    Json gens = Json::array();
    for (const auto& g : ideal) gens.push_back(to_string(g));
    j.push_back(std::move(gens));
  }
  return j;
}

Json verdict_to_json(const SSequenceVerdict& verdict, bool include_basis) {
  Json j;
  j["verdict"] = verdict.verdict;
  j["route_a"] = verdict.route_a;
  j["route_b"] = verdict.route_b;
  j["strong"] = verdict.strong;
  j["input_resorted"] = verdict.input_resorted;
  j["annihilators"] = annihilators_to_json(verdict.annihilators);
  j["basis_size"] = verdict.basis_size;
  j["max_t_degree"] = verdict.max_t_degree;
  if (include_basis) {
    Json basis = Json::array();
    for (const auto& g : verdict.reduced_basis) basis.push_back(to_string(g));
    j["basis"] = std::move(basis);
  }
  return j;
}

Json sym_report_to_json(const SymReport& report) {
  Json j;
  j["source"] = to_string(report.source);
  j["dim"] = report.dim;
  j["multiplicity"] = report.multiplicity;
  if (report.reg) j["reg"] = *report.reg;
  if (report.depth) j["depth"] = *report.depth;
  return j;
}

Json sym_comparison_to_json(const SymComparison& cmp) {
  Json j;
  j["classification"] = cmp.classification;
  j["closed_form"] = sym_report_to_json(cmp.closed_form);
  j["hrt_formula"] = sym_report_to_json(cmp.hrt);
  j["facet_oracle"] = sym_report_to_json(cmp.facet);
  if (cmp.homological)
    j["homological_oracle"] = sym_report_to_json(*cmp.homological);
  j["agree"] = cmp.agree;
  return j;
}

}  // namespace sqlex
