#include "sqlex/lexsegment.hpp"

#include <stdexcept>

namespace sqlex {

std::optional<LexsegmentViolation> lexsegment_violation(const SqIdeal& ideal) {
  const int n = ideal.ambient();
  for (int d = 1; d <= n; ++d) {
    std::optional<std::vector<int>> last_non_member;
    std::optional<LexsegmentViolation> hit;
    for_each_squarefree_slex(n, d, [&](const std::vector<int>& c) {
      std::uint64_t m = 0;
      for (int i : c) m |= std::uint64_t{1} << (i - 1);
      if (ideal.contains_mask(m)) {
        if (last_non_member) {
          hit = LexsegmentViolation{d, SqMonomial{*last_non_member},
                                    SqMonomial{std::vector<int>(c)}};
          return false;
        }
      } else {
        last_non_member = c;
      }
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

bool is_lexsegment(const SqIdeal& ideal) {
  return !lexsegment_violation(ideal).has_value();
}

RProfile compute_r_profile(const DegreeSequence& ds) {
  RProfile r;
  int partial = 0;
  const int d_t = ds.max_degree();
  for (int j = 1; j <= d_t; ++j) {
    auto it = ds.entries().find(j);
    if (it != ds.entries().end()) partial += it->second;
    r.values[j] = j + partial;
  }
  return r;
}

int min_ambient(const DegreeSequence& ds) {
  return ds.max_degree() + ds.total() - 1;
}

SqIdeal generate_usli(const DegreeSequence& ds, int n) {
  if (n < min_ambient(ds))
    throw std::invalid_argument(
        "generate_usli: ambient n below the feasibility bound d_t + sum k_i - 1");
  RProfile r = compute_r_profile(ds);
  std::vector<SqMonomial> gens;
  for (const auto& [d, k] : ds.entries()) {
    std::vector<int> stem;
    for (int j = 1; j <= d - 1; ++j) stem.push_back(r.at(j));
    const int lo = r.at(d - 1) + 1;  // r.at(0) == 0
    const int hi = r.at(d) - 1;
    for (int l = lo; l <= hi; ++l) {
      std::vector<int> s = stem;
      s.push_back(l);  // l > R_{d-1} >= every stem entry
      gens.emplace_back(std::move(s));
    }
  }
  return SqIdeal(n, std::move(gens));
}

bool is_usli_structural(const SqIdeal& ideal) {
  DegreeSequence ds{ideal.degree_counts()};
  if (ideal.ambient() < min_ambient(ds)) return false;
  return generate_usli(ds, ideal.ambient()) == ideal;
}

int default_extension_depth(const SqIdeal& ideal) {
  return ideal.max_generator_degree() +
         static_cast<int>(ideal.generators().size());
}

BruteforceReport usli_bruteforce_report(const SqIdeal& ideal, int m_max) {
  if (m_max < 0)
    throw std::invalid_argument("bruteforce: extension depth must be >= 0");
  BruteforceReport report;
  report.m_max = m_max;
  for (int m = 0; m <= m_max; ++m) {
    auto violation = lexsegment_violation(ideal.reembedded(ideal.ambient() + m));
    if (violation) {
      report.universal = false;
      report.failed_m = m;
      report.violation = std::move(violation);
      return report;
    }
  }
  report.universal = true;
  return report;
}

bool is_usli_bruteforce(const SqIdeal& ideal, int m_max) {
  return usli_bruteforce_report(ideal, m_max).universal;
}

bool is_ausli(const SqIdeal& ideal) {
  if (ideal.generators().size() < 2)
    throw std::invalid_argument("is_ausli: needs at least two generators");
  if (!is_lexsegment(ideal)) return false;
  if (is_usli_structural(ideal)) return false;
  return is_usli_structural(ideal.without_smallest());
}

SqIdeal lexsegment_prefix(int d, int q, int n) {
  if (d < 1 || d > n)
    throw std::out_of_range("lexsegment_prefix: need 1 <= d <= n");
  std::vector<SqMonomial> gens;
  gens.reserve(static_cast<std::size_t>(q));
  for_each_squarefree_slex(n, d, [&](const std::vector<int>& c) {
    gens.emplace_back(std::vector<int>(c));
    return static_cast<int>(gens.size()) < q;
  });
  if (static_cast<int>(gens.size()) != q || q < 1)
    throw std::out_of_range("lexsegment_prefix: q outside 1..C(n,d)");
  return SqIdeal(n, std::move(gens));
}

}  // namespace sqlex
