#pragma once

#include <optional>

#include "sqlex/ideal.hpp"

namespace sqlex {

/// Witness of a failed slex-prefix test: in some degree, `member` lies
/// in the ideal although the slex-larger `non_member` (the closest one
/// preceding it) does not.
struct LexsegmentViolation {
  int degree = 0;
  SqMonomial non_member;
  SqMonomial member;
};

/// Scans M^s_d for every d = 1..ambient and checks that the members of
/// the ideal form a slex-prefix. Returns the first violation found.
std::optional<LexsegmentViolation> lexsegment_violation(const SqIdeal& ideal);

bool is_lexsegment(const SqIdeal& ideal);

RProfile compute_r_profile(const DegreeSequence& ds);

/// Smallest ambient n admitting a universal ideal with these counts:
/// d_t + sum k_i - 1.
int min_ambient(const DegreeSequence& ds);

/// The unique universal squarefree lexsegment ideal with |G(I)_{d_i}| =
/// k_{d_i}: in degree d_i the generators are (prod_{j<d_i} X_{R_j}) X_l
/// for l in [R_{d_i - 1}+1, R_{d_i}-1].
SqIdeal generate_usli(const DegreeSequence& ds, int n);

/// Rebuilds the degree sequence from G(I) and compares the ideal with
/// the generated universal ideal.
bool is_usli_structural(const SqIdeal& ideal);

struct BruteforceReport {
  bool universal = false;
  int m_max = 0;                 // extensions actually considered
  std::optional<int> failed_m;   // smallest failing extension
  std::optional<LexsegmentViolation> violation;
};

/// Re-reads the ideal inside A_[m] for m = 0..m_max and checks the
/// slex-prefix property each time; stops at the first failure.
BruteforceReport usli_bruteforce_report(const SqIdeal& ideal, int m_max);

bool is_usli_bruteforce(const SqIdeal& ideal, int m_max);

/// Default extension depth for the brute-force check: d_t + |G(I)|.
int default_extension_depth(const SqIdeal& ideal);

/// Almost universal: lexsegment, not universal, and universal after
/// dropping the hslex-smallest generator. Needs >= 2 generators.
bool is_ausli(const SqIdeal& ideal);

/// The ideal generated by the q slex-largest squarefree monomials of
/// degree d in n variables.
SqIdeal lexsegment_prefix(int d, int q, int n);

}  // namespace sqlex
