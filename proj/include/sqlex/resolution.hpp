#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sqlex/ideal.hpp"

namespace sqlex {

/// Sparse graded Betti table. `subject` records whether the entries
/// belong to the ideal I or to the quotient A/I; the two are linked by
/// beta_{i,j}(I) = beta_{i+1,j}(A/I).
struct BettiTable {
  enum class Subject { ideal, quotient };

  int n = 0;
  Subject subject = Subject::ideal;
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta > 0

  long long at(int i, int j) const;
  void add(int i, int j, long long value);

  int projdim() const;  // max i with an entry
  int reg() const;      // max j - i over entries

  /// Quotient table -> ideal table (drops the beta_{0,0} = 1 corner).
  BettiTable to_ideal_table() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct ExtremalBetti {
  int k = 0;        // homological degree
  int ell = 0;      // shift; the entry sits at (k, k + ell)
  long long value = 0;

  friend bool operator==(const ExtremalBetti&, const ExtremalBetti&) = default;
};

/// Exchange test: for every generator u and every j < m(u) with
/// j outside supp(u), the monomial (X_j u)/X_{m(u)} lies in the ideal.
bool is_squarefree_stable(const SqIdeal& ideal);

/// Closed-form minimal resolution of a squarefree stable ideal:
/// beta_{i, i+d}(I) = sum over u in G(I)_d of C(m(u) - d, i).
BettiTable betti_table_stable(const SqIdeal& ideal);

/// Ground-truth Betti numbers of A/I by exact-rational ranks of the
/// graded Koszul strands of (X_1..X_n) tensored with A/I, truncated at
/// internal degree n. The strand in degree j is block-diagonal over
/// monomial multidegrees; blocks not meeting the ideal are strands of
/// the full Koszul complex and exact, so they are skipped unless
/// `skip_exact_blocks` is disabled (reference mode for tests).
BettiTable betti_table_quotient_oracle(int n, const std::vector<SqMonomial>& gens,
                                       int ceiling,
                                       bool skip_exact_blocks = true);

/// Ideal-side oracle table: beta_{i,j}(I) = beta_{i+1,j}(A/I).
BettiTable betti_table_oracle(const SqIdeal& ideal, int ceiling = 7);

/// Route (a): scan of the table, an entry (k, k+ell) is extremal iff no
/// other entry (i, i+j) has i >= k and j >= ell.
std::vector<ExtremalBetti> extremal_from_table(const BettiTable& table);

/// Route (b): combinatorial criterion for squarefree stable ideals.
/// (k, ell) is extremal iff k + ell = max{m(u) : u in G(I)_ell} and
/// m(u) < k + j for every j > ell, u in G(I)_j; the value is
/// |{u in G(I)_ell : m(u) = k + ell}|.
std::vector<ExtremalBetti> extremal_combinatorial(const SqIdeal& ideal);

/// Runs both routes and insists they agree.
std::vector<ExtremalBetti> extremal_betti(const SqIdeal& ideal,
                                          const BettiTable& table);

struct UsliInvariants {
  int projdim = 0;
  int reg = 0;
  int depth_of_quotient = 0;
  ExtremalBetti unique_extremal;
};

/// projdim = |G(I)| - 1, reg = d_t, depth A/I = n - |G(I)|, and the
/// unique extremal Betti number (R_{d_t}-1-d_t, d_t, 1). Universal
/// input required.
UsliInvariants usli_invariants(const SqIdeal& ideal);

/// Regularity of a squarefree stable ideal: max generator degree.
int reg_stable(const SqIdeal& ideal);

long long binomial(int n, int k);

}  // namespace sqlex
