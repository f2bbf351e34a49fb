#pragma once

#include "sqlex/ideal.hpp"
#include "sqlex/mixed.hpp"

namespace sqlex {

/// Annihilator ideals of a monomial sequence f_1 > ... > f_q:
/// I_1 = (0) and I_i = (f_{1i}, ..., f_{i-1,i}) minimalized.
struct AnnihilatorIdeals {
  int n = 0;
  std::vector<std::vector<SqMonomial>> ideals;  // I_1..I_q; I_1 empty

  int q() const { return static_cast<int>(ideals.size()); }
};

/// Sorts the sequence descending by hslex first (the convention the
/// colon quotients depend on). Duplicate generators are rejected.
AnnihilatorIdeals annihilator_ideals(std::vector<SqMonomial> f, int n);

/// [f_ij, f_hl] = 1 for all quadruples i<j, h<l, i != h, j != l.
bool pairwise_coprime(const std::vector<SqMonomial>& f);

/// The relation ideal J of Sym(I): all g_ij = f_ij T_j - f_ji T_i.
struct PresentationIdeal {
  int n = 0;
  int q = 0;
  std::vector<MixedPolynomial> gens;          // indexed like pairs
  std::vector<std::pair<int, int>> pairs;     // (i, j), 1-based, i < j
};

PresentationIdeal presentation(std::vector<SqMonomial> f, int n);

/// Full normal form of p against the basis (top and tail reduction).
MixedPolynomial reduce(const MixedPolynomial& p,
                       const std::vector<MixedPolynomial>& basis,
                       const TermOrder& order);

/// True iff every S-polynomial of the generators reduces to zero
/// against the generators themselves, i.e. {g_ij} is a Groebner basis.
bool s_pair_reduction_test(const PresentationIdeal& p, const TermOrder& order);

/// Reduced Groebner basis of J: monic, self-reduced, unique for the
/// order. The ceiling bounds n + q.
std::vector<MixedPolynomial> buchberger(const PresentationIdeal& p,
                                        const TermOrder& order,
                                        int ceiling = 40);

struct SSequenceVerdict {
  bool verdict = false;
  bool route_a = false;  // S-pair reduction test on the raw generators
  bool route_b = false;  // in(J) of the reduced basis equals (I_1T_1,...,I_qT_q)
  bool strong = false;   // I_1 <= I_2 <= ... <= I_q
  bool input_resorted = false;
  AnnihilatorIdeals annihilators;
  std::size_t basis_size = 0;
  int max_t_degree = 0;
  std::vector<MixedPolynomial> reduced_basis;
};

/// Decides whether the monomial sequence generates its ideal as an
/// s-sequence, via both routes; they must agree.
SSequenceVerdict is_s_sequence(std::vector<SqMonomial> f, int n,
                               const TermOrder& order = TermOrder::mixed_lex());

struct SweepCell {
  int q = 0;
  bool verdict = false;
  bool expected = false;  // q <= n - d + 2
};

/// One cell per prefix length q = 1..C(n,d)-1 (the full set of
/// degree-d squarefree monomials is excluded).
std::vector<SweepCell> theorem_prefix_cells(int d, int n);

/// True iff verdict == expected on every cell.
bool theorem_prefix_check(int d, int n);

}  // namespace sqlex
