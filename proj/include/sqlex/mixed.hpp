#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sqlex/monomial.hpp"

namespace sqlex {

/// A monomial of the mixed ring K[X_1..X_n, T_1..T_q], kept as two
/// exponent vectors. Generators of the presentation ideal carry
/// T-degree exactly 1; Groebner computations can raise it.
struct MixedMonomial {
  std::vector<int> xe;  // length n
  std::vector<int> te;  // length q

  static MixedMonomial one(int n, int q);
  static MixedMonomial x_power(int n, int q, const SqMonomial& u);
  static MixedMonomial t_var(int n, int q, int i);  // 1-based

  int n() const { return static_cast<int>(xe.size()); }
  int q() const { return static_cast<int>(te.size()); }
  int t_degree() const;
  int total_degree() const;
  bool is_one() const;

  bool divides(const MixedMonomial& other) const;
  MixedMonomial times(const MixedMonomial& other) const;
  MixedMonomial divided_by(const MixedMonomial& other) const;
  MixedMonomial lcm_with(const MixedMonomial& other) const;

  friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
};

/// Term orders used across the artifact. The mixed orders obey
/// X_1 > ... > X_n, T_1 < ... < T_q, and X_i < T_j throughout:
///   mixed_lex     pure lex with precedence T_q > ... > T_1 > X_1 > ... > X_n
///   mixed_deglex  total T-degree first, ties broken as mixed_lex
/// (the second exists to exercise order-independence of verdicts).
struct TermOrder {
  enum class Kind { slex, hslex, mixed_lex, mixed_deglex };
  Kind kind = Kind::mixed_lex;

  static TermOrder mixed_lex() { return TermOrder{Kind::mixed_lex}; }
  static TermOrder mixed_deglex() { return TermOrder{Kind::mixed_deglex}; }
};

/// Returns +1 / 0 / -1. Requires a mixed order kind and equal shapes.
int cmp_mixed(const MixedMonomial& a, const MixedMonomial& b,
              const TermOrder& order);

using MixedTerm = std::pair<MixedMonomial, mpq_class>;

/// Terms sorted descending with respect to the order the engine runs
/// under; no zero coefficients are stored.
struct MixedPolynomial {
  std::vector<MixedTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const MixedTerm& leading() const;
  int max_t_degree() const;
};

/// Collects terms (summing duplicates) and sorts descending.
MixedPolynomial make_polynomial(std::vector<MixedTerm> terms,
                                const TermOrder& order);

MixedPolynomial subtract(const MixedPolynomial& a, const MixedPolynomial& b,
                         const TermOrder& order);

MixedPolynomial multiply_term(const MixedPolynomial& p, const MixedMonomial& m,
                              const mpq_class& c);

void make_monic(MixedPolynomial& p);

/// "c*x..*t.." terms joined with signs; rationals as p/q.
std::string to_string(const MixedPolynomial& p);
std::string to_string(const MixedMonomial& m);

}  // namespace sqlex
