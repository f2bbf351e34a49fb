#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sqlex {

/// A squarefree monomial, stored as its support: strictly increasing
/// 1-based variable indices. The empty support is the monomial 1.
class SqMonomial {
public:
  SqMonomial() = default;
  explicit SqMonomial(std::vector<int> support);
  SqMonomial(std::initializer_list<int> support);

  static SqMonomial one() { return SqMonomial{}; }
  static SqMonomial from_mask(std::uint64_t mask);

  int degree() const { return static_cast<int>(support_.size()); }
  bool is_one() const { return support_.empty(); }
  const std::vector<int>& support() const { return support_; }

  /// Bit i-1 set iff X_i divides the monomial. Ambient size <= 64.
  std::uint64_t mask() const;

  bool contains(int var) const;

  friend bool operator==(const SqMonomial&, const SqMonomial&) = default;

private:
  std::vector<int> support_;
};

/// m(u): the largest variable index dividing u. Undefined on 1.
int max_index(const SqMonomial& u);

/// Lexicographic order on squarefree monomials of one degree:
/// u > v iff i_s < j_s at the first position where the supports differ.
/// Returns +1 / 0 / -1. Requires deg u = deg v.
int cmp_slex(const SqMonomial& u, const SqMonomial& v);

/// Degree-first extension of slex to all squarefree monomials: the
/// monomial of smaller degree compares greater (so X1X2 > X1X3X4),
/// ties broken by slex.
int cmp_hslex(const SqMonomial& u, const SqMonomial& v);

bool divides(const SqMonomial& g, const SqMonomial& u);
SqMonomial gcd(const SqMonomial& u, const SqMonomial& v);
bool coprime(const SqMonomial& u, const SqMonomial& v);

/// Product of monomials with disjoint support.
SqMonomial disjoint_product(const SqMonomial& u, const SqMonomial& v);

/// f_ij = f_i / [f_i, f_j]: support(f_i) minus support(f_j).
/// Rejects f_i = f_j (the colon ideal would be the unit ideal).
SqMonomial colon_quotient(const SqMonomial& f_i, const SqMonomial& f_j);

struct HslexGreater {
  bool operator()(const SqMonomial& a, const SqMonomial& b) const {
    return cmp_hslex(a, b) > 0;
  }
};

/// "x1*x3*x4"; the unit monomial prints as "1".
std::string to_string(const SqMonomial& u, char var_letter = 'x');

/// Parses the product-of-variables syntax. Rejects repeated variables
/// (squarefree context) and indices outside 1..n.
SqMonomial parse_squarefree(std::string_view text, int n,
                            char var_letter = 'x');

/// Visits all squarefree monomials of degree d in n variables in
/// slex-descending order, as index vectors. Stops early if the
/// callback returns false.
void for_each_squarefree_slex(int n, int d,
                              const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace sqlex
