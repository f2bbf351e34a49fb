#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sqlex/monomial.hpp"

namespace sqlex {

/// A squarefree monomial ideal, held by its minimal generating set
/// sorted descending by hslex. Proper and nonzero: the unit ideal and
/// the zero ideal are rejected.
class SqIdeal {
public:
  SqIdeal(int n, std::vector<SqMonomial> gens);

  int ambient() const { return n_; }
  const std::vector<SqMonomial>& generators() const { return gens_; }
  bool was_minimal() const { return was_minimal_; }

  /// Membership = divisibility by some minimal generator.
  bool contains(const SqMonomial& u) const;
  bool contains_mask(std::uint64_t m) const;
  const std::vector<std::uint64_t>& generator_masks() const { return masks_; }

  /// degree -> |G(I)_d|, only nonzero counts.
  std::map<int, int> degree_counts() const;
  int max_generator_degree() const;
  bool equigenerated() const;

  /// Same generators regarded in a larger polynomial ring.
  SqIdeal reembedded(int new_n) const;

  /// Drops the hslex-smallest generator; needs at least two.
  SqIdeal without_smallest() const;

  friend bool operator==(const SqIdeal& a, const SqIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

private:
  int n_ = 0;
  std::vector<SqMonomial> gens_;
  std::vector<std::uint64_t> masks_;
  bool was_minimal_ = true;
};

/// Minimal generators of the monomial ideal generated by `gens`:
/// drops every monomial properly divisible by another, dedups.
std::vector<SqMonomial> minimalize(std::vector<SqMonomial> gens);

/// A degree sequence: degree d -> positive generator count k_d.
class DegreeSequence {
public:
  explicit DegreeSequence(std::map<int, int> entries);

  const std::map<int, int>& entries() const { return entries_; }
  int max_degree() const { return entries_.rbegin()->first; }  // d_t
  int total() const;                                           // sum of k_i

private:
  std::map<int, int> entries_;
};

/// R_j = j + sum_{i<=j} k_i for j = 1..d_t. R_j strictly increasing.
struct RProfile {
  std::map<int, int> values;
  int at(int j) const;  // 0 for j outside 1..d_t
};

}  // namespace sqlex
