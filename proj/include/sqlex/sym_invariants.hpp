#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sqlex/ideal.hpp"
#include "sqlex/s_sequence.hpp"

namespace sqlex {

enum class SymSource { closed_form, hrt_formula, facet_oracle, tor_oracle };

/// Invariants of the symmetric algebra Sym_A(I) = S/J. Regularity and
/// depth stay empty where no formula or computation supplies them.
struct SymReport {
  int dim = 0;
  long long multiplicity = 0;
  std::optional<int> reg;
  std::optional<int> depth;
  SymSource source = SymSource::closed_form;
};

/// Stanley-Reisner complex of (I_1T_1,...,I_qT_q) on the n+q vertices
/// x_1..x_n, t_1..t_q (bits 0..n-1 and n..n+q-1). Facets are the
/// maximal faces; they carry the Krull dimension and multiplicity of
/// the quotient.
struct FacetComplex {
  int vertex_count = 0;
  std::vector<std::uint64_t> nonfaces;
  std::vector<std::uint64_t> facets;
};

/// Closed forms for equigenerated universal / almost universal ideals:
/// universal   -> dim n+1, e = |G(I)|, reg 1, depth n+1;
/// almost      -> dim n+1, e = 2|G(I)| - 2.
SymReport sym_closed_form(const SqIdeal& ideal);

/// Dimension as max over nonempty index subsets of
/// n - |vars(I_{i_1} + ... + I_{i_r})| + r, multiplicity as the number
/// of subsets attaining it (each contributes 1 because the summands
/// are generated by variables; other generators are rejected).
SymReport sym_hrt_formula(const AnnihilatorIdeals& ann);

FacetComplex facet_complex(const AnnihilatorIdeals& ann);

/// dim = max facet size, multiplicity = number of facets of that size.
/// Meaningful for Sym when the sequence is an s-sequence (then the
/// complex presents S/in(J)); callers classify first.
SymReport facet_oracle(const AnnihilatorIdeals& ann, int ceiling = 14);

/// Betti numbers of S/(I_1T_1,...,I_qT_q) through the Koszul oracle on
/// n+q variables: reports reg, depth = (n+q) - projdim, plus dim and
/// multiplicity from the facet complex so the report is complete.
SymReport sym_homological_oracle(const AnnihilatorIdeals& ann, int ceiling = 10);

std::string to_string(SymSource source);

/// Closed form against every applicable oracle. `agree` holds iff all
/// computed dims and multiplicities coincide (and, for universal
/// ideals, the homological oracle confirms reg and depth when it fits
/// under its ceiling).
struct SymComparison {
  std::string classification;  // "usli" | "ausli"
  SymReport closed_form;
  SymReport hrt;
  SymReport facet;
  std::optional<SymReport> homological;
  bool agree = false;
};

SymComparison sym_compare(const SqIdeal& ideal, int facet_ceiling = 14,
                          int homological_ceiling = 10);

}  // namespace sqlex
