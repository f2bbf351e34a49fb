#include "sqlex/sym_invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sqlex/lexsegment.hpp"
#include "sqlex/resolution.hpp"

namespace sqlex {

SymReport sym_closed_form(const SqIdeal& ideal) {
  if (!ideal.equigenerated())
    throw std::invalid_argument("sym_closed_form: ideal must be equigenerated");
  const int n = ideal.ambient();
  const long long q = static_cast<long long>(ideal.generators().size());
  SymReport r;
  r.source = SymSource::closed_form;
  r.dim = n + 1;
  if (is_usli_structural(ideal)) {
    r.multiplicity = q;
    r.reg = 1;
    r.depth = n + 1;
    return r;
  }
  if (ideal.generators().size() >= 2 && is_ausli(ideal)) {
    r.multiplicity = 2 * q - 2;
    return r;
  }
  throw std::invalid_argument(
      "sym_closed_form: ideal is neither universal nor almost universal");
}

SymReport sym_hrt_formula(const AnnihilatorIdeals& ann) {
  const int q = ann.q();
  if (q > 62)
    throw std::invalid_argument("sym_hrt_formula: too many generators");
  std::vector<std::uint64_t> var_masks;  // variables of each I_i
  var_masks.reserve(static_cast<std::size_t>(q));
  for (const auto& ideal : ann.ideals) {
    std::uint64_t m = 0;
    for (const auto& g : ideal) {
      if (g.degree() != 1)
        throw std::invalid_argument(
            "sym_hrt_formula: annihilator ideal not generated by variables");
      m |= g.mask();
    }
    var_masks.push_back(m);
  }
  int best = -1;
  long long count = 0;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << q); ++subset) {
    std::uint64_t vars = 0;
    for (int i = 0; i < q; ++i)
      if (subset & (std::uint64_t{1} << i))
        vars |= var_masks[static_cast<std::size_t>(i)];
    const int dim = ann.n - std::popcount(vars) + std::popcount(subset);
    if (dim > best) {
      best = dim;
      count = 1;
    } else if (dim == best) {
      ++count;
    }
  }
  SymReport r;
  r.source = SymSource::hrt_formula;
  r.dim = best;
  r.multiplicity = count;  // each top summand has e(A/H) = 1
  return r;
}

FacetComplex facet_complex(const AnnihilatorIdeals& ann) {
  FacetComplex fc;
  fc.vertex_count = ann.n + ann.q();
  for (int i = 1; i <= ann.q(); ++i) {
    for (const auto& g : ann.ideals[static_cast<std::size_t>(i - 1)]) {
      // support of the generator g * t_i
      fc.nonfaces.push_back(g.mask() |
                            (std::uint64_t{1} << (ann.n + i - 1)));
    }
  }
  const int N = fc.vertex_count;
  if (N > 62) throw std::invalid_argument("facet_complex: vertex count too large");
  auto is_face = [&](std::uint64_t s) {
    for (std::uint64_t nf : fc.nonfaces)
      if ((nf & s) == nf) return false;
    return true;
  };
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << N); ++s) {
    if (!is_face(s)) continue;
    bool maximal = true;
    for (int v = 0; v < N && maximal; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(s & bit) && is_face(s | bit)) maximal = false;
    }
    if (maximal) fc.facets.push_back(s);
  }
  return fc;
}

SymReport facet_oracle(const AnnihilatorIdeals& ann, int ceiling) {
  if (ann.n + ann.q() > ceiling)
    throw std::invalid_argument("facet_oracle: n + q exceeds the facet ceiling");
  FacetComplex fc = facet_complex(ann);
  if (fc.facets.empty())
    throw std::logic_error("facet_oracle: complex has no facets");
  int dim = 0;
  for (std::uint64_t f : fc.facets) dim = std::max(dim, std::popcount(f));
  long long mult = 0;
  for (std::uint64_t f : fc.facets)
    if (std::popcount(f) == dim) ++mult;
  SymReport r;
  r.source = SymSource::facet_oracle;
  r.dim = dim;
  r.multiplicity = mult;
  return r;
}

SymReport sym_homological_oracle(const AnnihilatorIdeals& ann, int ceiling) {
  const int N = ann.n + ann.q();
  if (N > ceiling)
    throw std::invalid_argument(
        "sym_homological_oracle: n + q exceeds the homological ceiling");
  std::vector<SqMonomial> gens;  // generators of (I_1t_1,...,I_qt_q) in N vars
  for (int i = 1; i <= ann.q(); ++i) {
    for (const auto& g : ann.ideals[static_cast<std::size_t>(i - 1)]) {
      std::vector<int> support = g.support();
      support.push_back(ann.n + i);
      gens.emplace_back(std::move(support));
    }
  }
  SymReport r;
  r.source = SymSource::tor_oracle;
  {
    SymReport facets = facet_oracle(ann, std::max(ceiling, 14));
    r.dim = facets.dim;
    r.multiplicity = facets.multiplicity;
  }
  if (gens.empty()) {
    // q = 1: the presentation ideal is zero and S/in(J) = S
    r.reg = 0;
    r.depth = N;
    return r;
  }
  BettiTable quotient = betti_table_quotient_oracle(N, gens, ceiling);
  r.reg = quotient.reg();
  r.depth = N - quotient.projdim();
  return r;
}

std::string to_string(SymSource source) {
  switch (source) {
    case SymSource::closed_form: return "closed_form";
    case SymSource::hrt_formula: return "hrt_formula";
    case SymSource::facet_oracle: return "facet_oracle";
    case SymSource::tor_oracle: return "tor_oracle";
  }
  return "unknown";
}

SymComparison sym_compare(const SqIdeal& ideal, int facet_ceiling,
                          int homological_ceiling) {
  SymComparison cmp;
  cmp.closed_form = sym_closed_form(ideal);  // classifies or throws
  const bool universal = is_usli_structural(ideal);
  cmp.classification = universal ? "usli" : "ausli";

  AnnihilatorIdeals ann = annihilator_ideals(ideal.generators(), ideal.ambient());
  cmp.hrt = sym_hrt_formula(ann);
  cmp.facet = facet_oracle(ann, facet_ceiling);
  cmp.agree = cmp.closed_form.dim == cmp.hrt.dim &&
              cmp.hrt.dim == cmp.facet.dim &&
              cmp.closed_form.multiplicity == cmp.hrt.multiplicity &&
              cmp.hrt.multiplicity == cmp.facet.multiplicity;

  if (universal && ideal.ambient() + ann.q() <= homological_ceiling) {
    cmp.homological = sym_homological_oracle(ann, homological_ceiling);
    if (ann.q() >= 2) {
      cmp.agree = cmp.agree && cmp.homological->reg == cmp.closed_form.reg &&
                  cmp.homological->depth == cmp.closed_form.depth &&
                  cmp.homological->depth == cmp.homological->dim;
    }
  }
  return cmp;
}

}  // namespace sqlex
