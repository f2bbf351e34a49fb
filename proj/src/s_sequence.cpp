#include "sqlex/s_sequence.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "sqlex/lexsegment.hpp"
#include "sqlex/resolution.hpp"

namespace sqlex {

namespace {

std::vector<SqMonomial> sorted_unique_descending(std::vector<SqMonomial> f,
                                                 bool* resorted = nullptr) {
  std::vector<SqMonomial> sorted = f;
  std::sort(sorted.begin(), sorted.end(), HslexGreater{});
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("s-sequence: degenerate sequence with duplicate generators");
  if (resorted) *resorted = (sorted != f);
  return sorted;
}

}  // namespace

AnnihilatorIdeals annihilator_ideals(std::vector<SqMonomial> f, int n) {
  f = sorted_unique_descending(std::move(f));
  AnnihilatorIdeals ann;
  ann.n = n;
  ann.ideals.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<SqMonomial> gens;
    gens.reserve(i);
    for (std::size_t k = 0; k < i; ++k)
      gens.push_back(colon_quotient(f[k], f[i]));
    ann.ideals.push_back(minimalize(std::move(gens)));
  }
  return ann;
}

bool pairwise_coprime(const std::vector<SqMonomial>& f) {
  const int q = static_cast<int>(f.size());
  if (q <= 2) return true;
  std::vector<std::vector<std::uint64_t>> quot(
      static_cast<std::size_t>(q),
      std::vector<std::uint64_t>(static_cast<std::size_t>(q), 0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j)
        quot[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            f[static_cast<std::size_t>(i)].mask() &
            ~f[static_cast<std::size_t>(j)].mask();
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int h = 0; h < q; ++h) {
        if (h == i) continue;
        for (int l = h + 1; l < q; ++l) {
          if (l == j) continue;
          if (quot[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &
              quot[static_cast<std::size_t>(h)][static_cast<std::size_t>(l)])
            return false;
        }
      }
  return true;
}

PresentationIdeal presentation(std::vector<SqMonomial> f, int n) {
  f = sorted_unique_descending(std::move(f));
  PresentationIdeal p;
  p.n = n;
  p.q = static_cast<int>(f.size());
  const TermOrder order = TermOrder::mixed_lex();
  for (int i = 1; i <= p.q; ++i) {
    for (int j = i + 1; j <= p.q; ++j) {
      const SqMonomial fij = colon_quotient(f[static_cast<std::size_t>(i - 1)],
                                            f[static_cast<std::size_t>(j - 1)]);
      const SqMonomial fji = colon_quotient(f[static_cast<std::size_t>(j - 1)],
                                            f[static_cast<std::size_t>(i - 1)]);
      std::vector<MixedTerm> terms;
      terms.emplace_back(
          MixedMonomial::x_power(n, p.q, fij).times(MixedMonomial::t_var(n, p.q, j)),
          mpq_class(1));
      terms.emplace_back(
          MixedMonomial::x_power(n, p.q, fji).times(MixedMonomial::t_var(n, p.q, i)),
          mpq_class(-1));
      p.gens.push_back(make_polynomial(std::move(terms), order));
      p.pairs.emplace_back(i, j);
    }
  }
  return p;
}

MixedPolynomial reduce(const MixedPolynomial& p,
                       const std::vector<MixedPolynomial>& basis,
                       const TermOrder& order) {
  MixedPolynomial rest = p;
  MixedPolynomial remainder;
  while (!rest.is_zero()) {
    const auto& [lm, lc] = rest.leading();
    const MixedPolynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading().first.divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.terms.push_back(rest.leading());
      rest.terms.erase(rest.terms.begin());
      continue;
    }
    const auto& [glm, glc] = divisor->leading();
    rest = subtract(rest,
                    multiply_term(*divisor, lm.divided_by(glm), lc / glc),
                    order);
  }
  return remainder;
}

namespace {

MixedPolynomial s_polynomial(const MixedPolynomial& f, const MixedPolynomial& g,
                             const TermOrder& order) {
  const auto& [fm, fc] = f.leading();
  const auto& [gm, gc] = g.leading();
  const MixedMonomial l = fm.lcm_with(gm);
  return subtract(multiply_term(f, l.divided_by(fm), 1 / fc),
                  multiply_term(g, l.divided_by(gm), 1 / gc), order);
}

bool coprime_leads(const MixedPolynomial& f, const MixedPolynomial& g) {
  const auto& a = f.leading().first;
  const auto& b = g.leading().first;
  for (std::size_t i = 0; i < a.xe.size(); ++i)
    if (a.xe[i] > 0 && b.xe[i] > 0) return false;
  for (std::size_t i = 0; i < a.te.size(); ++i)
    if (a.te[i] > 0 && b.te[i] > 0) return false;
  return true;
}

}  // namespace

bool s_pair_reduction_test(const PresentationIdeal& p, const TermOrder& order) {
  const auto& basis = p.gens;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (coprime_leads(basis[i], basis[j])) continue;  // reduces to zero
      if (!reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero())
        return false;
    }
  }
  return true;
}

std::vector<MixedPolynomial> buchberger(const PresentationIdeal& p,
                                        const TermOrder& order, int ceiling) {
  if (p.n + p.q > ceiling)
    throw std::invalid_argument("buchberger: n + q exceeds the engine ceiling");

  std::vector<MixedPolynomial> basis;
  for (const auto& g : p.gens) {
    if (g.is_zero()) continue;
    MixedPolynomial h = g;
    make_monic(h);
    basis.push_back(std::move(h));
  }

  struct Pair {
    std::size_t i, j;
    MixedMonomial lcm;
    int degree;
  };
  auto make_pair = [&](std::size_t i, std::size_t j) {
    MixedMonomial l = basis[i].leading().first.lcm_with(basis[j].leading().first);
    const int deg = l.total_degree();
    return Pair{i, j, std::move(l), deg};
  };
  auto later = [&](const Pair& a, const Pair& b) {  // min-heap on (degree, lcm)
    if (a.degree != b.degree) return a.degree > b.degree;
    return cmp_mixed(a.lcm, b.lcm, order) > 0;
  };

  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  std::vector<std::vector<bool>> done;  // done[j][i], i < j: pair treated
  auto mark_done = [&](std::size_t i, std::size_t j) {
    done[std::max(i, j)][std::min(i, j)] = true;
  };
  auto is_done = [&](std::size_t i, std::size_t j) {
    return done[std::max(i, j)][std::min(i, j)];
  };

  done.resize(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    done[j].assign(j, false);
    for (std::size_t i = 0; i < j; ++i) queue.push(make_pair(i, j));
  }

  while (!queue.empty()) {
    Pair pair = queue.top();
    queue.pop();
    mark_done(pair.i, pair.j);

    if (coprime_leads(basis[pair.i], basis[pair.j])) continue;
    // chain criterion: some treated k with lt(g_k) dividing the lcm
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].leading().first.divides(pair.lcm) && is_done(pair.i, k) &&
          is_done(pair.j, k))
        skip = true;
    }
    if (skip) continue;

    MixedPolynomial remainder =
        reduce(s_polynomial(basis[pair.i], basis[pair.j], order), basis, order);
    if (remainder.is_zero()) continue;
    make_monic(remainder);
    basis.push_back(std::move(remainder));
    const std::size_t t = basis.size() - 1;
    done.emplace_back(t, false);
    for (std::size_t i = 0; i < t; ++i) queue.push(make_pair(i, t));
  }

  // reduced basis: drop elements whose lead another lead divides, then
  // tail-reduce each survivor against the rest
  std::vector<MixedPolynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading().first;
      const auto& lj = basis[j].leading().first;
      if (lj.divides(li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<MixedPolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MixedPolynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MixedPolynomial r = reduce(minimal[i], others, order);
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const MixedPolynomial& a, const MixedPolynomial& b) {
              return cmp_mixed(a.leading().first, b.leading().first, order) > 0;
            });
  return reduced;
}

SSequenceVerdict is_s_sequence(std::vector<SqMonomial> f, int n,
                               const TermOrder& order) {
  SSequenceVerdict v;
  f = sorted_unique_descending(std::move(f), &v.input_resorted);
  v.annihilators = annihilator_ideals(f, n);

  PresentationIdeal p = presentation(f, n);
  v.route_a = s_pair_reduction_test(p, order);

  v.reduced_basis = buchberger(p, order);
  v.basis_size = v.reduced_basis.size();
  for (const auto& g : v.reduced_basis)
    v.max_t_degree = std::max(v.max_t_degree, g.max_t_degree());

  // route b: initial ideal of the reduced basis vs (I_1T_1,...,I_qT_q),
  // both as minimal monomial generating sets
  std::vector<MixedMonomial> lead_gens;
  lead_gens.reserve(v.reduced_basis.size());
  for (const auto& g : v.reduced_basis) lead_gens.push_back(g.leading().first);
  std::vector<MixedMonomial> ann_gens;
  for (int i = 1; i <= v.annihilators.q(); ++i)
    for (const auto& m : v.annihilators.ideals[static_cast<std::size_t>(i - 1)])
      ann_gens.push_back(MixedMonomial::x_power(n, p.q, m)
                             .times(MixedMonomial::t_var(n, p.q, i)));
  auto canonical = [&](std::vector<MixedMonomial> ms) {
    std::sort(ms.begin(), ms.end(), [&](const MixedMonomial& a, const MixedMonomial& b) {
      return cmp_mixed(a, b, order) > 0;
    });
    return ms;
  };
  v.route_b = (canonical(std::move(lead_gens)) == canonical(std::move(ann_gens)));

  if (v.route_a != v.route_b)
    throw std::logic_error("is_s_sequence: reduction test and initial-ideal routes disagree");
  v.verdict = v.route_a;

  // strong: the annihilator chain condition
  v.strong = true;
  for (int i = 1; i < v.annihilators.q() && v.strong; ++i) {
    const auto& smaller = v.annihilators.ideals[static_cast<std::size_t>(i - 1)];
    const auto& larger = v.annihilators.ideals[static_cast<std::size_t>(i)];
    for (const auto& g : smaller) {
      bool inside = false;
      for (const auto& h : larger)
        if (divides(h, g)) {
          inside = true;
          break;
        }
      if (!inside) {
        v.strong = false;
        break;
      }
    }
  }
  return v;
}

std::vector<SweepCell> theorem_prefix_cells(int d, int n) {
  const long long total = binomial(n, d);
  std::vector<SweepCell> cells;
  for (int q = 1; q < total; ++q) {
    SqIdeal prefix = lexsegment_prefix(d, q, n);
    SweepCell cell;
    cell.q = q;
    cell.verdict = is_s_sequence(prefix.generators(), n).verdict;
    cell.expected = (q <= n - d + 2);
    cells.push_back(cell);
  }
  return cells;
}

bool theorem_prefix_check(int d, int n) {
  for (const auto& cell : theorem_prefix_cells(d, n))
    if (cell.verdict != cell.expected) return false;
  return true;
}

}  // namespace sqlex
