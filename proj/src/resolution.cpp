#include "sqlex/resolution.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

#include "sqlex/lexsegment.hpp"

namespace sqlex {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  auto [it, inserted] = entries.try_emplace({i, j}, value);
  if (!inserted) it->second += value;
}

int BettiTable::projdim() const {
  int p = 0;
  for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
  return p;
}

int BettiTable::reg() const {
  int r = 0;
  for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
  return r;
}

BettiTable BettiTable::to_ideal_table() const {
  if (subject != Subject::quotient)
    throw std::logic_error("to_ideal_table: already an ideal table");
  BettiTable out;
  out.n = n;
  out.subject = Subject::ideal;
  for (const auto& [ij, v] : entries)
    if (ij.first >= 1) out.add(ij.first - 1, ij.second, v);
  return out;
}

bool is_squarefree_stable(const SqIdeal& ideal) {
  for (const auto& u : ideal.generators()) {
    const int m = max_index(u);
    const std::uint64_t umask = u.mask();
    const std::uint64_t dropped = umask & ~(std::uint64_t{1} << (m - 1));
    for (int j = 1; j < m; ++j) {
      const std::uint64_t jbit = std::uint64_t{1} << (j - 1);
      if (umask & jbit) continue;  // j in supp(u)
      if (!ideal.contains_mask(dropped | jbit)) return false;
    }
  }
  return true;
}

BettiTable betti_table_stable(const SqIdeal& ideal) {
  if (!is_squarefree_stable(ideal))
    throw std::invalid_argument("betti_table_stable: ideal is not squarefree stable");
  BettiTable t;
  t.n = ideal.ambient();
  t.subject = BettiTable::Subject::ideal;
  for (const auto& u : ideal.generators()) {
    const int d = u.degree();
    const int m = max_index(u);
    for (int i = 0; i <= m - d; ++i) t.add(i, i + d, binomial(m - d, i));
  }
  return t;
}

namespace {

// Exact rank over Q of a sparse matrix given by rows.
int rank_exact(std::vector<std::map<int, mpq_class>>& rows) {
  int rank = 0;
  std::map<int, std::map<int, mpq_class>> pivots;  // pivot column -> row
  for (auto& row : rows) {
    while (!row.empty()) {
      const int c = row.begin()->first;
      auto piv = pivots.find(c);
      if (piv == pivots.end()) {
        pivots.emplace(c, std::move(row));
        ++rank;
        break;
      }
      const mpq_class factor = row.begin()->second / piv->second.begin()->second;
      for (const auto& [cc, v] : piv->second) {
        auto it = row.find(cc);
        if (it == row.end()) {
          row.emplace(cc, -factor * v);
        } else {
          it->second -= factor * v;
          if (it->second == 0) row.erase(it);
        }
      }
    }
  }
  return rank;
}

struct KoszulBlock {
  // Per-homological-degree dimensions and differential ranks of one
  // multidegree block; inserted into the strand totals.
  std::vector<int> dims;
  std::vector<int> ranks;  // ranks[i] = rank of d_i : C_i -> C_{i-1}
};

// Basis of C_i at multidegree a: subsets S of supp(a) with |S| = i such
// that x^{a-S} avoids the ideal. Membership only depends on supp(a-S),
// which drops exactly the S-positions where a has exponent 1.
KoszulBlock process_block(const std::vector<int>& a,
                          const std::vector<int>& supp,
                          const std::vector<std::uint64_t>& gen_masks) {
  const int s = static_cast<int>(supp.size());
  std::uint64_t supp_mask = 0, ones_mask = 0;
  for (int v : supp) {
    supp_mask |= std::uint64_t{1} << v;
    if (a[static_cast<std::size_t>(v)] == 1)
      ones_mask |= std::uint64_t{1} << v;
  }
  auto in_ideal = [&](std::uint64_t sub_mask) {
    const std::uint64_t rem = supp_mask & ~(sub_mask & ones_mask);
    for (std::uint64_t g : gen_masks)
      if ((g & rem) == g) return true;
    return false;
  };

  // enumerate subsets of supp by rank, indexed per cardinality
  std::vector<std::vector<std::uint64_t>> basis(static_cast<std::size_t>(s) + 1);
  std::vector<std::map<std::uint64_t, int>> index(static_cast<std::size_t>(s) + 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s); ++bits) {
    std::uint64_t sub = 0;
    for (int k = 0; k < s; ++k)
      if (bits & (std::uint64_t{1} << k))
        sub |= std::uint64_t{1} << supp[static_cast<std::size_t>(k)];
    if (in_ideal(sub)) continue;
    const int card = __builtin_popcountll(sub);
    index[static_cast<std::size_t>(card)].emplace(sub, static_cast<int>(basis[static_cast<std::size_t>(card)].size()));
    basis[static_cast<std::size_t>(card)].push_back(sub);
  }

  KoszulBlock block;
  block.dims.assign(static_cast<std::size_t>(s) + 1, 0);
  block.ranks.assign(static_cast<std::size_t>(s) + 2, 0);
  for (int i = 0; i <= s; ++i)
    block.dims[static_cast<std::size_t>(i)] =
        static_cast<int>(basis[static_cast<std::size_t>(i)].size());

  for (int i = 1; i <= s; ++i) {
    const auto& from = basis[static_cast<std::size_t>(i)];
    const auto& to_index = index[static_cast<std::size_t>(i - 1)];
    if (from.empty() || to_index.empty()) continue;
    std::vector<std::map<int, mpq_class>> rows;
    rows.reserve(from.size());
    for (std::uint64_t S : from) {
      std::map<int, mpq_class> row;
      int pos = 0;
      for (int v : supp) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (!(S & bit)) continue;
        auto it = to_index.find(S & ~bit);
        if (it != to_index.end())
          row.emplace(it->second, (pos % 2 == 0) ? 1 : -1);
        ++pos;
      }
      rows.push_back(std::move(row));
    }
    block.ranks[static_cast<std::size_t>(i)] = rank_exact(rows);
  }
  return block;
}

void visit_multidegrees(int n, int degree, std::vector<int>& a, int pos,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == n - 1) {
    a[static_cast<std::size_t>(pos)] = degree;
    fn(a);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    a[static_cast<std::size_t>(pos)] = e;
    visit_multidegrees(n, degree - e, a, pos + 1, fn);
  }
}

}  // namespace

BettiTable betti_table_quotient_oracle(int n, const std::vector<SqMonomial>& gens,
                                       int ceiling, bool skip_exact_blocks) {
  if (n > ceiling)
    throw std::invalid_argument("betti oracle: ambient exceeds the configured ceiling");
  std::vector<std::uint64_t> gen_masks;  // bit v set iff X_{v+1} divides
  gen_masks.reserve(gens.size());
  for (const auto& g : minimalize(gens)) gen_masks.push_back(g.mask());

  BettiTable t;
  t.n = n;
  t.subject = BettiTable::Subject::quotient;
  t.add(0, 0, 1);  // H_0 = K in multidegree zero

  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    std::map<int, long long> strand_beta;
    visit_multidegrees(n, j, a, 0, [&](const std::vector<int>& md) {
      std::vector<int> supp;  // 0-based variable positions
      std::uint64_t supp_mask = 0;
      for (int v = 0; v < n; ++v) {
        if (md[static_cast<std::size_t>(v)] > 0) {
          supp.push_back(v);
          supp_mask |= std::uint64_t{1} << v;
        }
      }
      if (skip_exact_blocks) {
        // generators fitting inside supp(a) are the only ones that can
        // remove basis elements from this block
        std::uint64_t relevant_union = 0;
        bool touched = false;
        for (std::uint64_t g : gen_masks)
          if ((g & supp_mask) == g) {
            touched = true;
            relevant_union |= g;
          }
        if (!touched) return;  // full Koszul strand, exact in positive degree
        // a vertex of exponent 1 outside every relevant generator gives
        // a contracting homotopy e_S (x) m -> e_{S+v} (x) m/x_v
        std::uint64_t ones = 0;
        for (int v : supp)
          if (md[static_cast<std::size_t>(v)] == 1)
            ones |= std::uint64_t{1} << v;
        if (ones & ~relevant_union) return;
      }
      KoszulBlock block = process_block(md, supp, gen_masks);
      const int s = static_cast<int>(supp.size());
      for (int i = 0; i <= s; ++i) {
        const long long h = block.dims[static_cast<std::size_t>(i)] -
                            block.ranks[static_cast<std::size_t>(i)] -
                            block.ranks[static_cast<std::size_t>(i + 1)];
        if (h != 0) strand_beta[i] += h;
      }
    });
    for (const auto& [i, h] : strand_beta) {
      if (h < 0) throw std::logic_error("betti oracle: negative strand homology");
      t.add(i, j, h);
    }
  }
  return t;
}

BettiTable betti_table_oracle(const SqIdeal& ideal, int ceiling) {
  return betti_table_quotient_oracle(ideal.ambient(), ideal.generators(), ceiling)
      .to_ideal_table();
}

std::vector<ExtremalBetti> extremal_from_table(const BettiTable& table) {
  std::vector<ExtremalBetti> out;
  for (const auto& [kj, value] : table.entries) {
    const int k = kj.first;
    const int ell = kj.second - kj.first;
    bool extremal = true;
    for (const auto& [ij, v] : table.entries) {
      if (ij == kj) continue;
      if (ij.first >= k && ij.second - ij.first >= ell) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back({k, ell, value});
  }
  std::sort(out.begin(), out.end(),
            [](const ExtremalBetti& a, const ExtremalBetti& b) { return a.k > b.k; });
  return out;
}

std::vector<ExtremalBetti> extremal_combinatorial(const SqIdeal& ideal) {
  if (!is_squarefree_stable(ideal))
    throw std::invalid_argument("extremal_combinatorial: needs a squarefree stable ideal");
  std::map<int, std::vector<int>> max_indices_by_degree;  // ell -> m(u) list
  for (const auto& u : ideal.generators())
    max_indices_by_degree[u.degree()].push_back(max_index(u));
  std::vector<ExtremalBetti> out;
  for (const auto& [ell, ms] : max_indices_by_degree) {
    const int top = *std::max_element(ms.begin(), ms.end());
    const int k = top - ell;
    bool extremal = true;
    for (const auto& [j, ms2] : max_indices_by_degree) {
      if (j <= ell) continue;
      for (int m2 : ms2)
        if (m2 >= k + j) {
          extremal = false;
          break;
        }
      if (!extremal) break;
    }
    if (!extremal) continue;
    const long long value =
        static_cast<long long>(std::count(ms.begin(), ms.end(), top));
    out.push_back({k, ell, value});
  }
  std::sort(out.begin(), out.end(),
            [](const ExtremalBetti& a, const ExtremalBetti& b) { return a.k > b.k; });
  return out;
}

std::vector<ExtremalBetti> extremal_betti(const SqIdeal& ideal,
                                          const BettiTable& table) {
  auto scan = extremal_from_table(table);
  auto comb = extremal_combinatorial(ideal);
  if (scan != comb)
    throw std::logic_error("extremal_betti: table scan and combinatorial routes disagree");
  return scan;
}

UsliInvariants usli_invariants(const SqIdeal& ideal) {
  if (!is_usli_structural(ideal))
    throw std::invalid_argument("usli_invariants: input is not universal");
  const int q = static_cast<int>(ideal.generators().size());
  const int d_t = ideal.max_generator_degree();
  UsliInvariants inv;
  inv.projdim = q - 1;
  inv.reg = d_t;
  inv.depth_of_quotient = ideal.ambient() - q;
  // R_{d_t} - 1 - d_t with R_{d_t} = d_t + |G(I)|
  inv.unique_extremal = ExtremalBetti{q - 1, d_t, 1};
  return inv;
}

int reg_stable(const SqIdeal& ideal) {
  if (!is_squarefree_stable(ideal))
    throw std::invalid_argument("reg_stable: ideal is not squarefree stable");
  return ideal.max_generator_degree();
}

}  // namespace sqlex
