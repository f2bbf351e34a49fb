#include "sqlex/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqlex {

std::vector<SqMonomial> minimalize(std::vector<SqMonomial> gens) {
  std::sort(gens.begin(), gens.end(), HslexGreater{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<SqMonomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (divides(h, g)) {  // h has lower or equal degree: comes earlier
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

SqIdeal::SqIdeal(int n, std::vector<SqMonomial> gens) : n_(n) {
  if (n < 1) throw std::invalid_argument("ideal: ambient n must be >= 1");
  if (gens.empty()) throw std::invalid_argument("ideal: the zero ideal is rejected");
  for (const auto& g : gens) {
    if (g.is_one())
      throw std::invalid_argument("ideal: the unit ideal is rejected");
    if (max_index(g) > n)
      throw std::invalid_argument("ideal: generator exceeds ambient variable count");
  }
  auto minimal = minimalize(gens);
  std::sort(gens.begin(), gens.end(), HslexGreater{});
  was_minimal_ = (minimal == gens);
  gens_ = std::move(minimal);
  masks_.reserve(gens_.size());
  for (const auto& g : gens_) masks_.push_back(g.mask());
}

bool SqIdeal::contains(const SqMonomial& u) const {
  return contains_mask(u.mask());
}

bool SqIdeal::contains_mask(std::uint64_t m) const {
  for (std::uint64_t g : masks_)
    if ((g & m) == g) return true;
  return false;
}

std::map<int, int> SqIdeal::degree_counts() const {
  std::map<int, int> counts;
  for (const auto& g : gens_) ++counts[g.degree()];
  return counts;
}

int SqIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool SqIdeal::equigenerated() const { return degree_counts().size() == 1; }

SqIdeal SqIdeal::reembedded(int new_n) const {
  if (new_n < n_)
    throw std::invalid_argument("reembedded: ambient may only grow");
  return SqIdeal(new_n, gens_);
}

SqIdeal SqIdeal::without_smallest() const {
  if (gens_.size() < 2)
    throw std::invalid_argument("without_smallest: needs at least two generators");
  std::vector<SqMonomial> rest(gens_.begin(), gens_.end() - 1);
  return SqIdeal(n_, std::move(rest));
}

DegreeSequence::DegreeSequence(std::map<int, int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("degree sequence: empty support");
  for (const auto& [d, k] : entries_) {
    if (d < 1) throw std::invalid_argument("degree sequence: degrees are >= 1");
    if (k < 1) throw std::invalid_argument("degree sequence: counts are positive");
  }
}

int DegreeSequence::total() const {
  int t = 0;
  for (const auto& [d, k] : entries_) t += k;
  return t;
}

int RProfile::at(int j) const {
  auto it = values.find(j);
  return it == values.end() ? 0 : it->second;
}

}  // namespace sqlex
