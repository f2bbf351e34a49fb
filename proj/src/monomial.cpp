#include "sqlex/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sqlex {

namespace {

void validate_support(const std::vector<int>& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1)
      throw std::invalid_argument("monomial: variable indices are 1-based");
    if (k > 0 && s[k] <= s[k - 1])
      throw std::invalid_argument(
          "monomial: support must be strictly increasing");
  }
}

}  // namespace

SqMonomial::SqMonomial(std::vector<int> support) : support_(std::move(support)) {
  validate_support(support_);
}

SqMonomial::SqMonomial(std::initializer_list<int> support)
    : support_(support) {
  validate_support(support_);
}

SqMonomial SqMonomial::from_mask(std::uint64_t mask) {
  std::vector<int> s;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) s.push_back(i + 1);
  return SqMonomial{std::move(s)};
}

std::uint64_t SqMonomial::mask() const {
  std::uint64_t m = 0;
  for (int i : support_) {
    if (i > 64) throw std::domain_error("monomial: mask limited to 64 variables");
    m |= std::uint64_t{1} << (i - 1);
  }
  return m;
}

bool SqMonomial::contains(int var) const {
  return std::binary_search(support_.begin(), support_.end(), var);
}

int max_index(const SqMonomial& u) {
  if (u.is_one())
    throw std::domain_error("max_index: undefined on the monomial 1");
  return u.support().back();
}

int cmp_slex(const SqMonomial& u, const SqMonomial& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("cmp_slex: degree mismatch");
  const auto& a = u.support();
  const auto& b = v.support();
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s] != b[s]) return a[s] < b[s] ? 1 : -1;
  }
  return 0;
}

int cmp_hslex(const SqMonomial& u, const SqMonomial& v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree() ? 1 : -1;
  return cmp_slex(u, v);
}

bool divides(const SqMonomial& g, const SqMonomial& u) {
  return std::includes(u.support().begin(), u.support().end(),
                       g.support().begin(), g.support().end());
}

SqMonomial gcd(const SqMonomial& u, const SqMonomial& v) {
  std::vector<int> s;
  std::set_intersection(u.support().begin(), u.support().end(),
                        v.support().begin(), v.support().end(),
                        std::back_inserter(s));
  return SqMonomial{std::move(s)};
}

bool coprime(const SqMonomial& u, const SqMonomial& v) {
  return gcd(u, v).is_one();
}

SqMonomial disjoint_product(const SqMonomial& u, const SqMonomial& v) {
  if (!coprime(u, v))
    throw std::invalid_argument("disjoint_product: overlapping supports");
  std::vector<int> s;
  std::set_union(u.support().begin(), u.support().end(),
                 v.support().begin(), v.support().end(),
                 std::back_inserter(s));
  return SqMonomial{std::move(s)};
}

SqMonomial colon_quotient(const SqMonomial& f_i, const SqMonomial& f_j) {
  if (f_i == f_j)
    throw std::invalid_argument("colon_quotient: degenerate pair f_i = f_j");
  std::vector<int> s;
  std::set_difference(f_i.support().begin(), f_i.support().end(),
                      f_j.support().begin(), f_j.support().end(),
                      std::back_inserter(s));
  return SqMonomial{std::move(s)};
}

std::string to_string(const SqMonomial& u, char var_letter) {
  if (u.is_one()) return "1";
  std::string out;
  for (std::size_t k = 0; k < u.support().size(); ++k) {
    if (k > 0) out += '*';
    out += var_letter;
    out += std::to_string(u.support()[k]);
  }
  return out;
}

SqMonomial parse_squarefree(std::string_view text, int n, char var_letter) {
  // strip spaces
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact += c;
  if (compact == "1") return SqMonomial::one();
  std::vector<int> seen;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != var_letter && compact[pos] != 'X' &&
        compact[pos] != 'x')
      throw std::invalid_argument("parse: expected variable at '" +
                                  std::string(compact.substr(pos)) + "'");
    ++pos;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(compact.data() + pos,
                                     compact.data() + compact.size(), idx);
    if (ec != std::errc{} || ptr == compact.data() + pos)
      throw std::invalid_argument("parse: missing variable index");
    pos = static_cast<std::size_t>(ptr - compact.data());
    if (idx < 1 || idx > n)
      throw std::invalid_argument("parse: variable index " +
                                  std::to_string(idx) + " outside 1.." +
                                  std::to_string(n));
    if (std::find(seen.begin(), seen.end(), idx) != seen.end())
      throw std::invalid_argument("parse: repeated variable in squarefree monomial");
    seen.push_back(idx);
    if (pos < compact.size()) {
      if (compact[pos] != '*')
        throw std::invalid_argument("parse: expected '*' separator");
      ++pos;
      if (pos == compact.size())
        throw std::invalid_argument("parse: trailing '*'");
    }
  }
  if (seen.empty()) throw std::invalid_argument("parse: empty monomial");
  std::sort(seen.begin(), seen.end());
  return SqMonomial{std::move(seen)};
}

void for_each_squarefree_slex(
    int n, int d, const std::function<bool(const std::vector<int>&)>& visit) {
  if (d < 0 || d > n) return;
  if (d == 0) {
    std::vector<int> empty;
    visit(empty);
    return;
  }
  std::vector<int> c(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  // ascending index vectors in lexicographic order == slex descending
  while (true) {
    if (!visit(c)) return;
    int i = d - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (d - 1 - i)) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < d; ++k)
      c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] + 1;
  }
}

}  // namespace sqlex
