#include "sqlex/mixed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqlex {

MixedMonomial MixedMonomial::one(int n, int q) {
  MixedMonomial m;
  m.xe.assign(static_cast<std::size_t>(n), 0);
  m.te.assign(static_cast<std::size_t>(q), 0);
  return m;
}

MixedMonomial MixedMonomial::x_power(int n, int q, const SqMonomial& u) {
  MixedMonomial m = one(n, q);
  for (int i : u.support()) {
    if (i > n) throw std::invalid_argument("mixed monomial: X index out of range");
    m.xe[static_cast<std::size_t>(i - 1)] = 1;
  }
  return m;
}

MixedMonomial MixedMonomial::t_var(int n, int q, int i) {
  if (i < 1 || i > q)
    throw std::invalid_argument("mixed monomial: T index out of range");
  MixedMonomial m = one(n, q);
  m.te[static_cast<std::size_t>(i - 1)] = 1;
  return m;
}

int MixedMonomial::t_degree() const {
  return std::accumulate(te.begin(), te.end(), 0);
}

int MixedMonomial::total_degree() const {
  return std::accumulate(xe.begin(), xe.end(), 0) + t_degree();
}

bool MixedMonomial::is_one() const { return total_degree() == 0; }

bool MixedMonomial::divides(const MixedMonomial& other) const {
  for (std::size_t i = 0; i < xe.size(); ++i)
    if (xe[i] > other.xe[i]) return false;
  for (std::size_t i = 0; i < te.size(); ++i)
    if (te[i] > other.te[i]) return false;
  return true;
}

MixedMonomial MixedMonomial::times(const MixedMonomial& other) const {
  MixedMonomial m = *this;
  for (std::size_t i = 0; i < xe.size(); ++i) m.xe[i] += other.xe[i];
  for (std::size_t i = 0; i < te.size(); ++i) m.te[i] += other.te[i];
  return m;
}

MixedMonomial MixedMonomial::divided_by(const MixedMonomial& other) const {
  MixedMonomial m = *this;
  for (std::size_t i = 0; i < xe.size(); ++i) {
    m.xe[i] -= other.xe[i];
    if (m.xe[i] < 0) throw std::invalid_argument("mixed monomial: inexact division");
  }
  for (std::size_t i = 0; i < te.size(); ++i) {
    m.te[i] -= other.te[i];
    if (m.te[i] < 0) throw std::invalid_argument("mixed monomial: inexact division");
  }
  return m;
}

MixedMonomial MixedMonomial::lcm_with(const MixedMonomial& other) const {
  MixedMonomial m = *this;
  for (std::size_t i = 0; i < xe.size(); ++i) m.xe[i] = std::max(m.xe[i], other.xe[i]);
  for (std::size_t i = 0; i < te.size(); ++i) m.te[i] = std::max(m.te[i], other.te[i]);
  return m;
}

int cmp_mixed(const MixedMonomial& a, const MixedMonomial& b,
              const TermOrder& order) {
  if (order.kind != TermOrder::Kind::mixed_lex &&
      order.kind != TermOrder::Kind::mixed_deglex)
    throw std::invalid_argument("cmp_mixed: not a mixed-ring order");
  if (a.xe.size() != b.xe.size() || a.te.size() != b.te.size())
    throw std::invalid_argument("cmp_mixed: shape mismatch");
  if (order.kind == TermOrder::Kind::mixed_deglex) {
    const int da = a.t_degree(), db = b.t_degree();
    if (da != db) return da > db ? 1 : -1;
  }
  // precedence T_q > ... > T_1, then X_1 > ... > X_n
  for (std::size_t i = a.te.size(); i-- > 0;)
    if (a.te[i] != b.te[i]) return a.te[i] > b.te[i] ? 1 : -1;
  for (std::size_t i = 0; i < a.xe.size(); ++i)
    if (a.xe[i] != b.xe[i]) return a.xe[i] > b.xe[i] ? 1 : -1;
  return 0;
}

const MixedTerm& MixedPolynomial::leading() const {
  if (terms.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms.front();
}

int MixedPolynomial::max_t_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, m.t_degree());
  return d;
}

MixedPolynomial make_polynomial(std::vector<MixedTerm> terms,
                                const TermOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const MixedTerm& a, const MixedTerm& b) {
              return cmp_mixed(a.first, b.first, order) > 0;
            });
  MixedPolynomial p;
  for (auto& t : terms) {
    if (!p.terms.empty() && p.terms.back().first == t.first)
      p.terms.back().second += t.second;
    else
      p.terms.push_back(std::move(t));
  }
  std::erase_if(p.terms, [](const MixedTerm& t) { return t.second == 0; });
  return p;
}

MixedPolynomial subtract(const MixedPolynomial& a, const MixedPolynomial& b,
                         const TermOrder& order) {
  MixedPolynomial out;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    int c;
    if (i == a.terms.size())
      c = -1;
    else if (j == b.terms.size())
      c = 1;
    else
      c = cmp_mixed(a.terms[i].first, b.terms[j].first, order);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.emplace_back(b.terms[j].first, -b.terms[j].second);
      ++j;
    } else {
      mpq_class v = a.terms[i].second - b.terms[j].second;
      if (v != 0) out.terms.emplace_back(a.terms[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

MixedPolynomial multiply_term(const MixedPolynomial& p, const MixedMonomial& m,
                              const mpq_class& c) {
  MixedPolynomial out;
  if (c == 0) return out;
  out.terms.reserve(p.terms.size());
  for (const auto& [mono, coeff] : p.terms)
    out.terms.emplace_back(mono.times(m), coeff * c);
  return out;  // multiplicativity of the order keeps terms sorted
}

void make_monic(MixedPolynomial& p) {
  if (p.is_zero()) return;
  const mpq_class lead = p.terms.front().second;
  if (lead == 1) return;
  for (auto& [m, c] : p.terms) c /= lead;
}

std::string to_string(const MixedMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.xe.size(); ++i)
    for (int e = 0; e < m.xe[i]; ++e) {
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(i + 1);
    }
  for (std::size_t i = 0; i < m.te.size(); ++i)
    for (int e = 0; e < m.te[i]; ++e) {
      if (!out.empty()) out += '*';
      out += 't' + std::to_string(i + 1);
    }
  return out.empty() ? "1" : out;
}

std::string to_string(const MixedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms) {
    const bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1 || m.is_one()) {
      out += mag.get_str();
      if (!m.is_one()) out += '*';
    }
    if (!m.is_one()) out += to_string(m);
  }
  return out;
}

}  // namespace sqlex
