#include "rrkit/bpoly.hpp"

#include <algorithm>
#include <sstream>

#include "rrkit/error.hpp"

namespace rrkit {

BPoly::BPoly(Rat constant) {
  if (!constant.is_zero()) terms_.emplace(Exponent{0, 0}, std::move(constant));
}

BPoly BPoly::w() { return term(Rat(1), 1, 0); }
BPoly BPoly::z() { return term(Rat(1), 0, 1); }

BPoly BPoly::term(const Rat& c, int w_exp, int z_exp) {
  if (w_exp < 0 || z_exp < 0) throw DomainError("negative exponent in a polynomial term");
  BPoly r;
  r.add_term({w_exp, z_exp}, c);
  return r;
}

BPoly BPoly::from_z(const UPoly& f) {
  BPoly r;
  const auto& c = f.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) r.add_term({0, static_cast<int>(j)}, c[j]);
  return r;
}

BPoly BPoly::from_w_coefficients(const std::vector<UPoly>& coeffs) {
  BPoly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i].coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) r.add_term({static_cast<int>(i), static_cast<int>(j)}, c[j]);
  }
  return r;
}

void BPoly::add_term(const Exponent& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat BPoly::coeff(int w_exp, int z_exp) const {
  auto it = terms_.find({w_exp, z_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

Degree BPoly::degree_w() const {
  if (terms_.empty()) return Degree::neg_inf();
  return Degree(terms_.rbegin()->first.first);
}

Degree BPoly::degree_z() const {
  if (terms_.empty()) return Degree::neg_inf();
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return Degree(d);
}

UPoly BPoly::coeff_w(int i) const {
  std::vector<Rat> v;
  for (auto it = terms_.lower_bound({i, 0}); it != terms_.end() && it->first.first == i; ++it) {
    const auto j = static_cast<std::size_t>(it->first.second);
    if (v.size() <= j) v.resize(j + 1);
    v[j] = it->second;
  }
  return UPoly(std::move(v));
}

UPoly BPoly::leading_w() const {
  if (terms_.empty()) return {};
  return coeff_w(degree_w().value());
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BPoly& BPoly::operator+=(const BPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  BPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return r;
}

BPoly BPoly::pow(unsigned exponent) const {
  BPoly result(Rat(1));
  BPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BPoly BPoly::derivative_w() const {
  BPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) r.add_term({e.first - 1, e.second}, c * Rat(e.first));
  }
  return r;
}

BPoly BPoly::derivative_z() const {
  BPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) r.add_term({e.first, e.second - 1}, c * Rat(e.second));
  }
  return r;
}

UPoly BPoly::eval_z(const Rat& z0) const {
  if (terms_.empty()) return {};
  std::vector<Rat> v(static_cast<std::size_t>(degree_w().value()) + 1);
  for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e.first)] += c * z0.pow(e.second);
  return UPoly(std::move(v));
}

std::string BPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest w power first, then highest z power.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    const Rat& c = it->second;
    const Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != Rat(1) || (i == 0 && j == 0)) {
      os << mag;
      wrote = true;
    }
    auto var = [&](char v, int k) {
      if (k == 0) return;
      if (wrote) os << '*';
      os << v;
      if (k > 1) os << '^' << k;
      wrote = true;
    };
    var('w', i);
    var('z', j);
  }
  return os.str();
}

UPoly determinant(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly(Rat(1));
  for (const auto& row : m) {
    if (row.size() != n) throw InternalError("determinant of a non-square matrix");
  }
  bool negate = false;
  UPoly prev(Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  UPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

UPoly resultant_w(const BPoly& F, const BPoly& G) {
  const Degree dF = F.degree_w();
  const Degree dG = G.degree_w();
  if (dF.is_neg_inf() || dG.is_neg_inf() || dF.value() < 1 || dG.value() < 1) {
    throw DomainError("resultant requires positive degree in w for both inputs");
  }
  const auto n = static_cast<std::size_t>(dF.value());
  const auto m = static_cast<std::size_t>(dG.value());
  const std::size_t size = n + m;
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[r][r + k] = F.coeff_w(static_cast<int>(n - k));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[m + r][r + k] = G.coeff_w(static_cast<int>(m - k));
  }
  return determinant(std::move(s));
}

UPoly discriminant_w(const BPoly& F) {
  const Degree d = F.degree_w();
  if (d.is_neg_inf() || d.value() < 1) throw DomainError("discriminant requires positive degree in w");
  const int n = d.value();
  if (n == 1) return UPoly(Rat(1));
  UPoly res = resultant_w(F, F.derivative_w());
  if ((n * (n - 1) / 2) % 2 != 0) res = -res;
  return exact_div(res, F.leading_w());
}

}  // namespace rrkit
