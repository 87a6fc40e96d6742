#include "rrkit/superelliptic.hpp"

#include <numeric>

#include "rrkit/error.hpp"

namespace rrkit {

namespace {

std::vector<int> prime_divisors(int m) {
  std::vector<int> out;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    out.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_rational_fourth_power(const Rat& x) {
  return x.is_square() && x.sqrt().is_square();
}

}  // namespace

bool check_geometric_irreducibility(int m, const UPoly& f) {
  if (f.is_zero()) throw DomainError("f must be nonzero");
  if (m < 1) throw DomainError("m must be positive");
  if (f.is_constant()) return m == 1;
  const auto sqf = squarefree_factorization(f);
  int g = 0;
  for (const auto& [q, k] : sqf.factors) g = std::gcd(g, k);
  if (m % 4 == 0 && g % 4 == 0 && is_rational_fourth_power(-sqf.leading / Rat(4))) {
    throw DomainError("irreducibility indeterminate for w^" + std::to_string(m) + " = " + f.to_string() +
                      ": f = -4 h^4; see docs");
  }
  for (int q : prime_divisors(m)) {
    if (g % q == 0) return false;
  }
  return true;
}

SuperCurve::SuperCurve(int m, UPoly f) : m_(m), f_(std::move(f)) {
  if (m_ < 2) throw DomainError("superelliptic curves need m >= 2");
  if (f_.is_zero() || f_.is_constant()) throw DomainError("f must be nonconstant");
  if (!check_geometric_irreducibility(m_, f_)) throw DomainError("reducible equation: " + to_string());
  sqf_ = squarefree_factorization(f_);
}

std::string SuperCurve::to_string() const { return "w^" + std::to_string(m_) + " = " + f_.to_string(); }

std::string RamificationEntry::to_string() const {
  const std::string where = at_infinity ? "inf" : "(" + base.to_string() + ")";
  return where + ": " + std::to_string(points) + " x index " + std::to_string(index);
}

RamificationProfile ramification_profile(const SuperCurve& curve) {
  const int m = curve.m();
  RamificationProfile out;
  out.m = m;
  for (const auto& [q, k] : curve.squarefree().factors) {
    const int d = std::gcd(m, k);
    RamificationEntry e;
    e.base = q;
    e.base_degree = q.degree().value();
    e.points = d;
    e.index = m / d - 1;
    out.entries.push_back(e);
  }
  const int n = curve.f().degree().value();
  RamificationEntry inf;
  inf.at_infinity = true;
  inf.base_degree = 1;
  inf.points = std::gcd(m, n);
  inf.index = m / inf.points - 1;
  out.entries.push_back(inf);
  for (const auto& e : out.entries) out.total += e.contribution();
  if (!sheet_count_identity_check(out)) throw InternalError("sheet count identity fails");
  return out;
}

int genus_superelliptic(const SuperCurve& curve) {
  const auto profile = ramification_profile(curve);
  if (profile.total % 2 != 0) throw InternalError("odd ramification total " + std::to_string(profile.total));
  const long g = -static_cast<long>(curve.m()) + 1 + profile.total / 2;
  if (g < 0) throw InternalError("negative genus from profile");
  return static_cast<int>(g);
}

int genus_superelliptic(int m, const UPoly& f) { return genus_superelliptic(SuperCurve(m, f)); }

bool sheet_count_identity_check(const RamificationProfile& profile) {
  for (const auto& e : profile.entries) {
    if (e.points <= 0 || e.index < 0) return false;
    if (e.points * (e.index + 1) != profile.m) return false;
  }
  return true;
}

}  // namespace rrkit
