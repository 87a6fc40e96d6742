#include "zpoly.hpp"

#include <utility>

namespace rrkit::detail {

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zprimitive(ZPoly p) {
  ztrim(p);
  if (p.empty()) return p;
  mpz_class g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

ZPoly to_zpoly_primitive(const UPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.mpq().get_den_mpz_t());
  ZPoly out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    mpz_class v = c.mpq().get_num() * (l / c.mpq().get_den());
    out.push_back(std::move(v));
  }
  return zprimitive(std::move(out));
}

UPoly to_upoly(const ZPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.size());
  for (const auto& c : p) v.emplace_back(c);
  return UPoly(std::move(v));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zderivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  ztrim(d);
  return d;
}

ZPoly zprem(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  const mpz_class& lb = b.back();
  while (!a.empty() && zdeg(a) >= db) {
    const int shift = zdeg(a) - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    ztrim(a);
  }
  return a;
}

std::optional<ZPoly> zdivexact(ZPoly a, const ZPoly& b) {
  ztrim(a);
  if (a.empty()) return ZPoly{};
  const int db = zdeg(b);
  if (zdeg(a) < db) return std::nullopt;
  ZPoly q(static_cast<std::size_t>(zdeg(a) - db + 1), 0);
  const mpz_class& lb = b.back();
  while (!a.empty() && zdeg(a) >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    const int shift = zdeg(a) - db;
    mpz_class coef = a.back() / lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= coef * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(shift)] = std::move(coef);
    ztrim(a);
  }
  if (!a.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

}  // namespace rrkit::detail
