#include "rrkit/factor.hpp"

#include <algorithm>
#include <utility>

#include "rrkit/error.hpp"
#include "zpoly.hpp"

namespace rrkit {
namespace {

using detail::ZPoly;

// Polynomials over Z/p with coefficients in [0, p), lowest degree first.
class ModRing {
 public:
  explicit ModRing(mpz_class p) : p_(std::move(p)) {}

  const mpz_class& prime() const { return p_; }

  ZPoly reduce(ZPoly a) const {
    for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
    detail::ztrim(a);
    return a;
  }

  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(std::move(r));
  }

  ZPoly mul(const ZPoly& a, const ZPoly& b) const { return reduce(detail::zmul(a, b)); }

  mpz_class inv(const mpz_class& a) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0) {
      throw InternalError("non-invertible element modulo the factoring prime");
    }
    return r;
  }

  std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b) const {
    const int db = detail::zdeg(b);
    if (detail::zdeg(a) < db) return {ZPoly{}, a};
    ZPoly q(static_cast<std::size_t>(detail::zdeg(a) - db + 1), 0);
    const mpz_class il = inv(b.back());
    while (!a.empty() && detail::zdeg(a) >= db) {
      const int shift = detail::zdeg(a) - db;
      mpz_class coef = a.back() * il;
      mpz_mod(coef.get_mpz_t(), coef.get_mpz_t(), p_.get_mpz_t());
      for (int j = 0; j <= db; ++j) {
        auto& t = a[static_cast<std::size_t>(j + shift)];
        t -= coef * b[static_cast<std::size_t>(j)];
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), p_.get_mpz_t());
      }
      q[static_cast<std::size_t>(shift)] = std::move(coef);
      detail::ztrim(a);
    }
    detail::ztrim(q);
    return {std::move(q), std::move(a)};
  }

  ZPoly rem(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }

  ZPoly monic(ZPoly a) const {
    if (a.empty()) return a;
    const mpz_class il = inv(a.back());
    for (auto& c : a) c *= il;
    return reduce(std::move(a));
  }

  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  ZPoly powmod(ZPoly base, mpz_class e, const ZPoly& m) const {
    ZPoly result{1};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), m);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), m);
    }
    return result;
  }

 private:
  mpz_class p_;
};

// Distinct-degree factorization of a monic squarefree f mod p.
std::vector<std::pair<ZPoly, int>> distinct_degree(const ModRing& R, ZPoly f) {
  std::vector<std::pair<ZPoly, int>> out;
  const ZPoly x{0, 1};
  ZPoly h = x;
  for (int d = 1; 2 * d <= detail::zdeg(f); ++d) {
    h = R.powmod(h, R.prime(), f);
    ZPoly g = R.gcd(R.sub(h, x), f);
    if (detail::zdeg(g) > 0) {
      out.emplace_back(g, d);
      f = R.divmod(f, g).first;
      h = R.rem(h, f);
    }
  }
  if (detail::zdeg(f) > 0) out.emplace_back(f, detail::zdeg(f));
  return out;
}

// Splits a product of irreducibles of equal degree d (Cantor-Zassenhaus).
void equal_degree(const ModRing& R, const ZPoly& g, int d, gmp_randclass& rng, std::vector<ZPoly>& out) {
  const int n = detail::zdeg(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), R.prime().get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    ZPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = rng.get_z_range(R.prime());
    a = R.reduce(std::move(a));
    if (detail::zdeg(a) < 1) continue;
    ZPoly b = R.sub(R.powmod(a, e, g), ZPoly{1});
    ZPoly h = R.gcd(b, g);
    const int dh = detail::zdeg(h);
    if (dh > 0 && dh < n) {
      equal_degree(R, h, d, rng, out);
      equal_degree(R, R.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

ZPoly symmetric(ZPoly a, const mpz_class& p) {
  const mpz_class half = p / 2;
  for (auto& c : a) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    if (c > half) c -= p;
  }
  detail::ztrim(a);
  return a;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors over Z of a primitive, squarefree G with deg >= 2.
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& G) {
  const int n = detail::zdeg(G);
  mpz_class norm1 = 0;
  for (const auto& c : G) norm1 += abs(c);
  mpz_class bound = abs(G.back()) * norm1;
  bound <<= static_cast<unsigned long>(n);
  mpz_class p = 2 * bound + 1;
  const ZPoly dG = detail::zderivative(G);
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (mpz_divisible_p(G.back().get_mpz_t(), p.get_mpz_t())) continue;
    ModRing R(p);
    if (detail::zdeg(R.gcd(R.reduce(G), R.reduce(dG))) == 0) break;
  }
  ModRing R(p);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedUL);

  std::vector<ZPoly> modular;
  for (auto& [g, d] : distinct_degree(R, R.monic(R.reduce(G)))) equal_degree(R, g, d, rng, modular);

  std::vector<ZPoly> found;
  ZPoly rest = G;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly cand{rest.back()};
      for (std::size_t i : idx) cand = R.mul(cand, modular[i]);
      cand = detail::zprimitive(symmetric(std::move(cand), p));
      if (auto q = detail::zdivexact(rest, cand)) {
        found.push_back(cand);
        rest = std::move(*q);
        std::vector<ZPoly> keep;
        for (std::size_t i = 0, j = 0; i < modular.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
          } else {
            keep.push_back(std::move(modular[i]));
          }
        }
        modular = std::move(keep);
        hit = true;
        break;
      }
    } while (next_combination(idx, modular.size()));
    if (!hit) ++s;
  }
  if (detail::zdeg(rest) > 0) found.push_back(detail::zprimitive(rest));
  return found;
}

std::vector<UPoly> factor_squarefree(const UPoly& f) {
  const int n = f.degree().value();
  if (n <= 1) return {f.monic()};
  const ZPoly G = detail::to_zpoly_primitive(f);
  std::vector<UPoly> out;
  for (auto& g : factor_squarefree_primitive(G)) out.push_back(detail::to_upoly(g).monic());
  return out;
}

}  // namespace

Factorization factor(const UPoly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  auto sqf = squarefree_factorization(f);
  Factorization out{sqf.leading, {}};
  for (auto& [part, k] : sqf.factors) {
    for (auto& q : factor_squarefree(part)) out.factors.emplace_back(std::move(q), k);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const UPoly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  const int n = f.degree().value();
  if (n == 1) return true;
  if (n == 2) {
    const Rat disc = f.coeff(1) * f.coeff(1) - Rat(4) * f.coeff(2) * f.coeff(0);
    return !disc.is_square();
  }
  if (!is_squarefree(f)) return false;
  return factor_squarefree(f).size() == 1;
}

std::vector<Rat> rational_roots(const UPoly& f) {
  std::vector<Rat> roots;
  for (const auto& [q, k] : factor(f).factors) {
    if (q.degree() == Degree(1)) roots.push_back(-q.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace rrkit
