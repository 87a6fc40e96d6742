#include "rrkit/riemann_hurwitz.hpp"

#include <string>

#include "rrkit/error.hpp"
#include "rrkit/hyperelliptic.hpp"
#include "rrkit/upoly.hpp"

namespace rrkit {

CoveringData CoveringData::from_total(int m, int base_genus, long total) {
  if (m < 1) throw DomainError("sheet count must be at least 1");
  if (base_genus < 0) throw DomainError("base genus must be nonnegative");
  if (total < 0) throw DomainError("ramification total must be nonnegative");
  CoveringData d;
  d.m = m;
  d.base_genus = base_genus;
  d.total = total;
  return d;
}

CoveringData CoveringData::from_indices(int m, int base_genus, std::vector<long> indices) {
  long total = 0;
  for (long v : indices) {
    if (v <= 0) throw DomainError("ramification indices must be positive, got " + std::to_string(v));
    if (v >= m) throw DomainError("ramification index " + std::to_string(v) + " exceeds m - 1");
    total += v;
  }
  CoveringData d = from_total(m, base_genus, total);
  d.indices = std::move(indices);
  return d;
}

long rh_genus(const CoveringData& data) {
  if (data.total % 2 != 0) throw DomainError("odd ramification total V = " + std::to_string(data.total));
  const long g = static_cast<long>(data.m) * (data.base_genus - 1) + 1 + data.total / 2;
  if (g < 0) throw DomainError("inconsistent covering data: genus " + std::to_string(g));
  return g;
}

std::vector<Certificate> kowalewski_certificates(const Rat& a, const Rat& b, const Rat& c) {
  std::vector<Certificate> out;
  auto add = [&](std::string name, std::string value, bool ok) {
    out.push_back({std::move(name), std::move(value), ok});
    return ok;
  };
  if (!add("nonzero parameters", "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string(),
           !a.is_zero() && !b.is_zero() && !c.is_zero())) {
    return out;
  }
  const UPoly p = UPoly::monomial(a, 2) + UPoly::monomial(b * Rat(-2), 1) + UPoly(Rat(-1));
  const UPoly q = p * p - UPoly::monomial(c * Rat(4), 4);
  const UPoly r = UPoly::monomial(Rat(1), 4) + p + UPoly(c);
  if (!add("deg q = 4", "q = " + q.to_string(), q.degree() == Degree(4))) return out;
  if (!add("q squarefree", "q = " + q.to_string(), is_squarefree(q))) return out;
  const int gy = genus_hyp(HypCurve(q));
  if (!add("g(Y) = 1", std::to_string(gy), gy == 1)) return out;
  if (!add("r squarefree", "r = " + r.to_string(), r.degree() == Degree(4) && is_squarefree(r))) return out;
  const UPoly common = gcd(q, r);
  if (!add("gcd(q, r) = 1", common.to_string(), common.is_constant())) return out;
  add("V = 4", "4 simple branch points over the roots of r", true);
  return out;
}

GenusReport kowalewski_genus(const Rat& a, const Rat& b, const Rat& c) {
  GenusReport rep;
  rep.input = "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
  rep.method = "kowalewski";
  rep.certificates = kowalewski_certificates(a, b, c);
  for (const auto& cert : rep.certificates) {
    if (!cert.ok) throw DomainError("degenerate Kowalewski parameters: " + cert.name + " fails (" + cert.value + ")");
  }
  rep.value = rh_genus(CoveringData::from_indices(2, 1, {1, 1, 1, 1}));
  return rep;
}

}  // namespace rrkit
