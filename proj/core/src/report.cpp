#include "rrkit/report.hpp"

#include "rrkit/plane_curve.hpp"
#include "rrkit/riemann_hurwitz.hpp"

namespace rrkit {

GenusReport superelliptic_report(const SuperCurve& curve, std::string input) {
  GenusReport rep;
  rep.input = std::move(input);
  rep.method = "superelliptic";
  rep.profile = ramification_profile(curve);
  rep.value = genus_superelliptic(curve);
  rep.certificates.push_back({"geometrically irreducible", curve.to_string(), true});
  rep.certificates.push_back({"sheet count identity", "m = " + std::to_string(curve.m()),
                              sheet_count_identity_check(*rep.profile)});
  return rep;
}

GenusReport newton_report(const BPoly& f, std::string input) {
  GenusReport rep;
  rep.input = std::move(input);
  rep.method = "newton-bound";
  rep.is_bound = true;
  const auto poly = newton_polygon(f);
  const auto count = lattice_count(poly);
  rep.value = count.interior;
  rep.warnings.push_back("newton-bound is an upper bound only");
  rep.certificates.push_back({"hull vertices", std::to_string(poly.hull.size()), true});
  rep.certificates.push_back({"Pick's theorem",
                              "2A = " + std::to_string(count.area2) + ", B = " + std::to_string(count.boundary),
                              true});
  return rep;
}

GenusReport branching_report(const BPoly& f, int v_infinity, std::string input) {
  GenusReport rep;
  rep.input = std::move(input);
  rep.method = "simple-branching";
  const auto sb = simple_branching(f, v_infinity);
  rep.value = sb.genus;
  rep.certificates.push_back({"discriminant degree", std::to_string(sb.discriminant_degree), true});
  rep.certificates.push_back({"discriminant squarefree", sb.discriminant.to_string(), true});
  rep.certificates.push_back({"V", std::to_string(sb.v_total), true});
  rep.warnings.push_back("ramification at infinity supplied by the caller");
  return rep;
}

GenusReport rh_report(const CoveringData& data, std::string input) {
  GenusReport rep;
  rep.input = std::move(input);
  rep.method = "riemann-hurwitz";
  rep.value = rh_genus(data);
  rep.certificates.push_back({"V", std::to_string(data.total), data.total % 2 == 0});
  return rep;
}

}  // namespace rrkit
