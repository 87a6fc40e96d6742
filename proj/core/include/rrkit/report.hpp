#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrkit/bpoly.hpp"
#include "rrkit/superelliptic.hpp"

namespace rrkit {

struct Certificate {
  std::string name;
  std::string value;
  bool ok = true;
};

/// Outcome of a genus computation. When `is_bound` holds, `value` is only an
/// upper bound and must not be presented as the genus.
struct GenusReport {
  std::string input;
  std::string method;  ///< superelliptic | newton-bound | simple-branching | riemann-hurwitz | kowalewski
  long value = 0;
  bool is_bound = false;
  std::optional<RamificationProfile> profile;
  std::vector<std::string> warnings;
  std::vector<Certificate> certificates;
};

struct CoveringData;

GenusReport superelliptic_report(const SuperCurve& curve, std::string input);
/// Interior lattice points of the Newton polygon, flagged as a bound.
GenusReport newton_report(const BPoly& f, std::string input);
GenusReport branching_report(const BPoly& f, int v_infinity, std::string input);
GenusReport rh_report(const CoveringData& data, std::string input);

}  // namespace rrkit
