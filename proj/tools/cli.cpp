#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrkit/error.hpp"
#include "rrkit/expr.hpp"
#include "rrkit/hyperelliptic.hpp"
#include "rrkit/report.hpp"
#include "rrkit/riemann_hurwitz.hpp"
#include "rrkit/riemann_roch_p1.hpp"

namespace rrkit::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

struct Options {
  bool json = false;
  bool quiet = false;
};

struct Output {
  std::string command;
  Json data;
  std::vector<std::string> text;  ///< detail lines, hidden by --quiet
  std::string headline;           ///< the one line --quiet keeps
};

void emit(const Options& opt, const Output& o, std::ostream& out) {
  if (opt.json) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = o.command;
    for (const auto& [k, v] : o.data.items()) j[k] = v;
    out << j.dump() << '\n';
    return;
  }
  out << o.headline << '\n';
  if (!opt.quiet) {
    for (const auto& line : o.text) out << "  " << line << '\n';
  }
}

Json profile_json(const RamificationProfile& p) {
  Json entries = Json::array();
  for (const auto& e : p.entries) {
    entries.push_back({{"base", e.at_infinity ? "inf" : e.base.to_string()},
                       {"base_degree", e.base_degree},
                       {"points", e.points},
                       {"index", e.index}});
  }
  return {{"m", p.m}, {"V", p.total}, {"entries", entries}};
}

Output genus_output(const std::string& command, const GenusReport& r) {
  Output o;
  o.command = command;
  o.data["input"] = r.input;
  o.data["method"] = r.method;
  o.data[r.is_bound ? "bound" : "genus"] = r.value;
  if (r.profile) o.data["profile"] = profile_json(*r.profile);
  o.data["warnings"] = r.warnings;
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back({{"name", c.name}, {"value", c.value}, {"ok", c.ok}});
  o.data["certificates"] = certs;

  o.headline = (r.is_bound ? "bound " : "genus ") + std::to_string(r.value);
  o.text.push_back("method: " + r.method);
  if (r.profile) {
    o.text.push_back("V = " + std::to_string(r.profile->total) + ", m = " + std::to_string(r.profile->m));
    for (const auto& e : r.profile->entries) o.text.push_back("  " + e.to_string());
  }
  for (const auto& w : r.warnings) o.text.push_back("warning: " + w);
  for (const auto& c : r.certificates) {
    o.text.push_back(std::string(c.ok ? "ok   " : "FAIL ") + c.name + ": " + c.value);
  }
  return o;
}

Json divisor_json(const Divisor& d) {
  Json terms = Json::array();
  for (const auto& [p, n] : d.terms()) {
    terms.push_back({{"place", p.is_infinity() ? "inf" : p.poly().to_string()},
                     {"place_degree", p.degree()},
                     {"coefficient", n}});
  }
  return {{"divisor", d.to_string()}, {"degree", d.degree()}, {"terms", terms}};
}

Output divisor_output(const std::string& command, const Divisor& d) {
  Output o;
  o.command = command;
  o.data = divisor_json(d);
  o.headline = d.to_string();
  o.text.push_back("degree " + std::to_string(d.degree()));
  return o;
}

Output lspace_output(const Divisor& d) {
  const auto b = lspace_basis_p1(d);
  Output o;
  o.command = "lspace";
  o.data["divisor"] = d.to_string();
  o.data["degree"] = d.degree();
  o.data["dimension"] = b.dimension();
  Json basis = Json::array();
  for (const auto& f : b.basis) {
    basis.push_back(f.to_string());
    o.text.push_back(f.to_string());
  }
  o.data["basis"] = basis;
  o.headline = "dim L(D) = " + std::to_string(b.dimension());
  return o;
}

Output rr_output(const Divisor& d) {
  const auto r = riemann_roch_verify_p1(d);
  Output o;
  o.command = "rr-check";
  o.data = {{"divisor", d.to_string()},     {"degree", r.degree}, {"genus", r.genus},
            {"dim_l", r.dim_l},             {"dim_l_k_minus_d", r.dim_l_k_minus_d},
            {"dim_omega", r.dim_omega},     {"lhs", r.lhs},       {"rhs", r.rhs},
            {"ok", r.balanced}};
  o.headline = "lhs " + std::to_string(r.lhs) + ", rhs " + std::to_string(r.rhs) + (r.balanced ? ", ok" : ", FAIL");
  o.text.push_back("dim L(D) = " + std::to_string(r.dim_l));
  o.text.push_back("dim L(K - D) = " + std::to_string(r.dim_l_k_minus_d));
  o.text.push_back("deg D = " + std::to_string(r.degree));
  return o;
}

Output residues_output(const RatFun& f) {
  Output o;
  o.command = "residues";
  Json entries = Json::array();
  for (const auto& e : residues(f)) {
    entries.push_back({{"place", e.place.to_string()}, {"residue", e.residue.to_string()}});
    o.text.push_back("res at " + e.place.to_string() + " = " + e.residue.to_string());
  }
  const Rat sum = residue_sum_check(f);
  o.data = {{"function", f.to_string()}, {"residues", entries}, {"sum", sum.to_string()}};
  o.headline = "sum of residues " + sum.to_string();
  return o;
}

UPoly hyperelliptic_input(const std::string& text) {
  if (text.find('=') == std::string::npos) return parse_upoly(text);
  const auto [m, f] = parse_superelliptic(text);
  if (m != 2) throw DomainError("expected w^2 = p(z), got w^" + std::to_string(m));
  return f;
}

Output hyperelliptic_output(const std::string& text) {
  const HypCurve c(hyperelliptic_input(text));
  Output o;
  o.command = "hyperelliptic";
  o.data["curve"] = c.to_string();
  o.data["genus"] = c.genus();
  o.data["branch_points"] = branch_point_count(c);
  o.data["canonical_degree"] = canonical_degree_check(c);
  Json diffs = Json::array();
  for (const auto& h : holo_diff_basis(c)) diffs.push_back("(" + h.to_string() + ")*dz/w");
  o.data["holomorphic_differentials"] = diffs;
  o.headline = "genus " + std::to_string(c.genus());
  o.text.push_back(c.to_string());
  o.text.push_back("branch points: " + std::to_string(branch_point_count(c)));
  o.text.push_back("deg K = " + std::to_string(canonical_degree_check(c)));
  if (c.odd()) {
    const auto gaps = gap_sequence_at_infinity(c);
    o.data["gaps_at_infinity"] = gaps;
    std::string line = "gaps at inf:";
    for (int g : gaps) line += " " + std::to_string(g);
    o.text.push_back(line);
  }
  Json weights = Json::array();
  for (const auto& pl : branch_places(c)) {
    if (!pl.is_infinity() && pl.base().degree() != Degree(1)) continue;
    const int w = wronskian_order_at(c, pl);
    weights.push_back({{"place", pl.to_string()}, {"order", w}});
    o.text.push_back("Wronskian order at " + pl.to_string() + ": " + std::to_string(w));
  }
  o.data["wronskian_orders"] = weights;
  return o;
}

void report_error(const Options& opt, std::ostream& out, std::ostream& err, const std::string& kind,
                  const std::string& message, const Json& extra = Json::object()) {
  err << "rrkit: " << message << '\n';
  if (opt.json) {
    Json e = {{"kind", kind}, {"message", message}};
    for (const auto& [k, v] : extra.items()) e[k] = v;
    out << Json{{"schema", kSchema}, {"error", e}}.dump() << '\n';
  }
}

int run_batch(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err);

int run_impl(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool nested) {
  CLI::App app{"Exact genus, divisor and Riemann-Roch computations over the rationals", "rrkit"};
  app.set_version_flag("--version", "rrkit 0.3.0");
  Options opt;
  std::string batch;
  app.add_flag("--json", opt.json, "Machine-readable output (schema 1)");
  app.add_flag("--quiet", opt.quiet, "Print only the result line");
  if (!nested) app.add_option("--batch", batch, "Run each line of a file as a separate command")->check(CLI::ExistingFile);

  std::function<Output()> action;

  auto* genus = app.add_subcommand("genus", "Genus of a plane curve");
  genus->require_subcommand(1);
  std::string equation;
  auto* super = genus->add_subcommand("super", "Superelliptic curve w^m = f(z)");
  super->add_option("equation", equation, "e.g. \"w^4 = z^4 - 1\"")->required();
  super->callback([&] {
    action = [&] {
      const auto [m, f] = parse_superelliptic(equation);
      return genus_output("genus super", superelliptic_report(SuperCurve(m, f), equation));
    };
  });
  auto* newton = genus->add_subcommand("newton", "Interior points of the Newton polygon (an upper bound)");
  newton->add_option("polynomial", equation, "F(w, z); lattice axes are (w-exponent, z-exponent)")->required();
  newton->callback([&] {
    action = [&] {
      const BPoly f = equation.find('=') == std::string::npos ? parse_poly(equation) : parse_equation(equation);
      return genus_output("genus newton", newton_report(f, equation));
    };
  });
  auto* branching = genus->add_subcommand("branching", "Riemann-Hurwitz under simple affine branching");
  int v_inf = 0;
  branching->add_option("polynomial", equation, "F(w, z)")->required();
  branching->add_option("--v-inf", v_inf, "Total ramification index above infinity")->required()->check(
      CLI::NonNegativeNumber);
  branching->callback([&] {
    action = [&] {
      const BPoly f = equation.find('=') == std::string::npos ? parse_poly(equation) : parse_equation(equation);
      return genus_output("genus branching", branching_report(f, v_inf, equation));
    };
  });

  auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz: m(g(Y) - 1) + 1 + V/2");
  int sheets = 0;
  int base_genus = 0;
  std::vector<long> indices;
  long total_v = 0;
  rh->add_option("--sheets", sheets, "Degree m of the covering")->required();
  rh->add_option("--base-genus", base_genus, "Genus of the base curve")->required();
  auto* ram = rh->add_option("--ramification", indices, "Comma-separated ramification indices")->delimiter(',');
  auto* tot = rh->add_option("--total-v", total_v, "Total ramification V");
  ram->excludes(tot);
  rh->callback([&] {
    if (ram->count() == 0 && tot->count() == 0) throw CLI::RequiredError("--ramification or --total-v");
    action = [&] {
      const auto data = ram->count() > 0 ? CoveringData::from_indices(sheets, base_genus, indices)
                                         : CoveringData::from_total(sheets, base_genus, total_v);
      std::ostringstream in;
      in << "m=" << sheets << " g(Y)=" << base_genus << " V=" << data.total;
      return genus_output("rh", rh_report(data, in.str()));
    };
  });

  auto* kow = app.add_subcommand("kowalewski", "Genus of the Kowalewski curve for parameters a, b, c");
  std::string a_text, b_text, c_text;
  kow->add_option("--a", a_text, "Rational, e.g. 3/2")->required();
  kow->add_option("--b", b_text)->required();
  kow->add_option("--c", c_text)->required();
  kow->callback([&] {
    action = [&] {
      return genus_output("kowalewski",
                          kowalewski_genus(Rat::parse(a_text), Rat::parse(b_text), Rat::parse(c_text)));
    };
  });

  auto* divisor = app.add_subcommand("divisor", "Divisors on the projective line");
  divisor->require_subcommand(1);
  std::string text;
  auto* deval = divisor->add_subcommand("eval", "Normalize a divisor expression");
  deval->add_option("divisor", text, "e.g. \"2*(z) + (z^2 + 1) - 4*inf\"")->required();
  deval->callback([&] { action = [&] { return divisor_output("divisor eval", parse_divisor(text)); }; });
  auto* dprin = divisor->add_subcommand("principal", "Divisor of a rational function");
  dprin->add_option("function", text, "e.g. \"(z^2 - 1)/z^3\"")->required();
  dprin->callback([&] {
    action = [&] { return divisor_output("divisor principal", principal_divisor(parse_ratfun(text))); };
  });

  auto* lspace = app.add_subcommand("lspace", "Basis of L(D) on the projective line");
  lspace->add_option("divisor", text)->required();
  lspace->callback([&] { action = [&] { return lspace_output(parse_divisor(text)); }; });

  auto* rr = app.add_subcommand("rr-check", "Both sides of Riemann-Roch on the projective line");
  rr->add_option("divisor", text)->required();
  rr->callback([&] { action = [&] { return rr_output(parse_divisor(text)); }; });

  auto* hyp = app.add_subcommand("hyperelliptic", "Invariants of w^2 = p(z)");
  hyp->add_option("curve", text, "p(z) or \"w^2 = p(z)\"")->required();
  hyp->callback([&] { action = [&] { return hyperelliptic_output(text); }; });

  auto* res = app.add_subcommand("residues", "Residues of f(z) dz");
  res->add_option("function", text)->required();
  res->callback([&] { action = [&] { return residues_output(parse_ratfun(text)); }; });

  app.require_subcommand(nested ? 1 : 0, 1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report_error(opt, out, err, "usage", e.what());
    return kUsage;
  }

  if (!batch.empty()) {
    if (!app.get_subcommands().empty()) {
      report_error(opt, out, err, "usage", "--batch cannot be combined with a subcommand");
      return kUsage;
    }
    return run_batch(batch, opt, out, err);
  }
  if (!action) {
    out << app.help();
    return kUsage;
  }

  try {
    emit(opt, action(), out);
    return kOk;
  } catch (const ParseError& e) {
    report_error(opt, out, err, "parse", e.what(), {{"offset", e.offset()}, {"expected", e.expected()}});
    return kUsage;
  } catch (const DomainError& e) {
    report_error(opt, out, err, "domain", e.what());
    return kDomain;
  } catch (const InternalError& e) {
    report_error(opt, out, err, "internal", std::string("internal check failed: ") + e.what());
    return kDomain;
  }
}

int run_batch(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  struct Result {
    int code;
    std::string out, err;
  };
  std::vector<std::future<Result>> jobs;
  jobs.reserve(lines.size());
  for (const auto& line : lines) {
    jobs.push_back(std::async(std::launch::async, [line, opt] {
      std::vector<std::string> args;
      if (opt.json) args.emplace_back("--json");
      if (opt.quiet) args.emplace_back("--quiet");
      std::istringstream words(line);
      for (std::string a; words >> std::quoted(a);) args.push_back(a);
      std::ostringstream o, e;
      const int code = run_impl(std::move(args), o, e, true);
      return Result{code, o.str(), e.str()};
    }));
  }
  int worst = kOk;
  for (auto& job : jobs) {
    const Result r = job.get();
    out << r.out;
    err << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_impl(args, out, err, false);
}

}  // namespace rrkit::cli
