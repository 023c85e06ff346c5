// maccli: evaluate, verify and tabulate from the command line.
// Exit codes: 0 ok, 1 parse error / unknown suite, 2 domain or pole error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "macb/macpoly.hpp"
#include "macb/qchar.hpp"
#include "macb/qtboundary.hpp"
#include "macb/verify.hpp"

using json = nlohmann::ordered_json;
using namespace macb;

namespace {

struct RunConfig {
  std::string q = "1/2";
  int theta = 1;
  uint64_t seed = 1;
  double eps = 1e-12;
  std::string output = "json";
  std::string lambda, mu, nu = "0";
  std::vector<int> N;
  int m = 1;
  std::vector<std::string> x;
  std::string convention = "unitary";
  int points = 0, max_N = 0;
};

json certified_json(const CertifiedReal& c) { return {{"value", c.value_str(30)}, {"error_bound", c.error_str()}}; }

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", to_string(c)}});
  return {{"arity", p.arity()}, {"terms", terms}};
}

json measure_json(const SparseMeasure& m) {
  json out = json::array();
  for (const auto& [s, w] : m.masses()) out.push_back({{"signature", s.parts()}, {"mass", to_string(w)}});
  return out;
}

std::vector<Rational> parse_xs(const RunConfig& c) {
  std::vector<Rational> xs;
  for (const std::string& s : c.x) xs.push_back(parse_rational(s));
  return xs;
}

int first_N(const RunConfig& c, const Signature* lam) {
  if (!c.N.empty()) return c.N.front();
  if (lam) return lam->length();
  throw ParseError("--N is required");
}

CharConvention parse_convention(const std::string& s) {
  if (s == "unitary") return CharConvention::Unitary;
  if (s == "contour") return CharConvention::Contour;
  if (s == "prelimit") return CharConvention::Prelimit;
  if (s == "generating") return CharConvention::Generating;
  throw ParseError("unknown convention '" + s + "'");
}

json cmd_eval(const std::string& target, const RunConfig& c) {
  QParams qp = QParams::parse(c.q, c.theta);
  json out{{"command", "eval"}, {"target", target}, {"q", to_string(qp.q())}, {"theta", c.theta}};
  auto need_lambda = [&] {
    if (c.lambda.empty()) throw ParseError("--lambda is required");
    return Signature::parse(c.lambda);
  };
  if (target == "poly") {
    Signature lam = need_lambda();
    int N = first_N(c, &lam);
    out["result"] = poly_json(macdonald_poly(lam, N, qp));
  } else if (target == "character") {
    Signature lam = need_lambda();
    int N = first_N(c, &lam);
    auto xs = parse_xs(c);
    if (static_cast<int>(xs.size()) != c.m) throw ParseError("--m must match the number of --x values");
    out["result"] = to_string(character_in(parse_convention(c.convention), lam, N, xs, qp));
  } else if (target == "residue") {
    Signature lam = need_lambda();
    int N = first_N(c, &lam);
    auto xs = parse_xs(c);
    if (xs.size() != 1) throw ParseError("residue takes exactly one --x");
    out["result"] = to_string(residue_character(lam, N, xs[0], qp));
  } else if (target == "link") {
    if (c.mu.empty()) throw ParseError("--mu is required");
    Signature lam = need_lambda(), mu = Signature::parse(c.mu);
    if (mu.length() + 1 != lam.length()) throw DomainError("link: need len(mu) = len(lambda) - 1");
    out["result"] = to_string(link_one_step(lam, mu, qp));
  } else if (target == "pushforward") {
    Signature lam = need_lambda();
    out["result"] = measure_json(pushforward_delta(lam, c.m, qp));
  } else if (target == "phi") {
    NuSpec nu = NuSpec::parse(c.nu);
    auto xs = parse_xs(c);
    if (xs.empty()) throw ParseError("--x is required");
    out["nu"] = nu.str();
    out["result"] = certified_json(phi_nu_multi(nu, xs, qp, c.eps));
  } else if (target == "generating") {
    NuSpec nu = NuSpec::parse(c.nu);
    auto xs = parse_xs(c);
    int N = first_N(c, nullptr);
    GeneratingCheck g = verify_generating_relation(nu, c.m, N, xs, qp, c.eps);
    out["nu"] = nu.str();
    out["result"] = {{"passed", g.passed}, {"lhs", to_string(g.lhs)}, {"rhs", certified_json(g.rhs)}, {"residual", g.residual}};
  } else {
    throw ParseError("unknown eval target '" + target + "'");
  }
  return out;
}

json cmd_verify(const std::string& suite, const RunConfig& c) {
  VerifyConfig vc;
  vc.seed = c.seed;
  vc.points = c.points;
  vc.max_N = c.max_N;
  SuiteReport r = run_suite(suite, vc);
  return {{"suite", suite},           {"cases", r.cases},   {"passed", r.passed},
          {"failed", r.failed},       {"max_residual", r.max_residual}, {"seed", r.seed},
          {"failures", r.failures}};
}

struct ConvergeRow {
  int N;
  Rational exact;
  CertifiedReal phi;
  double residual;
};

std::vector<ConvergeRow> cmd_converge(const RunConfig& c) {
  QParams qp = QParams::parse(c.q, c.theta);
  NuSpec nu = NuSpec::parse(c.nu);
  auto xs = parse_xs(c);
  if (static_cast<int>(xs.size()) != c.m) throw ParseError("--m must match the number of --x values");
  if (c.N.empty()) throw ParseError("--N list is required");
  CertifiedReal phi = phi_nu_multi(nu, xs, qp, c.eps);
  std::vector<ConvergeRow> rows;
  for (int N : c.N) {
    if (N < c.m) throw DomainError("converge: need N >= m");
    Rational pre = character_in(CharConvention::Prelimit, stabilizing_signature(nu, N), N, xs, qp);
    CertifiedReal::Float d = boost::multiprecision::abs(CertifiedReal::to_float(pre) - phi.value());
    rows.push_back({N, pre, phi, d.convert_to<double>()});
  }
  return rows;
}

void emit_error(const std::string& kind, const std::string& msg) {
  json e{{"error", {{"kind", kind}, {"message", msg}}}};
  std::cout << e.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald characters, links and boundary limits"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("--q", c.q, "q as an exact rational in (0,1)");
    s->add_option("--theta", c.theta, "t = q^theta, theta >= 1");
    s->add_option("--seed", c.seed, "sample-point seed");
    s->add_option("--eps", c.eps, "target absolute error for certified reals");
    s->add_option("--output", c.output, "json or csv (csv for converge only)")->check(CLI::IsMember({"json", "csv"}));
  };

  std::string target, suite;
  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  common(eval);
  eval->add_option("target", target, "poly|character|residue|link|pushforward|phi|generating")->required();
  eval->add_option("--lambda", c.lambda, "signature, e.g. 2,1,0");
  eval->add_option("--mu", c.mu, "signature one shorter than lambda");
  eval->add_option("--nu", c.nu, "prefix=0,0,1,2;tail=const or just 0,0,1,2");
  eval->add_option("--N", c.N, "number of variables / level")->delimiter(',');
  eval->add_option("--m", c.m, "number of free variables / target level");
  eval->add_option("--x", c.x, "rational argument (repeatable)")->delimiter(',');
  eval->add_option("--convention", c.convention, "unitary|contour|prelimit|generating");

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  common(verify);
  verify->add_option("suite,--suite", suite, "suite name");
  verify->add_option("--points", c.points, "points per case (0: default)");
  verify->add_option("--max-N", c.max_N, "largest N (0: default)");

  auto* conv = app.add_subcommand("converge", "prelimit characters against the limit");
  common(conv);
  conv->add_option("--nu", c.nu, "prefix=0,0,1,2;tail=const")->required();
  conv->add_option("--m", c.m, "number of variables");
  conv->add_option("--x", c.x, "rational argument (repeatable)")->delimiter(',')->required();
  conv->add_option("--N", c.N, "levels, e.g. 5,10,25")->delimiter(',')->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("parse", e.what());
    return 1;
  }

  try {
    if (*eval) {
      std::cout << cmd_eval(target, c).dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      if (suite.empty()) throw ParseError("suite name is required");
      json r = cmd_verify(suite, c);
      std::cout << r.dump(2) << "\n";
      return r["failed"].get<long>() == 0 ? 0 : 3;
    }
    std::vector<ConvergeRow> rows = cmd_converge(c);
    if (c.output == "csv") {
      std::cout << "N,exact,exact_decimal,phi,phi_error_bound,residual\n";
      for (const auto& r : rows)
        std::cout << r.N << "," << to_string(r.exact) << "," << CertifiedReal::to_float(r.exact).str(20) << ","
                  << r.phi.value_str(20) << "," << r.phi.error_str() << "," << r.residual << "\n";
    } else {
      json t = json::array();
      for (const auto& r : rows)
        t.push_back({{"N", r.N},
                     {"exact", to_string(r.exact)},
                     {"phi", certified_json(r.phi)},
                     {"residual", r.residual}});
      std::cout << json{{"command", "converge"}, {"nu", NuSpec::parse(c.nu).str()}, {"rows", t}}.dump(2) << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    emit_error("parse", e.what());
    return 1;
  } catch (const PoleError& e) {
    emit_error("pole", e.what());
    return 2;
  } catch (const DomainError& e) {
    emit_error("domain", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 4;
  }
}
