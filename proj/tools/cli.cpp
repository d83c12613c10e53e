#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "egs/corpus.hpp"
#include "egs/io.hpp"
#include "egs/oracle.hpp"
#include "egs/pid.hpp"
#include "egs/splines.hpp"

namespace egs::cli {

namespace {

using nlohmann::json;

struct Common {
  std::size_t max_trails = 0;  // 0: take EGS_MAX_TRAILS or the default
  bool maximal = false;

  TrailOptions trail_options() const {
    TrailOptions opts;
    if (const char* env = std::getenv("EGS_MAX_TRAILS")) {
      try {
        opts.max_trails = std::stoul(env);
      } catch (const std::exception&) {
        throw CLI::ValidationError("EGS_MAX_TRAILS", std::string("not a count: ") + env);
      }
    }
    if (max_trails) opts.max_trails = max_trails;
    if (maximal) opts.mode = TrailMode::maximal;
    return opts;
  }
};

std::string str(const RingElement& a) { return format_element(a); }

json strings(std::span<const RingElement> v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(str(a));
  return out;
}

void print_spline(std::ostream& out, std::span<const RingElement> f) {
  out << '(';
  for (std::size_t k = 0; k < f.size(); ++k) out << (k ? ", " : "") << str(f[k]);
  out << ')';
}

int cmd_qhat(const std::string& path, bool as_json, bool classical, const Common& c, std::ostream& out) {
  const LabeledGraph g = load_instance(path);
  const QhatBreakdown qb = qhat_breakdown(g, c.trail_options());
  if (as_json) {
    json j{{"components", strings(qb.components)}, {"qhat", str(qb.qhat)}};
    if (classical) {
      j["classical_qg"] = str(qb.classical_qg);
      j["h_factor"] = str(qb.h_factor);
    }
    out << j.dump(2) << '\n';
    return ok;
  }
  for (std::size_t i = 0; i < qb.components.size(); ++i)
    out << "Q^(" << i + 1 << ") [" << g.vertices()[i].name << "] = " << str(qb.components[i]) << '\n';
  out << "qhat = " << str(qb.qhat) << '\n';
  if (classical) {
    out << "Q_G = " << str(qb.classical_qg) << '\n';
    out << "H = " << str(qb.h_factor) << '\n';
  }
  return ok;
}

int cmd_certify(const std::string& path, const std::string& splines, bool as_json, const Common& c,
                std::ostream& out) {
  const LabeledGraph g = load_instance(path);
  const SplineMatrix ms = load_spline_set(splines, g);
  const BasisCertificate cert = certify_basis(g, ms, c.trail_options());
  if (as_json) {
    json j{{"verdict", to_string(cert.verdict)}, {"determinant", str(cert.determinant)}, {"qhat", str(cert.qhat)}};
    if (cert.unit) j["unit"] = str(*cert.unit);
    if (!cert.failing_columns.empty()) {
      json cols = json::array();
      for (auto k : cert.failing_columns) cols.push_back(k + 1);
      j["failing_columns"] = cols;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "verdict: " << to_string(cert.verdict) << '\n';
    out << "determinant = " << str(cert.determinant) << '\n';
    out << "qhat = " << str(cert.qhat) << '\n';
    if (cert.unit) out << "unit u = " << str(*cert.unit) << '\n';
    for (auto k : cert.failing_columns) out << "column " << k + 1 << " is not a spline\n";
  }
  switch (cert.verdict) {
    case Verdict::certified: return ok;
    case Verdict::inconclusive: return inconclusive;
    default: return refuted;
  }
}

int cmd_flowup(const std::string& path, bool as_json, const Common& c, std::ostream& out) {
  const LabeledGraph g = load_instance(path);
  if (!g.ring().is_pid())
    throw UnsupportedRing("flowup needs ZZ or QQ[x]; over " + g.ring().to_string() +
                          " a spline module can have no flow-up basis at all (the bundled t4 example is one)");
  const TriangularBasis tb = flow_up_basis(g);
  const FlowUpReport rep = verify_flow_up(g, tb, c.trail_options());
  std::vector<Components> cols;
  std::vector<RingElement> leading;
  for (const auto& cls : tb.classes) {
    cols.push_back(cls.values);
    leading.push_back(cls.leading);
  }
  if (as_json) {
    json j = spline_set_to_json(cols);
    j["leading"] = strings(leading);
    j["determinant"] = str(rep.determinant);
    j["qhat"] = str(rep.qhat);
    j["ok"] = rep.ok();
    out << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << "F^(" << i + 1 << ") = ";
      print_spline(out, cols[i]);
      out << "  leading " << str(leading[i]) << '\n';
    }
    out << "determinant = " << str(rep.determinant) << '\n';
    out << "qhat = " << str(rep.qhat) << '\n';
    out << "determinant = +-qhat: " << (rep.determinant_matches_qhat ? "yes" : "no") << '\n';
    for (const auto& f : rep.failures()) out << "FAIL: " << f << '\n';
  }
  return rep.ok() ? ok : refuted;
}

int cmd_express(const std::string& path, const std::string& splines, const std::string& target, std::ostream& out) {
  const LabeledGraph g = load_instance(path);
  const SplineMatrix ms = load_spline_set(splines, g);
  const Components f = load_target(target, g);
  const CramerSolver solver(g, ms);
  if (solver.determinant().is_zero()) {
    out << "the given splines are linearly dependent (determinant 0)\n";
    return refuted;
  }
  const ExpressionResult res = solver.express(f);
  if (res.in_span()) {
    for (std::size_t i = 0; i < res.coefficients.size(); ++i)
      out << "c" << i + 1 << " = " << str(res.coefficients[i]) << '\n';
    return ok;
  }
  out << "NotInSpan\n";
  for (const auto& ob : res.obstructions)
    out << "index " << ob.index + 1 << ": coefficient " << str(ob.numerator) << " / " << str(ob.denominator)
        << " is not in the ring\n";
  return refuted;
}

int cmd_oracle(const std::string& path, const std::string& bound_text, std::uint64_t seed, long enum_bound,
               const Common& c, std::ostream& out) {
  const LabeledGraph g = load_instance(path);
  if (!g.ring().is_integers())
    throw UnsupportedRing("the brute-force oracle works over ZZ only; got " + g.ring().to_string());
  const std::size_t n = g.num_vertices();
  const auto formula = qhat_components(g, c.trail_options());
  std::size_t failures = 0;
  auto report = [&](bool passed, const std::string& what) {
    out << (passed ? "PASS " : "FAIL ") << what << '\n';
    failures += !passed;
  };

  mpz_class bound;
  if (!bound_text.empty()) {
    if (bound.set_str(bound_text, 10) != 0 || bound < 1) throw CLI::ValidationError("--bound", "positive integer");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class want = formula[i].constant_value().get_num();
    const mpz_class b = bound_text.empty() ? want : bound;
    const auto got = oracle::brute_minimal_leading_entry(g, i, b);
    std::string what = "minimal leading entry at " + g.vertices()[i].name + ": formula " + want.get_str() + ", search";
    if (got) {
      what += " " + str(*got);
      report(*got == formula[i], what);
    } else {
      what += " found nothing up to " + b.get_str();
      report(b < want, what);
    }
  }

  const TriangularBasis tb = flow_up_basis(g);
  const FlowUpReport rep = verify_flow_up(g, tb, c.trail_options());
  report(rep.ok(), "flow-up basis: determinant " + str(rep.determinant) + ", qhat " + str(rep.qhat));

  const auto small = oracle::enumerate_small_splines(g, mpz_class(enum_bound));
  const CramerSolver solver(g, tb.as_spline_matrix());
  std::mt19937_64 rng(seed);
  const std::size_t samples = std::min<std::size_t>(small.size(), 200);
  std::size_t expressed = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& f = small.size() <= 200 ? small[s] : small[oracle::draw(rng, small.size())];
    expressed += solver.express(f).in_span();
  }
  report(expressed == samples, std::to_string(expressed) + "/" + std::to_string(samples) + " of " +
                                   std::to_string(small.size()) + " splines with entries <= " +
                                   std::to_string(enum_bound) + " expressed in the flow-up basis");
  out << (failures ? "oracle: " + std::to_string(failures) + " failure(s)" : std::string("oracle: all checks pass"))
      << '\n';
  return failures ? refuted : ok;
}

int cmd_examples(const std::string& write_dir, std::ostream& out) {
  if (!write_dir.empty()) {
    std::filesystem::create_directories(write_dir);
    for (const auto& f : corpus::files()) {
      std::ofstream os(std::filesystem::path(write_dir) / std::string(f.name));
      os << f.json;
      if (!os) throw std::runtime_error("cannot write " + std::string(f.name));
    }
  }
  std::size_t failed = 0;
  for (const auto& chk : corpus::run_checks()) {
    out << (chk.passed ? "PASS " : "FAIL ") << chk.name;
    if (!chk.passed) out << ": " << chk.detail;
    out << '\n';
    failed += !chk.passed;
  }
  return failed ? refuted : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized splines on edge-labeled graphs: key elements, basis certificates, flow-up bases"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--max-trails", common.max_trails, "cap on trails enumerated per vertex pair (env EGS_MAX_TRAILS)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--maximal-trails", common.maximal, "only use trails that are maximal by edge set");

  std::string instance, splines, target, bound, write_dir;
  bool as_json = false, classical = false;
  std::uint64_t seed = 0;
  long enum_bound = 12;

  auto* qhat_cmd = app.add_subcommand("qhat", "key element components and their product");
  qhat_cmd->add_option("FILE", instance)->required();
  qhat_cmd->add_flag("--json", as_json);
  qhat_cmd->add_flag("--classical", classical, "also print Q_G and H");

  auto* certify_cmd = app.add_subcommand("certify", "determinantal basis certificate");
  certify_cmd->add_option("FILE", instance)->required();
  certify_cmd->add_option("--splines", splines)->required();
  certify_cmd->add_flag("--json", as_json);

  auto* flowup_cmd = app.add_subcommand("flowup", "flow-up basis over ZZ or QQ[x]");
  flowup_cmd->add_option("FILE", instance)->required();
  flowup_cmd->add_flag("--json", as_json);

  auto* express_cmd = app.add_subcommand("express", "write a spline in a candidate basis");
  express_cmd->add_option("FILE", instance)->required();
  express_cmd->add_option("--splines", splines)->required();
  express_cmd->add_option("--target", target)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-checks on an integer instance");
  oracle_cmd->add_option("FILE", instance)->required();
  oracle_cmd->add_option("--bound", bound, "search bound for leading entries (default: the formula value)");
  oracle_cmd->add_option("--seed", seed, "seed for sampling enumerated splines");
  oracle_cmd->add_option("--enum-bound", enum_bound, "entry bound for spline enumeration")->check(CLI::NonNegativeNumber);

  auto* examples_cmd = app.add_subcommand("examples", "run the bundled worked examples");
  examples_cmd->add_option("--write-dir", write_dir, "also write the bundled files here");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_error;
  }

  try {
    if (*qhat_cmd) return cmd_qhat(instance, as_json, classical, common, out);
    if (*certify_cmd) return cmd_certify(instance, splines, as_json, common, out);
    if (*flowup_cmd) return cmd_flowup(instance, as_json, common, out);
    if (*express_cmd) return cmd_express(instance, splines, target, out);
    if (*oracle_cmd) return cmd_oracle(instance, bound, seed, enum_bound, common, out);
    if (*examples_cmd) return cmd_examples(write_dir, out);
  } catch (const FormatError& e) {
    err << "egs: " << e.what() << '\n';
    return parse_error;
  } catch (const CLI::ValidationError& e) {
    err << "egs: " << e.what() << '\n';
    return parse_error;
  } catch (const ValidationError& e) {
    err << "egs: " << e.what() << '\n';
    return validation_error;
  } catch (const DimensionError& e) {
    err << "egs: " << e.what() << '\n';
    return validation_error;
  } catch (const TrailCapExceeded& e) {
    err << "egs: " << e.what() << "; raise --max-trails or EGS_MAX_TRAILS\n";
    return trail_cap;
  } catch (const UnsupportedRing& e) {
    err << "egs: " << e.what() << '\n';
    return unsupported;
  } catch (const std::exception& e) {
    err << "egs: " << e.what() << '\n';
    return refuted;
  }
  return parse_error;
}

}  // namespace egs::cli
