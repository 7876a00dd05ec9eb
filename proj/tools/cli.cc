#include "cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "modrc/serialize.h"

namespace modrc::cli {
namespace {

struct ParamFlags {
  std::int64_t g = 0, r = 0, d = 0;
};

void add_param_flags(CLI::App* sub, ParamFlags& f) {
  sub->add_option("--g", f.g, "genus of the curve (>= 2)")->required();
  sub->add_option("--r", f.r, "rank (>= 2)")->required();
  sub->add_option("--d", f.d, "degree of the fixed determinant")->required();
}

Json param_inputs(const ParamFlags& f) { return Json{{"g", f.g}, {"r", f.r}, {"d", f.d}}; }

// Output of a completed command; written to the streams only on success.
struct Result {
  std::string text;
  std::vector<std::string> warnings;  // echoed on stderr for non-JSON formats
  bool json = false;
  int code = kExitOk;
};

std::string emit_json(const std::string& command, Json inputs, Json results, std::vector<std::string> warnings) {
  OutputEnvelope env;
  env.command = command;
  env.inputs = std::move(inputs);
  env.results = std::move(results);
  env.warnings = std::move(warnings);
  return print(Json(env));
}

std::string datum_text(const FamilyDatum& datum) {
  std::ostringstream os;
  if (const auto* c = std::get_if<ExtensionChain>(&datum)) {
    os << "chain [";
    for (std::size_t i = 0; i < c->steps.size(); ++i) {
      os << (i ? " " : "") << "(" << c->steps[i].rank << "," << c->steps[i].degree << ")";
    }
    os << "] a=(";
    for (std::size_t i = 0; i < c->twists.size(); ++i) os << (i ? "," : "") << c->twists[i];
    os << ")";
  } else if (const auto* t = std::get_if<TorsionDatum>(&datum)) {
    os << "torsion t=" << t->t << " a=" << t->a;
  } else {
    const auto& m = std::get<MixedDatum>(datum);
    os << "mixed (" << m.r1 << "," << m.d1 << ") (" << m.r2 << "," << m.d2 << ") t=" << m.t;
  }
  return os.str();
}

std::string classify_table(const ClassificationReport& rep) {
  const ModuliParams& p = rep.params;
  std::ostringstream os;
  os << "g=" << p.g() << " r=" << p.r() << " d=" << p.d() << "  h=" << p.h() << " dimM=" << p.dim_m()
     << " fano=" << p.fano_index() << "\n";
  os << "k=" << rep.k << "  expected dimension " << expected_dimension(p, rep.k) << "\n\n";
  os << std::left << std::setw(22) << "KIND" << std::setw(34) << "DATUM" << std::setw(6) << "DIM" << std::setw(13)
     << "IMAGE"
     << "STATUS\n";
  for (const ComponentDescriptor& c : rep.components) {
    os << std::setw(22) << to_string(c.kind) << std::setw(34) << datum_text(c.datum) << std::setw(6)
       << c.dimension.value() << std::setw(13) << to_string(c.generic_image) << to_string(c.status) << "\n";
  }
  const ClassificationTotals& t = rep.totals;
  os << "\ncomponents of expected dimension: " << t.expected_dimension_components << " (unobstructed "
     << t.unobstructed << ", obstructed " << t.obstructed_expected << ")\n";
  os << "proved above expected: " << t.proved_nonexpected << "  candidates: " << t.candidates
     << "  not components: " << t.not_component << "\n";
  for (const DivisibilityCheck& d : rep.divisibility) {
    os << "threshold r1=" << d.r1 << ": " << d.threshold << "  divides hk: " << (d.literal_divides ? "yes" : "no")
       << "  constructive: " << (d.constructive ? "yes" : "no");
    if (d.constructive) os << " (d1=" << *d.d1 << ", a=" << *d.a << ")";
    os << "\n";
  }
  if (rep.incomplete) os << "enumeration incomplete: raise --deg-bound\n";
  return os.str();
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw ParameterError("unsupported --format " + format);
}

// Writes via a sibling temporary and renames, so a failed write leaves nothing behind.
void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  try {
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw ParameterError("cannot open " + tmp.string() + " for writing");
      f << text;
      f.flush();
      if (!f) throw ParameterError("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

std::string suite_line(const VerificationReport& r) {
  std::ostringstream os;
  const char* outcome = r.as_expected() ? (r.expect_failure ? "FAILS (expected)" : "PASS") : "UNEXPECTED";
  os << std::left << std::setw(20) << r.suite_name << std::setw(12) << r.trials << std::setw(10) << r.failures
     << outcome << "\n";
  for (const auto& t : r.counterexamples) {
    os << "    (" << r.tuple_layout << ") = (";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")\n";
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational curves on moduli of vector bundles: classification and verification", "moduli-rc"};
  app.require_subcommand(1);
  std::function<Result()> action;

  // classify
  ParamFlags cf;
  std::int64_t k = 0, max_l = 3;
  std::optional<std::int64_t> deg_bound;
  bool include_candidates = false, include_mixed = false;
  std::string classify_format = "table";
  CLI::App* classify_cmd = app.add_subcommand("classify", "components of the space of degree-k rational curves");
  add_param_flags(classify_cmd, cf);
  classify_cmd->add_option("--k", k, "degree against the theta divisor (>= 1)")->required();
  classify_cmd->add_option("--max-l", max_l, "longest extension chain enumerated")->capture_default_str();
  classify_cmd->add_option("--deg-bound", deg_bound, "bound on |d_i| for candidate chains (default 4rg)");
  classify_cmd->add_flag("--include-candidates", include_candidates, "also enumerate obstructed families");
  classify_cmd->add_flag("--include-mixed", include_mixed, "also enumerate mixed and twisted torsion families");
  classify_cmd->add_option("--format", classify_format, "table or json")->capture_default_str();
  classify_cmd->callback([&] {
    action = [&] {
      check_format(classify_format, {"table", "json"});
      const ModuliParams p = derive_params(cf.g, cf.r, cf.d);
      ClassifyOptions opts;
      opts.include_candidates = include_candidates;
      opts.include_mixed = include_mixed;
      opts.max_l = max_l;
      if (deg_bound) opts.deg_bound = Int(*deg_bound);
      const ClassificationReport rep = classify(p, k, opts);
      Result res{{}, rep.warnings, classify_format == "json"};
      if (res.json) {
        Json inputs = param_inputs(cf);
        inputs["k"] = k;
        inputs["options"] = opts;
        res.text = emit_json("classify", inputs, report_to_json(rep), rep.warnings);
      } else {
        res.text = classify_table(rep);
      }
      return res;
    };
  });

  // sweep
  ParamFlags sf;
  std::int64_t k_min = 0, k_max = 0;
  std::string out_path, sweep_format = "csv";
  bool sweep_candidates = false, sweep_mixed = false;
  std::int64_t sweep_max_l = 3;
  std::optional<std::int64_t> sweep_deg_bound;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "component counts for every k in a range");
  add_param_flags(sweep_cmd, sf);
  sweep_cmd->add_option("--k-min", k_min, "first degree (>= 1)")->required();
  sweep_cmd->add_option("--k-max", k_max, "last degree")->required();
  sweep_cmd->add_option("--out", out_path, "write to this file instead of stdout");
  sweep_cmd->add_option("--format", sweep_format, "csv or json")->capture_default_str();
  sweep_cmd->add_option("--max-l", sweep_max_l, "longest extension chain enumerated")->capture_default_str();
  sweep_cmd->add_option("--deg-bound", sweep_deg_bound, "bound on |d_i| for candidate chains (default 4rg)");
  sweep_cmd->add_flag("--include-candidates", sweep_candidates, "also enumerate obstructed families");
  sweep_cmd->add_flag("--include-mixed", sweep_mixed, "also enumerate mixed and twisted torsion families");
  sweep_cmd->callback([&] {
    action = [&] {
      check_format(sweep_format, {"csv", "json"});
      const ModuliParams p = derive_params(sf.g, sf.r, sf.d);
      ClassifyOptions opts;
      opts.include_candidates = sweep_candidates;
      opts.include_mixed = sweep_mixed;
      opts.max_l = sweep_max_l;
      if (sweep_deg_bound) opts.deg_bound = Int(*sweep_deg_bound);
      const SweepResult s = sweep(p, k_min, k_max, opts);
      Result res{{}, s.warnings, sweep_format == "json"};
      if (res.json) {
        Json inputs = param_inputs(sf);
        inputs["kMin"] = k_min;
        inputs["kMax"] = k_max;
        inputs["options"] = opts;
        res.text = emit_json("sweep", inputs, Json{{"params", p}, {"rows", s.rows}}, s.warnings);
      } else {
        res.text = sweep_csv(s.rows);
      }
      if (!out_path.empty()) {
        write_atomically(out_path, res.text);
        res.text.clear();
      }
      return res;
    };
  });

  // verify
  std::string suite = "all", verify_format = "table";
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  IdentityRanges id_ranges;
  ClaimBounds claim;
  TelescopingBounds tele;
  DimensionGrid grid;
  std::int64_t id_rank = id_ranges.rank_max.value(), id_deg = id_ranges.deg_max.value(),
               id_g = id_ranges.g_max.value();
  std::int64_t cl_l = claim.max_l.value(), cl_rank = claim.rank_bound.value(), cl_deg = claim.deg_bound.value(),
               cl_g = claim.g_bound.value();
  std::int64_t te_l = tele.max_l.value(), te_rank = tele.rank_max.value(), te_deg = tele.deg_max.value(),
               te_twist = tele.twist_max.value();
  std::int64_t gr_g = grid.g_max.value(), gr_r = grid.r_max.value(), gr_d = grid.d_max.value(),
               gr_k = grid.k_max.value(), gr_twist = grid.twist_max.value();
  CLI::App* verify_cmd = app.add_subcommand("verify", "brute-force verification suites");
  verify_cmd->add_option("--suite", suite, "all, identities, claim, telescoping, dimensions or counts")
      ->check(CLI::IsMember({"all", "identities", "claim", "telescoping", "dimensions", "counts"}))
      ->capture_default_str();
  verify_cmd->add_option("--trials", trials, "random instances per randomized suite")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "table or json")->capture_default_str();
  verify_cmd->add_option("--id-rank-max", id_rank, "identities: ranks in [1, N]")->capture_default_str();
  verify_cmd->add_option("--id-deg-max", id_deg, "identities: degrees in [-N, N]")->capture_default_str();
  verify_cmd->add_option("--id-g-max", id_g, "identities: genus in [2, N]")->capture_default_str();
  verify_cmd->add_option("--claim-max-l", cl_l, "claim/dimensions: chain lengths up to N")->capture_default_str();
  verify_cmd->add_option("--claim-rank-bound", cl_rank, "claim/dimensions: ranks in [1, N]")->capture_default_str();
  verify_cmd->add_option("--claim-deg-bound", cl_deg, "claim/dimensions: degrees in [-N, N]")->capture_default_str();
  verify_cmd->add_option("--claim-g-bound", cl_g, "claim/dimensions: genus in [2, N]")->capture_default_str();
  verify_cmd->add_option("--tele-max-l", te_l, "telescoping: chain lengths in [2, N]")->capture_default_str();
  verify_cmd->add_option("--tele-rank-max", te_rank, "telescoping: ranks in [1, N]")->capture_default_str();
  verify_cmd->add_option("--tele-deg-max", te_deg, "telescoping: degrees in [-N, N]")->capture_default_str();
  verify_cmd->add_option("--tele-twist-max", te_twist, "telescoping: twists in [1, N]")->capture_default_str();
  verify_cmd->add_option("--grid-g-max", gr_g, "dimensions/counts: genus in [2, N]")->capture_default_str();
  verify_cmd->add_option("--grid-r-max", gr_r, "dimensions/counts: rank in [2, N]")->capture_default_str();
  verify_cmd->add_option("--grid-d-max", gr_d, "dimensions/counts: degree in [-N, N]")->capture_default_str();
  verify_cmd->add_option("--grid-k-max", gr_k, "dimensions/counts: k in [1, N]")->capture_default_str();
  verify_cmd->add_option("--twist-max", gr_twist, "dimensions: chain twists in [1, N]")->capture_default_str();
  verify_cmd->callback([&] {
    action = [&] {
      check_format(verify_format, {"table", "json"});
      id_ranges = {id_rank, id_deg, id_g};
      claim = {cl_l, cl_rank, cl_deg, cl_g};
      tele = {te_l, te_rank, te_deg, te_twist};
      grid.g_max = gr_g;
      grid.r_max = gr_r;
      grid.d_min = -gr_d;
      grid.d_max = gr_d;
      grid.k_max = gr_k;
      grid.chains = claim;
      grid.twist_max = gr_twist;
      const CountGrid counts{grid.g_min, grid.g_max, grid.r_min, grid.r_max, grid.d_min, grid.d_max, grid.k_max};

      std::vector<VerificationReport> reports;
      const bool all = suite == "all";
      if (all || suite == "identities") {
        IdentityReports ids = verify_three_term_identities(id_ranges, trials, seed);
        reports.push_back(std::move(ids.plus));
        reports.push_back(std::move(ids.minus));
      }
      if (all || suite == "claim") reports.push_back(verify_claim_inequality(claim));
      if (all || suite == "telescoping") reports.push_back(verify_degree_telescoping(trials, seed, tele));
      if (all || suite == "dimensions") reports.push_back(verify_dimension_laws(grid));
      if (all || suite == "counts") reports.push_back(verify_component_counts(counts));

      Result res;
      res.json = verify_format == "json";
      for (const VerificationReport& r : reports) {
        if (r.expect_failure && r.failures > 0) {
          res.warnings.push_back(r.suite_name + ": minus-sign three-term identity fails on " +
                                 std::to_string(r.failures) + " of " + std::to_string(r.trials) +
                                 " instances; the plus-sign form holds");
        }
        if (!r.as_expected()) {
          res.warnings.push_back(r.suite_name + ": unexpected outcome (" + std::to_string(r.failures) +
                                 " failures)");
          res.code = kExitFailure;
        }
      }
      if (res.json) {
        const Json inputs{{"suite", suite},
                          {"trials", trials},
                          {"seed", seed},
                          {"identities", Json{{"rankMax", id_rank}, {"degMax", id_deg}, {"gMax", id_g}}},
                          {"claim", Json{{"maxL", cl_l}, {"rankBound", cl_rank}, {"degBound", cl_deg}, {"gBound", cl_g}}},
                          {"telescoping",
                           Json{{"maxL", te_l}, {"rankMax", te_rank}, {"degMax", te_deg}, {"twistMax", te_twist}}},
                          {"grid", Json{{"gMax", gr_g}, {"rMax", gr_r}, {"dMax", gr_d}, {"kMax", gr_k},
                                        {"twistMax", gr_twist}}}};
        res.text = emit_json("verify", inputs, Json{{"suites", reports}}, res.warnings);
      } else {
        std::ostringstream os;
        os << std::left << std::setw(20) << "SUITE" << std::setw(12) << "TRIALS" << std::setw(10) << "FAILURES"
           << "OUTCOME\n";
        for (const VerificationReport& r : reports) os << suite_line(r);
        res.text = os.str();
      }
      return res;
    };
  });

  // segre
  ParamFlags gf;
  std::optional<std::int64_t> r_prime;
  std::string segre_format = "table";
  CLI::App* segre_cmd = app.add_subcommand("segre", "Segre invariant strata and their codimensions");
  add_param_flags(segre_cmd, gf);
  segre_cmd->add_option("--r-prime", r_prime, "restrict to one subbundle rank r' in [1, r-1]");
  segre_cmd->add_option("--format", segre_format, "table or json")->capture_default_str();
  segre_cmd->callback([&] {
    action = [&] {
      check_format(segre_format, {"table", "json"});
      const ModuliParams p = derive_params(gf.g, gf.r, gf.d);
      const std::vector<SegreTableRow> rows =
          segre_table(p, r_prime ? std::optional<Int>(*r_prime) : std::nullopt);
      Result res;
      res.json = segre_format == "json";
      if (res.json) {
        Json inputs = param_inputs(gf);
        inputs["rPrime"] = r_prime ? Json(*r_prime) : Json(nullptr);
        res.text = emit_json("segre", inputs, Json{{"params", p}, {"rows", rows}}, {});
      } else {
        std::ostringstream os;
        for (const SegreTableRow& row : rows) {
          os << "r'=" << row.r_prime << "  bound " << row.bound << "  generic s=" << row.generic_s
             << "  nonstable codim >= " << row.nonstable_codim
             << (row.lines_avoid_nonstable ? " (lines avoid it)" : " (lines may meet it)") << "\n";
          for (const SegreStratum& s : row.strata) os << "    s=" << s.s << "  codim " << s.codim << "\n";
        }
        res.text = os.str();
      }
      return res;
    };
  });

  // connect
  ParamFlags nf;
  std::string connect_format = "table";
  CLI::App* connect_cmd = app.add_subcommand("connect", "minimal degree of a rational curve through two points");
  add_param_flags(connect_cmd, nf);
  connect_cmd->add_option("--format", connect_format, "table or json")->capture_default_str();
  connect_cmd->callback([&] {
    action = [&] {
      check_format(connect_format, {"table", "json"});
      const ModuliParams p = derive_params(nf.g, nf.r, nf.d);
      const ConnectingDegree c = min_connecting_degree(p);
      Result res;
      res.json = connect_format == "json";
      if (c.mismatch()) {
        res.warnings.push_back("closed-form connecting degree " + std::to_string(c.closed_form_k.value()) +
                               " differs from the derived minimum " + std::to_string(c.derived_k.value()));
      }
      if (res.json) {
        res.text = emit_json("connect", param_inputs(nf), Json{{"params", p}, {"connecting", c}}, res.warnings);
      } else {
        std::ostringstream os;
        os << "derived k=" << c.derived_k << "  closed form k=" << c.closed_form_k << "\n"
           << "witness r'=" << c.witness.r_prime << " d'=" << c.witness.d_prime << "  threshold " << c.threshold
           << "\n";
        res.text = os.str();
      }
      return res;
    };
  });

  std::vector<std::string> argv_store{"moduli-rc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Result res = action();
    out << res.text;
    if (!res.json) {
      for (const std::string& w : res.warnings) err << "warning: " << w << "\n";
    }
    return res.code;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace modrc::cli
