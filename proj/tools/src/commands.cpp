#include <convexiq_cli/commands.hpp>

#include <convexiq/explorer.hpp>
#include <convexiq/io.hpp>
#include <convexiq/search.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace convexiq::cli {

namespace {

template <class F>
int guarded(Context& ctx, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    ctx.err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    ctx.err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidArgument& e) {
    ctx.err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Unsupported& e) {
    ctx.err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const UndefinedValue& e) {
    ctx.err << "undefined value: " << e.what() << '\n';
    return kExitParse;
  }
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir.empty() ? "." : dir) / name).string();
}

std::string known_ids() {
  std::string s;
  for (const auto& e : catalog()) s += (s.empty() ? "" : ", ") + e.id;
  return s;
}

std::string stem_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

int cmd_make(const CorpusSpec& spec_in, const GlobalOptions& g, Context& ctx) {
  return guarded(ctx, [&] {
    CorpusSpec spec = spec_in;
    if (g.seed) spec.seed = *g.seed;
    const auto bodies = generate_corpus(spec);
    if (g.out.empty() && bodies.size() == 1) {
      ctx.out << body_to_json(bodies.front());
      return kExitOk;
    }
    for (std::size_t k = 0; k < bodies.size(); ++k) {
      const auto path = join_path(g.out, corpus_name(spec, static_cast<int>(k)) + ".json");
      write_file(path, body_to_json(bodies[k]));
      ctx.out << path << '\n';
    }
    return kExitOk;
  });
}

int cmd_check(const CheckOptions& opts, const GlobalOptions& g, Context& ctx) {
  // Validate ids before touching any file.
  std::vector<std::pair<std::string, std::string>> ineqs;
  for (const auto& spec : opts.inequalities) {
    const auto colon = spec.find(':');
    const std::string id = spec.substr(0, colon);
    if (!is_known_inequality(id)) {
      ctx.err << "unknown inequality id '" << id << "'; known ids: " << known_ids() << '\n';
      return kExitUsage;
    }
    ineqs.emplace_back(id, colon == std::string::npos ? "" : spec.substr(colon + 1));
  }
  return guarded(ctx, [&] {
    EvalOptions eo;
    if (g.tolerance) eo.base_tolerance = *g.tolerance;
    if (g.quad_res) eo.quadrature.resolution = *g.quad_res;
    eo.quadrature.validate();
    std::vector<std::pair<std::string, IneqParams>> parsed;
    for (const auto& [id, text] : ineqs) parsed.emplace_back(id, parse_params(text));

    DefaultOracle default_oracle(eo.quadrature);
    MeasureOracle& oracle = ctx.oracle ? *ctx.oracle : default_oracle;
    std::vector<IneqReport> reports;
    std::vector<std::pair<std::string, IneqReport>> rows;
    bool violation = false;
    for (const auto& path : opts.bodies) {
      const Body body = body_from_json(read_file(path));
      BodyProfile profile(body, oracle);
      for (const auto& [id, params] : parsed) {
        IneqReport r = evaluate(id, profile, params, eo);
        (g.out.empty() ? ctx.err : ctx.out)
            << path << ' ' << id << (r.params.empty() ? "" : "(" + r.params + ")") << ' ' << to_string(r.status)
            << " lhs=" << num(r.lhs) << " rhs=" << num(r.rhs) << " slack=" << num(r.oriented_slack)
            << " tol=" << num(r.tolerance) << ' ' << (r.satisfied ? "satisfied" : "VIOLATED") << ' '
            << to_string(r.equality_flag) << (r.precondition_met ? "" : " [precondition not met]") << '\n';
        if (r.proven_violation()) violation = true;
        if (r.status == IneqStatus::Conjecture && !r.satisfied) {
          std::ostringstream cfg;
          cfg << R"({"source": "check", "body_file": )" << '"' << stem_of(path) << R"(", "inequality": ")" << id
              << R"(", "params": ")" << r.params << R"(", "base_tolerance": )" << eo.base_tolerance
              << R"(, "quad_res": )" << eo.quadrature.resolution << '}';
          const auto fpath =
              join_path(join_path(g.out, "findings"), id + "-" + r.fingerprint + ".json");
          write_file(fpath, finding_to_json(cfg.str(), body, r));
          ctx.err << "conjecture violated; finding written to " << fpath << '\n';
        }
        rows.emplace_back(stem_of(path), r);
        reports.push_back(std::move(r));
      }
    }
    if (g.out.empty()) {
      ctx.out << reports_to_json(reports);
    } else {
      write_file(join_path(g.out, "report.json"), reports_to_json(reports));
      write_file(join_path(g.out, "report.csv"), reports_to_csv(rows));
    }
    if (violation) {
      ctx.err << "a proven inequality failed beyond tolerance: numerical defect\n";
      return kExitProvenViolation;
    }
    return kExitOk;
  });
}

int cmd_repro(const std::string& target, const GlobalOptions& g, Context& ctx) {
  if (!is_repro_target(target)) {
    ctx.err << "unknown repro target '" << target << "'; known: k1, eq1-c3, c0, meyer-octahedron, all\n";
    return kExitUsage;
  }
  return guarded(ctx, [&] {
    QuadratureSpec q;
    if (g.quad_res) q.resolution = *g.quad_res;
    const auto rows = repro_rows(target, q);
    bool ok = true;
    std::ostringstream csv;
    csv << "target,quantity,expected,computed,tolerance,pass\n";
    ctx.out << std::left << std::setw(18) << "target" << std::setw(46) << "quantity" << std::setw(20) << "expected"
            << std::setw(20) << "computed" << std::setw(10) << "tol" << "result\n";
    for (const auto& r : rows) {
      ok = ok && r.pass;
      ctx.out << std::setw(18) << r.target << std::setw(46) << r.quantity << std::setw(20) << num(r.expected)
              << std::setw(20) << num(r.computed) << std::setw(10) << num(r.tolerance) << (r.pass ? "pass" : "FAIL")
              << '\n';
      csv << r.target << ",\"" << r.quantity << "\"," << std::setprecision(17) << r.expected << ',' << r.computed
          << ',' << r.tolerance << ',' << (r.pass ? "pass" : "fail") << '\n';
    }
    if (!g.out.empty()) write_file(join_path(g.out, "repro.csv"), csv.str());
    return ok ? kExitOk : kExitFailure;
  });
}

int cmd_search(const std::string& config_path, const GlobalOptions& g, Context& ctx) {
  return guarded(ctx, [&] {
    SearchConfig cfg = search_config_from_json(read_file(config_path));
    if (g.seed) cfg.seed = *g.seed;
    if (g.tolerance) cfg.tolerance = *g.tolerance;
    if (g.quad_res) cfg.quad_resolution = *g.quad_res;
    cfg.validate();
    const SearchResult res = search(cfg);
    for (const auto& q : res.trajectory) {
      ctx.err << "block " << q.block << ": min " << num(q.min) << " q25 " << num(q.q25) << " median "
              << num(q.median) << " q75 " << num(q.q75) << " max " << num(q.max) << '\n';
    }
    ctx.err << "best slack " << num(res.best_slack) << (res.violation ? " (VIOLATION)" : "") << '\n';
    if (g.out.empty()) {
      ctx.out << search_result_to_json(cfg, res);
    } else {
      write_file(join_path(g.out, "search.json"), search_result_to_json(cfg, res));
      write_file(join_path(g.out, "trajectory.csv"), trajectory_to_csv(res));
      if (res.violation) {
        write_file(join_path(g.out, "finding.json"),
                   finding_to_json(search_config_to_json(cfg), *res.witness, *res.best_report));
      }
    }
    if (res.violation && res.best_report->status == IneqStatus::Proven) return kExitProvenViolation;
    return kExitOk;
  });
}

int cmd_jcurve(const std::string& body_path, int samples, const GlobalOptions& g, Context& ctx) {
  return guarded(ctx, [&] {
    const Body body = body_from_json(read_file(body_path));
    std::ostringstream csv;
    csv << "x2,J\n" << std::setprecision(17);
    for (const auto& s : j_curve(body, samples)) csv << s.x2 << ',' << s.j << '\n';
    if (g.out.empty()) {
      ctx.out << csv.str();
    } else {
      write_file(g.out, csv.str());
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, Context& ctx) {
  CLI::App app{"convexiq: intrinsic volumes and Loomis-Whitney-type inequalities"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  int quad_res = 0;
  auto globals = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--tolerance", tolerance, "base relative tolerance");
    sub->add_option("--quad-res", quad_res, "quadrature resolution (>= 16)");
    sub->add_option("--out", g.out, "output directory (jcurve: file)");
  };

  CorpusSpec corpus;
  corpus.family = "named";
  auto* make = app.add_subcommand("make", "write body/1 files");
  make->add_option("--family", corpus.family, "random-polytope|random-zonotope|unconditional|g-symmetric|named");
  make->add_option("--id", corpus.named_id, "named body: cross|cube|K1|K2");
  make->add_option("--n", corpus.n, "dimension");
  make->add_option("--count", corpus.count, "number of bodies");
  make->add_option("--size", corpus.size, "vertex or generator count");
  make->add_option("--scale", corpus.scale, "coordinate scale");
  globals(make);

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "evaluate inequalities on body files");
  check->add_option("--ineq", check_opts.inequalities, "id or id:params, e.g. cg_upper:m=1")
      ->required()
      ->allow_extra_args(false);
  check->add_option("bodies", check_opts.bodies, "body/1 files")->required();
  globals(check);

  std::string target = "all";
  auto* repro = app.add_subcommand("repro", "reproduce the reference numbers");
  repro->add_option("target", target, "k1|eq1-c3|c0|meyer-octahedron|all");
  globals(repro);

  std::string config;
  auto* srch = app.add_subcommand("search", "randomized search on an open problem");
  srch->add_option("config", config, "search-config/1 file")->required();
  globals(srch);

  std::string body_path;
  int samples = 64;
  auto* jcurve = app.add_subcommand("jcurve", "sample J_K(x2) for a 3-body with cube symmetry");
  jcurve->add_option("body", body_path, "body/1 file")->required();
  jcurve->add_option("--samples", samples, "grid size");
  globals(jcurve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, ctx.out, ctx.err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, ctx.out, ctx.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, ctx.out, ctx.err);
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--seed")) g.seed = seed;
    if (sub->count("--tolerance")) g.tolerance = tolerance;
    if (sub->count("--quad-res")) g.quad_res = quad_res;
  }
  if (g.quad_res && *g.quad_res < 16) {
    ctx.err << "--quad-res must be >= 16\n";
    return kExitUsage;
  }
  if (g.tolerance && !(*g.tolerance > 0.0)) {
    ctx.err << "--tolerance must be positive\n";
    return kExitUsage;
  }
  if (make->parsed()) return cmd_make(corpus, g, ctx);
  if (check->parsed()) return cmd_check(check_opts, g, ctx);
  if (repro->parsed()) return cmd_repro(target, g, ctx);
  if (srch->parsed()) return cmd_search(config, g, ctx);
  return cmd_jcurve(body_path, samples, g, ctx);
}

}  // namespace convexiq::cli
