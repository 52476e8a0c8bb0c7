#include "qentropy/cli/commands.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <memory>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "qentropy/characterize.hpp"
#include "qentropy/cli/input.hpp"
#include "qentropy/distributions.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/identities.hpp"

namespace qentropy::cli {

namespace {

template <class Body>
RunReport guarded(std::string command, Body&& body) {
  RunReport report;
  report.command = std::move(command);
  try {
    body(report);
  } catch (const InputError& e) {
    report.error = e.kind();
    report.error_message = e.what();
  } catch (const NumericalError& e) {
    report.error = ErrorKind::numerical_failure;
    report.error_message = e.what();
  } catch (const ValidationError& e) {
    report.error = ErrorKind::validation_error;
    report.error_message = e.what();
  } catch (const DomainError& e) {
    report.error = ErrorKind::validation_error;
    report.error_message = e.what();
  } catch (const std::exception& e) {
    report.error = ErrorKind::numerical_failure;
    report.error_message = e.what();
  }
  report.finalize();
  return report;
}

QParam need_q(const ParamFlags& p, RunReport& r) {
  if (!p.q) {
    throw ValidationError("--q is required here");
  }
  r.add_input("q", format_number(*p.q));
  return QParam(*p.q);
}

TwoParam need_ab(const ParamFlags& p, RunReport& r) {
  if (!p.alpha || !p.beta) {
    throw ValidationError("--alpha and --beta are required here");
  }
  r.add_input("alpha", format_number(*p.alpha));
  r.add_input("beta", format_number(*p.beta));
  return TwoParam(*p.alpha, *p.beta);
}

void echo_grid(RunReport& r, const GridSpec& g) {
  r.add_input("grid_min", format_number(g.x_min));
  r.add_input("grid_max", format_number(g.x_max));
  r.add_input("grid_count", std::to_string(g.count));
  r.add_input("grid_spacing", g.spacing == GridSpacing::geometric ? "geometric" : "linear");
}

EquationId build_equation(const std::string& name, const ParamFlags& p, RunReport& r) {
  switch (parse_equation_kind(name)) {
    case EquationKind::prop1:
      return EquationId::prop1(need_q(p, r));
    case EquationKind::cor1:
      return EquationId::cor1();
    case EquationKind::thm2:
      return EquationId::thm2(need_ab(p, r));
    case EquationKind::cor2:
      return EquationId::cor2(need_q(p, r));
    case EquationKind::cor3:
      return EquationId::cor3();
    case EquationKind::symmetrized:
      return EquationId::symmetrized(need_q(p, r));
  }
  throw ValidationError("unknown equation " + name);
}

void check_c(double c) {
  if (!(std::isfinite(c) && c >= 0.0)) {
    throw ValidationError("--c must be finite and nonnegative");
  }
}

}  // namespace

Candidate parse_candidate(const std::string& name) {
  static const std::map<std::string, Candidate> names{
      {"closed-form", Candidate::closed_form},
      {"zero", Candidate::zero},
      {"one-minus-x", Candidate::one_minus_x},
      {"x-one-minus-x", Candidate::x_one_minus_x},
      {"x-squared", Candidate::x_squared},
  };
  auto it = names.find(name);
  if (it == names.end()) {
    throw ValidationError("unknown candidate '" + name + "'");
  }
  return it->second;
}

std::string to_string(Candidate candidate) {
  switch (candidate) {
    case Candidate::closed_form:
      return "closed-form";
    case Candidate::zero:
      return "zero";
    case Candidate::one_minus_x:
      return "one-minus-x";
    case Candidate::x_one_minus_x:
      return "x-one-minus-x";
    case Candidate::x_squared:
      return "x-squared";
  }
  return "unknown";
}

RunReport cmd_entropy(const EntropyOptions& opts) {
  return guarded("entropy", [&](RunReport& r) {
    r.add_input("file", opts.file.string());
    r.add_input("family", opts.family);
    const ProbabilityDistribution p = load_distribution(opts.file);

    if (opts.family == "shannon") {
      r.add_value("value", shannon(p).value);
    } else if (opts.family == "renyi") {
      r.add_value("value", renyi(p, need_q(opts.params, r)).value);
    } else if (opts.family == "tsallis_normalized") {
      r.add_value("value", normalized_tsallis(p, need_q(opts.params, r)).value);
    } else if (opts.family == "two_param") {
      r.add_value("value", two_param_entropy(p, need_ab(opts.params, r)).value);
    } else if (opts.family == "tsallis") {
      const QParam q = need_q(opts.params, r);
      const double def = tsallis(p, q).value;
      const double qexp = tsallis_qexp_form(p, q).value;
      const double expect = tsallis_expect_form(p, q).value;
      const double gap =
          std::max({std::abs(def - qexp), std::abs(def - expect), std::abs(qexp - expect)});
      r.add_value("value", def);
      r.add_value("qexp_form", qexp);
      r.add_value("expect_form", expect);
      r.add_value("three_form_gap", gap);
      r.add_check("three_form_gap_relative", gap / std::max(1.0, std::abs(def)), opts.tol);
      r.set_tolerance("three_form_gap_relative", opts.tol);
    } else {
      throw ValidationError("unknown family '" + opts.family + "'");
    }
  });
}

RunReport cmd_verify(const VerifyOptions& opts) {
  return guarded("verify", [&](RunReport& r) {
    const EquationId eq = build_equation(opts.equation, opts.params, r);
    r.add_input("equation", eq.label());
    check_c(opts.c);
    r.add_input("c", format_number(opts.c));
    r.add_input("candidate", to_string(opts.candidate));
    r.add_input("perturb", format_number(opts.perturb));
    echo_grid(r, opts.grid);
    opts.grid.validate();

    ScalarFunction f = [&] {
      switch (opts.candidate) {
        case Candidate::zero:
          return ScalarFunction::zero();
        case Candidate::one_minus_x:
          return ScalarFunction("1-x", [](double x) { return 1.0 - x; });
        case Candidate::x_one_minus_x:
          return ScalarFunction("x(1-x)", [](double x) { return x * (1.0 - x); });
        case Candidate::x_squared:
          return ScalarFunction("x^2", [](double x) { return x * x; });
        case Candidate::closed_form:
          break;
      }
      return closed_form_for(eq, opts.c);
    }();
    if (opts.perturb != 0.0) {
      const double eps = opts.perturb;
      f = f.plus(ScalarFunction("perturbation", [eps](double x) { return eps * (1.0 - x); }));
    }

    const ResidualReport res = sup_residual_on_grid(f, eq, opts.grid);
    r.add_check("sup_abs", res.sup_abs, opts.tol, {res.argmax_x, res.argmax_y});
    r.add_value("mean_abs", res.mean_abs);
    r.add_value("points_evaluated", static_cast<double>(res.points_evaluated));
    r.set_tolerance("sup_abs", opts.tol);
  });
}

RunReport cmd_characterize(const CharacterizeOptions& opts) {
  return guarded("characterize", [&](RunReport& r) {
    const bool has_q = opts.params.q.has_value();
    const bool has_ab = opts.params.alpha.has_value() || opts.params.beta.has_value();
    if (has_q == has_ab) {
      throw ValidationError("give either --q or both --alpha and --beta");
    }
    check_c(opts.c);
    OdeRecovery rec;
    std::optional<EquationId> eq;
    if (has_q) {
      const QParam q = need_q(opts.params, r);
      r.add_input("c", format_number(opts.c));
      echo_grid(r, opts.grid);
      rec = solve_ode_prop1(q, opts.c, opts.grid);
      eq = EquationId::prop1(q);
    } else {
      const TwoParam ab = need_ab(opts.params, r);
      r.add_input("c", format_number(opts.c));
      echo_grid(r, opts.grid);
      rec = solve_ode_thm2(ab, opts.c, opts.grid);
      eq = EquationId::thm2(ab);
    }

    // Products xy of closure points must stay inside the recovered table.
    const GridSpec closure{std::sqrt(opts.grid.x_min), 1.0, 64, GridSpacing::geometric};
    r.add_input("closure_grid_min", format_number(closure.x_min));
    r.add_input("closure_grid_count", std::to_string(closure.count));

    const ScalarFunction recovered = rec.as_function();
    const ResidualReport loop = sup_residual_on_grid(recovered, *eq, closure);

    r.add_check("compare_sup", rec.compare_sup, opts.tol);
    r.add_check("loop_closure_sup", loop.sup_abs, opts.tol, {loop.argmax_x, loop.argmax_y});
    r.add_value("extracted_constant", extract_constant(recovered, 1e-4));
    r.add_value("substeps", static_cast<double>(rec.substeps));
    r.add_value("table_nodes", static_cast<double>(rec.table_xs.size()));
    r.set_tolerance("compare_sup", opts.tol);
    r.set_tolerance("loop_closure_sup", opts.tol);
  });
}

RunReport cmd_identities(const IdentitiesOptions& opts) {
  return guarded("identities", [&](RunReport& r) {
    std::vector<std::pair<ProbabilityDistribution, ProbabilityDistribution>> pairs;
    if (opts.pairs > 0) {
      r.add_input("seed", std::to_string(opts.seed));
      r.add_input("pairs", std::to_string(opts.pairs));
      auto corpus = random_corpus(2 * opts.pairs, 2, 8, opts.seed);
      for (std::size_t i = 0; i < opts.pairs; ++i) {
        pairs.emplace_back(corpus[2 * i], corpus[2 * i + 1]);
      }
    } else {
      if (!opts.file_p || !opts.file_q) {
        throw ValidationError("need two distribution files, or --pairs with --seed");
      }
      r.add_input("file_p", opts.file_p->string());
      r.add_input("file_q", opts.file_q->string());
      pairs.emplace_back(load_distribution(*opts.file_p), load_distribution(*opts.file_q));
    }
    if (opts.qs.empty()) {
      throw ValidationError("--q needs at least one value");
    }
    std::string q_list;
    for (double q : opts.qs) {
      q_list += (q_list.empty() ? "" : ",") + format_number(q);
    }
    r.add_input("q", q_list);

    const bool pointwise = std::all_of(pairs.begin(), pairs.end(), [](const auto& pq) {
      return pq.first.strictly_positive() && pq.second.strictly_positive();
    });
    r.add_input("pointwise", pointwise ? "yes" : "skipped (zero entries)");

    for (double qv : opts.qs) {
      const QParam q(qv);
      double eq1 = 0, eq3 = 0, ren = 0, d1 = 0, d2 = 0, s1 = 0, s2 = 0;
      for (const auto& [p, s] : pairs) {
        eq1 = std::max(eq1, tsallis_nonadditivity_residual(p, s, q).residual);
        eq3 = std::max(eq3, normalized_nonadditivity_residual(p, s, q).residual);
        ren = std::max(ren, renyi_additivity_residual(p, s, q).residual);
        if (!pointwise) {
          continue;
        }
        for (double x : p.probs()) {
          for (double y : s.probs()) {
            const auto [a, b] = decomposition_residuals(x, y, q, 1.0);
            d1 = std::max(d1, a);
            d2 = std::max(d2, b);
          }
        }
        const auto [t, n] = remark_sum_residuals(p, s, q);
        s1 = std::max(s1, t.residual);
        s2 = std::max(s2, n.residual);
      }
      const std::string tag = "[q=" + format_number(qv) + "]";
      r.add_check("tsallis_nonadditivity" + tag, eq1, opts.tol);
      r.add_check("normalized_nonadditivity" + tag, eq3, opts.tol);
      r.add_check("renyi_additivity" + tag, ren, opts.tol);
      if (pointwise) {
        r.add_check("decomposition_first" + tag, d1, opts.tol);
        r.add_check("decomposition_second" + tag, d2, opts.tol);
        r.add_check("remark_sum_tsallis" + tag, s1, opts.tol);
        r.add_check("remark_sum_normalized" + tag, s2, opts.tol);
      }
    }
    r.set_tolerance("identity_residual", opts.tol);
  });
}

namespace {

GridSpacing parse_spacing(const std::string& s) {
  if (s == "linear") {
    return GridSpacing::linear;
  }
  if (s == "geometric") {
    return GridSpacing::geometric;
  }
  throw ValidationError("--grid-spacing must be linear or geometric");
}

void add_param_flags(CLI::App* sub, ParamFlags& p) {
  sub->add_option("--q", p.q, "deformation parameter q > 0");
  sub->add_option("--alpha", p.alpha, "two-parameter alpha > 0");
  sub->add_option("--beta", p.beta, "two-parameter beta > 0");
}

struct GridFlags {
  std::optional<double> min;
  std::optional<std::size_t> count;
  std::string spacing = "geometric";

  void add(CLI::App* sub) {
    sub->add_option("--grid-min", min, "smallest grid point");
    sub->add_option("--grid-count", count, "points per axis");
    sub->add_option("--grid-spacing", spacing, "linear|geometric");
  }

  void apply(GridSpec& g) const {
    if (min) {
      g.x_min = *min;
    }
    if (count) {
      g.count = *count;
    }
    g.spacing = parse_spacing(spacing);
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed entropies: evaluation and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "structured";
  app.add_option("--format", format, "text|structured")->check(CLI::IsMember({"text", "structured"}));

  EntropyOptions eo;
  auto* entropy = app.add_subcommand("entropy", "entropy of a distribution file");
  entropy->add_option("file", eo.file, "distribution file")->required();
  entropy->add_option("--family", eo.family, "shannon|renyi|tsallis|tsallis_normalized|two_param");
  add_param_flags(entropy, eo.params);
  entropy->add_option("--tol", eo.tol, "relative tolerance for the Tsallis three-form gap");

  VerifyOptions vo;
  GridFlags vgrid;
  std::string candidate = "closed-form";
  auto* verify = app.add_subcommand("verify", "sweep a functional equation over a grid");
  verify->add_option("--equation", vo.equation, "prop1|cor1|thm2|cor2|cor3|symmetrized");
  add_param_flags(verify, vo.params);
  verify->add_option("--c", vo.c, "solution constant (>= 0)");
  vgrid.add(verify);
  verify->add_option("--tol", vo.tol, "sup residual tolerance");
  verify->add_option("--candidate", candidate,
                     "closed-form|zero|one-minus-x|x-one-minus-x|x-squared");
  verify->add_option("--perturb", vo.perturb, "add perturb*(1-x) to the candidate");

  CharacterizeOptions co;
  GridFlags cgrid;
  auto* characterize = app.add_subcommand("characterize", "recover a solution from its ODE");
  add_param_flags(characterize, co.params);
  characterize->add_option("--c", co.c, "solution constant (>= 0)");
  cgrid.add(characterize);
  characterize->add_option("--tol", co.tol, "recovery and loop-closure tolerance");

  IdentitiesOptions io;
  std::vector<std::string> files;
  std::vector<double> qs;
  auto* identities = app.add_subcommand("identities", "check composition identities");
  identities->add_option("files", files, "two distribution files P Q")->expected(0, 2);
  identities->add_option("--q", qs, "q values (repeat or comma-separate)")->delimiter(',');
  identities->add_option("--seed", io.seed, "random corpus seed");
  identities->add_option("--pairs", io.pairs, "random corpus size (pairs)");
  identities->add_option("--tol", io.tol, "identity residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return static_cast<int>(ExitStatus::input_error);
  }

  RunReport report;
  if (entropy->parsed()) {
    report = cmd_entropy(eo);
  } else if (verify->parsed()) {
    report = guarded("verify", [&](RunReport&) {
      vo.candidate = parse_candidate(candidate);
      vgrid.apply(vo.grid);
    });
    if (!report.error) {
      report = cmd_verify(vo);
    }
  } else if (characterize->parsed()) {
    report = guarded("characterize", [&](RunReport&) { cgrid.apply(co.grid); });
    if (!report.error) {
      report = cmd_characterize(co);
    }
  } else {
    if (files.size() == 2) {
      io.file_p = files[0];
      io.file_q = files[1];
    } else if (!files.empty()) {
      err << "identities takes two files\n";
      return static_cast<int>(ExitStatus::input_error);
    }
    if (!qs.empty()) {
      io.qs = qs;
    }
    report = cmd_identities(io);
  }

  out << render(report, format == "text" ? ReportFormat::text : ReportFormat::structured);
  out.flush();
  if (&err == &std::cerr && ::isatty(STDERR_FILENO)) {
    err << render_table(report);
  }
  return static_cast<int>(report.exit_status());
}

}  // namespace qentropy::cli
