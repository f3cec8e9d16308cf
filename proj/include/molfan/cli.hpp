#pragma once

#include <cstddef>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "molfan/error.hpp"
#include "molfan/fan.hpp"
#include "molfan/lp.hpp"
#include "molfan/molpp.hpp"
#include "molfan/polytope.hpp"
#include "molfan/problem_file.hpp"
#include "molfan/report.hpp"
#include "molfan/svg.hpp"

namespace molfan::cli {

/// Exit codes: success, domain error (empty, unbounded, zero form, ...), usage or input error.
enum ExitCode : int { Ok = 0, DomainFailure = 1, UsageFailure = 2 };

inline int exit_code_for(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::InvalidSystem:
    case ErrorCode::IndexOutOfRange: return UsageFailure;
    default: return DomainFailure;
  }
}

namespace detail {

struct Settings
{
  std::string input;
  std::string format{"text"};
  std::string angle_unit{"deg"};
  int precision{3};
  Tolerances tolerances{};
  std::optional<std::size_t> vertex;
  std::optional<std::size_t> objective;
  std::string output;

  report::OutputOptions output_options() const
  {
    return {angle_unit == "rad" ? report::AngleUnit::Radians : report::AngleUnit::Degrees, precision, tolerances};
  }
  bool json() const noexcept { return format == "json"; }
};

inline void add_common_options(CLI::App * sub, Settings & s)
{
  sub->add_option("--input,-i", s.input, "JSON problem file")->required();
  sub->add_option("--format", s.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--angle-unit", s.angle_unit, "Unit for printed angles")->check(CLI::IsMember({"deg", "rad"}));
  sub->add_option("--precision", s.precision, "Decimal places in text output")->check(CLI::Range(0, 17));
  sub->add_option("--eps-geom", s.tolerances.eps_geom, "Relative geometric tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--eps-val", s.tolerances.eps_val, "Relative tie tolerance for objective values")->check(CLI::PositiveNumber);
  sub->add_option("--eps-angle", s.tolerances.eps_angle, "Absolute angular tolerance (radians)")->check(CLI::PositiveNumber);
}

inline QuotientSet fan_for(const ProblemFile & problem, const Tolerances & tol)
{
  return build_fan(build_polygon(problem.system(), tol.eps_geom), FanOptions{true, tol.eps_angle});
}

/// 1-based CLI index → 0-based, range-checked.
inline std::size_t to_index(std::size_t one_based, std::size_t count, const char * what)
{
  if (one_based == 0 || one_based > count) {
    throw Error(ErrorCode::IndexOutOfRange, fmt::format("{} index {} out of range 1..{}", what, one_based, count));
  }
  return one_based - 1;
}

inline void run_solve(const Settings & s, std::ostream & out)
{
  const ProblemFile problem = parse_problem(s.input);
  const auto forms = problem.forms();
  if (forms.empty()) { throw Error(ErrorCode::InvalidSystem, "the problem file has no objectives"); }
  const HalfspaceSystem system = problem.system();
  const Polygon polygon = build_polygon(system, s.tolerances.eps_geom);
  const auto o = s.output_options();

  std::vector<std::size_t> which;
  if (s.objective) {
    which.push_back(to_index(*s.objective, forms.size(), "objective"));
  } else {
    for (std::size_t k = 0; k < forms.size(); ++k) { which.push_back(k); }
  }

  report::Json doc = report::header_json("solve", o);
  doc["solutions"] = report::Json::array();
  for (const auto k : which) {
    const LinearForm & f = forms[k];
    const ArgmaxSet best = argmax_enumerate(polygon, f, s.tolerances.eps_val);
    const LpSolution lp = simplex_solve(system, f);
    if (s.json()) {
      report::Json entry;
      entry["objective"] = k + 1;
      entry["c"] = report::Json::array({report::clean(f.c1()), report::clean(f.c2())});
      entry["enumeration"] = report::argmax_json(polygon, best);
      entry["enumeration"]["value"] = report::clean(best.optimal_value);
      entry["simplex"] = {{"point", report::point_json(lp.vertex)}, {"value", report::clean(lp.value)}};
      doc["solutions"].push_back(std::move(entry));
    } else {
      out << "f" << k + 1 << " = " << report::coefficient_text(f) << "\n";
      out << "  enumeration: " << report::argmax_text(polygon, best, o) << ", value " << report::fixed(best.optimal_value, o.precision)
          << "\n";
      out << "  simplex:     vertex " << report::point_text(lp.vertex, o) << ", value " << report::fixed(lp.value, o.precision) << "\n";
    }
  }
  if (s.json()) { out << doc.dump(2) << "\n"; }
}

inline void run_fan(const Settings & s, std::ostream & out)
{
  const ProblemFile problem = parse_problem(s.input);
  const QuotientSet fan = fan_for(problem, s.tolerances);
  const auto o = s.output_options();
  if (s.json()) {
    report::Json doc = report::header_json("fan", o);
    report::add_fan_json(doc, fan, o);
    out << doc.dump(2) << "\n";
  } else {
    report::write_fan_text(out, fan, o);
  }
}

inline void run_classify(const Settings & s, std::ostream & out)
{
  const ProblemFile problem = parse_problem(s.input);
  const MolppInstance inst(problem.system(), problem.forms());
  const ClassificationReport r = classify_instance(inst, s.tolerances);

  bool verified = false;
  if (const auto * v = std::get_if<IdealVertex>(&r.verdict)) {
    verified = verify_ideal(inst.system(), r.fan.polygon(), inst.objectives(), v->point, s.tolerances);
  } else if (const auto * f = std::get_if<IdealFace>(&r.verdict)) {
    verified = verify_ideal(inst.system(), r.fan.polygon(), inst.objectives(), 0.5 * (f->tail + f->head), s.tolerances);
  }

  const auto o = s.output_options();
  if (s.json()) {
    report::Json doc = report::header_json("classify", o);
    report::add_classification_json(doc, r, inst.objectives(), verified, o);
    out << doc.dump(2) << "\n";
  } else {
    report::write_classification_text(out, r, inst.objectives(), verified, o);
  }
}

inline void run_sensitivity(const Settings & s, std::ostream & out)
{
  const ProblemFile problem = parse_problem(s.input);
  const QuotientSet fan = fan_for(problem, s.tolerances);
  const auto o = s.output_options();
  const Polygon & p = fan.polygon();

  const EquivalenceClass * cls = nullptr;
  std::string subject;
  if (s.vertex) {
    const std::size_t v = to_index(*s.vertex, p.vertex_count(), "vertex");
    cls = &fan.corner_class(v);
    subject = fmt::format("vertex x{} = {}", v + 1, report::point_text(p.vertices()[v], o));
  } else {
    const auto forms = problem.forms();
    const std::size_t k = to_index(*s.objective, forms.size(), "objective");
    cls = &class_of(fan, forms[k]);
    subject = fmt::format("objective f{} = {}, argmax {}", k + 1, report::coefficient_text(forms[k]),
                          report::argmax_text(p, argmax_of_class(*cls), o));
  }

  if (s.json()) {
    report::Json doc = report::header_json("sensitivity", o);
    doc["class_id"] = cls->class_id;
    doc["argmax"] = report::argmax_json(p, argmax_of_class(*cls));
    if (cls->is_corner()) {
      const auto & cone = cls->corner().cone;
      doc["kind"] = "corner";
      if (cone.is_full()) {
        doc["interval"] = nullptr;
        doc["full_circle"] = true;
      } else {
        doc["interval"] = report::Json::array({report::angle_value(cone.lo(), o), report::angle_value(cone.hi(), o)});
      }
    } else {
      doc["kind"] = "face";
      doc["angle"] = report::angle_value(cls->face().normal_angle, o);
    }
    out << doc.dump(2) << "\n";
    return;
  }

  out << subject << "\n";
  if (cls->is_corner()) {
    out << "open interval " << report::interval_text(cls->corner().cone, o) << "\n";
  } else {
    // a face optimum survives only directions equal to the face normal
    out << "face F" << cls->face().edge_index + 1 << ": only angle "
        << report::fixed(report::angle_value(cls->face().normal_angle, o), o.precision) << " " << report::unit_suffix(o) << "\n";
  }
}

inline void run_plot(const Settings & s, std::ostream & out)
{
  const ProblemFile problem = parse_problem(s.input);
  const QuotientSet fan = fan_for(problem, s.tolerances);
  const auto forms = problem.forms();
  if (s.output.empty()) {
    svg::render_svg(fan, forms, out);
  } else {
    svg::render_svg(fan, forms, s.output);
  }
}

}  // namespace detail

/// Entry point of the `molfan` tool. Errors go to `err` as "<TAG>: message".
inline int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Objective-direction classes, sensitivity cones and ideal-solution detection for 2D linear programs", "molfan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(MOLFAN_VERSION));

  detail::Settings s;
  auto * solve = app.add_subcommand("solve", "Optimum of each objective via vertex enumeration and simplex");
  auto * fan = app.add_subcommand("fan", "Print the polygon and all argmax classes");
  auto * classify = app.add_subcommand("classify", "Classify every objective and decide whether an ideal solution exists");
  auto * sensitivity = app.add_subcommand("sensitivity", "Open cone of objective directions keeping a vertex optimal");
  auto * plot = app.add_subcommand("plot", "Write an SVG figure of the polygon, its cones and the objectives");
  for (auto * sub : {solve, fan, classify, sensitivity, plot}) { detail::add_common_options(sub, s); }
  solve->add_option("--objective", s.objective, "Solve only this objective (1-based)");
  auto * subject = sensitivity->add_option_group("subject", "Exactly one of --vertex or --objective");
  subject->add_option("--vertex", s.vertex, "Vertex (1-based)");
  subject->add_option("--objective", s.objective, "Objective (1-based)");
  subject->require_option(1);
  plot->add_option("--output,-o", s.output, "SVG path (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError & e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return Ok;
    }
    err << "E_USAGE: " << e.what() << "\n";
    return UsageFailure;
  }

  try {
    if (*solve) { detail::run_solve(s, out); }
    else if (*fan) { detail::run_fan(s, out); }
    else if (*classify) { detail::run_classify(s, out); }
    else if (*sensitivity) { detail::run_sensitivity(s, out); }
    else if (*plot) { detail::run_plot(s, out); }
  } catch (const Error & e) {
    err << error_tag(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return Ok;
}

inline int run(int argc, const char * const * argv, std::ostream & out = std::cout, std::ostream & err = std::cerr)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) { args.emplace_back(argv[i]); }
  return run(args, out, err);
}

}  // namespace molfan::cli
