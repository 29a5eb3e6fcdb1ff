#include "ncqm/cli.hpp"

#include "ncqm/bopp.hpp"
#include "ncqm/darboux.hpp"
#include "ncqm/errors.hpp"
#include "ncqm/group.hpp"
#include "ncqm/json_io.hpp"
#include "ncqm/sector.hpp"
#include "ncqm/star.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace ncqm {

namespace {

constexpr const char* kSchema = "ncqm-report/1";

std::string command_name(const Command& cmd) {
  return cmd.subverb.empty() ? cmd.verb : cmd.verb + " " + cmd.subverb;
}

/// Flag access with usage-level failure on absence.
class OptionReader {
 public:
  explicit OptionReader(const Command& cmd) : cmd_(cmd) {}

  bool has(const std::string& name) const { return cmd_.options.count(name) > 0; }

  const std::string& raw(const std::string& name) const {
    const auto it = cmd_.options.find(name);
    if (it == cmd_.options.end()) {
      throw UsageFailure{"command \"" + command_name(cmd_) + "\" requires --" + name};
    }
    return it->second;
  }

  Rational rational(const std::string& name) const { return parse_rational(raw(name)); }

  Json json_value(const std::string& name) const {
    return parse_json_text(raw(name), "--" + name);
  }

 private:
  const Command& cmd_;
};

SectorLabel label_options(const OptionReader& opts) {
  return SectorLabel{opts.rational("hbar"), opts.rational("theta"), opts.rational("b")};
}

Json label_inputs(const SectorLabel& label) {
  return Json{{"hbar", to_string(label.hbar)},
              {"theta", to_string(label.theta)},
              {"b", to_string(label.b_in)}};
}

/// Either an explicit --matrix or the omega_nc of the label flags.
CommutatorMatrix omega_source(const OptionReader& opts, Json& inputs) {
  if (opts.has("matrix")) {
    CommutatorMatrix omega(matrix_from_json(opts.json_value("matrix")));
    inputs["omega"] = to_json(omega);
    return omega;
  }
  const SectorLabel label = label_options(opts);
  inputs["label"] = label_inputs(label);
  return omega_nc(label);
}

struct Outcome {
  Json inputs;
  Json outputs;
};

Outcome handle_sector(const Command& cmd, const OptionReader& opts) {
  if (cmd.subverb != "classify") {
    throw UsageFailure{"unknown sector subcommand \"" + cmd.subverb + "\" (expected: classify)"};
  }
  const SectorLabel label = label_options(opts);
  Outcome result;
  result.inputs = label_inputs(label);
  if (!label.is_regular()) {
    throw DomainError(ErrorKind::UnsupportedStratum,
                      "classification covers the regular stratum only (hbar != 0 and "
                      "kappa != 0); got hbar = " +
                          to_string(label.hbar) + ", kappa = " + to_string(label.kappa()));
  }
  const CommutatorMatrix omega = omega_nc(label);
  result.outputs = Json{{"omega", to_json(omega)},
                        {"pfaffian", to_string(pfaffian(omega))},
                        {"kappa", to_string(label.kappa())},
                        {"regular", true},
                        {"central_character", to_json(central_character(label))},
                        {"factors_through_quotient", factors_through_quotient(label)}};
  return result;
}

Outcome handle_bopp(const Command& cmd, const OptionReader& opts) {
  const SectorLabel label = label_options(opts);
  const BoppParams params{opts.rational("r"), opts.rational("s")};
  Outcome result;
  result.inputs = label_inputs(label);
  result.inputs["r"] = to_string(params.r);
  result.inputs["s"] = to_string(params.s);

  if (cmd.subverb == "matrix") {
    const BoppRealization realization = bopp_matrix(label, params);
    result.outputs = Json{{"matrix", to_json(realization.matrix)},
                          {"a", to_string(a_coefficient(label, params.r))},
                          {"det", to_string(realization.matrix.determinant())},
                          {"sector_invariant", verify_sector_invariance(realization)}};
    return result;
  }
  if (cmd.subverb == "transfer") {
    const BoppParams target{opts.rational("to-r"), opts.rational("to-s")};
    result.inputs["to_r"] = to_string(target.r);
    result.inputs["to_s"] = to_string(target.s);
    const BoppRealization from = bopp_matrix(label, params);
    const RealizationMatrix transfer = realization_transfer(from, target);
    result.outputs = Json{{"matrix", to_json(transfer)},
                          {"det", to_string(transfer.determinant())}};
    return result;
  }
  throw UsageFailure{"unknown bopp subcommand \"" + cmd.subverb +
                     "\" (expected: matrix, transfer)"};
}

Outcome handle_darboux(const Command& cmd, const OptionReader& opts) {
  Outcome result;
  if (cmd.subverb == "intrinsic") {
    const SectorLabel label = label_options(opts);
    result.inputs = label_inputs(label);
    const DarbouxMap map = intrinsic_canonicalization(label);
    result.outputs =
        Json{{"matrix", to_json(map.matrix)},
             {"det", to_string(map.matrix.determinant())},
             {"hbar", to_string(map.hbar)},
             {"is_darboux", is_darboux_map(map.matrix, map.source, map.hbar)}};
    return result;
  }
  if (cmd.subverb == "canonicalize") {
    const Rational hbar = opts.rational("hbar");
    result.inputs["hbar"] = to_string(hbar);
    const CommutatorMatrix omega(matrix_from_json(opts.json_value("matrix")));
    result.inputs["omega"] = to_json(omega);
    const DarbouxMap map = canonicalize(omega, hbar);
    result.outputs =
        Json{{"matrix", to_json(map.matrix)},
             {"det", to_string(map.matrix.determinant())},
             {"hbar", to_string(map.hbar)},
             {"is_darboux", is_darboux_map(map.matrix, map.source, map.hbar)}};
    return result;
  }
  throw UsageFailure{"unknown darboux subcommand \"" + cmd.subverb +
                     "\" (expected: intrinsic, canonicalize)"};
}

Outcome handle_spectrum(const Command& cmd, const OptionReader& opts) {
  if (cmd.subverb != "frequencies" && cmd.subverb != "energy") {
    throw UsageFailure{"unknown spectrum subcommand \"" + cmd.subverb +
                       "\" (expected: frequencies, energy)"};
  }
  Outcome result;
  const QuadraticForm ham(matrix_from_json(opts.json_value("ham")));
  result.inputs["ham"] = to_json(ham.entries());
  const CommutatorMatrix omega = omega_source(opts, result.inputs);
  const SpectrumResult spectrum = williamson_frequencies(ham, omega);
  result.outputs = to_json(spectrum);
  if (cmd.subverb == "energy") {
    const std::vector<std::uint64_t> quanta = quanta_from_text(opts.raw("quanta"));
    result.inputs["quanta"] = quanta;
    result.outputs["quanta"] = quanta;
    result.outputs["energy"] = quadratic_spectrum(spectrum, quanta);
  }
  return result;
}

Outcome handle_group(const Command& cmd, const OptionReader& opts) {
  Outcome result;
  const GroupElement g = group_element_from_json(opts.json_value("g"));
  result.inputs["g"] = to_json(g);
  if (cmd.subverb == "multiply") {
    const GroupElement h = group_element_from_json(opts.json_value("h"));
    result.inputs["h"] = to_json(h);
    result.outputs = Json{{"product", to_json(bch_multiply(g, h))}};
    return result;
  }
  if (cmd.subverb == "project") {
    result.outputs = Json{{"projection", to_json(quotient_project(g))}};
    return result;
  }
  throw UsageFailure{"unknown group subcommand \"" + cmd.subverb +
                     "\" (expected: multiply, project)"};
}

Outcome handle_orbit(const Command& cmd, const OptionReader& opts) {
  Outcome result;
  const Functional l = functional_from_json(opts.json_value("functional"));
  result.inputs["functional"] = to_json(l);
  if (cmd.subverb == "data") {
    result.outputs = to_json(orbit_data(l));
    return result;
  }
  if (cmd.subverb == "act") {
    const GroupElement g = group_element_from_json(opts.json_value("g"));
    result.inputs["g"] = to_json(g);
    result.outputs = Json{{"functional", to_json(coadjoint_act(g, l))}};
    return result;
  }
  throw UsageFailure{"unknown orbit subcommand \"" + cmd.subverb +
                     "\" (expected: data, act)"};
}

Outcome handle_star(const Command& cmd, const OptionReader& opts) {
  Outcome result;
  if (cmd.subverb == "shadow") {
    const SectorLabel label = label_options(opts);
    result.inputs = label_inputs(label);
    const ShadowReport report = shadow_report(label);
    result.outputs = Json{{"intertwining_verified", report.intertwining_verified},
                          {"samples", report.samples},
                          {"sectors_equivalent", report.sectors_equivalent},
                          {"narrative", report.narrative}};
    return result;
  }
  if (cmd.subverb != "product" && cmd.subverb != "commutator") {
    throw UsageFailure{"unknown star subcommand \"" + cmd.subverb +
                       "\" (expected: product, commutator, shadow)"};
  }
  const PolySymbol f = polysymbol_from_json(opts.json_value("f"));
  const PolySymbol g = polysymbol_from_json(opts.json_value("g"));
  result.inputs["f"] = to_json(f);
  result.inputs["g"] = to_json(g);
  const CommutatorMatrix omega = omega_source(opts, result.inputs);
  const PolySymbol value = cmd.subverb == "product" ? moyal_star(f, g, omega)
                                                    : star_commutator(f, g, omega);
  result.outputs = Json{{"terms", to_json(value)}, {"text", value.text()}};
  return result;
}

Outcome handle_verdict(const Command& cmd, const OptionReader& opts) {
  if (!cmd.subverb.empty()) {
    throw UsageFailure{"verdict takes no subcommand"};
  }
  const SectorLabel label = label_options(opts);
  Outcome result;
  result.inputs = label_inputs(label);
  const ReductionVerdict verdict = reduction_verdict(label);
  const SectorLabel companion{label.hbar, 0, 0};
  result.outputs = Json{{"darboux_exists", verdict.darboux_exists},
                        {"conjugation_possible", verdict.conjugation_possible},
                        {"sectors_equivalent", verdict.sectors_equivalent},
                        {"equivalence", to_json(decide_equivalence(label, companion))},
                        {"narrative", verdict.narrative}};
  return result;
}

Json raw_inputs(const Command& cmd) {
  Json echo = Json::object();
  for (const auto& [key, value] : cmd.options) echo[key] = value;
  return echo;
}

std::string render_scalar(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

std::string render_text(const Json& document) {
  std::ostringstream out;
  out << document.at("command").get<std::string>() << ": "
      << document.at("status").get<std::string>();
  if (document.contains("error_kind")) {
    out << "\n  error: " << document.at("error_kind").get<std::string>() << ": "
        << document.at("message").get<std::string>();
    return out.str();
  }
  for (const auto& [key, value] : document.at("outputs").items()) {
    out << "\n  " << key << " = " << render_scalar(value);
  }
  return out.str();
}

Report finish(const Command& cmd, Json inputs, Json outputs) {
  Report report;
  report.ok = true;
  report.document = Json{{"schema", kSchema},
                         {"command", command_name(cmd)},
                         {"inputs", std::move(inputs)},
                         {"status", "ok"},
                         {"outputs", std::move(outputs)}};
  report.text = render_text(report.document);
  return report;
}

Report fail(const Command& cmd, Json inputs, const DomainError& error) {
  Report report;
  report.ok = false;
  report.error_kind = std::string(error_kind_name(error.kind()));
  report.message = error.what();
  report.document = Json{{"schema", kSchema},
                         {"command", command_name(cmd)},
                         {"inputs", std::move(inputs)},
                         {"status", "error"},
                         {"error_kind", report.error_kind},
                         {"message", report.message}};
  report.text = render_text(report.document);
  return report;
}

}  // namespace

Report dispatch(const Command& cmd) {
  const OptionReader opts(cmd);
  try {
    Outcome outcome;
    if (cmd.verb == "sector") {
      outcome = handle_sector(cmd, opts);
    } else if (cmd.verb == "bopp") {
      outcome = handle_bopp(cmd, opts);
    } else if (cmd.verb == "darboux") {
      outcome = handle_darboux(cmd, opts);
    } else if (cmd.verb == "spectrum") {
      outcome = handle_spectrum(cmd, opts);
    } else if (cmd.verb == "group") {
      outcome = handle_group(cmd, opts);
    } else if (cmd.verb == "orbit") {
      outcome = handle_orbit(cmd, opts);
    } else if (cmd.verb == "star") {
      outcome = handle_star(cmd, opts);
    } else if (cmd.verb == "verdict") {
      outcome = handle_verdict(cmd, opts);
    } else {
      throw UsageFailure{"unknown command \"" + cmd.verb +
                         "\" (expected: sector, bopp, darboux, spectrum, group, orbit, "
                         "star, verdict)"};
    }
    return finish(cmd, std::move(outcome.inputs), std::move(outcome.outputs));
  } catch (const DomainError& error) {
    return fail(cmd, raw_inputs(cmd), error);
  }
}

namespace {

/// A sweep file is a JSON array of label objects; each entry overrides the
/// label flags while every other option is carried over unchanged.
int run_sweep(const Command& base, const std::string& path, const std::string& format,
              std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "error: ParseError: cannot open sweep file \"" << path << "\"\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();

  Json entries;
  try {
    entries = parse_json_text(buffer.str(), "sweep file");
    if (!entries.is_array()) {
      throw DomainError(ErrorKind::ParseError, "sweep file must hold a JSON array of labels");
    }
  } catch (const DomainError& error) {
    err << "error: " << error_kind_name(error.kind()) << ": " << error.what() << "\n";
    return 1;
  }

  Json documents = Json::array();
  bool all_ok = true;
  for (const Json& entry : entries) {
    Command cmd = base;
    try {
      const SectorLabel label = label_from_json(entry);
      cmd.options["hbar"] = to_string(label.hbar);
      cmd.options["theta"] = to_string(label.theta);
      cmd.options["b"] = to_string(label.b_in);
    } catch (const DomainError& error) {
      const Report report = fail(cmd, entry, error);
      documents.push_back(report.document);
      all_ok = false;
      continue;
    }
    const Report report = dispatch(cmd);
    documents.push_back(report.document);
    all_ok = all_ok && report.ok;
  }

  // Sweeps emit the machine-readable array in either format; entry order
  // matches the input file.
  (void)format;
  out << documents.dump(2) << "\n";
  if (!all_ok) err << "error: one or more sweep entries failed\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact kinematics of two-dimensional noncommutative quantum mechanics"};
  app.name("ncqm");
  // The second group element travels as --h, so help keeps only its long form.
  app.set_help_flag("--help", "print usage and exit");

  std::string verb, subverb;
  app.add_option("verb", verb,
                 "command: sector, bopp, darboux, spectrum, group, orbit, star, verdict")
      ->required();
  app.add_option("subverb", subverb, "subcommand, e.g. classify, matrix, intrinsic");

  const std::vector<std::pair<std::string, std::string>> flag_help = {
      {"hbar", "Planck scale, rational \"p/q\""},
      {"theta", "position noncommutativity, rational"},
      {"b", "internal magnetic parameter, rational"},
      {"r", "Bopp family parameter r"},
      {"s", "Bopp family parameter s"},
      {"to-r", "target Bopp parameter r (bopp transfer)"},
      {"to-s", "target Bopp parameter s (bopp transfer)"},
      {"matrix", "commutator matrix as JSON rows of rationals"},
      {"ham", "quadratic Hamiltonian matrix as JSON rows of rationals"},
      {"f", "polynomial symbol as JSON term records"},
      {"g", "group element or polynomial symbol as JSON"},
      {"h", "second group element as JSON"},
      {"functional", "Lie-algebra functional as JSON"},
      {"quanta", "comma-separated occupation numbers"},
      {"sweep", "path to a JSON array of labels to batch over"},
      {"format", "output format: json or text (default json)"},
  };
  std::map<std::string, std::string> values;
  for (const auto& [name, help] : flag_help) {
    app.add_option("--" + name, values[name], help);
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ncqm");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& error) {
    err << "usage error: " << error.what() << "\n" << app.help();
    return 2;
  }

  std::string format = "json";
  if (app.count("--format") > 0) format = values["format"];
  if (format != "json" && format != "text") {
    err << "usage error: --format must be json or text\n";
    return 2;
  }

  Command cmd;
  cmd.verb = verb;
  cmd.subverb = subverb;
  for (const auto& [name, help] : flag_help) {
    if (name == "sweep" || name == "format") continue;
    if (app.count("--" + name) > 0) cmd.options[name] = values[name];
  }

  try {
    if (app.count("--sweep") > 0) {
      return run_sweep(cmd, values["sweep"], format, out, err);
    }
    const Report report = dispatch(cmd);
    if (format == "json") {
      out << report.document.dump(2) << "\n";
    } else {
      out << report.text << "\n";
    }
    if (!report.ok) {
      err << "error: " << report.error_kind << ": " << report.message << "\n";
      return 1;
    }
    return 0;
  } catch (const UsageFailure& failure) {
    err << "usage error: " << failure.message << "\n";
    return 2;
  }
}

}  // namespace ncqm
