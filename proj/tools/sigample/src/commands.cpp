#include "sigample/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sigample/cli/catalog.hpp"
#include "sigample/cli/report.hpp"

namespace sigample::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::RankMismatch:
      return kInputError;
    case ErrorKind::UnknownName:
      return kUnknownName;
    case ErrorKind::NotInvertibleOverIntegers:
    case ErrorKind::NotUnipotent:
    case ErrorKind::NotQuasiUnipotent:
    case ErrorKind::NotAmple:
    case ErrorKind::MissingToddData:
      return kPrecondition;
  }
  return kInputError;
}

namespace {

struct Options {
  std::string scheme;
  std::string autos;
  std::string divisors;
  std::string oracle;
  std::size_t mmax = 12;
  std::string eps = "1/1000";
  std::string format = "structured";
  std::size_t jobs = 1;
  std::vector<std::string> catalog_args;
};

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Outcome {
  Json report;
  std::optional<Error> error;
};

/// Evaluates independent queries, optionally on several threads; results keep
/// the input order.
std::vector<Outcome> run_batch(const std::vector<std::function<Json()>>& queries, std::size_t jobs) {
  auto guarded = [](const std::function<Json()>& q) {
    try {
      return Outcome{q(), std::nullopt};
    } catch (const Error& e) {
      return Outcome{Json(), e};
    }
  };
  std::vector<Outcome> out(queries.size());
  if (jobs <= 1 || queries.size() <= 1) {
    for (std::size_t i = 0; i < queries.size(); ++i) out[i] = guarded(queries[i]);
    return out;
  }
  for (std::size_t start = 0; start < queries.size(); start += jobs) {
    const std::size_t stop = std::min(queries.size(), start + jobs);
    std::vector<std::future<Outcome>> running;
    for (std::size_t i = start; i < stop; ++i) {
      running.push_back(std::async(std::launch::async, guarded, std::cref(queries[i])));
    }
    for (std::size_t i = start; i < stop; ++i) out[i] = running[i - start].get();
  }
  return out;
}

void emit(const Json& report, const Options& opts, std::ostream& out) {
  if (opts.format == "text") {
    out << render_text(report);
  } else {
    out << report.dump(2) << "\n";
  }
}

int emit_batch(std::string_view command, const std::vector<Outcome>& outcomes, const Options& opts,
               std::ostream& out, std::ostream& err) {
  int code = kSuccess;
  for (const auto& o : outcomes) {
    if (o.error) {
      err << "error: " << to_string(o.error->kind()) << ": " << o.error->what() << "\n";
      if (code == kSuccess) code = exit_code_for(o.error->kind());
    }
  }
  if (outcomes.size() == 1) {
    if (!outcomes.front().error) emit(outcomes.front().report, opts, out);
    return code;
  }
  Json batch;
  batch["command"] = command;
  Json results = Json::array();
  for (const auto& o : outcomes) {
    if (o.error) {
      results.push_back(Json{{"error", to_string(o.error->kind())}, {"message", o.error->what()}});
    } else {
      results.push_back(o.report);
    }
  }
  batch["results"] = std::move(results);
  emit(batch, opts, out);
  return code;
}

std::vector<std::string> required_names(const std::string& list, std::string_view flag) {
  auto names = split_names(list);
  if (names.empty()) throw Error(ErrorKind::UnknownName, "missing " + std::string(flag));
  return names;
}

using PairQuery = std::function<Json(const SchemeFile&, const AutomorphismAction&, const NamedDivisor&)>;

int run_pairs(std::string_view command, const Options& opts, const PairQuery& query, std::ostream& out,
              std::ostream& err) {
  const SchemeFile file = load_scheme(opts.scheme);
  std::vector<std::function<Json()>> queries;
  for (const auto& a : required_names(opts.autos, "--auto")) {
    for (const auto& d : required_names(opts.divisors, "--divisor")) {
      queries.push_back([&file, &query, a, d]() {
        const NamedDivisor divisor{d, file.divisor(d)};
        return query(file, file.automorphism(a), divisor);
      });
    }
  }
  return emit_batch(command, run_batch(queries, opts.jobs), opts, out, err);
}

int dispatch(const std::string& command, const Options& opts, std::ostream& out, std::ostream& err) {
  const Rational eps = parse_rational(opts.eps);
  if (eps <= 0) throw Error(ErrorKind::InvalidArgument, "--eps must be positive");

  if (command == "catalog") {
    if (opts.catalog_args.empty() || opts.catalog_args.front() == "list") {
      Json report{{"command", "catalog"}, {"entries", catalog_names()}};
      emit(report, opts, out);
      return kSuccess;
    }
    if (opts.catalog_args.front() == "show" && opts.catalog_args.size() == 2) {
      const SchemeFile file = catalog_entry(opts.catalog_args[1]);
      emit(to_json(file), opts, out);
      return kSuccess;
    }
    throw Error(ErrorKind::InvalidArgument, "usage: catalog list | catalog show NAME");
  }
  if (command == "validate") {
    const Json report = validate_report(load_scheme(opts.scheme));
    emit(report, opts, out);
    if (!report["valid"].get<bool>()) {
      err << "error: ValidationError: scheme '" << report["scheme"].get<std::string>()
          << "' failed validation\n";
      return kInputError;
    }
    return kSuccess;
  }
  if (command == "classify") {
    const SchemeFile file = load_scheme(opts.scheme);
    std::vector<std::function<Json()>> queries;
    for (const auto& a : required_names(opts.autos, "--auto")) {
      queries.push_back([&file, &eps, a]() { return classify_report(file, file.automorphism(a), eps); });
    }
    return emit_batch(command, run_batch(queries, opts.jobs), opts, out, err);
  }
  if (command == "sigma-ample") {
    return run_pairs(command, opts,
                     [&](const SchemeFile& f, const AutomorphismAction& a, const NamedDivisor& d) {
                       return sigma_ample_report(f, a, f.pick_oracle(opts.oracle), d);
                     },
                     out, err);
  }
  if (command == "gkdim") {
    return run_pairs(command, opts,
                     [&](const SchemeFile& f, const AutomorphismAction& a, const NamedDivisor& d) {
                       return gkdim_report(f, a, f.pick_oracle(opts.oracle), d);
                     },
                     out, err);
  }
  if (command == "growth") {
    return run_pairs(command, opts,
                     [&](const SchemeFile& f, const AutomorphismAction& a, const NamedDivisor& d) {
                       return growth_report_json(f, a, f.pick_oracle(opts.oracle), d, opts.mmax, eps);
                     },
                     out, err);
  }
  if (command == "chi") {
    return run_pairs(command, opts,
                     [&](const SchemeFile& f, const AutomorphismAction& a, const NamedDivisor& d) {
                       return chi_report(f, a, d, opts.mmax);
                     },
                     out, err);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact σ-ampleness, automorphism classification and GK-dimension of twisted "
               "homogeneous coordinate rings from numerical data"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--jobs", opts.jobs, "Threads for batch queries")->check(CLI::PositiveNumber);
    sub->add_option("--eps", opts.eps, "Spectral-radius interval width, P/Q");
  };
  auto add_scheme = [&](CLI::App* sub) {
    sub->add_option("scheme", opts.scheme, "Scheme file or catalog name")->required();
    add_common(sub);
  };
  auto add_query = [&](CLI::App* sub, bool divisor, bool oracle, bool mmax) {
    add_scheme(sub);
    sub->add_option("--auto", opts.autos, "Automorphism name(s), comma separated")->required();
    if (divisor) sub->add_option("--divisor", opts.divisors, "Divisor name(s), comma separated")->required();
    if (oracle) sub->add_option("--oracle", opts.oracle, "Ample-cone oracle name");
    if (mmax) sub->add_option("--mmax", opts.mmax, "Largest m sampled")->check(CLI::PositiveNumber);
  };

  add_scheme(app.add_subcommand("validate", "Check a scheme description"));
  add_query(app.add_subcommand("classify", "Classify an automorphism by its numerical action"), false, false, false);
  add_query(app.add_subcommand("sigma-ample", "Decide σ-ampleness of a divisor"), true, true, false);
  add_query(app.add_subcommand("gkdim", "GK-dimension of the twisted coordinate ring"), true, true, false);
  add_query(app.add_subcommand("growth", "Growth type of the twisted coordinate ring"), true, true, true);
  add_query(app.add_subcommand("chi", "Euler characteristics χ(O(Δ_m)), m = 1 … mmax"), true, false, true);
  auto* catalog = app.add_subcommand("catalog", "List or show builtin examples");
  catalog->add_option("action", opts.catalog_args, "list | show NAME");
  add_common(catalog);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opts, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace sigample::cli
