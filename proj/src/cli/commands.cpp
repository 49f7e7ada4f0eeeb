#include "specsum/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "specsum/cli/config.hpp"
#include "specsum/cli/manifest.hpp"
#include "specsum/counting.hpp"
#include "specsum/csv.hpp"
#include "specsum/direct_sum_engine.hpp"
#include "specsum/spectral_core.hpp"
#include "specsum/truncation_oracle.hpp"

#ifndef SPECSUM_VERSION
#define SPECSUM_VERSION "0.0.0"
#endif

namespace specsum::cli {

namespace {

std::vector<double> parse_numbers(const std::string& text, const std::string& flag, std::size_t expected = 0) {
  std::vector<double> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    const std::string piece = text.substr(begin, end - begin);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || !std::isfinite(v)) {
      throw InvalidArgument(flag + ": '" + piece + "' is not a finite number");
    }
    out.push_back(v);
    begin = end + 1;
  }
  if (expected && out.size() != expected) {
    throw InvalidArgument(flag + " expects " + std::to_string(expected) + " comma-separated numbers");
  }
  return out;
}

std::size_t as_size(double v, const std::string& flag) {
  if (v < 1.0 || v != std::floor(v) || v > 1e9) throw InvalidArgument(flag + " expects positive integers");
  return static_cast<std::size_t>(v);
}

// Human-facing number: 12 significant digits, always with a decimal point.
std::string human(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(12);
  s << v;
  std::string t = s.str();
  if (t.find_first_of(".en") == std::string::npos) t += ".0";
  return t;
}

std::string sup_field(const SupResult& s) {
  switch (s.kind()) {
    case SupResult::Kind::Finite: return format_double(s.value());
    case SupResult::Kind::Infinite: return "inf";
    case SupResult::Kind::LowerBoundOnly: return ">=" + format_double(s.value());
  }
  return "";
}

std::vector<std::string> classification_row(const DirectSumClassification& c) {
  return {format_double(c.point.re()), format_double(c.point.im()), std::string(to_string(c.spectral_class)),
          c.witness_index ? std::to_string(*c.witness_index) : "", sup_field(c.resolvent_sup)};
}

const std::vector<std::string> kClassificationHeader{"re", "im", "class", "witness", "resolvent_sup"};

std::string verdict_line(const DirectSumClassification& c) {
  std::string line(to_string(c.spectral_class));
  if (c.witness_index) line += " (witness " + std::to_string(*c.witness_index) + ")";
  switch (c.resolvent_sup.kind()) {
    case SupResult::Kind::Finite: line += ", sup=" + human(c.resolvent_sup.value()); break;
    case SupResult::Kind::Infinite:
      if (!c.witness_index) line += ", sup=inf";
      break;
    case SupResult::Kind::LowerBoundOnly: line += ", sup>=" + human(c.resolvent_sup.value()); break;
  }
  return line;
}

struct Session {
  std::string config_path;
  std::optional<std::string> out_path;
  std::ostream& out;
  std::ostream& err;

  FamilyConfig config;
  std::uint64_t seed = 0;
  RunManifest manifest;

  OperatorFamily load(const std::string& command) {
    config = load_config(config_path);
    seed = resolve_seed(config.seed);
    manifest.command = command;
    manifest.config_hash = sha256_hex(serialize_config(config));
    manifest.seed = seed;
    manifest.version = SPECSUM_VERSION;
    return build_family(config, seed);
  }

  // Writes the CSV body to --out (with a sidecar manifest) or to stdout when
  // `to_stdout` is set; the body is assembled first so one writer emits it.
  void emit(const std::string& body, bool to_stdout) {
    const std::string text = "# manifest " + manifest.id() + "\n" + body;
    if (!out_path) {
      if (to_stdout) out << text;
      return;
    }
    manifest.outputs = {*out_path};
    manifest.wall_clock = utc_now();
    write_file(*out_path, text);
    write_file(*out_path + ".manifest.json", manifest.to_json());
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f) throw IoError("failed writing '" + path + "'");
  }
};

int cmd_classify(Session& s, const std::string& point_text) {
  const OperatorFamily family = s.load("classify");
  const auto p = parse_numbers(point_text, "--point", 2);
  s.manifest.arguments = {"point=" + format_double(p[0]) + "," + format_double(p[1])};
  const DirectSumClassification c = classify_direct_sum_point(ComplexPoint(p[0], p[1]), family, s.config.tolerance);
  s.out << verdict_line(c) << "\n";
  std::ostringstream csv;
  write_csv_row(csv, kClassificationHeader);
  write_csv_row(csv, classification_row(c));
  s.emit(csv.str(), false);
  return c.spectral_class == SpectralClass::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_scan(Session& s, const std::string& region_text, const std::string& grid_text, unsigned threads) {
  const OperatorFamily family = s.load("scan");
  const auto r = parse_numbers(region_text, "--region", 4);
  const auto g = parse_numbers(grid_text, "--grid", 2);
  const ScanRegion region{r[0], r[1], r[2], r[3]};
  const ScanGrid grid{as_size(g[0], "--grid"), as_size(g[1], "--grid")};
  s.manifest.arguments = {"region=" + format_double(r[0]) + "," + format_double(r[1]) + "," + format_double(r[2]) +
                              "," + format_double(r[3]),
                          "grid=" + std::to_string(grid.n_re) + "," + std::to_string(grid.n_im)};

  const ScanResult result = spectral_scan(region, grid, family, s.config.tolerance, threads);
  std::ostringstream csv;
  write_csv_row(csv, kClassificationHeader);
  std::size_t inconclusive = 0;
  for (const auto& c : result.cells) {
    write_csv_row(csv, classification_row(c));
    if (c.spectral_class == SpectralClass::Inconclusive) ++inconclusive;
  }
  s.emit(csv.str(), true);
  if (s.out_path) {
    s.out << "scanned " << result.cells.size() << " points, " << inconclusive << " inconclusive\n";
  }
  return inconclusive ? kExitInconclusive : kExitOk;
}

std::vector<double> parse_lambda_grid(const std::string& text) {
  if (text.rfind("list:", 0) == 0) return parse_numbers(text.substr(5), "--lambda-grid");
  const std::string body = text.rfind("geom:", 0) == 0 ? text.substr(5) : text;
  const auto g = parse_numbers(body, "--lambda-grid", 3);
  return geometric_grid(g[0], g[1], as_size(g[2], "--lambda-grid count"));
}

int cmd_counting(Session& s, const std::optional<std::string>& grid_text) {
  const OperatorFamily family = s.load("counting");
  const auto& d = s.config.defaults.counting_grid;
  const std::vector<double> thresholds =
      grid_text ? parse_lambda_grid(*grid_text) : geometric_grid(d.start, d.ratio, d.count);
  std::string arg = "lambda_grid=";
  for (std::size_t i = 0; i < thresholds.size(); ++i) arg += (i ? "," : "") + format_double(thresholds[i]);
  s.manifest.arguments = {arg};

  const CountingTable table = counting_table(family, thresholds, s.config.tolerance);
  std::ostringstream csv;
  write_csv_row(csv, {"lambda", "count", "overlap_flag"});
  bool overlap = false;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    write_csv_row(csv, {format_double(table.thresholds[i]), std::to_string(table.counts[i]),
                        table.overlaps[i] ? "true" : "false"});
    overlap = overlap || table.overlaps[i];
  }
  s.emit(csv.str(), true);
  if (overlap) s.err << "warning: coordinate spectra overlap; counts include both occurrences\n";
  return kExitOk;
}

int cmd_fit(Session& s, std::optional<std::size_t> count, const std::optional<std::string>& range_text) {
  const OperatorFamily family = s.load("fit");
  const std::size_t n = count.value_or(s.config.defaults.fit_count);
  if (n < 8) throw InvalidArgument("--count must be at least 8");
  std::optional<FitRange> range;
  if (range_text) {
    const auto r = parse_numbers(*range_text, "--range", 2);
    range = FitRange{as_size(r[0], "--range"), as_size(r[1], "--range")};
  } else if (s.config.defaults.fit_range) {
    range = FitRange{s.config.defaults.fit_range->first, s.config.defaults.fit_range->second};
  }
  const FitRange used = range.value_or(default_fit_range(n));
  s.manifest.arguments = {"count=" + std::to_string(n),
                          "range=" + std::to_string(used.lo) + "," + std::to_string(used.hi)};

  const std::vector<double> moduli = merged_eigenvalue_moduli(family, n);
  const AsymptoticFit fit = fit_asymptotic_exponent(moduli, used);
  const double slack = s.config.defaults.fit_slack;
  const BoundCheck check =
      verify_eigenvalue_bound(moduli, fit.gamma_hat * slack, fit.alpha_hat, s.config.defaults.fit_verify_from);

  s.out << "gamma_hat=" << human(fit.gamma_hat) << " alpha_hat=" << human(fit.alpha_hat)
        << " residual=" << human(fit.residual) << " fit_range=" << fit.range.lo << ".." << fit.range.hi << "\n";
  s.out << "bound " << human(slack) << "*gamma_hat*n^alpha_hat for n >= " << s.config.defaults.fit_verify_from << ": "
        << (check.holds ? std::string("holds") : "violated at n=" + std::to_string(*check.first_violation)) << "\n";

  std::ostringstream csv;
  write_csv_row(csv, {"n", "lambda_n", "fitted"});
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const double fitted = fit.gamma_hat * std::pow(static_cast<double>(i + 1), fit.alpha_hat);
    write_csv_row(csv, {std::to_string(i + 1), format_double(moduli[i]), format_double(fitted)});
  }
  s.emit(csv.str(), false);
  return kExitOk;
}

int cmd_verify(Session& s, const std::string& suite_text, std::optional<std::size_t> blocks,
               std::optional<std::size_t> size, const std::optional<std::string>& point_text) {
  const OperatorFamily family = s.load("verify");
  VerifyOptions o;
  o.blocks = blocks.value_or(s.config.defaults.blocks);
  o.block_size = size.value_or(s.config.defaults.block_size);
  if (o.blocks == 0 || o.block_size == 0) throw InvalidArgument("--blocks and --size must be positive");
  if (point_text) {
    const auto p = parse_numbers(*point_text, "--point", 2);
    o.lambda = ComplexPoint(p[0], p[1]);
  } else {
    o.lambda = ComplexPoint(s.config.defaults.lambda);
  }
  o.tol = s.config.tolerance;
  o.seed = s.seed;
  const VerifySuite suite = parse_verify_suite(suite_text);
  s.manifest.arguments = {"suite=" + std::string(to_string(suite)), "blocks=" + std::to_string(o.blocks),
                          "size=" + std::to_string(o.block_size),
                          "point=" + format_double(o.lambda.re()) + "," + format_double(o.lambda.im())};

  const auto reports = verify_family(family, suite, o);
  bool all_pass = true;
  for (const auto& r : reports) {
    s.out << (r.pass ? "PASS " : "FAIL ") << r.property << " discrepancy=" << human(r.discrepancy)
          << " tolerance=" << human(r.tolerance) << "\n";
    all_pass = all_pass && r.pass;
  }
  std::ostringstream csv;
  write_reports_csv(csv, reports);
  s.emit(csv.str(), false);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral classification and counting for direct sums of operators", "specsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SPECSUM_VERSION);

  std::string config_path;
  std::optional<std::string> out_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "Family config (JSON)")->required();
    sub->add_option("--out", out_path, "CSV output path");
  };

  std::string point, region, grid, suite = "all";
  std::optional<std::string> lambda_grid, range, verify_point;
  std::optional<std::size_t> fit_count, blocks, size;
  unsigned threads = 1;

  auto* classify = app.add_subcommand("classify", "Classify one point of the complex plane");
  common(classify);
  classify->add_option("--point", point, "re,im")->required();

  auto* scan = app.add_subcommand("scan", "Classify every node of a rectangular grid");
  common(scan);
  scan->add_option("--region", region, "re0,re1,im0,im1")->required();
  scan->add_option("--grid", grid, "n_re,n_im")->required();
  scan->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 64u));

  auto* counting = app.add_subcommand("counting", "Tabulate the merged counting function");
  common(counting);
  counting->add_option("--lambda-grid", lambda_grid, "start,ratio,count | geom:start,ratio,count | list:v1,v2,...");

  auto* fit = app.add_subcommand("fit", "Fit lambda_n ~ gamma n^alpha to the merged eigenvalues");
  common(fit);
  fit->add_option("--count", fit_count, "Number of merged eigenvalues");
  fit->add_option("--range", range, "lo,hi (1-based, inclusive)");

  auto* verify = app.add_subcommand("verify", "Check engine results against dense truncations");
  common(verify);
  verify->add_option("--suite", suite, "all|norm|union|resolvent|counting");
  verify->add_option("--blocks", blocks, "Number of blocks m");
  verify->add_option("--size", size, "Per-block truncation size N");
  verify->add_option("--point", verify_point, "re,im for the resolvent check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SPECSUM_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitConfigError;
  }

  Session s{config_path, out_path, out, err, {}, 0, {}};
  try {
    if (*classify) return cmd_classify(s, point);
    if (*scan) return cmd_scan(s, region, grid, threads);
    if (*counting) return cmd_counting(s, lambda_grid);
    if (*fit) return cmd_fit(s, fit_count, range);
    if (*verify) return cmd_verify(s, suite, blocks, size, verify_point);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const UnsupportedModel& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const UncertifiableTail& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ConvergenceError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace specsum::cli
