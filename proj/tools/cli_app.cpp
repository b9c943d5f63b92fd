#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "acr/analysis.hpp"
#include "acr/errors.hpp"
#include "acr/parser.hpp"
#include "acr/polynomialize.hpp"
#include "acr/report_json.hpp"
#include "acr/sensitivity.hpp"

namespace acr::cli {
namespace {

namespace fs = std::filesystem;

struct Palette {
  bool on = false;
  const char* bold() const { return on ? "\x1b[1m" : ""; }
  const char* green() const { return on ? "\x1b[32m" : ""; }
  const char* red() const { return on ? "\x1b[31m" : ""; }
  const char* yellow() const { return on ? "\x1b[33m" : ""; }
  const char* off() const { return on ? "\x1b[0m" : ""; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Directories expand to their *.crn files, sorted by path; explicit files
// keep their command-line order.
std::vector<std::string> collect_inputs(const std::vector<std::string>& paths,
                                        std::vector<std::string>& missing) {
  std::vector<std::string> files;
  for (const std::string& p : paths) {
    std::error_code ec;
    fs::path fp(p);
    if (fs::is_directory(fp, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::recursive_directory_iterator(fp, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".crn")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(fp, ec)) {
      files.push_back(p);
    } else {
      missing.push_back(p);
    }
  }
  return files;
}

std::string rational_tuple(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string index_set_1based(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i] + 1);
  }
  return s + "}";
}

void render_text(const AnalysisReport& rep, std::ostream& out, const Palette& pal) {
  out << pal.bold() << "== " << rep.source << " ==" << pal.off() << "\n";
  out << "n=" << rep.n << " species, r=" << rep.r << " reactions, s=" << rep.s
      << ", d=" << rep.d << "\n";
  out << "flux cone: " << rep.rays.rays.size() << " extreme ray"
      << (rep.rays.rays.size() == 1 ? "" : "s") << ", positive point: "
      << (rep.rays.has_positive_point ? "yes" : "no") << "\n";

  const auto& nd = rep.nondegeneracy;
  const char* color = nd.status == NondegStatus::Certified ? pal.green()
                      : nd.status == NondegStatus::Fails   ? pal.red()
                                                           : pal.yellow();
  out << "nondegeneracy: " << color << to_string(nd.status) << pal.off();
  if (nd.stage != NondegStage::None) out << " (" << to_string(nd.stage) << ")";
  if (nd.stage == NondegStage::Sampling)
    out << " [seed " << nd.seed << ", " << nd.samples << " samples]";
  out << "\n";
  if (nd.certificate)
    out << "  certificate minor, cols " << index_set_1based(nd.certificate->cols) << ": "
        << nd.certificate->value.to_string() << "\n";
  if (nd.counterexample)
    out << "  rank drops at v = " << rational_tuple(*nd.counterexample) << "\n";

  if (!rep.findings.empty()) {
    std::size_t w = 7;
    for (const auto& f : rep.findings) w = std::max(w, f.name.size());
    out << std::left << std::setw(static_cast<int>(w) + 2) << "species"
        << std::setw(11) << "local_acr" << "divisibility\n";
    for (const auto& f : rep.findings) {
      const char* vcol = f.acr.local_acr ? pal.green() : "";
      out << std::setw(static_cast<int>(w) + 2) << f.name << vcol << std::setw(11)
          << (f.acr.local_acr ? "YES" : "NO") << pal.off() << to_string(f.divisibility.status)
          << "\n";
      if (f.acr.nonzero_minor)
        out << "  witness minor, cols " << index_set_1based(f.acr.nonzero_minor->cols) << ": "
            << f.acr.nonzero_minor->value.to_string() << "\n";
    }
  }
  if (!rep.notes.empty()) {
    out << "notes:\n";
    for (const auto& note : rep.notes) out << "  - " << note << "\n";
  }
}

std::string render_parse_error(const ParseError& e) {
  std::ostringstream os;
  os << e.what();
  if (!e.snippet().empty()) os << "\n  | " << e.snippet();
  return os.str();
}

nlohmann::ordered_json error_entry(const std::string& source, const std::string& message) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["source"] = source;
  j["error"] = message;
  return j;
}

struct ScanOptions {
  std::vector<std::string> paths;
  std::string format = "text";
  std::uint64_t seed = 0;
  int samples = 64;
};

int do_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err,
            const Palette& pal) {
  std::vector<std::string> missing;
  std::vector<std::string> files = collect_inputs(opt.paths, missing);
  const bool json = opt.format == "json";
  bool input_error = !missing.empty();
  bool internal_error = false;
  std::vector<std::string> entries;

  for (const std::string& p : missing) {
    if (json)
      entries.push_back(error_entry(p, "cannot read input").dump());
    else
      err << p << ": cannot read input\n";
  }

  for (const std::string& file : files) {
    std::string rendered_error;
    bool internal = false;
    try {
      ParsedInput parsed = parse_input(read_file(file));
      PowerLawSystem sys = build_from_input(parsed);
      AnalysisReport report = analyze(sys, opt.seed, opt.samples, file);
      if (json)
        entries.push_back(report_to_json(report));
      else
        render_text(report, out, pal);
      continue;
    } catch (const ParseError& e) {
      rendered_error = render_parse_error(e);
    } catch (const DomainError& e) {
      rendered_error = e.what();
    } catch (const DimensionError& e) {
      rendered_error = e.what();
    } catch (const std::exception& e) {
      rendered_error = std::string("internal error: ") + e.what();
      internal = true;
    }
    (internal ? internal_error : input_error) = true;
    if (json)
      entries.push_back(error_entry(file, rendered_error).dump());
    else
      err << pal.red() << file << ": " << pal.off() << rendered_error << "\n";
  }

  if (json) {
    out << "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out << ",";
      out << entries[i];
    }
    out << "]\n";
  }
  return internal_error ? 2 : input_error ? 1 : 0;
}

struct SensOptions {
  std::string path;
  std::string points_file;
  std::vector<std::string> kvals, xvals;
  std::string species;
  double admission_tol = kAdmissionTol;
  double rank_tol = kRankTol;
};

struct PointSpec {
  std::vector<Rational> k, x;
  std::size_t line = 0;
};

// Lines `k: <r rationals> x: <n rationals>`; '#' comments and blank lines
// are skipped.
std::vector<PointSpec> parse_points(const std::string& text, std::size_t r, std::size_t n) {
  std::vector<PointSpec> points;
  std::istringstream ss(text);
  std::string line;
  std::size_t ln = 0;
  while (std::getline(ss, line)) {
    ++ln;
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (std::size_t i = 0; i < body.size();) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      tokens.emplace_back(body.substr(start, i - start), start + 1);
    }
    if (tokens.empty()) continue;

    PointSpec pt;
    pt.line = ln;
    std::size_t idx = 0;
    auto take_block = [&](const char* tag, std::size_t count, std::vector<Rational>& dst) {
      if (idx >= tokens.size() || tokens[idx].first != tag)
        throw ParseError(std::string("expected '") + tag + "'",
                         ln, idx < tokens.size() ? tokens[idx].second : body.size() + 1, line);
      ++idx;
      for (std::size_t t = 0; t < count; ++t) {
        if (idx >= tokens.size())
          throw ParseError(std::string("expected ") + std::to_string(count) +
                               " values after '" + tag + "'",
                           ln, body.size() + 1, line);
        auto v = parse_rational(tokens[idx].first);
        if (!v)
          throw ParseError("bad rational '" + tokens[idx].first + "'", ln, tokens[idx].second,
                           line);
        dst.push_back(*v);
        ++idx;
      }
    };
    take_block("k:", r, pt.k);
    take_block("x:", n, pt.x);
    if (idx != tokens.size())
      throw ParseError("trailing input after point", ln, tokens[idx].second, line);
    points.push_back(std::move(pt));
  }
  return points;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& raw,
                                          const char* flag) {
  std::vector<Rational> out;
  for (const std::string& s : raw) {
    auto v = parse_rational(s);
    if (!v) throw DomainError(std::string(flag) + ": bad rational '" + s + "'");
    out.push_back(*v);
  }
  return out;
}

int do_sensitivity(const SensOptions& opt, std::ostream& out, std::ostream& err,
                   const Palette& pal) {
  PowerLawSystem sys;
  try {
    sys = build_from_input(parse_input(read_file(opt.path)));
  } catch (const ParseError& e) {
    err << pal.red() << opt.path << ": " << pal.off() << render_parse_error(e) << "\n";
    return 1;
  } catch (const Error& e) {
    err << pal.red() << opt.path << ": " << pal.off() << e.what() << "\n";
    return 1;
  }

  std::optional<std::size_t> species_filter;
  if (!opt.species.empty()) {
    auto it = std::find(sys.species.begin(), sys.species.end(), opt.species);
    if (it == sys.species.end()) {
      err << "unknown species '" << opt.species << "'\n";
      return 1;
    }
    species_filter = static_cast<std::size_t>(it - sys.species.begin());
  }

  std::vector<PointSpec> points;
  if (!opt.points_file.empty()) {
    try {
      points = parse_points(read_file(opt.points_file), sys.r, sys.n);
    } catch (const ParseError& e) {
      err << pal.red() << opt.points_file << ": " << pal.off() << render_parse_error(e)
          << "\n";
      return 1;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return 1;
    }
  }
  if (!opt.kvals.empty() || !opt.xvals.empty()) {
    try {
      PointSpec pt;
      pt.k = parse_rational_list(opt.kvals, "--k");
      pt.x = parse_rational_list(opt.xvals, "--x");
      if (pt.k.size() != sys.r || pt.x.size() != sys.n) {
        err << "--k needs " << sys.r << " values and --x needs " << sys.n << "\n";
        return 1;
      }
      points.push_back(std::move(pt));
    } catch (const Error& e) {
      err << e.what() << "\n";
      return 1;
    }
  }
  if (points.empty()) {
    err << "no points given: use --points FILE or --k ... --x ...\n";
    return 1;
  }

  const std::size_t d = sys.has_w ? sys.W.rows() : 0;
  std::size_t succeeded = 0;
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    out << pal.bold() << "point " << pi + 1 << pal.off() << ": k=" << rational_tuple(points[pi].k)
        << " x=" << rational_tuple(points[pi].x) << "\n";
    SteadyStatePoint pt;
    try {
      pt = make_point(sys, points[pi].k, points[pi].x, opt.admission_tol);
    } catch (const Error& e) {
      out << "  " << pal.red() << "rejected:" << pal.off() << " " << e.what() << "\n";
      continue;
    }
    out << "  admitted (residual " << pt.residual << ")\n";

    Degeneracy deg = classify_degeneracy(sys, pt, std::nullopt, opt.rank_tol);
    out << "  degeneracy: " << to_string(deg) << (deg.exact ? " [exact]" : "") << "\n";

    if (sys.s == sys.n) {
      out << "  no conserved totals: all sensitivities vacuously zero (finite fibers)\n";
      ++succeeded;
      continue;
    }
    if (!sys.has_w) {
      out << "  no conservation matrix: sensitivity skipped\n";
      continue;
    }
    if (deg.degenerate_wrt_s.value_or(true)) {
      out << "  " << pal.red() << "degenerate with respect to its compatibility class:"
          << pal.off() << " sensitivities undefined here\n";
      continue;
    }

    std::vector<SensitivityVector> canon;
    try {
      for (std::size_t j = 0; j < d; ++j)
        canon.push_back(sensitivity_canonical(sys, pt, j));
    } catch (const Error& e) {
      out << "  " << pal.red() << "failed:" << pal.off() << " " << e.what() << "\n";
      continue;
    }

    std::size_t w = 7;
    for (const auto& name : sys.species) w = std::max(w, name.size());
    out << "  " << std::left << std::setw(static_cast<int>(w) + 2) << "species";
    for (std::size_t j = 0; j < d; ++j) out << std::setw(14) << ("dT" + std::to_string(j + 1));
    out << "zero_sensitivity\n";
    for (std::size_t i = 0; i < sys.n; ++i) {
      if (species_filter && *species_filter != i) continue;
      out << "  " << std::setw(static_cast<int>(w) + 2) << sys.species[i];
      for (std::size_t j = 0; j < d; ++j) {
        std::ostringstream cell;
        cell << std::setprecision(6) << canon[j].values[i];
        out << std::setw(14) << cell.str();
      }
      bool zs = zero_sensitivity_test(sys, pt, i, std::nullopt, opt.rank_tol);
      out << (zs ? pal.green() : "") << (zs ? "yes" : "no") << pal.off() << "\n";
    }
    ++succeeded;
  }
  return succeeded > 0 ? 0 : 1;
}

int do_polynomialize(const std::string& path, std::ostream& out, std::ostream& err,
                     const Palette& pal) {
  try {
    PowerLawSystem sys = build_from_input(parse_input(read_file(path)));
    PolynomializedSystem p = polynomialize(as_gen_poly(sys));
    out << pal.bold() << "== " << path << " ==" << pal.off() << "\n";
    out << "m = (";
    for (std::size_t j = 0; j < p.m.size(); ++j)
      out << (j ? ", " : "") << p.m[j].str();
    out << ")\n";
    for (std::size_t i = 0; i < p.beta.rows(); ++i) {
      out << "beta " << i + 1 << " = (";
      for (std::size_t j = 0; j < p.beta.cols(); ++j)
        out << (j ? ", " : "") << to_string(p.beta(i, j));
      out << ")\n";
    }
    for (std::size_t i = 0; i < p.gtilde.size(); ++i)
      out << "gtilde " << i + 1 << " = " << p.gtilde[i].to_string() << "\n";
    if (p.identity)
      out << "transform is the identity: exponents were already non-negative integers\n";
    return 0;
  } catch (const ParseError& e) {
    err << pal.red() << path << ": " << pal.off() << render_parse_error(e) << "\n";
    return 1;
  } catch (const Error& e) {
    err << pal.red() << path << ": " << pal.off() << e.what() << "\n";
    return 1;
  }
}

const std::map<std::string, std::string>& explain_topics() {
  static const std::map<std::string, std::string> topics = {
      {"verdicts",
       "local_acr YES for a coordinate means: for every choice of positive rate constants,\n"
       "that coordinate is constant on each connected component of the positive steady-state\n"
       "set. The check is exact linear algebra: every maximal minor of the steady-state\n"
       "Jacobian, with that coordinate's column removed and the flux replaced by a generic\n"
       "kernel combination, must vanish identically. NO comes with a witness minor.\n"
       "If the positive steady-state set is connected, YES upgrades from a per-component\n"
       "statement to a single shared value; connectivity is not checked by this tool.\n"},
      {"nondegeneracy",
       "Verdicts about the substituted Jacobian keeping full rank s on the open flux cone:\n"
       "  CERTIFIED     a maximal minor has single-signed coefficients, so it cannot vanish\n"
       "                at positive arguments (found either in free flux coordinates or in\n"
       "                extreme-ray weights)\n"
       "  FAILS         the rank drops somewhere on the cone (witness vector reported);\n"
       "                minors vanishing identically count, as does an exact rank drop at a\n"
       "                sampled cone point\n"
       "  INCONCLUSIVE  neither shortcut fired and seeded sampling found no rank drop\n"
       "  EMPTY_CONE    no strictly positive steady-state flux exists at all\n"
       "When CERTIFIED, a YES verdict additionally forces zero sensitivity of that\n"
       "coordinate to perturbations of the conserved totals at every nondegenerate steady\n"
       "state.\n"},
      {"divisibility",
       "A quick necessary test. Form det [ M(a) diag(h) ; W ] where M(a) is the Jacobian\n"
       "with generic kernel flux, diag(h) scales the columns and W is the conservation\n"
       "matrix. If a coordinate is robust, its h-variable must divide this determinant.\n"
       "The converse is false: divisibility can hold without robustness (rank drops can\n"
       "fake it), so 'divides' is only a screening hint; 'does-not-divide' refutes.\n"},
      {"sensitivity",
       "For an admitted steady state (relative residual at most 1e-9), the sensitivity\n"
       "vectors dx*/dT_j describe how the state moves when one conserved total is\n"
       "perturbed. They are computed two ways (cofactor ratios and a linear solve) that\n"
       "must agree to 1e-9. zero_sensitivity reports the exact rank criterion: coordinate\n"
       "i is insensitive iff the Jacobian loses rank when column i is removed. Points\n"
       "degenerate with respect to their compatibility class are rejected: the defining\n"
       "linear system is singular there. Tolerances are artifact choices, overridable\n"
       "with --admission-tol and --rank-tol.\n"},
      {"formats",
       "Network files (*.crn): optional 'species: A, B, C' header, one reaction per line,\n"
       "'A + 2 B -> C ; k1' (rate name optional, '<=>' expands to two reactions, '0' is\n"
       "the empty complex), '#' comments. An optional trailing 'kinetics:' block of n x r\n"
       "rational exponents switches from mass-action to power-law kinetics.\n"
       "Raw-matrix files: 'N:' block (s x r coefficient rows), 'B:' block (n x r rational\n"
       "exponents), optional 'W:' block (conservation rows).\n"
       "Points files: lines 'k: <r rationals> x: <n rationals>'.\n"
       "JSON reports: one array, schema field 1, deterministic key order; identical input\n"
       "and seed give byte-identical bytes. Indices in reports are 1-based.\n"}};
  return topics;
}

int do_explain(const std::string& topic, std::ostream& out, std::ostream& err) {
  const auto& topics = explain_topics();
  if (topic.empty()) {
    out << "topics:\n";
    for (const auto& [name, text] : topics)
      out << "  " << name << "\n";
    out << "use: acr-scan explain <topic>\n";
    return 0;
  }
  auto it = topics.find(topic);
  if (it == topics.end()) {
    err << "unknown topic '" << topic << "'; try: acr-scan explain\n";
    return 1;
  }
  out << it->second;
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        bool allow_color) {
  Palette pal;
  const char* env = std::getenv("ACR_SCAN_COLOR");
  pal.on = allow_color && !(env && std::string(env) == "0");

  CLI::App app{"steady-state robustness scanner for power-law reaction systems"};
  app.require_subcommand(1);

  ScanOptions sopt;
  CLI::App* scan = app.add_subcommand(
      "scan", "Analyze networks or raw systems for robust coordinates");
  scan->add_option("paths", sopt.paths, "input files, or directories scanned for *.crn")
      ->required();
  scan->add_option("--format", sopt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  scan->add_option("--seed", sopt.seed, "seed for the nondegeneracy sampling stage")
      ->capture_default_str();
  scan->add_option("--samples", sopt.samples, "sample count for the sampling stage")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SensOptions nopt;
  CLI::App* sens = app.add_subcommand(
      "sensitivity", "sensitivity of steady states to the conserved totals");
  sens->add_option("input", nopt.path, "network or raw-matrix file")->required();
  sens->add_option("--points", nopt.points_file, "points file: 'k: ... x: ...' per line");
  sens->add_option("--k", nopt.kvals, "rate constants (comma separated rationals)")
      ->delimiter(',');
  sens->add_option("--x", nopt.xvals, "state (comma separated rationals)")->delimiter(',');
  sens->add_option("--species", nopt.species, "restrict the report to one species");
  sens->add_option("--admission-tol", nopt.admission_tol,
                   "relative residual bound for accepting a point")
      ->capture_default_str();
  sens->add_option("--rank-tol", nopt.rank_tol, "relative pivot threshold for rank decisions")
      ->capture_default_str();

  std::string poly_path;
  CLI::App* poly = app.add_subcommand(
      "polynomialize", "rewrite rational exponents as an integer-exponent system");
  poly->add_option("input", poly_path, "network or raw-matrix file")->required();

  std::string topic;
  CLI::App* explain = app.add_subcommand("explain", "describe report fields and file formats");
  explain->add_option("topic", topic, "one of the listed topics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*scan) return do_scan(sopt, out, err, pal);
    if (*sens) return do_sensitivity(nopt, out, err, pal);
    if (*poly) return do_polynomialize(poly_path, out, err, pal);
    if (*explain) return do_explain(topic, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace acr::cli
