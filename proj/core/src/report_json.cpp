#include "acr/report_json.hpp"

#include <json.hpp>

#include "acr/errors.hpp"

namespace acr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_vector(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& e : v) out.push_back(to_string(e));
  return out;
}

ordered_json index_vector_1based(const std::vector<std::size_t>& v) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

ordered_json witness_json(const MinorWitness& w) {
  ordered_json out;
  out["cols"] = index_vector_1based(w.cols);
  out["minor"] = w.value.to_string();
  return out;
}

std::string verdict_word(bool local_acr) { return local_acr ? "YES" : "NO"; }

}  // namespace

ReportSummary summarize(const AnalysisReport& report) {
  ReportSummary s;
  s.schema = 1;
  s.source = report.source;
  s.n = report.n;
  s.r = report.r;
  s.s = report.s;
  s.d = report.d;
  s.nondegeneracy = to_string(report.nondegeneracy.status);
  for (const SpeciesFinding& f : report.findings) {
    s.verdicts.emplace_back(f.name, verdict_word(f.acr.local_acr));
    s.divisibility.push_back(to_string(f.divisibility.status));
  }
  return s;
}

std::string report_to_json(const AnalysisReport& report) {
  ordered_json j;
  j["schema"] = 1;
  j["source"] = report.source;
  j["n"] = report.n;
  j["r"] = report.r;
  j["s"] = report.s;
  j["d"] = report.d;
  j["species"] = report.species;
  j["rates"] = report.rates;

  ordered_json cone;
  ordered_json rays = ordered_json::array();
  for (const auto& ray : report.rays.rays) rays.push_back(rational_vector(ray));
  cone["rays"] = std::move(rays);
  cone["has_positive_point"] = report.rays.has_positive_point;
  j["cone"] = std::move(cone);

  if (report.convex) {
    ordered_json basis = ordered_json::array();
    for (std::size_t t = 0; t < report.convex->basis.rows(); ++t)
      basis.push_back(rational_vector(report.convex->basis.row(t)));
    j["kernel_basis"] = std::move(basis);
  }

  j["nondegeneracy"] = to_string(report.nondegeneracy.status);
  ordered_json detail;
  detail["stage"] = to_string(report.nondegeneracy.stage);
  detail["seed"] = report.nondegeneracy.seed;
  detail["samples"] = report.nondegeneracy.samples;
  if (report.nondegeneracy.certificate)
    detail["certificate"] = witness_json(*report.nondegeneracy.certificate);
  if (report.nondegeneracy.counterexample)
    detail["counterexample"] = rational_vector(*report.nondegeneracy.counterexample);
  j["nondegeneracy_detail"] = std::move(detail);

  ordered_json findings = ordered_json::array();
  for (const SpeciesFinding& f : report.findings) {
    ordered_json fj;
    fj["species"] = f.name;
    fj["local_acr"] = verdict_word(f.acr.local_acr);
    fj["minors_checked"] = f.acr.minors_checked;
    if (f.acr.nonzero_minor) fj["witness"] = witness_json(*f.acr.nonzero_minor);
    ordered_json dj;
    dj["status"] = to_string(f.divisibility.status);
    dj["informative"] = f.divisibility.informative;
    if (f.divisibility.p) dj["p"] = f.divisibility.p->to_string();
    if (!f.divisibility.note.empty()) dj["note"] = f.divisibility.note;
    fj["divisibility"] = std::move(dj);
    fj["zero_sensitivity_implied"] = f.zero_sensitivity_implied;
    findings.push_back(std::move(fj));
  }
  j["findings"] = std::move(findings);
  j["notes"] = report.notes;
  return j.dump();
}

ReportSummary summary_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("report parse: ") + e.what());
  }
  try {
    ReportSummary s;
    s.schema = j.at("schema").get<int>();
    if (s.schema != 1)
      throw Error("report parse: unsupported schema " + std::to_string(s.schema));
    s.source = j.at("source").get<std::string>();
    s.n = j.at("n").get<std::uint64_t>();
    s.r = j.at("r").get<std::uint64_t>();
    s.s = j.at("s").get<std::uint64_t>();
    s.d = j.at("d").get<std::uint64_t>();
    s.nondegeneracy = j.at("nondegeneracy").get<std::string>();
    for (const auto& f : j.at("findings")) {
      s.verdicts.emplace_back(f.at("species").get<std::string>(),
                              f.at("local_acr").get<std::string>());
      s.divisibility.push_back(f.at("divisibility").at("status").get<std::string>());
    }
    return s;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("report parse: ") + e.what());
  }
}

}  // namespace acr
