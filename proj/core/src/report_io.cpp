#include <cmath>

#include <nlohmann/json.hpp>

#include "drunkcop/lemmas.hpp"
#include "drunkcop/monte_carlo.hpp"

namespace drunkcop {

using nlohmann::json;

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string report_to_json(const SimulationReport& r) {
  json doc;
  doc["trials"] = r.trials;
  doc["mean"] = r.mean;
  doc["std_error"] = r.std_error;
  doc["min"] = r.min;
  doc["max"] = r.max;
  doc["truncated"] = r.truncated;
  doc["master_seed"] = r.master_seed;
  doc["histogram"] = {{"lo", r.histogram.lo},
                      {"bucket_width", r.histogram.bucket_width},
                      {"counts", r.histogram.counts}};
  if (r.stage_means) {
    doc["stage_means"] = *r.stage_means;
    doc["mean_d1"] = r.mean_d1 ? json(*r.mean_d1) : json(nullptr);
    doc["mean_d2"] = r.mean_d2 ? json(*r.mean_d2) : json(nullptr);
    doc["d1_samples"] = r.d1_samples;
    doc["d2_samples"] = r.d2_samples;
  }
  return doc.dump(2);
}

SimulationReport report_from_json(std::string_view text) {
  const json doc = json::parse(text);
  SimulationReport r;
  r.trials = doc.at("trials").get<std::int64_t>();
  r.mean = doc.at("mean").get<double>();
  r.std_error = doc.at("std_error").get<double>();
  r.min = doc.at("min").get<std::int64_t>();
  r.max = doc.at("max").get<std::int64_t>();
  r.truncated = doc.at("truncated").get<std::int64_t>();
  r.master_seed = doc.at("master_seed").get<std::uint64_t>();
  const json& h = doc.at("histogram");
  r.histogram.lo = h.at("lo").get<std::int64_t>();
  r.histogram.bucket_width = h.at("bucket_width").get<std::int64_t>();
  r.histogram.counts = h.at("counts").get<std::vector<std::int64_t>>();
  if (doc.contains("stage_means")) {
    r.stage_means = doc.at("stage_means").get<std::array<double, 4>>();
    if (!doc.at("mean_d1").is_null()) r.mean_d1 = doc.at("mean_d1").get<double>();
    if (!doc.at("mean_d2").is_null()) r.mean_d2 = doc.at("mean_d2").get<double>();
    r.d1_samples = doc.at("d1_samples").get<std::int64_t>();
    r.d2_samples = doc.at("d2_samples").get<std::int64_t>();
  }
  return r;
}

std::string LemmaReport::to_json() const {
  json doc;
  doc["lemma"] = lemma;
  doc["domain"] = domain;
  doc["worst_margin"] = finite_or_null(worst_margin);
  doc["pass"] = pass;
  doc["cases"] = cases;
  doc["log_base"] = log_base;
  if (counterexample) {
    json edges = json::array();
    for (const Edge& e : counterexample->edges) edges.push_back({e.u, e.v});
    doc["counterexample"] = {{"n", counterexample->n},
                             {"edges", edges},
                             {"witness", counterexample->witness},
                             {"margin", counterexample->margin}};
  }
  return doc.dump(2);
}

LemmaReport LemmaReport::from_json(std::string_view text) {
  const json doc = json::parse(text);
  LemmaReport r;
  r.lemma = doc.at("lemma").get<std::string>();
  r.domain = doc.at("domain").get<std::string>();
  r.worst_margin = doc.at("worst_margin").is_null()
                       ? std::numeric_limits<double>::infinity()
                       : doc.at("worst_margin").get<double>();
  r.pass = doc.at("pass").get<bool>();
  r.cases = doc.at("cases").get<std::int64_t>();
  r.log_base = doc.at("log_base").get<std::string>();
  if (doc.contains("counterexample")) {
    const json& cx = doc.at("counterexample");
    Counterexample out;
    out.n = cx.at("n").get<int>();
    for (const auto& e : cx.at("edges")) out.edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    out.witness = cx.at("witness").get<std::string>();
    out.margin = cx.at("margin").get<double>();
    r.counterexample = std::move(out);
  }
  return r;
}

}  // namespace drunkcop
