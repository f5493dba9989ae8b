#include "mcp1d/serde.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcp1d {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// JSON has no literal for non-finite values; encode them as strings.
json json_num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ += ',';
    out_ += columns[i];
  }
  out_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ += ',';
    out_ += format_double(values[i]);
  }
  out_ += '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ += ',';
    out_ += values[i];
  }
  out_ += '\n';
}

json to_json(const IntervalSet& E) {
  json arr = json::array();
  for (const Interval& iv : E.intervals()) arr.push_back({iv.l, iv.r});
  return arr;
}

IntervalSet interval_set_from_json(const json& j) {
  std::vector<Interval> intervals;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("interval set: expected [l, r] pairs");
    intervals.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return IntervalSet(std::move(intervals));
}

json to_json(const McpViolation& v) {
  json j;
  j["x0"] = v.x0;
  j["x1"] = v.x1;
  j["t"] = v.t;
  j["lhs"] = json_num(v.lhs);
  j["rhs"] = json_num(v.rhs);
  j["margin"] = json_num(v.margin);
  return j;
}

json to_json(const McpReport& r) {
  json j;
  j["pass"] = r.pass;
  j["grid_n"] = r.grid_n;
  j["slack"] = r.slack;
  j["worst_margin"] = json_num(r.worst_margin);
  j["refined_margin"] = json_num(r.refined_margin);
  j["violation_count"] = r.violation_count;
  json arr = json::array();
  for (const McpViolation& v : r.violations) arr.push_back(to_json(v));
  j["violations"] = std::move(arr);
  return j;
}

json to_json(const NeedleDecomposition& dec) {
  json j;
  j["params"] = {{"K", dec.params.K}, {"N", dec.params.N}, {"D", dec.params.D}};
  j["delta"] = dec.delta;
  j["residual_mass"] = dec.residual_mass;
  json needles = json::array();
  for (const Needle& q : dec.needles) {
    json n;
    n["weight"] = q.weight;
    n["length"] = q.length;
    if (q.density.kind == DensityKind::ClosedFormModel) {
      n["density"] = {{"kind", "model"}, {"a", q.density.a}};
    } else {
      n["density"] = {{"kind", "tabulated"}, {"x", q.density.x}, {"h", q.density.h}};
    }
    n["trace"] = to_json(q.trace);
    n["ball_trace"] = to_json(q.ball_trace);
    if (q.center_distance) n["center_distance"] = *q.center_distance;
    needles.push_back(std::move(n));
  }
  j["needles"] = std::move(needles);
  return j;
}

NeedleDecomposition decomposition_from_json(const json& j) {
  const json& p = j.at("params");
  const CurvatureParams params(p.at("K").get<double>(), p.at("N").get<double>(),
                               p.at("D").get<double>());
  NeedleDecomposition dec{params, j.at("delta").get<double>(),
                          j.at("residual_mass").get<double>(), {}};
  for (const auto& n : j.at("needles")) {
    Needle q;
    q.weight = n.at("weight").get<double>();
    q.length = n.at("length").get<double>();
    const json& d = n.at("density");
    const std::string kind = d.at("kind").get<std::string>();
    if (kind == "model") {
      q.density.kind = DensityKind::ClosedFormModel;
      q.density.a = d.at("a").get<double>();
    } else if (kind == "tabulated") {
      q.density.kind = DensityKind::TabulatedGrid;
      q.density.x = d.at("x").get<std::vector<double>>();
      q.density.h = d.at("h").get<std::vector<double>>();
    } else {
      throw std::invalid_argument("decomposition: unknown density kind " + kind);
    }
    q.trace = interval_set_from_json(n.at("trace"));
    if (n.contains("ball_trace"))
      q.ball_trace = interval_set_from_json(n.at("ball_trace"));
    if (n.contains("center_distance"))
      q.center_distance = n.at("center_distance").get<double>();
    dec.needles.push_back(std::move(q));
  }
  return dec;
}

json to_json(const LocalizedReport& r) {
  json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["pass"] = r.pass;
  j["flagged"] = r.flagged;
  j["weight_sum"] = r.weight_sum;
  j["residual_mass"] = r.residual_mass;
  j["c_measured"] = r.c_measured;
  j["q1_mass"] = r.q1_mass;
  return j;
}

json to_json(const TheoremReport& r) {
  json j;
  if (r.psi_eff) {
    j["psi_eff"] = *r.psi_eff;
  } else {
    j["psi_eff"] = nullptr;
  }
  j["delta"] = r.delta;
  j["mass"] = r.mass;
  j["content"] = r.content;
  j["bound"] = r.bound;
  j["skipped"] = r.skipped;
  j["pass"] = r.pass;
  json assumptions = json::object();
  for (const auto& [name, ok] : r.assumptions) assumptions[name] = ok;
  j["assumptions"] = std::move(assumptions);
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mcp1d
