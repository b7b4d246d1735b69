// Copyright 2026 The qbochner Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbochner/io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qbochner/error.hpp"

namespace qbochner::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string("expected a number for ") + what);
  return j.get<double>();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
  const std::string t = trim(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    bad("not a number: '" + t + "'");
  }
  if (used != t.size()) bad("not a number: '" + t + "'");
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

void write_comment(std::ostream& os, const std::string& comment) {
  if (!comment.empty()) os << "# " << comment << '\n';
}

}  // namespace

Json to_json(const Quaterniond& q) { return Json::array({q.q0, q.q1, q.q2, q.q3}); }

Json to_json(const ImaginaryQuaterniond& x) { return Json::array({x(0), x(1), x(2)}); }

Json to_json(const ImaginaryAtomicMeasure& gamma) {
  Json atoms = Json::array();
  for (const auto& a : gamma.atoms) atoms.push_back({{"x", to_json(a.x)}, {"w", a.w}});
  return {{"atoms", atoms}};
}

Json to_json(const SliceMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms) atoms.push_back({{"r", a.r}, {"v", to_json(a.v)}});
  return {{"atoms", atoms}};
}

Json to_json(const QMatrixd& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const QVectord& x) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(to_json(x(i)));
  return out;
}

Quaterniond quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("quaternion must be a 4-array");
  return Quaterniond(number(j[0], "q0"), number(j[1], "q1"), number(j[2], "q2"), number(j[3], "q3"));
}

ImaginaryQuaterniond imaginary_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("imaginary quaternion must be a 3-array");
  return ImaginaryQuaterniond(number(j[0], "x1"), number(j[1], "x2"), number(j[2], "x3"));
}

ImaginaryAtomicMeasure gamma_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) bad("measure needs an \"atoms\" array");
  ImaginaryAtomicMeasure g;
  for (const auto& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("x") || !a.contains("w")) bad("Gamma atom needs \"x\" and \"w\"");
    g.atoms.push_back({imaginary_from_json(a["x"]), number(a["w"], "w")});
  }
  return g;
}

SliceMeasure slice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) bad("measure needs an \"atoms\" array");
  SliceMeasure mu;
  for (const auto& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("r") || !a.contains("v")) bad("slice atom needs \"r\" and \"v\"");
    mu.atoms.push_back({number(a["r"], "r"), quaternion_from_json(a["v"])});
  }
  return mu;
}

QMatrixd qmatrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(j[0].size());
  QMatrixd a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) bad("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) a(i, c) = quaternion_from_json(row[static_cast<std::size_t>(c)]);
  }
  return a;
}

QVectord qvector_from_json(const Json& j) {
  if (!j.is_array()) bad("vector must be an array of quaternions");
  QVectord x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) x(static_cast<Eigen::Index>(i)) = quaternion_from_json(j[i]);
  return x;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  const auto tokens = split(text, ',');
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string tok = trim(tokens[i]);
    if (tok != "...") {
      out.push_back(parse_double(tok));
      if (!std::isfinite(out.back())) bad("list values must be finite");
      continue;
    }
    if (out.size() < 2 || i + 1 >= tokens.size()) bad("'...' needs two values before it and one after");
    const double start = out.back();
    const double step = start - out[out.size() - 2];
    const double stop = parse_double(tokens[++i]);
    if (!(step > 0.0) || stop < start) bad("'...' needs an increasing progression");
    const double count = std::round((stop - start) / step);
    if (std::abs(start + count * step - stop) > 1e-9 * std::max(1.0, std::abs(stop)))
      bad("'...' end point is not on the progression");
    for (int k = 1; k < static_cast<int>(count); ++k) out.push_back(start + k * step);
    if (count >= 1.0) out.push_back(stop);
  }
  if (out.empty()) bad("empty number list");
  return out;
}

void write_samples_csv(std::ostream& os, const std::vector<FitSample>& samples, const std::string& comment) {
  write_comment(os, comment);
  os << "t,q0,q1,q2,q3\n";
  for (const auto& s : samples) {
    os << format_double(s.t) << ',' << format_double(s.value.q0) << ',' << format_double(s.value.q1) << ','
       << format_double(s.value.q2) << ',' << format_double(s.value.q3) << '\n';
  }
}

std::vector<FitSample> read_samples_csv(std::istream& is) {
  std::vector<FitSample> out;
  std::string line;
  bool first_data = true;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto cells = split(t, ',');
    if (first_data && !cells.empty() && trim(cells[0]) == "t") {
      first_data = false;
      continue;
    }
    first_data = false;
    if (cells.size() != 5) bad("samples CSV rows need 5 columns: t,q0,q1,q2,q3");
    out.push_back({parse_double(cells[0]), Quaterniond(parse_double(cells[1]), parse_double(cells[2]),
                                                       parse_double(cells[3]), parse_double(cells[4]))});
  }
  return out;
}

void write_ensemble_csv(std::ostream& os, const ProcessEnsemble& ens, const std::string& comment) {
  write_comment(os, comment);
  os << "path,t,q0,q1,q2,q3\n";
  for (Eigen::Index p = 0; p < ens.values.rows(); ++p) {
    for (Eigen::Index j = 0; j < ens.values.cols(); ++j) {
      const Quaterniond& q = ens.values(p, j);
      os << p << ',' << format_double(ens.spec.times[static_cast<std::size_t>(j)]) << ',' << format_double(q.q0)
         << ',' << format_double(q.q1) << ',' << format_double(q.q2) << ',' << format_double(q.q3) << '\n';
    }
  }
}

void write_autocov_csv(std::ostream& os, const std::vector<AutocovPoint>& points, const std::string& comment) {
  write_comment(os, comment);
  os << "lag,q0,q1,q2,q3\n";
  for (const auto& p : points) {
    os << format_double(p.lag) << ',' << format_double(p.value.q0) << ',' << format_double(p.value.q1) << ','
       << format_double(p.value.q2) << ',' << format_double(p.value.q3) << '\n';
  }
}

}  // namespace qbochner::io
