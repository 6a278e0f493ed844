// Copyright 2026 The superadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "superadmm/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace superadmm {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

Json bound_to_json(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

double bound_from_json(const Json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    throw FormatError("bad bound string '" + s + "'");
  }
  if (!j.is_number()) throw FormatError("bound must be a number or inf/-inf");
  return j.get<double>();
}

Json matrix_to_json(const SparseMatrix& mat) {
  Json j;
  j["colptr"] = mat.colptr;
  j["rowidx"] = mat.rowidx;
  j["values"] = mat.values;
  return j;
}

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

template <typename T>
T get_as(const Json& doc, const char* key) {
  try {
    return field(doc, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad value for '") + key + "': " + e.what());
  }
}

SparseMatrix matrix_from_json(const Json& doc, const char* key, Index rows,
                              Index cols) {
  const Json& j = field(doc, key);
  if (!j.is_object()) throw FormatError(std::string(key) + " must be an object");
  SparseMatrix mat;
  mat.nrows = rows;
  mat.ncols = cols;
  mat.colptr = get_as<std::vector<Index>>(j, "colptr");
  mat.rowidx = get_as<std::vector<Index>>(j, "rowidx");
  mat.values = get_as<std::vector<double>>(j, "values");
  return mat;
}

std::vector<double> bounds_from_json(const Json& doc, const char* key) {
  const Json& j = field(doc, key);
  if (!j.is_array()) throw FormatError(std::string(key) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(bound_from_json(e));
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("JSON parse error: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

}  // namespace

std::string problem_to_string(const QpProblem& problem) {
  Json doc;
  doc["n"] = problem.n;
  doc["m"] = problem.m;
  doc["P"] = matrix_to_json(problem.P);
  doc["q"] = problem.q;
  doc["A"] = matrix_to_json(problem.A);
  Json l = Json::array();
  Json u = Json::array();
  for (double v : problem.l) l.push_back(bound_to_json(v));
  for (double v : problem.u) u.push_back(bound_to_json(v));
  doc["l"] = std::move(l);
  doc["u"] = std::move(u);
  return doc.dump(1) + "\n";
}

QpProblem problem_from_string(const std::string& text) {
  const Json doc = parse(text);
  if (!doc.is_object()) throw FormatError("problem file must be a JSON object");
  RawProblem raw;
  raw.n = get_as<Index>(doc, "n");
  raw.m = get_as<Index>(doc, "m");
  raw.P = matrix_from_json(doc, "P", raw.n, raw.n);
  raw.q = get_as<std::vector<double>>(doc, "q");
  raw.A = matrix_from_json(doc, "A", raw.m, raw.n);
  raw.l = bounds_from_json(doc, "l");
  raw.u = bounds_from_json(doc, "u");
  return validate_problem(std::move(raw));
}

void save_problem(const QpProblem& problem, const std::filesystem::path& path) {
  write_file(path, problem_to_string(problem));
}

QpProblem load_problem(const std::filesystem::path& path) {
  return problem_from_string(read_file(path));
}

std::string solution_to_string(const SolveResult& result) {
  Json doc;
  doc["status"] = std::string(to_string(result.status));
  doc["iterations"] = result.iterations;
  doc["r_prim"] = result.r_prim;
  doc["r_dual"] = result.r_dual;
  doc["runtime"] = result.runtime;
  doc["x"] = result.x;
  doc["y"] = result.y;
  return doc.dump(1) + "\n";
}

void save_solution(const SolveResult& result,
                   const std::filesystem::path& path) {
  write_file(path, solution_to_string(result));
}

WarmStart load_warm_start(const std::filesystem::path& path) {
  const Json doc = parse(read_file(path));
  WarmStart ws;
  ws.x = get_as<std::vector<double>>(doc, "x");
  ws.y = get_as<std::vector<double>>(doc, "y");
  return ws;
}

void write_trace(std::ostream& out, const std::vector<TraceRecord>& trace) {
  out << "k,r_prim,r_dual,eps,b,time_s\n";
  const auto old_precision = out.precision(17);
  for (const TraceRecord& t : trace) {
    out << t.k << ',' << t.r_prim << ',' << t.r_dual << ',' << t.eps << ','
        << t.b << ',' << t.time_s << '\n';
  }
  out.precision(old_precision);
}

void save_trace(const std::vector<TraceRecord>& trace,
                const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  write_trace(out, trace);
}

}  // namespace superadmm
