// Copyright 2026 The Elotope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// File formats used by the command-line tool.
//
//   matrix JSON   {"dim": m, "kind": "payoff"|"advantage"|"selection", "rows": [[...], ...]}
//   match log     sequence,i,j,winner            (0-based players)
//   trajectory    step,r_0,...,r_{m-1}
//   elotope       source,r_0,...,r_{m-1}
//   experiment    family,t,games_per_pair,trial,i_truth,i_hat
//   truth curve   family,t,i_truth
//
// Doubles are written in shortest round-trip form, so reading a file back
// reproduces the in-memory values bit for bit.

#ifndef ELOTOPE_IO_HPP
#define ELOTOPE_IO_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "elotope/chain.hpp"
#include "elotope/errors.hpp"
#include "elotope/game.hpp"
#include "elotope/hodge.hpp"
#include "elotope/intransitivity.hpp"
#include "elotope/rps_lab.hpp"
#include "elotope/solver.hpp"

namespace elotope::io {

using Json = nlohmann::ordered_json;

inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Matrix files

enum class MatrixKind { payoff, advantage, selection };

inline std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::payoff: return "payoff";
    case MatrixKind::advantage: return "advantage";
    case MatrixKind::selection: return "selection";
  }
  return "unknown";
}

struct MatrixFile {
  MatrixKind kind = MatrixKind::payoff;
  Matrix rows;
};

inline Json matrix_rows_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string matrix_to_json(MatrixKind kind, const Matrix& m) {
  Json doc;
  doc["dim"] = m.rows();
  doc["kind"] = to_string(kind);
  doc["rows"] = matrix_rows_json(m);
  return doc.dump(2) + "\n";
}

/// Parses and validates shape and the kind-specific invariants.
inline MatrixFile parse_matrix_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("matrix file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("matrix file: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    throw ValidationError("matrix file: 'dim' must be a positive integer");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ValidationError("matrix file: 'kind' must be a string");
  if (!doc.contains("rows") || !doc["rows"].is_array())
    throw ValidationError("matrix file: 'rows' must be an array");

  MatrixFile file;
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "payoff") file.kind = MatrixKind::payoff;
  else if (kind == "advantage") file.kind = MatrixKind::advantage;
  else if (kind == "selection") file.kind = MatrixKind::selection;
  else throw ValidationError("matrix file: unknown kind '" + kind + "'");

  const auto m = doc["dim"].get<Index>();
  const Json& rows = doc["rows"];
  if (static_cast<Index>(rows.size()) != m)
    throw ValidationError("matrix file: 'rows' must have dim rows");
  file.rows.resize(m, m);
  for (Index i = 0; i < m; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != m)
      throw ValidationError("matrix file: row " + std::to_string(i) + " must have dim entries");
    for (Index j = 0; j < m; ++j) {
      const Json& x = row[static_cast<std::size_t>(j)];
      if (!x.is_number()) throw ValidationError("matrix file: entries must be numbers");
      file.rows(i, j) = x.get<double>();
    }
  }
  switch (file.kind) {
    case MatrixKind::payoff: (void)PayoffMatrix(file.rows); break;
    case MatrixKind::advantage: (void)SkewMatrix(file.rows); break;
    case MatrixKind::selection: (void)SelectionMatrix(file.rows); break;
  }
  return file;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline MatrixFile load_matrix(const std::filesystem::path& path) {
  return parse_matrix_json(read_file(path));
}

inline MatrixFile load_matrix(const std::filesystem::path& path, MatrixKind expected) {
  MatrixFile file = load_matrix(path);
  if (file.kind != expected)
    throw ValidationError("'" + path.string() + "' holds a " + std::string(to_string(file.kind)) +
                          " matrix, expected " + std::string(to_string(expected)));
  return file;
}

/// Writes to a sibling temporary file, then renames over `path`.
inline void atomic_write(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw ValidationError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ValidationError("cannot move output into place at '" + path.string() + "'");
  }
}

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::vector<std::string_view> split(std::string_view line, char sep = ',') {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s, const std::string& where) {
  s = trim(s);
  std::uint64_t value = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty())
    throw ValidationError(where + ": expected a nonnegative integer, got '" + std::string(s) + "'");
  return value;
}

inline double parse_double(std::string_view s, const std::string& where) {
  s = trim(s);
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty() || !std::isfinite(value))
    throw ValidationError(where + ": expected a number, got '" + std::string(s) + "'");
  return value;
}

inline std::string ratings_header(std::string_view first, Index m) {
  std::string out(first);
  for (Index i = 0; i < m; ++i) out += ",r_" + std::to_string(i);
  return out + "\n";
}

}  // namespace detail

inline constexpr std::string_view kMatchLogHeader = "sequence,i,j,winner";

inline std::string match_log_csv(const std::vector<MatchRecord>& records) {
  std::string out(kMatchLogHeader);
  out += '\n';
  for (const auto& r : records)
    out += std::to_string(r.sequence) + "," + std::to_string(r.player_i) + "," +
           std::to_string(r.player_j) + "," + std::to_string(r.winner) + "\n";
  return out;
}

/// Checks the header, winner membership and strictly increasing sequence
/// numbers. Player ranges are checked later against the player count.
inline std::vector<MatchRecord> parse_match_log(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || detail::trim(line) != kMatchLogHeader)
    throw ValidationError("match log: header must be '" + std::string(kMatchLogHeader) + "'");
  std::vector<MatchRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    const std::string where = "match log line " + std::to_string(lineno);
    const auto fields = detail::split(line);
    if (fields.size() != 4) throw ValidationError(where + ": expected 4 fields");
    MatchRecord r;
    r.sequence = detail::parse_uint(fields[0], where);
    r.player_i = detail::parse_uint(fields[1], where);
    r.player_j = detail::parse_uint(fields[2], where);
    r.winner = detail::parse_uint(fields[3], where);
    if (r.player_i == r.player_j) throw ValidationError(where + ": i and j must differ");
    if (r.winner != r.player_i && r.winner != r.player_j)
      throw ValidationError(where + ": winner must be i or j");
    if (!records.empty() && r.sequence <= records.back().sequence)
      throw ValidationError(where + ": sequence numbers must be strictly increasing");
    records.push_back(r);
  }
  return records;
}

inline std::string trajectory_csv(const Trajectory& traj, Index m) {
  std::string out = detail::ratings_header("step", m);
  for (const auto& s : traj.states) {
    out += std::to_string(s.step);
    for (Index i = 0; i < s.ratings.size(); ++i) out += "," + format_double(s.ratings(i));
    out += '\n';
  }
  return out;
}

inline std::string elotope_csv(const ElotopeSample& sample, Index m) {
  std::string out = detail::ratings_header("source", m);
  for (std::size_t k = 0; k < sample.points.size(); ++k) {
    out += sample.sources[k].describe();
    const Vector& r = sample.points[k].values();
    for (Index i = 0; i < r.size(); ++i) out += "," + format_double(r(i));
    out += '\n';
  }
  return out;
}

inline std::string experiment_csv(const std::vector<rps::ExperimentRow>& rows) {
  std::string out = "family,t,games_per_pair,trial,i_truth,i_hat\n";
  for (const auto& r : rows)
    out += std::string(rps::to_string(r.family)) + "," + format_double(r.t) + "," +
           std::to_string(r.games_per_pair) + "," + std::to_string(r.trial) + "," +
           format_double(r.i_truth) + "," + format_double(r.i_hat) + "\n";
  return out;
}

inline std::string truth_curve_csv(const std::vector<rps::TruthRow>& rows) {
  std::string out = "family,t,i_truth\n";
  for (const auto& r : rows)
    out += std::string(rps::to_string(r.family)) + "," + format_double(r.t) + "," +
           format_double(r.i_truth) + "\n";
  return out;
}

/// "start:step:end" (inclusive end), a comma-separated list, or one value.
inline std::vector<double> parse_grid(std::string_view text) {
  const auto colon = detail::split(text, ':');
  std::vector<double> out;
  if (colon.size() == 3) {
    const double start = detail::parse_double(colon[0], "grid start");
    const double step = detail::parse_double(colon[1], "grid step");
    const double end = detail::parse_double(colon[2], "grid end");
    if (!(step > 0.0)) throw ValidationError("grid: step must be positive");
    if (end < start) throw ValidationError("grid: end must not precede start");
    const auto n = static_cast<std::int64_t>(std::floor((end - start) / step + 1e-9)) + 1;
    if (n > 1000000) throw ValidationError("grid: too many points");
    for (std::int64_t k = 0; k < n; ++k) {
      // Snap to 12 decimals so 0:0.05:0.95 yields 0.15, not 0.15000000000000002.
      const double x = start + static_cast<double>(k) * step;
      out.push_back(std::round(x * 1e12) / 1e12);
    }
    return out;
  }
  if (colon.size() != 1) throw ValidationError("grid: expected start:step:end or a comma list");
  for (auto item : detail::split(text, ',')) out.push_back(detail::parse_double(item, "grid value"));
  return out;
}

inline std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto item : detail::split(text, ',')) out.push_back(detail::parse_uint(item, "list value"));
  return out;
}

// ---------------------------------------------------------------------------
// JSON reports

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline Json to_json(const SolveReport& report) {
  Json out;
  out["solution"] = to_json(report.solution.values());
  out["residual_norm"] = report.residual_norm;
  out["iterations"] = report.iterations;
  out["method"] = to_string(report.method);
  out["converged"] = report.converged;
  return out;
}

inline Json to_json(const IntransitivityReport& report) {
  Json out;
  out["measure"] = report.measure;
  out["transitive_norm"] = report.transitive_norm;
  out["cyclic_norm"] = report.cyclic_norm;
  out["classification"] = to_string(report.classification);
  return out;
}

inline Json decomposition_json(const SkewMatrix& a, double stacm_tol) {
  const HodgeParts parts = hodge_decompose(a);
  Json out;
  out["transitive"] = matrix_rows_json(parts.transitive.matrix());
  out["cyclic"] = matrix_rows_json(parts.cyclic.matrix());
  out["transitive_norm"] = frobenius_norm(parts.transitive);
  out["cyclic_norm"] = frobenius_norm(parts.cyclic);
  out["is_stacm"] = frobenius_norm(parts.cyclic) <= stacm_tol;
  return out;
}

}  // namespace elotope::io

#endif  // ELOTOPE_IO_HPP
