#include "kerncalc/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace kerncalc::io {

std::string read_text(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

MeasuredSpace KernelDocument::space() const {
  if (measure) return MeasuredSpace(kernel.points(), *measure);
  return MeasuredSpace::uniform(kernel.points());
}

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ParseError("expected a number, got " + j.dump());
}

namespace {

std::vector<std::string> labels_from(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_string()) throw ParseError(std::string("labels in '") + key + "' must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("expected " + std::to_string(rows) + " matrix rows");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = number_from(row[c]);
      if (!std::isfinite(v)) throw ParseError("matrix entries must be finite");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(number(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

Vector vector_from(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("expected " + std::to_string(n) + " values");
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = number_from(j[i]);
  return v;
}

PointSet point_set_from(std::vector<std::string> labels) {
  try {
    return PointSet(std::move(labels));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

KernelDocument parse_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(ss, line))
    if (!trim(line).empty()) rows.push_back(split_csv_line(line));
  if (rows.empty()) throw ParseError("empty CSV document");
  PointSet points = point_set_from(rows.front());
  const std::size_t n = points.size();
  if (rows.size() != n + 1) throw ParseError("CSV kernel needs one row per label");
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r + 1].size() != n) throw ParseError("CSV row " + std::to_string(r + 1) + " has the wrong width");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cell = rows[r + 1][c];
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw ParseError("bad CSV number '" + cell + "'");
      }
      if (used != cell.size() || !std::isfinite(v)) throw ParseError("bad CSV number '" + cell + "'");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return KernelDocument{Kernel(std::move(points), std::move(m)), std::nullopt};
}

template <class T, class F>
T parse_guard(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json optional_witness(const std::optional<Witness>& w, const PointSet& points) {
  return w ? to_json(*w, points) : json(nullptr);
}

std::optional<Witness> optional_witness_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return witness_from_json(j);
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }
std::optional<double> optional_number_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return number_from(j);
}

json optional_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }
std::optional<bool> optional_bool_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

}  // namespace

KernelDocument kernel_document_from_json(const json& j) {
  return parse_guard<KernelDocument>([&] {
    if (!j.is_object()) throw ParseError("kernel document must be a JSON object");
    PointSet points = point_set_from(labels_from(j, "points"));
    const std::size_t n = points.size();
    if (!j.contains("values")) throw ParseError("missing 'values'");
    Matrix m = matrix_from(j.at("values"), n, n);
    KernelDocument doc{Kernel(std::move(points), std::move(m)), std::nullopt};
    if (j.contains("measure") && !j.at("measure").is_null()) {
      doc.measure = vector_from(j.at("measure"), n);
      doc.space();
    }
    return doc;
  });
}

KernelDocument parse_kernel_document(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input");
  if (text[first] != '{') return parse_csv(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return kernel_document_from_json(j);
}

json to_json(const Kernel& k) {
  json j;
  j["points"] = k.points().labels();
  j["values"] = matrix_to_json(k.values());
  return j;
}

json to_json(const Kernel& k, const MeasuredSpace& m) {
  json j = to_json(k);
  j["measure"] = vector_to_json(m.weights());
  return j;
}

json to_json(const KernelDocument& doc) {
  json j = to_json(doc.kernel);
  if (doc.measure) j["measure"] = vector_to_json(*doc.measure);
  return j;
}

json to_json(const Bridge& b) {
  json j;
  j["x_points"] = b.x_points().labels();
  j["y_points"] = b.y_points().labels();
  j["values"] = matrix_to_json(b.values());
  return j;
}

Bridge bridge_from_json(const json& j, double tol) {
  auto [x, y, m] = parse_guard<std::tuple<PointSet, PointSet, Matrix>>([&] {
    if (!j.is_object()) throw ParseError("bridge document must be a JSON object");
    PointSet xs = point_set_from(labels_from(j, "x_points"));
    PointSet ys = point_set_from(labels_from(j, "y_points"));
    if (!j.contains("values")) throw ParseError("missing 'values'");
    Matrix v = matrix_from(j.at("values"), xs.size(), ys.size());
    return std::tuple<PointSet, PointSet, Matrix>{std::move(xs), std::move(ys), std::move(v)};
  });
  return validate_bridge(std::move(m), std::move(x), std::move(y), tol);
}

json to_json(const RealFunction& f) {
  json j;
  j["points"] = f.points().labels();
  j["values"] = vector_to_json(f.values());
  return j;
}

RealFunction function_from_json(const json& j) {
  return parse_guard<RealFunction>([&] {
    PointSet points = point_set_from(labels_from(j, "points"));
    Vector v = vector_from(j.at("values"), points.size());
    return RealFunction(std::move(points), std::move(v));
  });
}

json to_json(const Witness& w, const PointSet& points) {
  json j;
  j["indices"] = w.points;
  json labels = json::array();
  for (auto i : w.points) labels.push_back(points.label(i));
  j["labels"] = std::move(labels);
  j["magnitude"] = number(w.magnitude);
  return j;
}

Witness witness_from_json(const json& j) {
  return parse_guard<Witness>(
      [&] { return Witness{j.at("indices").get<std::vector<std::size_t>>(), number_from(j.at("magnitude"))}; });
}

json to_json(const ClassificationReport& r, const PointSet& points) {
  json j;
  j["points"] = points.labels();
  j["tol"] = number(r.tol);
  json conds = json::object(), wits = json::object();
  for (auto c : kAllConditions) {
    const std::string key(to_string(c));
    conds[key] = r.holds(c);
    wits[key] = optional_witness(r.witness(c), points);
  }
  j["conditions"] = std::move(conds);
  j["witnesses"] = std::move(wits);
  j["taxonomy"] = {{"distance", r.taxonomy.distance},         {"weak_metric", r.taxonomy.weak_metric},
                   {"multimetric", r.taxonomy.multimetric},   {"quasi_metric", r.taxonomy.quasi_metric},
                   {"pseudometric", r.taxonomy.pseudometric}, {"metric", r.taxonomy.metric}};
  return j;
}

std::pair<ClassificationReport, PointSet> classification_from_json(const json& j) {
  return parse_guard<std::pair<ClassificationReport, PointSet>>([&] {
    PointSet points = point_set_from(labels_from(j, "points"));
    ClassificationReport r;
    r.tol = number_from(j.at("tol"));
    for (auto c : kAllConditions) {
      const std::string key(to_string(c));
      r.conditions[static_cast<std::size_t>(c)] = j.at("conditions").at(key).get<bool>();
      r.witnesses[static_cast<std::size_t>(c)] = optional_witness_from(j.at("witnesses").at(key));
    }
    const auto& t = j.at("taxonomy");
    r.taxonomy = {t.at("distance").get<bool>(),     t.at("weak_metric").get<bool>(),
                  t.at("multimetric").get<bool>(),  t.at("quasi_metric").get<bool>(),
                  t.at("pseudometric").get<bool>(), t.at("metric").get<bool>()};
    return std::pair<ClassificationReport, PointSet>{std::move(r), std::move(points)};
  });
}

json to_json(const UniformCheck& u, const PointSet& points) {
  return {{"ok_first", u.ok_first},
          {"ok_second", u.ok_second},
          {"witness_first", optional_witness(u.witness_first, points)},
          {"witness_second", optional_witness(u.witness_second, points)}};
}

UniformCheck uniform_check_from_json(const json& j) {
  return parse_guard<UniformCheck>([&] {
    return UniformCheck{j.at("ok_first").get<bool>(), j.at("ok_second").get<bool>(),
                        optional_witness_from(j.at("witness_first")), optional_witness_from(j.at("witness_second"))};
  });
}

json to_json(const AlmostDistanceReport& r, const PointSet& points) {
  return {{"minimal_q", number(r.minimal_q)},
          {"minimal_q_witness", optional_witness(r.minimal_q_witness, points)},
          {"uniform_ok_at", optional_number(r.uniform_ok_at)},
          {"at_minimal_q", to_json(r.at_minimal_q, points)},
          {"right_dominated_scaled", optional_bool(r.right_dominated_scaled)},
          {"left_dominated_scaled", optional_bool(r.left_dominated_scaled)}};
}

AlmostDistanceReport almost_report_from_json(const json& j) {
  return parse_guard<AlmostDistanceReport>([&] {
    AlmostDistanceReport r;
    r.minimal_q = number_from(j.at("minimal_q"));
    r.minimal_q_witness = optional_witness_from(j.at("minimal_q_witness"));
    r.uniform_ok_at = optional_number_from(j.at("uniform_ok_at"));
    r.at_minimal_q = uniform_check_from_json(j.at("at_minimal_q"));
    r.right_dominated_scaled = optional_bool_from(j.at("right_dominated_scaled"));
    r.left_dominated_scaled = optional_bool_from(j.at("left_dominated_scaled"));
    return r;
  });
}

json to_json(const SeparationReport& r) {
  json grid = json::array(), profile = json::array();
  for (double e : r.eps_grid) grid.push_back(number(e));
  for (double c : r.c_profile) profile.push_back(number(c));
  return {{"eps_grid", std::move(grid)},
          {"c_profile", std::move(profile)},
          {"ell", number(r.ell)},
          {"L", number(r.L)},
          {"derived_bound_ok", r.derived_bound_ok},
          {"degenerate", r.degenerate}};
}

SeparationReport separation_from_json(const json& j) {
  return parse_guard<SeparationReport>([&] {
    SeparationReport r;
    for (const auto& e : j.at("eps_grid")) r.eps_grid.push_back(number_from(e));
    for (const auto& c : j.at("c_profile")) r.c_profile.push_back(number_from(c));
    r.ell = number_from(j.at("ell"));
    r.L = number_from(j.at("L"));
    r.derived_bound_ok = j.at("derived_bound_ok").get<bool>();
    r.degenerate = j.at("degenerate").get<bool>();
    return r;
  });
}

json to_json(const BilipConstants& b) { return {{"ell", number(b.ell)}, {"L", number(b.L)}, {"u", number(b.u)}}; }

BilipConstants bilip_constants_from_json(const json& j) {
  return parse_guard<BilipConstants>(
      [&] { return BilipConstants{number_from(j.at("ell")), number_from(j.at("L")), number_from(j.at("u"))}; });
}

json to_json(const IvtCheck& r) {
  return {{"lip_of_kappa", number(r.lip_of_kappa)}, {"lip_inverse", number(r.lip_inverse)}};
}

IvtCheck ivt_from_json(const json& j) {
  return parse_guard<IvtCheck>(
      [&] { return IvtCheck{number_from(j.at("lip_of_kappa")), number_from(j.at("lip_inverse"))}; });
}

json to_json(const DiagonalSplit& s) {
  return {{"zero_diagonal", to_json(s.zero_diagonal)}, {"diagonal_part", to_json(s.diagonal_part)}};
}

DiagonalSplit diagonal_split_from_json(const json& j) {
  return parse_guard<DiagonalSplit>([&] {
    return DiagonalSplit{kernel_document_from_json(j.at("zero_diagonal")).kernel,
                         kernel_document_from_json(j.at("diagonal_part")).kernel};
  });
}

json to_json(const Quotient& q, const PointSet& original) {
  json classes = json::array();
  for (const auto& c : q.classes) {
    json members = json::array();
    for (auto x : c) members.push_back(original.label(x));
    classes.push_back(std::move(members));
  }
  json projection = json::array();
  for (auto c : q.class_of) projection.push_back(c);
  return {{"original_points", original.labels()},
          {"kernel", to_json(q.kernel)},
          {"classes", std::move(classes)},
          {"class_of", std::move(projection)}};
}

Quotient quotient_from_json(const json& j) {
  return parse_guard<Quotient>([&] {
    PointSet original = point_set_from(labels_from(j, "original_points"));
    Quotient q{kernel_document_from_json(j.at("kernel")).kernel, j.at("class_of").get<std::vector<std::size_t>>(), {}};
    for (const auto& members : j.at("classes")) {
      std::vector<std::size_t> c;
      for (const auto& l : members) c.push_back(original.index_of(l.get<std::string>()));
      q.classes.push_back(std::move(c));
    }
    return q;
  });
}

namespace {

json mask_to_json(PointMask mask, const PointSet& points) {
  json set = json::array();
  for (std::size_t i = 0; i < points.size(); ++i)
    if (mask & (PointMask{1} << i)) set.push_back(points.label(i));
  return set;
}

PointMask mask_from(const json& j, const PointSet& points) {
  PointMask m = 0;
  for (const auto& l : j) m |= PointMask{1} << points.index_of(l.get<std::string>());
  return m;
}

}  // namespace

json to_json(const KappaTopology& t, const PointSet& points) {
  json grid = json::array(), sub = json::array(), open = json::array();
  for (double e : t.eps_grid) grid.push_back(number(e));
  for (auto s : t.subbasis) sub.push_back(mask_to_json(s, points));
  for (auto s : t.open_sets) open.push_back(mask_to_json(s, points));
  return {{"points", points.labels()}, {"eps_grid", std::move(grid)}, {"subbasis", std::move(sub)},
          {"open_sets", std::move(open)}};
}

KappaTopology topology_from_json(const json& j) {
  return parse_guard<KappaTopology>([&] {
    PointSet points = point_set_from(labels_from(j, "points"));
    KappaTopology t;
    t.n = points.size();
    for (const auto& e : j.at("eps_grid")) t.eps_grid.push_back(number_from(e));
    for (const auto& s : j.at("subbasis")) t.subbasis.push_back(mask_from(s, points));
    for (const auto& s : j.at("open_sets")) t.open_sets.push_back(mask_from(s, points));
    return t;
  });
}

json embedding_to_json(const Embedding& e, const Kernel& rho) {
  return {{"points", e.space.points().labels()},
          {"measure", vector_to_json(e.space.weights())},
          {"coords", matrix_to_json(e.coords)},
          {"rho", matrix_to_json(rho.values())}};
}

std::pair<Embedding, Kernel> embedding_from_json(const json& j) {
  return parse_guard<std::pair<Embedding, Kernel>>([&] {
    PointSet points = point_set_from(labels_from(j, "points"));
    const std::size_t n = points.size();
    MeasuredSpace space(points, vector_from(j.at("measure"), n));
    Matrix coords = matrix_from(j.at("coords"), n, n);
    Kernel rho(points, matrix_from(j.at("rho"), n, n));
    return std::pair<Embedding, Kernel>{Embedding{std::move(space), std::move(coords)}, std::move(rho)};
  });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kerncalc::io
