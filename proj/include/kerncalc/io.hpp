#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "kerncalc/algebra.hpp"
#include "kerncalc/almost.hpp"
#include "kerncalc/bridge.hpp"
#include "kerncalc/classify.hpp"
#include "kerncalc/hilbert.hpp"
#include "kerncalc/separation.hpp"
#include "kerncalc/topology.hpp"

namespace kerncalc::io {

using nlohmann::json;

/// Thrown for unreadable files and malformed documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a whole file; "-" reads `stdin_stream`.
std::string read_text(const std::string& path, std::istream& stdin_stream);

/// A kernel file: {"points": [...], "values": [[...]], "measure": [...]?}.
struct KernelDocument {
  Kernel kernel;
  std::optional<Vector> measure;

  /// The stored measure, or uniform weights when none was given.
  MeasuredSpace space() const;
};

/// Accepts the JSON schema or CSV (header row of labels, then n rows of n values).
KernelDocument parse_kernel_document(const std::string& text);

json number(double v);
double number_from(const json& j);

json to_json(const Kernel& k);
json to_json(const Kernel& k, const MeasuredSpace& m);
json to_json(const KernelDocument& doc);
KernelDocument kernel_document_from_json(const json& j);

/// {"x_points": [...], "y_points": [...], "values": [[...]]}.
json to_json(const Bridge& b);
Bridge bridge_from_json(const json& j, double tol = kDefaultTol);

/// {"points": [...], "values": [...]}.
json to_json(const RealFunction& f);
RealFunction function_from_json(const json& j);

json to_json(const Witness& w, const PointSet& points);
Witness witness_from_json(const json& j);

json to_json(const ClassificationReport& r, const PointSet& points);
std::pair<ClassificationReport, PointSet> classification_from_json(const json& j);

json to_json(const UniformCheck& u, const PointSet& points);
UniformCheck uniform_check_from_json(const json& j);

json to_json(const AlmostDistanceReport& r, const PointSet& points);
AlmostDistanceReport almost_report_from_json(const json& j);

json to_json(const SeparationReport& r);
SeparationReport separation_from_json(const json& j);

json to_json(const BilipConstants& b);
BilipConstants bilip_constants_from_json(const json& j);

json to_json(const IvtCheck& r);
IvtCheck ivt_from_json(const json& j);

json to_json(const DiagonalSplit& s);
DiagonalSplit diagonal_split_from_json(const json& j);

json to_json(const Quotient& q, const PointSet& original);
Quotient quotient_from_json(const json& j);

json to_json(const KappaTopology& t, const PointSet& points);
KappaTopology topology_from_json(const json& j);

/// {"points", "measure", "coords", "rho"}.
json embedding_to_json(const Embedding& e, const Kernel& rho);
std::pair<Embedding, Kernel> embedding_from_json(const json& j);

/// Serialised with the fixed layout used by every emitter (2-space indent).
std::string dump(const json& j);

}  // namespace kerncalc::io
