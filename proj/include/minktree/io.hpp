#pragma once

#include "minktree/lowdeg.hpp"
#include "minktree/mst.hpp"
#include "minktree/packing.hpp"
#include "minktree/pointset.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace minktree {

using OrderedJson = nlohmann::ordered_json;

// Canonical number encoding: exact integers as JSON integers, other exact
// rationals as strings ("0.5", "1/3"), floating values as shortest
// round-trip doubles. Parsing maps JSON integers and strings to the exact
// path and JSON floats to the floating path.
OrderedJson scalarToJson(const Scalar& s);
Scalar scalarFromJson(const nlohmann::json& j);

PointSet pointSetFromJsonText(const std::string& text);
PointSet pointSetFromCsvText(const std::string& text);
/// Dispatches on the .csv extension, JSON otherwise.
PointSet loadPointSet(const std::string& path);
/// Canonical serialization; parse/serialize round-trips byte-identically.
std::string pointSetToJsonText(const PointSet& s);

OrderedJson treeToJson(const Tree& t);
std::vector<std::pair<int, int>> treeEdgesFromJson(const nlohmann::json& j);

OrderedJson degreeReportToJson(const DegreeReport& r);
OrderedJson enumerationToJson(const EnumerationResult& r);
OrderedJson traceToJson(const PerturbationTrace& trace);

OrderedJson certificateToJson(const PackingCertificate& cert);
PackingCertificate certificateFromJsonText(const std::string& text);
OrderedJson searchResultToJson(const SearchResult& r);
OrderedJson knownValuesToJson();

/// Deterministic SVG of a planar instance: points, optional tree edges,
/// optional unit-ball outline centered at a vertex (ballCenter < 0 disables
/// it). Throws UnsupportedError unless dim == 2.
std::string renderSvg(const PointSet& s, const Tree* tree, const Norm* ballNorm,
                      int ballCenter = -1);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

}  // namespace minktree
