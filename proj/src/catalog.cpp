#include "cuspgauge/catalog.hpp"

#include "cuspgauge/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cuspgauge {

namespace {

using nlohmann::json;

bool read_vec2(const json& j, Vec2& out) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) return false;
    out.x = j[0].get<double>();
    out.y = j[1].get<double>();
    return true;
}

// Throws InvalidInputError on any problem; the caller downgrades to a
// diagnostic unless strict.
CatalogRecord parse_record(const json& j) {
    if (!j.is_object()) throw InvalidInputError("record is not an object");
    CatalogRecord rec;
    if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty())
        throw InvalidInputError("record needs a nonempty string name");
    rec.name = j["name"].get<std::string>();
    if (!j.contains("cusps") || !j["cusps"].is_array() || j["cusps"].empty())
        throw InvalidInputError("record needs a nonempty cusps array");
    for (const json& jc : j["cusps"]) {
        if (!jc.is_object()) throw InvalidInputError("cusp entry is not an object");
        CuspLattice lat;
        if (!jc.contains("v1") || !read_vec2(jc["v1"], lat.v1))
            throw InvalidInputError("cusp v1 must be a pair of numbers");
        if (!jc.contains("v2") || !read_vec2(jc["v2"], lat.v2))
            throw InvalidInputError("cusp v2 must be a pair of numbers");
        if (jc.contains("claimed_maximal")) {
            if (!jc["claimed_maximal"].is_boolean())
                throw InvalidInputError("claimed_maximal must be a boolean");
            lat.claimed_maximal = jc["claimed_maximal"].get<bool>();
        }
        validate_lattice(lat);
        rec.cusps.push_back(lat);
    }
    if (j.contains("volume")) {
        if (!j["volume"].is_number()) throw InvalidInputError("volume must be a number");
        rec.volume = j["volume"].get<double>();
    }
    if (j.contains("gromov_norm")) {
        if (!j["gromov_norm"].is_number()) throw InvalidInputError("gromov_norm must be a number");
        rec.gromov_norm = j["gromov_norm"].get<double>();
    }
    if (rec.volume || rec.gromov_norm) {
        HyperbolicDatum datum;
        datum.volume = rec.volume ? *rec.volume : 0.0;
        datum.gromov_norm = rec.gromov_norm;
        if (rec.volume)
            validate_hyperbolic_datum(datum);
        else if (*rec.gromov_norm < 0.0)
            throw InvalidInputError("gromov_norm must be nonnegative");
    }
    return rec;
}

} // namespace

CatalogLoadResult parse_catalog(const std::string& json_text, bool strict) {
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) throw InvalidInputError("catalog is not valid JSON");
    if (!root.is_object()) throw InvalidInputError("catalog root must be an object");
    if (!root.contains("schema_version") || !root["schema_version"].is_number_integer())
        throw InvalidInputError("catalog needs an integer schema_version");
    const long long version = root["schema_version"].get<long long>();
    if (version != kCatalogSchemaVersion)
        throw InvalidInputError("unsupported catalog schema_version " + std::to_string(version) +
                                " (expected " + std::to_string(kCatalogSchemaVersion) + ")");
    if (!root.contains("records") || !root["records"].is_array())
        throw InvalidInputError("catalog needs a records array");

    CatalogLoadResult out;
    std::set<std::string> seen;
    std::size_t index = 0;
    for (const json& j : root["records"]) {
        std::string label = "records[" + std::to_string(index++) + "]";
        try {
            CatalogRecord rec = parse_record(j);
            if (!seen.insert(rec.name).second)
                throw InvalidInputError("duplicate record name '" + rec.name + "'");
            out.records.push_back(std::move(rec));
        } catch (const InvalidInputError& e) {
            if (strict) throw InvalidInputError(label + ": " + e.what());
            out.diagnostics.push_back(label + ": " + e.what() + " (record skipped)");
        }
    }
    return out;
}

CatalogLoadResult load_catalog(const std::string& path, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot read catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str(), strict);
}

const CatalogRecord& find_record(const CatalogLoadResult& loaded, const std::string& name) {
    for (const CatalogRecord& rec : loaded.records)
        if (rec.name == name) return rec;
    throw InvalidInputError("catalog has no record named '" + name + "'");
}

} // namespace cuspgauge
