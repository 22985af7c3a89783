#pragma once

#include "cuspgauge/bounds.hpp"
#include "cuspgauge/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cuspgauge {

inline constexpr int kCatalogSchemaVersion = 1;

// One manifold record: named cusp cross-section data plus optional
// hyperbolic volume / Gromov norm (validated against volume = v3 * norm).
struct CatalogRecord {
    std::string name;
    std::vector<CuspLattice> cusps;
    std::optional<double> volume;
    std::optional<double> gromov_norm;
};

struct CatalogLoadResult {
    std::vector<CatalogRecord> records;
    std::vector<std::string> diagnostics;  // one line per skipped record
};

// Loads a schema_version 1 catalog (see docs/formats.md). Malformed JSON or
// wrong schema_version throws InvalidInputError. Per-record validation
// failures skip the record with a diagnostic, or throw when strict.
CatalogLoadResult load_catalog(const std::string& path, bool strict);
CatalogLoadResult parse_catalog(const std::string& json_text, bool strict);

const CatalogRecord& find_record(const CatalogLoadResult& loaded, const std::string& name);

} // namespace cuspgauge
