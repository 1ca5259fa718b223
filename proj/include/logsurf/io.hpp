#pragma once

#include "logsurf/birational.hpp"
#include "logsurf/boundary.hpp"
#include "logsurf/catalog.hpp"
#include "logsurf/lattice.hpp"
#include "logsurf/zariski.hpp"

#include <json.hpp>

#include <filesystem>

namespace logsurf::io {

using Json = nlohmann::ordered_json;

// Readers throw InputError on malformed documents.

CurveConfig config_from_json(const Json& j);
Json to_json(const CurveConfig& config);

QDivisor divisor_from_json(const Json& j);
Json to_json(const QDivisor& d);

std::vector<BlowupStep> script_from_json(const Json& j);
Json to_json(const std::vector<BlowupStep>& script);

/// {"base": config, "steps": script, "top": config}. "top" is optional on
/// input; when present it must equal the replayed top.
History history_from_json(const Json& j);
Json to_json(const History& history);

Json to_json(const ZariskiResult& result);
Json to_json(const BoundarySplit& split);
Json to_json(const catalog::CatalogEntry& entry);
Json to_json(const std::vector<catalog::Table1Row>& rows);

Json read_json_file(const std::filesystem::path& path);

} // namespace logsurf::io
