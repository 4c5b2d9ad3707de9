#pragma once

#include <filesystem>
#include <string>

#include "raincloud/render.hpp"
#include "raincloud/stats.hpp"

namespace raincloud {

/// Parses a JSON design document into a RaincloudSpec. Unknown keys are
/// rejected with the offending key named; absent optional keys take the
/// documented defaults. Throws ConfigError.
RaincloudSpec parse_spec_json(const std::string& text);

/// Canonical serialization; parse(serialize(spec)) yields an equal spec.
std::string spec_to_json(const RaincloudSpec& spec);

RaincloudSpec load_spec_file(const std::filesystem::path& path);

/// Column selection for CSV ingestion: a name (resolved against the header
/// row) or a 0-based index.
struct DataSource {
    std::filesystem::path path;
    std::string column = "0";
    char delimiter = ',';
};

/// Loads one numeric column. A non-numeric cell is a hard error naming the
/// 1-based line number. Throws ConfigError / IoError.
Sample load_csv(const DataSource& source);

}  // namespace raincloud
