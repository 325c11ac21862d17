#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "rlab/core/path.hpp"

namespace rlab {

// Writes to `<path>.tmp.<pid>` and renames over `path`.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

// Columns t,x (and gamma when local_time is non-empty).
std::string path_csv(const SamplePath& path, const std::vector<double>& local_time = {});
std::string path_csv(const AugmentedPath& path);

nlohmann::json to_json(const BoundaryJump& jump);
nlohmann::json to_json(const EventLog& events);
EventLog event_log_from_json(const nlohmann::json& j);

}  // namespace rlab
