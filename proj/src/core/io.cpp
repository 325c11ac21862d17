#include "rlab/core/io.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rlab {

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("rename to " + path.string() + " failed: " + ec.message());
  }
}

std::string path_csv(const SamplePath& path, const std::vector<double>& local_time) {
  const bool with_gamma = !local_time.empty();
  std::ostringstream os;
  os.precision(17);
  os << (with_gamma ? "t,x,gamma\n" : "t,x\n");
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    os << path.times[i] << ',' << path.values[i];
    if (with_gamma) os << ',' << local_time[i];
    os << '\n';
  }
  return os.str();
}

std::string path_csv(const AugmentedPath& path) { return path_csv(path.path, path.local_time); }

nlohmann::json to_json(const BoundaryJump& jump) {
  return {{"time", jump.time}, {"size", jump.size}, {"local_time", jump.local_time}};
}

nlohmann::json to_json(const EventLog& events) {
  nlohmann::json jumps = nlohmann::json::array();
  for (const auto& j : events.boundary_jumps) jumps.push_back(to_json(j));
  return {{"reset_times", events.reset_times},
          {"pre_reset_positions", events.pre_reset_positions},
          {"boundary_jumps", jumps}};
}

EventLog event_log_from_json(const nlohmann::json& j) {
  EventLog ev;
  ev.reset_times = j.at("reset_times").get<std::vector<double>>();
  ev.pre_reset_positions = j.at("pre_reset_positions").get<std::vector<double>>();
  for (const auto& b : j.at("boundary_jumps")) {
    ev.boundary_jumps.push_back({b.at("time").get<double>(), b.at("size").get<double>(),
                                 b.value("local_time", 0.0)});
  }
  return ev;
}

}  // namespace rlab
