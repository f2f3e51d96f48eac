#include "orbitgen/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace orbitgen {

namespace {

DeskLimits load_limits() {
  DeskLimits limits;
  if (const char* env = std::getenv(kBruteForceDegreeEnv)) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && *ptr == '\0' && value > 0)
      limits.brute_force_max_degree = value;
    else
      std::clog << "orbitgen: warning: ignoring malformed " << kBruteForceDegreeEnv << "='" << env
                << "'\n";
  }
  return limits;
}

DeskLimits& limits_storage() {
  static DeskLimits limits = load_limits();
  return limits;
}

std::mutex sink_mutex;
WarningSink& sink_storage() {
  static WarningSink sink = [](std::string_view msg) {
    std::clog << "orbitgen: warning: " << msg << '\n';
  };
  return sink;
}

} // namespace

const DeskLimits& desk_limits() { return limits_storage(); }

void set_desk_limits(const DeskLimits& limits) { limits_storage() = limits; }

void set_warning_sink(WarningSink sink) {
  std::lock_guard lock(sink_mutex);
  sink_storage() = std::move(sink);
}

void warn(std::string_view message) {
  std::lock_guard lock(sink_mutex);
  if (sink_storage())
    sink_storage()(message);
}

} // namespace orbitgen
