#ifndef ORBITGEN_LIMITS_HPP
#define ORBITGEN_LIMITS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitgen {

/// Bounds on the brute-force paths (loops over S_n, over a whole group, or
/// over a box of vectors). The degree bound can be overridden with the
/// ORBITGEN_BRUTE_FORCE_MAX_DEGREE environment variable.
struct DeskLimits {
  std::size_t brute_force_max_degree = 9;
  std::uint64_t element_stream_max = 10'000'000;
  std::uint64_t box_max = 100'000'000;
};

inline constexpr const char* kBruteForceDegreeEnv = "ORBITGEN_BRUTE_FORCE_MAX_DEGREE";

const DeskLimits& desk_limits();
void set_desk_limits(const DeskLimits& limits);

class LimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Cost warnings go through this sink; the default writes to std::clog.
using WarningSink = std::function<void(std::string_view)>;
void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

} // namespace orbitgen

#endif // ORBITGEN_LIMITS_HPP
