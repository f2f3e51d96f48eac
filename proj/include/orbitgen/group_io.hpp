#ifndef ORBITGEN_GROUP_IO_HPP
#define ORBITGEN_GROUP_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "orbitgen/group.hpp"

namespace orbitgen {

/// Group text format (see docs/formats.md):
///
///   degree 5
///   (1,2,3,4,5)
///   (2,3,5,4)
///
/// Blank lines and lines starting with '#' are ignored. The first remaining
/// line must be "degree N"; every later line is one generator in cycle
/// notation. Errors carry the 1-based line number.
PermutationGroup parse_group_text(std::string_view text);

PermutationGroup load_group_file(const std::filesystem::path& path);

std::string format_group_text(const PermutationGroup& group);

} // namespace orbitgen

#endif // ORBITGEN_GROUP_IO_HPP
