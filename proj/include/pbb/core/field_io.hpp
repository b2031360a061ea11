#pragma once

/// @file
/// @brief Field serialization: human-readable CSV and the PBF1 binary format.
///
/// PBF1 is little-endian: magic "PBF1", u32 header words (layout tag, DG
/// order, components, dimension, grid shape), f64 grid extents, then a u32
/// value count followed by f64 payload (complex dof interleaved re, im).

#include <filesystem>
#include <string>

#include "pbb/core/field.hpp"

namespace pbb {

/// Optional metadata rows (config_digest, tool_version) follow the version
/// row when nonempty; the reader skips them.
void write_field_csv(const Field& field, const std::filesystem::path& path,
                     const std::string& config_digest = "", const std::string& tool_version = "");
Field read_field_csv(const std::filesystem::path& path);

void write_field_binary(const Field& field, const std::filesystem::path& path);
Field read_field_binary(const std::filesystem::path& path);

}  // namespace pbb
