#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "besovcap/besov.hpp"
#include "besovcap/capacity.hpp"
#include "besovcap/grid.hpp"
#include "besovcap/limits.hpp"
#include "besovcap/modulus.hpp"
#include "besovcap/rearrange.hpp"

namespace besovcap {

/// %.17g: shortest text that round-trips an IEEE double exactly.
std::string format_double(double v);

/// FNV-1a 64-bit, used as the provenance hash of the effective config.
std::uint64_t fnv1a(const std::string& text);
std::string hash_hex(std::uint64_t h);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Grid function text format: header lines (format tag, dim, spacing,
/// origin, extents) followed by samples in row-major order, last axis
/// fastest. Doubles are written with 17 significant digits, so write/read
/// round-trips bit-exactly. Origins must sit on the lattice.
std::string grid_function_to_text(const GridFunction& f);
GridFunction grid_function_from_text(const std::string& text);
void write_grid_function(const std::string& path, const GridFunction& f);
GridFunction read_grid_function(const std::string& path);

std::string curve_to_csv(const ModulusCurve& curve, std::uint64_t config_hash);
std::string profile_to_csv(const RearrangementProfile& profile, std::uint64_t config_hash);
std::string besov_to_json(const std::vector<BesovEvaluation>& per_axis, std::uint64_t config_hash);
std::string estimates_to_json(const std::vector<CapacityEstimate>& estimates,
                              std::uint64_t config_hash);
std::string sweep_to_csv(const SweepResult& sweep, std::uint64_t config_hash);
std::string sweep_to_json(const SweepResult& sweep, std::uint64_t config_hash);

} // namespace besovcap
