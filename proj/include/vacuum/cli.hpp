#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vacuum/particles.hpp"

namespace vacuum::cli {

inline constexpr std::string_view tool_name = "vacuum-eps";
inline constexpr std::string_view tool_version = "0.1.0";

inline constexpr int exit_ok = 0;
inline constexpr int exit_computation_error = 1;
inline constexpr int exit_usage_error = 2;

/// Resolves --set: a built-in name, a path to a JSON particle document, or a
/// file name looked up in $VACUUM_EPS_PARTICLE_DIR (".json" optional).
ParticleSet resolve_particle_set(const std::string& name_or_path);

/// Parses "start:stop"; throws std::invalid_argument on malformed input.
std::pair<double, double> parse_range(std::string_view text);

/// Runs one command. args excludes the program name. Tables go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vacuum::cli
