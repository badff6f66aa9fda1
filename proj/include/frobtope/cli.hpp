#ifndef FROBTOPE_CLI_HPP
#define FROBTOPE_CLI_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace frobtope::cli {

enum class Command { info, fvector, facets, faces, gram, verify };
enum class Format { json, text };

inline constexpr int exit_ok = 0;
inline constexpr int exit_parse_error = 1;
inline constexpr int exit_not_frobenius = 2;
inline constexpr int exit_cap_exceeded = 3;
inline constexpr int exit_verify_failed = 4;

inline constexpr std::size_t default_facet_listing = 1000;
inline constexpr std::size_t default_face_listing = 10000;

struct RunConfig
{
  std::string group_spec;
  Command command = Command::info;
  Format format = Format::json;
  std::optional<long long> dim;
  bool all = false;
  /// Overrides the listing cap for facets/faces and the vertex cap for verify.
  std::optional<std::size_t> cap;
  std::optional<std::string> output_path;
};

struct RunResult
{
  int exit_code = exit_ok;
  std::string output;
  std::string error;
};

RunResult run(RunConfig const &config);

/// Parses argv-style arguments (without the program name) and runs.
RunResult run_args(std::vector<std::string> const &args);

} // namespace frobtope::cli

#endif // FROBTOPE_CLI_HPP
