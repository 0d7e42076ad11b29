#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace idec::cli {

/// Command-line flags that override config values.
struct Overrides {
    bool allow_non_well_centered = false;
    bool direct_solver = false;
    std::optional<std::filesystem::path> output_dir;
};

/// Each command returns the process exit status; progress goes to `log`,
/// failures to `err`.
int cmd_run(const std::filesystem::path& config, const Overrides& overrides, std::ostream& log, std::ostream& err);
int cmd_check_mesh(const std::filesystem::path& obj, const Overrides& overrides, std::ostream& log, std::ostream& err);
int cmd_stability(const std::filesystem::path& config, const Overrides& overrides, std::ostream& log,
                  std::ostream& err);
int cmd_convergence(const std::filesystem::path& config, const Overrides& overrides, std::ostream& log,
                    std::ostream& err);

} // namespace idec::cli
