#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qnetmax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `qnetmax` tool. `args` excludes the program name.
/// `env_seed` carries QNETMAX_SEED when set; it is used only when --seed is
/// absent. Reports go to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_seed = std::nullopt);

}  // namespace qnetmax::cli
