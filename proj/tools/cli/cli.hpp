#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace frames::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCertificateFailed = 2;

struct Environment {
  std::optional<std::string> frames_prime;  // FRAMES_PRIME
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Environment& env = {});

}  // namespace frames::cli
