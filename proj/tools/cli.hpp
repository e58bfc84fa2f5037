#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cryptsteg::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kTestFailed = 1,  // keystream-test ran but a statistic was out of bounds
  kUsage = 2,
  kCapacityOrFormat = 3,
  kExtractionFailed = 4,
};

inline constexpr const char* kCryptoKeyEnv = "CRYPTSTEG_CRYPTO_KEY";
inline constexpr const char* kStegoKeyEnv = "CRYPTSTEG_STEGO_KEY";

/// Runs one command line. args[0] is the program name. Binary payloads go
/// through `in` and `out` untouched.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cryptsteg::cli
