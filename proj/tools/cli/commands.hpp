#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace circhad::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kInterrupted = 3,
    kInternalError = 4,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

struct VerifyOptions {
    std::string suite;
    std::size_t max_n = 0;  // 0 = suite default
    std::size_t n = 4;
    std::size_t m = 1;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::size_t max_t = 2;
};

struct VerifyResult {
    bool pass = false;
    std::vector<std::string> lines;  // human-readable detail, one finding per line
};

/// Names accepted by `verify`.
const std::vector<std::string>& verify_suites();

VerifyResult run_verify(const VerifyOptions& options);

}  // namespace circhad::cli
