#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dc1lab::cli {

inline constexpr const char* tool_version = "0.1.0";

struct Artifact {
    std::string name;
    std::string content;
};

/// Exit status 0 on success (including inconclusive results), 1 on library
/// errors, 2 on usage errors.
struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
    std::vector<Artifact> artifacts;
    std::string store_hash;  // set by --persist
};

/// Runs one command line (without the program name).
RunResult run(const std::vector<std::string>& args);

std::string sha256_hex(std::string_view data);

/// $DC1LAB_STORE, or .dc1lab-store in the working directory.
std::filesystem::path store_root();

}  // namespace dc1lab::cli
