#pragma once

#include "dc1lab/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace dc1lab::cli {

struct InputFile {
    std::string flag;
    std::filesystem::path path;
    std::string sha256;
    std::string content;
};

/// Manifest identity: tool version, the command with input files replaced by
/// content hashes, and those hashes. Output paths and wall-clock live next to
/// it in run.json and do not enter the hash.
struct Manifest {
    std::vector<std::string> command;
    std::vector<InputFile> inputs;

    nlohmann::ordered_json identity() const;
    std::string hash() const;
};

std::string persist(const Manifest& m, const std::vector<Artifact>& artifacts, const std::string& out_path);

struct StoredRun {
    std::string hash;
    std::vector<std::string> command;  // input placeholders resolved to stored copies
    std::vector<Artifact> artifacts;
};

/// Loads and integrity-checks a store entry (IntegrityError on mismatch).
StoredRun load_stored(const std::string& hash);

}  // namespace dc1lab::cli
