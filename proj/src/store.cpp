#include "store.hpp"

#include "dc1lab/errors.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace dc1lab::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

fs::path store_root() {
    if (const char* env = std::getenv("DC1LAB_STORE"); env != nullptr && *env != '\0') return env;
    return ".dc1lab-store";
}

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IntegrityError("missing store file " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw InputError("cannot write " + p.string());
    out << content;
}

}  // namespace

Json Manifest::identity() const {
    Json in = Json::array();
    for (const auto& f : inputs) in.push_back({{"flag", f.flag}, {"sha256", f.sha256}});
    return {{"tool", "dc1lab"}, {"version", tool_version}, {"command", command}, {"inputs", in}};
}

std::string Manifest::hash() const { return sha256_hex(identity().dump()); }

std::string persist(const Manifest& m, const std::vector<Artifact>& artifacts, const std::string& out_path) {
    const std::string h = m.hash();
    const fs::path dir = store_root() / h;
    Json arts = Json::array();
    for (const auto& a : artifacts) arts.push_back({{"name", a.name}, {"sha256", sha256_hex(a.content)}});
    if (fs::exists(dir / "manifest.json")) {
        const StoredRun existing = load_stored(h);
        (void)existing;
        return h;
    }
    write_file(dir / "manifest.json", m.identity().dump(2) + "\n");
    for (const auto& f : m.inputs) write_file(dir / "inputs" / f.sha256, f.content);
    for (const auto& a : artifacts) write_file(dir / "artifacts" / a.name, a.content);
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    Json run = {{"artifacts", arts},
                {"output_path", out_path},
                {"wall_clock_unix", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    write_file(dir / "run.json", run.dump(2) + "\n");
    return h;
}

StoredRun load_stored(const std::string& hash) {
    const fs::path dir = store_root() / hash;
    if (!fs::exists(dir)) throw InputError("no store entry " + hash + " under " + store_root().string());
    Json manifest, run;
    try {
        manifest = Json::parse(read_file(dir / "manifest.json"));
        run = Json::parse(read_file(dir / "run.json"));
    } catch (const Json::exception& e) {
        throw IntegrityError("store entry " + hash + " is unreadable: " + e.what());
    }
    if (sha256_hex(manifest.dump()) != hash) throw IntegrityError("manifest of " + hash + " does not match its hash");

    StoredRun out;
    out.hash = hash;
    std::map<std::string, std::string> placeholder;
    for (const auto& f : manifest.at("inputs")) {
        const std::string sha = f.at("sha256");
        const fs::path copy = dir / "inputs" / sha;
        if (sha256_hex(read_file(copy)) != sha) throw IntegrityError("stored input " + sha + " is corrupted");
        placeholder["@sha256:" + sha] = copy.string();
    }
    for (const auto& tok : manifest.at("command")) {
        const std::string t = tok;
        auto it = placeholder.find(t);
        out.command.push_back(it == placeholder.end() ? t : it->second);
    }
    for (const auto& a : run.at("artifacts")) {
        const std::string name = a.at("name");
        std::string content = read_file(dir / "artifacts" / name);
        if (sha256_hex(content) != a.at("sha256").get<std::string>())
            throw IntegrityError("stored artifact " + name + " is corrupted");
        out.artifacts.push_back({name, std::move(content)});
    }
    return out;
}

}  // namespace dc1lab::cli
