#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ratpoly/normal_form.hpp"

namespace ratpoly {

// Raised when --resume state does not match the requested run.
struct resume_error : std::runtime_error {
    explicit resume_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown after a deliberate mid-run stop (--stop-after); the run can be
// continued with --resume. Not an error.
struct controlled_stop : std::exception {
    const char* what() const noexcept override { return "stopped at checkpoint"; }
};

// One polygon per line: `k:x1,y1;...;xn,yn`, scaled integer vertices of kP in
// canonical-form column order, ASCII, no whitespace.
std::string encode_polygon_line(const CanonicalForm& form);
CanonicalForm decode_polygon_line(const std::string& line);

// Canonical-form check plus encoding for a polygon value: the polygon must
// equal the polygon of its own k-affine normal form.
std::string encode_polygon(const ScaledPolygon& p);

struct DatasetHeader {
    int version = 1;
    i64 k = 1;
    std::string i_label = "mixed";  // interior count, or "mixed"
    std::string producer;
    std::string seeds;
    std::string order = "lex";
    i64 count = 0;
};

struct Dataset {
    DatasetHeader header;
    std::vector<CanonicalForm> polygons;
};

// Writes header plus lexicographically sorted body lines; deterministic.
void write_dataset(const std::string& path, const std::string& producer,
                   const std::string& seeds, i64 k, const std::string& i_label,
                   const std::vector<CanonicalForm>& polygons);

// Validates the header (count must match the body) and decodes every line.
Dataset read_dataset(const std::string& path);

void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

struct CheckpointConfig {
    std::string dir;
    bool resume = false;
    i64 stop_after = -1;  // stop (resumably) after this many commits; testing hook
};

// Manifest-plus-shards checkpointing. Shard files are written before the
// manifest; the manifest rename is the commit point, so a kill at any moment
// resumes from the last completed commit and reproduces identical output.
class CheckpointSession {
  public:
    // signature identifies the run (command + parameters + seeds); a resume
    // against a different signature raises resume_error.
    CheckpointSession(const CheckpointConfig& cfg, const nlohmann::json& signature);
    ~CheckpointSession();

    bool resuming() const { return loaded_; }
    const nlohmann::json& state() const;

    // Writes the shard files, then atomically publishes the new state.
    // Throws controlled_stop after the configured number of commits.
    void commit(const nlohmann::json& state, const std::map<std::string, std::string>& files);

    std::string shard(const std::string& name) const;

  private:
    CheckpointConfig cfg_;
    nlohmann::json* manifest_;
    bool loaded_ = false;
    i64 commits_ = 0;
};

}  // namespace ratpoly
