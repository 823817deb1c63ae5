#include "ratpoly/storage.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace ratpoly {

std::string encode_polygon_line(const CanonicalForm& form) {
    std::string out = std::to_string(form.k);
    out += ':';
    for (size_t i = 0; i < form.cols.size(); i++) {
        if (i) out += ';';
        out += std::to_string(form.cols[i].x);
        out += ',';
        out += std::to_string(form.cols[i].y);
    }
    return out;
}

namespace {

i64 parse_int(const char*& s, const char* end) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s, end, v);
    if (ec != std::errc() || ptr == s) throw std::invalid_argument("bad integer in polygon line");
    s = ptr;
    return v;
}

void expect(const char*& s, const char* end, char c) {
    if (s == end || *s != c) throw std::invalid_argument("malformed polygon line");
    s++;
}

}  // namespace

CanonicalForm decode_polygon_line(const std::string& line) {
    const char* s = line.data();
    const char* end = s + line.size();
    CanonicalForm f;
    f.k = parse_int(s, end);
    expect(s, end, ':');
    while (s != end) {
        Pt p;
        p.x = parse_int(s, end);
        expect(s, end, ',');
        p.y = parse_int(s, end);
        f.cols.push_back(p);
        if (s != end) expect(s, end, ';');
    }
    if (f.k < 1 || f.cols.size() < 3) throw std::invalid_argument("malformed polygon line");
    return f;
}

std::string encode_polygon(const ScaledPolygon& p) {
    CanonicalForm nf = affine_normal_form(p);
    if (!(nf.polygon() == p)) throw std::invalid_argument("encode_polygon: polygon is not in canonical form");
    return encode_polygon_line(nf);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    fs::rename(tmp, path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_dataset(const std::string& path, const std::string& producer,
                   const std::string& seeds, i64 k, const std::string& i_label,
                   const std::vector<CanonicalForm>& polygons) {
    std::vector<std::string> lines;
    lines.reserve(polygons.size());
    for (const auto& f : polygons) lines.push_back(encode_polygon_line(f));
    std::sort(lines.begin(), lines.end());

    std::string out;
    out += "#ratpoly-dataset v1\n";
    out += "#k " + std::to_string(k) + "\n";
    out += "#i " + i_label + "\n";
    out += "#producer " + producer + "\n";
    out += "#seeds " + seeds + "\n";
    out += "#count " + std::to_string(lines.size()) + "\n";
    out += "#order lex\n";
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    write_file_atomic(path, out);
}

Dataset read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read dataset " + path);
    Dataset ds;
    std::string line;
    bool saw_version = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string key;
            ss >> key;
            if (key == "ratpoly-dataset") {
                saw_version = true;
            } else if (key == "k") {
                ss >> ds.header.k;
            } else if (key == "i") {
                ss >> ds.header.i_label;
            } else if (key == "producer") {
                std::getline(ss >> std::ws, ds.header.producer);
            } else if (key == "seeds") {
                std::getline(ss >> std::ws, ds.header.seeds);
            } else if (key == "count") {
                ss >> ds.header.count;
            } else if (key == "order") {
                ss >> ds.header.order;
            }
            continue;
        }
        ds.polygons.push_back(decode_polygon_line(line));
    }
    if (!saw_version) throw std::runtime_error("not a ratpoly dataset: " + path);
    if (ds.header.count != (i64)ds.polygons.size())
        throw std::runtime_error("dataset count mismatch in " + path);
    for (const auto& f : ds.polygons)
        if (f.k != ds.header.k) throw std::runtime_error("dataset k mismatch in " + path);
    return ds;
}

CheckpointSession::CheckpointSession(const CheckpointConfig& cfg, const json& signature)
    : cfg_(cfg), manifest_(new json()) {
    fs::create_directories(cfg_.dir);
    std::string manifest_path = cfg_.dir + "/run.json";
    if (cfg_.resume && fs::exists(manifest_path)) {
        *manifest_ = json::parse(read_file(manifest_path));
        if ((*manifest_)["signature"] != signature)
            throw resume_error("checkpoint state belongs to a different run");
        loaded_ = true;
    } else {
        (*manifest_)["signature"] = signature;
        (*manifest_)["state"] = json::object();
    }
}

CheckpointSession::~CheckpointSession() { delete manifest_; }

const json& CheckpointSession::state() const { return (*manifest_)["state"]; }

void CheckpointSession::commit(const json& state, const std::map<std::string, std::string>& files) {
    for (const auto& [name, content] : files) write_file_atomic(cfg_.dir + "/" + name, content);
    (*manifest_)["state"] = state;
    write_file_atomic(cfg_.dir + "/run.json", manifest_->dump(2));
    commits_++;
    if (cfg_.stop_after >= 0 && commits_ >= cfg_.stop_after) throw controlled_stop();
}

std::string CheckpointSession::shard(const std::string& name) const {
    return read_file(cfg_.dir + "/" + name);
}

}  // namespace ratpoly
