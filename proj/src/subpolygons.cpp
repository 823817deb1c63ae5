#include "ratpoly/subpolygons.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "ratpoly/hilbert.hpp"
#include "ratpoly/parallel.hpp"

using nlohmann::json;

namespace ratpoly {

namespace {

struct EnumState {
    i64 k = 1;
    std::unordered_set<std::string> pending_keys;      // dedup of unprocessed classes
    std::map<i64, std::vector<CanonicalForm>> pending; // unprocessed, by volume
    std::map<i64, std::vector<CanonicalForm>> emitted;
    i64 watermark = -1;  // volumes > watermark are fully processed (-1: none)
};

bool passes_emission(const ScaledPolygon& poly, const EnumerationOptions& opts) {
    if (opts.primitive_only) {
        for (const Pt& v : poly.verts)
            if (!is_primitive(v)) return false;
    }
    if (opts.predicate && !opts.predicate(poly)) return false;
    return true;
}

std::string dump_bucket(const std::vector<CanonicalForm>& forms) {
    std::vector<std::string> lines;
    lines.reserve(forms.size());
    for (const auto& f : forms) lines.push_back(encode_polygon_line(f));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::vector<CanonicalForm> parse_bucket(const std::string& content) {
    std::vector<CanonicalForm> out;
    size_t pos = 0;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) nl = content.size();
        if (nl > pos) out.push_back(decode_polygon_line(content.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    return out;
}

json signature_json(const std::vector<ScaledPolygon>& seeds, const EnumerationOptions& opts) {
    std::vector<std::string> seed_keys;
    for (const auto& s : seeds) seed_keys.push_back(encode_polygon_line(affine_normal_form(s)));
    std::sort(seed_keys.begin(), seed_keys.end());
    json sig;
    sig["command"] = "subpolygons";
    sig["seeds"] = seed_keys;
    sig["preserve_interior"] = opts.preserve_interior;
    sig["primitive_only"] = opts.primitive_only;
    return sig;
}

}  // namespace

VolumeBuckets subpolygons(const std::vector<ScaledPolygon>& seeds, const EnumerationOptions& opts) {
    if (seeds.empty()) throw std::invalid_argument("subpolygons: no seeds");
    const i64 k = seeds[0].k;
    for (const auto& s : seeds)
        if (s.k != k) throw std::invalid_argument("subpolygons: seeds with mixed k");
    if (opts.predicate && opts.checkpoint)
        throw std::invalid_argument("subpolygons: custom predicates cannot be checkpointed");

    EnumState st;
    st.k = k;

    std::unique_ptr<CheckpointSession> ckpt;
    if (opts.checkpoint) ckpt = std::make_unique<CheckpointSession>(*opts.checkpoint, signature_json(seeds, opts));

    if (ckpt && ckpt->resuming()) {
        const json& state = ckpt->state();
        st.watermark = state.at("watermark").get<i64>();
        for (const auto& vol : state.at("emitted_volumes")) {
            i64 v = vol.get<i64>();
            st.emitted[v] = parse_bucket(ckpt->shard("emitted_" + std::to_string(v) + ".txt"));
        }
        for (auto& f : parse_bucket(ckpt->shard("pending.txt"))) {
            st.pending_keys.insert(encode_polygon_line(f));
            i64 vol = normalized_volume(f.polygon());
            st.pending[vol].push_back(std::move(f));
        }
    } else {
        for (const auto& s : seeds) {
            CanonicalForm nf = affine_normal_form(s);
            if (!st.pending_keys.insert(encode_polygon_line(nf)).second) continue;
            i64 vol = normalized_volume(s);
            if (passes_emission(nf.polygon(), opts)) st.emitted[vol].push_back(nf);
            st.pending[vol].push_back(std::move(nf));
        }
    }

    std::set<i64> dirty;
    for (const auto& [vol, forms] : st.emitted) {
        if (!ckpt || !ckpt->resuming()) dirty.insert(vol);
    }
    auto save = [&]() {
        if (!ckpt) return;
        json state;
        state["watermark"] = st.watermark;
        std::vector<i64> emitted_vols;
        for (const auto& [vol, forms] : st.emitted) emitted_vols.push_back(vol);
        state["emitted_volumes"] = emitted_vols;
        std::map<std::string, std::string> files;
        for (i64 vol : dirty) files["emitted_" + std::to_string(vol) + ".txt"] = dump_bucket(st.emitted[vol]);
        dirty.clear();
        std::vector<CanonicalForm> pend;
        for (const auto& [vol, forms] : st.pending) pend.insert(pend.end(), forms.begin(), forms.end());
        files["pending.txt"] = dump_bucket(pend);
        ckpt->commit(state, files);
    };

    // Strict volume descent: shaving always lands in a smaller bucket, so the
    // highest pending bucket is final once reached.
    while (!st.pending.empty()) {
        auto top = std::prev(st.pending.end());
        const i64 vol = top->first;
        if (st.watermark >= 0 && vol >= st.watermark) {
            // stale bucket from a resumed snapshot: cannot happen, guard anyway
            throw resume_error("pending bucket above watermark");
        }
        std::vector<CanonicalForm> batch = std::move(top->second);
        st.pending.erase(top);
        std::sort(batch.begin(), batch.end());
        for (const auto& f : batch) st.pending_keys.erase(encode_polygon_line(f));

        std::vector<std::vector<std::pair<i64, CanonicalForm>>> found(std::max(1, opts.workers));
        parallel_for(batch.size(), opts.workers, [&](size_t idx, int worker) {
            ScaledPolygon poly = batch[idx].polygon();
            for (size_t j = 0; j < poly.verts.size(); j++) {
                ShaveResult r = shave_vertex(poly, j);
                if (opts.preserve_interior && r.boundary_hit) continue;
                if (!r.polygon) continue;
                CanonicalForm nf = affine_normal_form(*r.polygon);
                found[worker].emplace_back(normalized_volume(*r.polygon), std::move(nf));
            }
        });

        for (auto& buf : found) {
            for (auto& [v, nf] : buf) {
                if (!st.pending_keys.insert(encode_polygon_line(nf)).second) continue;
                if (passes_emission(nf.polygon(), opts)) {
                    st.emitted[v].push_back(nf);
                    dirty.insert(v);
                }
                st.pending[v].push_back(std::move(nf));
            }
        }
        st.watermark = vol;
        save();
    }

    VolumeBuckets out;
    out.k = k;
    out.by_volume = std::move(st.emitted);
    for (auto& [vol, forms] : out.by_volume) std::sort(forms.begin(), forms.end());
    return out;
}

BoxClassification box_classification(i64 m, int workers) {
    if (m < 1) throw std::invalid_argument("box_classification: m >= 1");
    auto box = [&](i64 side) {
        return polygon_from_ccw(1, {{0, 0}, {side, 0}, {side, side}, {0, side}});
    };
    EnumerationOptions opts;
    opts.workers = workers;

    VolumeBuckets big = subpolygons({box(m)}, opts);
    std::unordered_set<std::string> smaller;
    if (m >= 2) {
        for (const auto& f : subpolygons({box(m - 1)}, opts).all())
            smaller.insert(encode_polygon_line(f));
    } else {
        // the unit box has segment subpolygons only besides itself and the
        // unimodular triangle; nothing to subtract
    }

    BoxClassification r;
    r.cumulative = big.total();
    for (const auto& f : big.all()) {
        if (smaller.count(encode_polygon_line(f))) continue;
        r.new_classes++;
        i64 nverts = (i64)f.cols.size();
        if (nverts > r.max_vertices) {
            r.max_vertices = nverts;
            r.num_maximizers = 0;
        }
        if (nverts == r.max_vertices) r.num_maximizers++;
    }
    return r;
}

}  // namespace ratpoly
