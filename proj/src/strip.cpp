#include "ratpoly/strip.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "ratpoly/maximality.hpp"
#include "ratpoly/parallel.hpp"
#include "ratpoly/subpolygons.hpp"

using nlohmann::json;

namespace ratpoly {

HalfPlane halfplane_through(const Pt& v, const Pt& w) {
    if (v == w) throw std::invalid_argument("halfplane_through: points must differ");
    Pt n = primitive(rotate_cw(w - v));
    return {n, narrow(dot(n, v))};
}

namespace {

// Support line through an anchor with a given direction, oriented so the
// partner anchor (and with it the swept polygon) lies inside.
std::optional<HalfPlane> support_halfplane(const Pt& anchor, const Pt& dir, const Pt& partner) {
    Pt n = primitive(rotate_cw(dir));
    i64 c = narrow(dot(n, anchor));
    i64 side = narrow(dot(n, partner));
    if (side == c) return std::nullopt;
    if (side < c) return HalfPlane{-n, -c};
    return HalfPlane{n, c};
}

struct Ray {
    HalfPlane h;
    std::vector<Pt> pts;  // region points on this support line
};

struct SlotPair {
    Pt anchor_left, anchor_right;
    std::vector<Pt> region;
};

struct SweepSpec {
    i64 k = 1;
    i64 target_i = 0;
    i64 ylo = 0, yhi = 0;
    std::vector<Pt> strict_inside;     // points every support line must leave strictly inside
    std::optional<i64> need_above;     // require a nonempty integer row with y > t
    std::optional<i64> need_below;     // ... with y < t
    std::vector<SlotPair> slots;
};

struct Rows {
    i64 ylo = 0;
    std::vector<i64> lo, hi;

    void reset(i64 a, i64 b) {
        ylo = a;
        lo.assign(size_t(b - a + 1), INT64_MIN);
        hi.assign(size_t(b - a + 1), INT64_MAX);
    }
    void clip(const HalfPlane& h) {
        const i64 nx = h.normal.x, ny = h.normal.y, c = h.offset;
        for (size_t r = 0; r < lo.size(); r++) {
            i64 y = ylo + (i64)r;
            i64 rest = c - ny * y;
            if (nx == 0) {
                if (rest > 0) { lo[r] = 1; hi[r] = 0; }
            } else if (nx > 0) {
                lo[r] = std::max(lo[r], ceil_div(rest, nx));
            } else {
                hi[r] = std::min(hi[r], floor_div(rest, nx));
            }
        }
    }
    bool any_nonempty() const {
        for (size_t r = 0; r < lo.size(); r++)
            if (lo[r] <= hi[r]) return true;
        return false;
    }
    bool nonempty_above(i64 t) const {
        for (size_t r = lo.size(); r-- > 0;) {
            if (ylo + (i64)r <= t) return false;
            if (lo[r] <= hi[r]) return true;
        }
        return false;
    }
    bool nonempty_below(i64 t) const {
        for (size_t r = 0; r < lo.size(); r++) {
            if (ylo + (i64)r >= t) return false;
            if (lo[r] <= hi[r]) return true;
        }
        return false;
    }
};

struct Sink {
    const SweepSpec* spec = nullptr;
    std::unordered_set<std::string> raw;
    std::map<std::string, CanonicalForm> classes;
    std::vector<Pt> scratch;
    i64 leaves = 0;

    void leaf(const Rows& rows) {
        leaves++;
        scratch.clear();
        for (size_t r = 0; r < rows.lo.size(); r++) {
            if (rows.lo[r] > rows.hi[r]) continue;
            i64 y = rows.ylo + (i64)r;
            scratch.push_back({rows.lo[r], y});
            if (rows.hi[r] != rows.lo[r]) scratch.push_back({rows.hi[r], y});
        }
        if (scratch.size() < 3) return;
        std::vector<Pt> hull = convex_hull(scratch);
        if (hull.size() < 3) return;
        ScaledPolygon p{spec->k, std::move(hull)};

        std::string key;
        key.reserve(p.verts.size() * 8);
        for (const Pt& v : p.verts) {
            key += std::to_string(v.x);
            key += ',';
            key += std::to_string(v.y);
            key += ';';
        }
        if (!raw.insert(key).second) return;

        if (interior_lattice_count(p, spec->target_i) != spec->target_i) return;

        CanonicalForm nf = affine_normal_form(p);
        std::string ck = encode_polygon_line(nf);
        classes.emplace(std::move(ck), std::move(nf));
    }
};

// Directions from the anchor to the region points, one ray per support line,
// pruned by the strict-inside requirement.
std::vector<Ray> build_rays(const Pt& anchor, const Pt& partner, const std::vector<Pt>& region,
                            const std::vector<Pt>& strict_inside) {
    std::map<Pt, std::vector<Pt>> groups;
    for (const Pt& p : region) groups[primitive(p - anchor)].push_back(p);
    std::vector<Ray> rays;
    for (auto& [dir, pts] : groups) {
        auto h = support_halfplane(anchor, dir, partner);
        if (!h) continue;
        bool ok = true;
        for (const Pt& q : strict_inside)
            if (!h->strictly_contains(q)) { ok = false; break; }
        if (!ok) continue;
        rays.push_back(Ray{*h, std::move(pts)});
    }
    return rays;
}

struct Sweep {
    const SweepSpec& spec;
    std::vector<std::vector<Ray>> levels;
    size_t raw_clear_depth;

    explicit Sweep(const SweepSpec& s) : spec(s) {
        for (const SlotPair& slot : s.slots) {
            levels.push_back(build_rays(slot.anchor_left, slot.anchor_right, slot.region, s.strict_inside));
            levels.push_back(build_rays(slot.anchor_right, slot.anchor_left, slot.region, s.strict_inside));
        }
        raw_clear_depth = levels.size() >= 2 ? levels.size() - 2 : 0;
    }

    bool prunes_hold(const Rows& rows) const {
        if (!rows.any_nonempty()) return false;
        if (spec.need_above && !rows.nonempty_above(*spec.need_above)) return false;
        if (spec.need_below && !rows.nonempty_below(*spec.need_below)) return false;
        return true;
    }

    void descend(size_t depth, const Rows& rows, std::vector<HalfPlane>& chosen, Sink& sink) const {
        if (depth == levels.size()) {
            sink.leaf(rows);
            return;
        }
        for (const Ray& ray : levels[depth]) {
            // the support line must touch the polygon: some region point on it
            // has to be compatible with the half-planes fixed so far
            bool witness = false;
            for (const Pt& p : ray.pts) {
                bool inside = true;
                for (const HalfPlane& h : chosen)
                    if (!h.contains(p)) { inside = false; break; }
                if (inside) { witness = true; break; }
            }
            if (!witness) continue;

            Rows next = rows;
            next.clip(ray.h);
            if (!prunes_hold(next)) continue;
            if (depth == raw_clear_depth) sink.raw.clear();
            chosen.push_back(ray.h);
            descend(depth + 1, next, chosen, sink);
            chosen.pop_back();
        }
    }

    std::map<std::string, CanonicalForm> run(int workers) const {
        if (levels.empty()) return {};
        std::vector<Sink> sinks(std::max(1, workers));
        for (auto& s : sinks) s.spec = &spec;
        Rows base;
        base.reset(spec.ylo, spec.yhi);

        const auto& outer = levels[0];
        parallel_for(outer.size(), workers, [&](size_t idx, int w) {
            Sink& sink = sinks[w];
            const Ray& ray = outer[idx];
            Rows next = base;
            next.clip(ray.h);
            if (!prunes_hold(next)) return;
            std::vector<HalfPlane> chosen{ray.h};
            if (raw_clear_depth == 0) sink.raw.clear();
            descend(1, next, chosen, sink);
        });

        std::map<std::string, CanonicalForm> merged;
        for (auto& s : sinks) merged.merge(s.classes);
        return merged;
    }
};

std::vector<CanonicalForm> filter_maximal(const std::map<std::string, CanonicalForm>& classes, int workers) {
    std::vector<const CanonicalForm*> forms;
    forms.reserve(classes.size());
    for (const auto& [key, f] : classes) forms.push_back(&f);
    std::vector<char> keep(forms.size(), 0);
    parallel_for(forms.size(), workers, [&](size_t i, int) {
        keep[i] = is_k_maximal(forms[i]->polygon());
    });
    std::vector<CanonicalForm> out;
    for (size_t i = 0; i < forms.size(); i++)
        if (keep[i]) out.push_back(*forms[i]);
    std::sort(out.begin(), out.end());
    return out;
}

// Region point generators, scaled coordinates.

std::vector<Pt> points_trapezoid(i64 k, i64 i) {  // above the collinear anchors
    std::vector<Pt> pts;
    for (i64 y = 1; y <= k; y++)
        for (i64 x = 0; x <= k * (i + 1) + y; x++) pts.push_back({x, y});
    return pts;
}

std::vector<Pt> points_upper_no_interior(i64 k) {
    std::vector<Pt> pts;
    for (i64 y = k + 1; y <= 2 * k; y++)
        for (i64 x = k - y; x <= y; x++) pts.push_back({x, y});
    return pts;
}

std::vector<Pt> points_lower_no_interior(i64 k) {
    std::vector<Pt> pts;
    for (i64 y = -k; y <= -1; y++)
        for (i64 x = y; x <= k - y; x++) pts.push_back({x, y});
    return pts;
}

std::vector<Pt> points_upper_one_interior(i64 k) {
    std::vector<Pt> pts;
    for (i64 y = k + 1; y <= 2 * k; y++)
        for (i64 x = -y; x <= 0; x++) pts.push_back({x, y});
    return pts;
}

std::vector<Pt> points_lower_one_interior(i64 k) {
    std::vector<Pt> pts;
    for (i64 y = -k; y <= -1; y++)
        for (i64 x = y - k; x <= k - 2 * y; x++) pts.push_back({x, y});
    return pts;
}

std::vector<Pt> points_bottom_wedge(i64 k, int q) {
    std::vector<Pt> pts;
    for (i64 y = -2 * k; y <= -k - 1; y++) {
        i64 xlo, xhi;
        switch (q) {
            case 1: xlo = y - k; xhi = y; break;
            case 2: xlo = y; xhi = 0; break;
            case 3: xlo = 0; xhi = -y; break;
            case 4: xlo = -y; xhi = k - y; break;
            default: xlo = k - y; xhi = k - 2 * y; break;
        }
        for (i64 x = xlo; x <= xhi; x++) pts.push_back({x, y});
    }
    return pts;
}

std::vector<CanonicalForm> sweep_height2(i64 k, i64 i, int workers) {
    SweepSpec spec;
    spec.k = k;
    spec.target_i = i;
    spec.ylo = -k;
    spec.yhi = k;
    if (i >= 1) spec.strict_inside = {Pt{k, 0}, Pt{i * k, 0}};
    spec.need_above = 0;
    spec.need_below = 0;
    SlotPair slot;
    slot.anchor_left = {0, 0};
    slot.anchor_right = {k * (i + 1), 0};
    slot.region = points_trapezoid(k, i);
    spec.slots = {slot};
    return filter_maximal(Sweep(spec).run(workers), workers);
}

std::vector<CanonicalForm> sweep_no_interior(i64 k, int workers) {
    SweepSpec spec;
    spec.k = k;
    spec.target_i = 0;
    spec.ylo = -k;
    spec.yhi = 2 * k;
    spec.need_above = k;
    spec.need_below = 0;
    SlotPair upper{{0, k}, {k, k}, points_upper_no_interior(k)};
    SlotPair lower{{0, 0}, {k, 0}, points_lower_no_interior(k)};
    spec.slots = {upper, lower};
    return filter_maximal(Sweep(spec).run(workers), workers);
}

std::vector<CanonicalForm> sweep_one_interior_mid(i64 k, int workers) {
    SweepSpec spec;
    spec.k = k;
    spec.target_i = 1;
    spec.ylo = -k;
    spec.yhi = 2 * k;
    spec.strict_inside = {Pt{0, 0}};
    spec.need_above = k;
    spec.need_below = 0;
    SlotPair upper{{-k, k}, {0, k}, points_upper_one_interior(k)};
    SlotPair lower{{-k, 0}, {k, 0}, points_lower_one_interior(k)};
    spec.slots = {upper, lower};
    return filter_maximal(Sweep(spec).run(workers), workers);
}

std::vector<CanonicalForm> sweep_one_interior_deep(i64 k, int workers) {
    std::map<std::string, CanonicalForm> classes;
    for (int q = 1; q <= 5; q++) {
        SweepSpec spec;
        spec.k = k;
        spec.target_i = 1;
        spec.ylo = -2 * k;
        spec.yhi = 2 * k;
        spec.strict_inside = {Pt{0, 0}};
        spec.need_above = k;
        spec.need_below = -k;
        SlotPair upper{{-k, k}, {0, k}, points_upper_one_interior(k)};
        SlotPair lower{{-k, 0}, {k, 0}, points_lower_one_interior(k)};
        SlotPair bottom{{(q - 3) * k, -k}, {(q - 2) * k, -k}, points_bottom_wedge(k, q)};
        spec.slots = {upper, lower, bottom};
        classes.merge(Sweep(spec).run(workers));
    }
    return filter_maximal(classes, workers);
}

// Stage-level checkpointing: each completed stage is flushed as a sorted
// class list; a resumed run replays finished stages from disk.
class StageRunner {
  public:
    StageRunner(const StripOptions& opts, const json& signature) {
        if (opts.checkpoint)
            session_ = std::make_unique<CheckpointSession>(*opts.checkpoint, signature);
        if (session_ && session_->resuming()) state_ = session_->state();
        if (!state_.contains("done")) state_["done"] = json::array();
    }

    std::vector<CanonicalForm> run(const std::string& name,
                                   const std::function<std::vector<CanonicalForm>()>& fn) {
        if (session_) {
            for (const auto& d : state_["done"]) {
                if (d.get<std::string>() == name) {
                    std::vector<CanonicalForm> out;
                    std::string content = session_->shard("stage_" + name + ".txt");
                    size_t pos = 0;
                    while (pos < content.size()) {
                        size_t nl = content.find('\n', pos);
                        if (nl == std::string::npos) nl = content.size();
                        if (nl > pos) out.push_back(decode_polygon_line(content.substr(pos, nl - pos)));
                        pos = nl + 1;
                    }
                    return out;
                }
            }
        }
        std::vector<CanonicalForm> out = fn();
        if (session_) {
            std::string content;
            for (const auto& f : out) {
                content += encode_polygon_line(f);
                content += '\n';
            }
            state_["done"].push_back(name);
            session_->commit(state_, {{"stage_" + name + ".txt", content}});
        }
        return out;
    }

  private:
    std::unique_ptr<CheckpointSession> session_;
    json state_;
};

// Union, then split by the smallest strip height that realizes each class.
std::vector<std::map<std::string, CanonicalForm>> partition_by_height(
    const std::vector<std::vector<CanonicalForm>>& groups, const std::vector<i64>& heights) {
    std::map<std::string, CanonicalForm> uni;
    for (const auto& g : groups)
        for (const auto& f : g) uni.emplace(encode_polygon_line(f), f);
    std::vector<std::map<std::string, CanonicalForm>> out(heights.size() + 1);
    for (const auto& [key, f] : uni) {
        ScaledPolygon p = f.polygon();
        size_t row = heights.size();
        for (size_t i = 0; i < heights.size(); i++) {
            if (fits_in_strip(p, heights[i])) { row = i; break; }
        }
        out[row].emplace(key, f);
    }
    return out;
}

std::vector<CanonicalForm> values_of(const std::map<std::string, CanonicalForm>& m) {
    std::vector<CanonicalForm> out;
    out.reserve(m.size());
    for (const auto& [key, f] : m) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CanonicalForm> classify_strip_height2(i64 k, i64 i, const StripOptions& opts) {
    if (k < 1 || i < 0) throw std::invalid_argument("classify_strip_height2: k >= 1, i >= 0");
    json sig{{"command", "strip_height2"}, {"k", k}, {"i", i}};
    StageRunner stages(opts, sig);
    return stages.run("sweep", [&] { return sweep_height2(k, i, opts.workers); });
}

NoInteriorClassification classify_no_interior(i64 k, const StripOptions& opts) {
    if (k < 1) throw std::invalid_argument("classify_no_interior: k >= 1");
    json sig{{"command", "no_interior"}, {"k", k}};
    StageRunner stages(opts, sig);
    auto narrow_classes = stages.run("strip1", [&] { return sweep_height2(k, 0, opts.workers); });
    auto wide_classes = stages.run("sweep2", [&] { return sweep_no_interior(k, opts.workers); });

    auto parts = partition_by_height({narrow_classes, wide_classes}, {2});
    NoInteriorClassification r;
    r.strip1 = values_of(parts[0]);
    r.strip2 = values_of(parts[1]);
    return r;
}

OneInteriorClassification classify_one_interior(i64 k, const StripOptions& opts) {
    if (k < 1) throw std::invalid_argument("classify_one_interior: k >= 1");
    json sig{{"command", "one_interior"}, {"k", k}};
    StageRunner stages(opts, sig);
    auto s1 = stages.run("strip1", [&] { return sweep_height2(k, 1, opts.workers); });
    auto s2 = stages.run("sweep2", [&] { return sweep_one_interior_mid(k, opts.workers); });
    auto s3 = stages.run("sweep3", [&] { return sweep_one_interior_deep(k, opts.workers); });

    auto parts = partition_by_height({s1, s2, s3}, {2, 3});
    OneInteriorClassification r;
    r.strip1 = values_of(parts[0]);
    r.strip2 = values_of(parts[1]);
    r.strip3 = values_of(parts[2]);
    return r;
}

std::vector<CanonicalForm> classify_collinear(i64 k, i64 i, const StripOptions& opts) {
    if (i <= k)
        throw std::invalid_argument("classify_collinear: requires i > k; the strip embedding "
                                    "is not guaranteed below that");
    json sig{{"command", "collinear"}, {"k", k}, {"i", i}};
    StageRunner stages(opts, sig);
    auto maximal = stages.run("maximal", [&] { return sweep_height2(k, i, opts.workers); });

    std::vector<ScaledPolygon> seeds;
    for (const auto& f : maximal) seeds.push_back(f.polygon());
    EnumerationOptions eopts;
    eopts.preserve_interior = true;
    eopts.workers = opts.workers;
    CheckpointConfig sub_cfg;
    if (opts.checkpoint) {
        sub_cfg = *opts.checkpoint;
        sub_cfg.dir += "/subpolygons";
        eopts.checkpoint = &sub_cfg;
    }
    auto buckets = subpolygons(seeds, eopts);
    std::vector<CanonicalForm> out = buckets.all();
    std::sort(out.begin(), out.end());
    return out;
}

i64 collinear_count_formula(i64 i) {
    if (i < 3) throw std::invalid_argument("collinear_count_formula: i >= 3");
    i128 v = 710640;
    i128 coeffs[] = {1665222, 1582743, 685145, 137740, 12928, 512};
    i128 pw = 1;
    for (int d = 0; d < 6; d++) {
        pw *= i;
        v += coeffs[d] * pw;
    }
    v *= (i + 1);
    if (v % 1260 != 0) throw arithmetic_error("collinear_count_formula: unexpected non-integral value");
    return narrow(v / 1260);
}

}  // namespace ratpoly
