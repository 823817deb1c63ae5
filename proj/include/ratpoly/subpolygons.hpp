#pragma once

#include <functional>
#include <map>

#include "ratpoly/normal_form.hpp"
#include "ratpoly/storage.hpp"

namespace ratpoly {

struct EnumerationOptions {
    // Drop a shaving as soon as an interior lattice point reaches the
    // boundary; restricts the enumeration to subpolygons with the seed's
    // interior count.
    bool preserve_interior = false;
    // Keep only polygons whose scaled vertices are primitive vectors
    // (emission filter; the traversal still passes through the others).
    bool primitive_only = false;
    // Extra emission filter applied at insertion.
    std::function<bool(const ScaledPolygon&)> predicate;
    int workers = 1;
    const CheckpointConfig* checkpoint = nullptr;
};

// One representative per k-affine class, graded by k-normalized volume.
struct VolumeBuckets {
    i64 k = 1;
    std::map<i64, std::vector<CanonicalForm>> by_volume;  // each vector sorted

    i64 total() const {
        i64 n = 0;
        for (const auto& [vol, v] : by_volume) n += (i64)v.size();
        return n;
    }
    std::vector<CanonicalForm> all() const {
        std::vector<CanonicalForm> out;
        for (const auto& [vol, v] : by_volume) out.insert(out.end(), v.begin(), v.end());
        return out;
    }
};

// Volume-descending subpolygon enumeration: exactly one representative per
// k-affine class of two-dimensional subpolygon of any seed that passes the
// emission filters. Seeds must share k.
VolumeBuckets subpolygons(const std::vector<ScaledPolygon>& seeds, const EnumerationOptions& opts = {});

struct BoxClassification {
    i64 new_classes = 0;     // classes in [0,m]^2 not realizable in [0,m-1]^2
    i64 max_vertices = 0;    // largest vertex count among the new classes
    i64 num_maximizers = 0;  // how many attain it
    i64 cumulative = 0;      // all classes in [0,m]^2
};

// Lattice subpolygons of [0,m] x [0,m] that are not subpolygons of the next
// smaller square, with vertex statistics.
BoxClassification box_classification(i64 m, int workers = 1);

}  // namespace ratpoly
