/**
 * Trivial-direction projections: V- or HV-input to V-output. Each vertex
 * projects by one matrix-vector product; points that become redundant are
 * removed by one LP each.
 */

#ifndef POLYPROJ_VPROJ_HPP
#define POLYPROJ_VPROJ_HPP

#include <vector>

#include "polyproj/canon.hpp"
#include "polyproj/polytope.hpp"

namespace polyproj::vproj {

/// Raw images in complement coordinates; no dedup, no redundancy removal.
inline std::vector<RatVec> project_points(const VPolytope& Q, const DirectionSet& G) {
    if (G.n() != Q.ambient_dim) throw DimensionMismatchError("directions vs point dims");
    std::vector<RatVec> out;
    out.reserve(Q.points.size());
    for (const auto& p : Q.points) out.push_back(G.project_point(p));
    return out;
}

/// Exactly the vertices of the projected hull.
inline VPolytope project_v(const VPolytope& Q, const DirectionSet& G) {
    return canonical_v(VPolytope(project_points(Q, G), G.d()));
}

}  // namespace polyproj::vproj

#endif  // POLYPROJ_VPROJ_HPP
