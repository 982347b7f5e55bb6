#ifndef PM_PATTERN_HPP
#define PM_PATTERN_HPP

#include "pm/map.hpp"

#include <vector>

namespace pm {

// A pattern: rooted map whose root face is the exterior and whose boundary
// is a simple cycle (as many boundary edges as boundary vertices).
// Construction validates both; interior structure is arbitrary.
struct Pattern {
    RootedMap map;
    int exterior_face = 0;             // face label of the root face
    std::vector<int> boundary_darts;   // phi-orbit of the exterior face
    std::vector<char> interior_face_dart;  // dart -> lies on an interior face
    int boundary_length = 0;           // ell_0, the root face valency
    int interior_edges = 0;            // d_0
    int rotation_count = 0;            // r_0

    static Pattern from_map(const RootedMap& m);
    static Pattern load(const std::string& path);
};

// One pattern occurrence in a host: incidence-preserving injections,
// identified by the images. `darts` maps pattern dart -> host dart.
struct Occurrence {
    std::vector<int> darts;
    std::vector<int> edge_image;    // sorted host edge ids (dart/2)
    std::vector<int> face_image;    // sorted host face labels of interior faces
    std::vector<int> vertex_image;  // sorted host vertex labels
};

// All occurrences of `pattern` in `host`, up to root-face preserving
// isomorphism (dedup by edge- and interior-face-image sets). Occurrences
// whose interior faces include the host root face are excluded.
std::vector<Occurrence> find_occurrences(const RootedMap& host, const Pattern& pattern);

// Same, but with precomputed host labellings (for hot loops).
std::vector<Occurrence> find_occurrences(const RootedMap& host, const Pattern& pattern,
                                         const std::vector<int>& host_faces,
                                         const std::vector<int>& host_vertices,
                                         int host_root_face);

int count_occurrences(const RootedMap& host, const Pattern& pattern);

} // namespace pm

#endif
