#ifndef PM_MAP_HPP
#define PM_MAP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pm {

// Rooted planar map as a rotation system. Darts are 0..2E-1, alpha is the
// fixed-point-free edge involution, sigma the counterclockwise rotation at
// each vertex. Faces are the orbits of phi = sigma o alpha, and the root
// face (the face to the left of the root edge) is the phi-orbit of
// alpha(root). Immutable by convention once validated.
struct RootedMap {
    std::vector<int> sigma;
    std::vector<int> alpha;
    int root = 0;

    int dart_count() const { return (int)sigma.size(); }
    int edge_count() const { return dart_count() / 2; }
    int phi(int d) const { return sigma[alpha[d]]; }
};

struct MapDiagnostics {
    bool ok = false;
    std::string violation;  // empty when ok
    int vertices = 0;
    int edges = 0;
    int faces = 0;
};

// Checks involution/permutation structure, connectivity and genus 0.
// Reports the first violated invariant.
MapDiagnostics validate(const RootedMap& m);

// Orbit labelling of a permutation given as dart->image array.
// Returns (label per dart, orbit count).
std::pair<std::vector<int>, int> orbit_labels(const std::vector<int>& perm);

std::vector<int> vertex_labels(const RootedMap& m);
std::vector<int> face_labels(const RootedMap& m);

// Darts of the phi-orbit containing d, in walk order.
std::vector<int> face_orbit(const RootedMap& m, int d);

// Label of the root face (in face_labels numbering).
int root_face(const RootedMap& m);

using CanonicalKey = std::vector<std::uint16_t>;

// Breadth-first relabelling key starting at `root_dart`, following sigma
// then alpha. Two rooted maps have equal keys iff they are root-preserving
// isomorphic. Optional per-dart colors (e.g. marked faces, occurrence
// membership) are appended in visit order and must then also be preserved
// by isomorphisms.
CanonicalKey canonical_key(const RootedMap& m, int root_dart,
                           const std::vector<int>* dart_colors = nullptr);

inline CanonicalKey canonical_key(const RootedMap& m) { return canonical_key(m, m.root); }

// The same map with darts renamed in canonical BFS order (idempotent).
RootedMap canonical_relabel(const RootedMap& m);

struct Rotations {
    int count = 0;                     // pairwise non-isomorphic rerootings
    std::vector<int> representatives;  // one root dart per class
    std::vector<int> all_roots;        // every dart whose rerooting keeps the root face
};

// Rerootings of m that preserve the root face, counted up to isomorphism.
// Isomorphisms must preserve the optional dart colors.
Rotations rotations(const RootedMap& m, const std::vector<int>* dart_colors = nullptr);

// Boundary shape of a face per the simple-h-gon decomposition: a simple
// h-gon, e bridges, and s[k] boundaries of S_k-maps.
struct BoundaryShape {
    int h = 0;
    int e = 0;
    std::vector<int> s;  // s[k] = number of S_k boundaries, k >= 1; s[0] unused

    int valency() const {
        int v = h + 2 * e;
        for (size_t k = 1; k < s.size(); ++k) v += (int)k * s[k];
        return v;
    }
    bool operator==(const BoundaryShape& o) const;
    std::string str() const;
};

// Parses the boundary walk of the face containing `start_dart`, with the
// h-gon chosen as the simple cycle through `start_dart`. Throws if the
// start dart turns out to be a bridge of its face.
BoundaryShape boundary_shape_at(const RootedMap& m, int start_dart);

// Shape of the face identified by any dart on it; starts the parse at a
// deterministic cycle dart of the face.
BoundaryShape boundary_shape(const RootedMap& m, int face_dart);

// --- text format ------------------------------------------------------
// line 1: "darts=2E root=r"            (patterns append " exterior=d")
// line 2: sigma images, space-separated
// line 3: alpha images, space-separated

std::string write_map(const RootedMap& m, std::optional<int> exterior_dart = {});
struct ParsedMap {
    RootedMap map;
    std::optional<int> exterior_dart;
};
ParsedMap read_map(std::istream& is);
ParsedMap read_map_string(const std::string& text);
ParsedMap read_map_file(const std::string& path);

} // namespace pm

#endif
