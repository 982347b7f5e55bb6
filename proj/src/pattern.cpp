#include "pm/pattern.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pm {

Pattern Pattern::from_map(const RootedMap& m) {
    auto diag = validate(m);
    if (!diag.ok) throw std::invalid_argument("pattern map invalid: " + diag.violation);
    Pattern p;
    p.map = m;
    auto faces = face_labels(m);
    p.exterior_face = faces[m.alpha[m.root]];
    p.boundary_darts = face_orbit(m, m.alpha[m.root]);
    p.boundary_length = (int)p.boundary_darts.size();

    // simple boundary: the exterior walk visits pairwise distinct vertices
    auto verts = vertex_labels(m);
    std::set<int> bverts;
    for (int d : p.boundary_darts) bverts.insert(verts[d]);
    if ((int)bverts.size() != p.boundary_length)
        throw std::invalid_argument("pattern boundary is not simple");

    p.interior_face_dart.assign(m.dart_count(), 0);
    for (int d = 0; d < m.dart_count(); ++d)
        p.interior_face_dart[d] = faces[d] != p.exterior_face;

    std::set<int> boundary_edges;
    for (int d : p.boundary_darts) boundary_edges.insert(d / 2);
    p.interior_edges = m.edge_count() - (int)boundary_edges.size();

    p.rotation_count = rotations(m).count;
    return p;
}

Pattern Pattern::load(const std::string& path) {
    auto parsed = read_map_file(path);
    if (parsed.exterior_dart) {
        auto faces = face_labels(parsed.map);
        if (faces[*parsed.exterior_dart] != faces[parsed.map.alpha[parsed.map.root]])
            throw std::invalid_argument("pattern exterior marker does not match the root face");
    }
    return from_map(parsed.map);
}

namespace {

// Darts whose sigma-corner lies on the pattern's root face: the corner
// (d, sigma(d)) belongs to the root face iff d is an alpha-image of a
// root-face dart. Extensions may insert new darts only at these corners,
// so sigma-propagation is forced everywhere else.
std::vector<char> root_corner_darts(const Pattern& p) {
    std::vector<char> cut(p.map.dart_count(), 0);
    for (int d : p.boundary_darts) cut[p.map.alpha[d]] = 1;
    return cut;
}

} // namespace

std::vector<Occurrence> find_occurrences(const RootedMap& host, const Pattern& pattern) {
    auto faces = face_labels(host);
    auto verts = vertex_labels(host);
    return find_occurrences(host, pattern, faces, verts, faces[host.alpha[host.root]]);
}

std::vector<Occurrence> find_occurrences(const RootedMap& host, const Pattern& pattern,
                                         const std::vector<int>& host_faces,
                                         const std::vector<int>& host_vertices,
                                         int host_root_face) {
    const RootedMap& p = pattern.map;
    const int pn = p.dart_count();
    const int hn = host.dart_count();
    std::vector<char> cut = root_corner_darts(pattern);

    // Deterministic traversal order of pattern darts from the pattern root,
    // using alpha always and sigma across non-root corners only.
    std::vector<int> order;
    std::vector<std::pair<int, int>> moves;  // (source position in order, 0=alpha 1=sigma)
    {
        std::vector<int> seen(pn, -1);
        order.push_back(p.root);
        seen[p.root] = 0;
        for (size_t i = 0; i < order.size(); ++i) {
            int d = order[i];
            int a = p.alpha[d];
            if (seen[a] < 0) {
                seen[a] = (int)order.size();
                order.push_back(a);
                moves.push_back({(int)i, 0});
            }
            if (!cut[d]) {
                int s = p.sigma[d];
                if (seen[s] < 0) {
                    seen[s] = (int)order.size();
                    order.push_back(s);
                    moves.push_back({(int)i, 1});
                }
            }
        }
        if ((int)order.size() != pn)
            throw std::logic_error("pattern darts not reachable under forced moves");
    }

    std::vector<Occurrence> result;
    std::set<std::pair<std::vector<int>, std::vector<int>>> dedup;

    const auto pverts = vertex_labels(p);
    const int p_vertex_count = orbit_labels(p.sigma).second;
    std::vector<int> img(pn, -1);
    std::vector<char> used(hn, 0);
    for (int anchor = 0; anchor < hn; ++anchor) {
        std::fill(img.begin(), img.end(), -1);
        std::fill(used.begin(), used.end(), 0);
        img[order[0]] = anchor;
        used[anchor] = 1;
        bool ok = true;
        for (size_t k = 0; k < moves.size() && ok; ++k) {
            int src = order[moves[k].first];
            int dst = order[k + 1];
            int himg = moves[k].second == 0 ? host.alpha[img[src]] : host.sigma[img[src]];
            img[dst] = himg;
            if (used[himg]) ok = false;  // injectivity
            used[himg] = 1;
        }
        if (!ok) continue;
        // consistency of every forced relation (alpha everywhere, sigma at
        // non-cut corners)
        for (int d = 0; d < pn && ok; ++d) {
            if (img[p.alpha[d]] != host.alpha[img[d]]) ok = false;
            if (ok && !cut[d] && img[p.sigma[d]] != host.sigma[img[d]]) ok = false;
        }
        if (!ok) continue;
        // interior faces map onto whole host faces, avoiding the root face
        for (int d = 0; d < pn && ok; ++d) {
            if (!pattern.interior_face_dart[d]) continue;
            if (img[p.phi(d)] != host.phi(img[d])) ok = false;
            else if (host_faces[img[d]] == host_root_face) ok = false;
        }
        if (!ok) continue;
        // vertex injectivity
        {
            std::vector<int> vimg(p_vertex_count, -1);
            for (int d = 0; d < pn && ok; ++d) {
                int pv = pverts[d];
                int hv = host_vertices[img[d]];
                if (vimg[pv] < 0) vimg[pv] = hv;
                else if (vimg[pv] != hv) ok = false;
            }
            std::vector<int> vs;
            for (int v : vimg)
                if (v >= 0) vs.push_back(v);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) ok = false;
        }
        if (!ok) continue;

        Occurrence occ;
        occ.darts = img;
        std::set<int> eimg, fimg, vimg;
        for (int d = 0; d < pn; ++d) {
            eimg.insert(img[d] / 2);
            vimg.insert(host_vertices[img[d]]);
            if (pattern.interior_face_dart[d]) fimg.insert(host_faces[img[d]]);
        }
        occ.edge_image.assign(eimg.begin(), eimg.end());
        occ.face_image.assign(fimg.begin(), fimg.end());
        occ.vertex_image.assign(vimg.begin(), vimg.end());
        if (dedup.insert({occ.edge_image, occ.face_image}).second)
            result.push_back(std::move(occ));
    }
    return result;
}

int count_occurrences(const RootedMap& host, const Pattern& pattern) {
    return (int)find_occurrences(host, pattern).size();
}

} // namespace pm
