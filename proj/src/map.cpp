#include "pm/map.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace pm {

std::pair<std::vector<int>, int> orbit_labels(const std::vector<int>& perm) {
    int n = (int)perm.size();
    std::vector<int> label(n, -1);
    int cnt = 0;
    for (int d = 0; d < n; ++d) {
        if (label[d] >= 0) continue;
        int e = d;
        while (label[e] < 0) {
            label[e] = cnt;
            e = perm[e];
        }
        ++cnt;
    }
    return {label, cnt};
}

std::vector<int> vertex_labels(const RootedMap& m) { return orbit_labels(m.sigma).first; }

std::vector<int> face_labels(const RootedMap& m) {
    std::vector<int> phi(m.dart_count());
    for (int d = 0; d < m.dart_count(); ++d) phi[d] = m.phi(d);
    return orbit_labels(phi).first;
}

std::vector<int> face_orbit(const RootedMap& m, int d) {
    std::vector<int> orbit;
    int e = d;
    do {
        orbit.push_back(e);
        e = m.phi(e);
    } while (e != d);
    return orbit;
}

int root_face(const RootedMap& m) { return face_labels(m)[m.alpha[m.root]]; }

MapDiagnostics validate(const RootedMap& m) {
    MapDiagnostics diag;
    int n = m.dart_count();
    if (n == 0 || n % 2 != 0) {
        diag.violation = "dart count must be positive and even";
        return diag;
    }
    if ((int)m.alpha.size() != n) {
        diag.violation = "alpha size mismatch";
        return diag;
    }
    if (m.root < 0 || m.root >= n) {
        diag.violation = "root dart out of range";
        return diag;
    }
    auto is_perm = [n](const std::vector<int>& p) {
        std::vector<char> seen(n, 0);
        for (int v : p) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    };
    if (!is_perm(m.sigma)) { diag.violation = "sigma is not a permutation"; return diag; }
    if (!is_perm(m.alpha)) { diag.violation = "alpha is not a permutation"; return diag; }
    for (int d = 0; d < n; ++d) {
        if (m.alpha[d] == d || m.alpha[m.alpha[d]] != d) {
            diag.violation = "alpha is not a fixed-point-free involution";
            return diag;
        }
    }
    // connectivity under <sigma, alpha>
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 0;
    while (!q.empty()) {
        int d = q.front();
        q.pop();
        ++reached;
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (!seen[e]) { seen[e] = 1; q.push(e); }
        }
    }
    if (reached != n) { diag.violation = "disconnected"; return diag; }

    diag.vertices = orbit_labels(m.sigma).second;
    diag.edges = n / 2;
    std::vector<int> phi(n);
    for (int d = 0; d < n; ++d) phi[d] = m.phi(d);
    diag.faces = orbit_labels(phi).second;
    if (diag.vertices - diag.edges + diag.faces != 2) {
        diag.violation = "positive genus (Euler characteristic != 2)";
        return diag;
    }
    diag.ok = true;
    return diag;
}

CanonicalKey canonical_key(const RootedMap& m, int root_dart,
                           const std::vector<int>* dart_colors) {
    int n = m.dart_count();
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    label[root_dart] = 0;
    order.push_back(root_dart);
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (label[e] < 0) {
                label[e] = (int)order.size();
                order.push_back(e);
            }
        }
    }
    CanonicalKey key;
    key.reserve(n * (dart_colors ? 3 : 2));
    for (int d : order) {
        key.push_back((std::uint16_t)label[m.sigma[d]]);
        key.push_back((std::uint16_t)label[m.alpha[d]]);
    }
    if (dart_colors) {
        for (int d : order) key.push_back((std::uint16_t)(*dart_colors)[d]);
    }
    return key;
}

RootedMap canonical_relabel(const RootedMap& m) {
    int n = m.dart_count();
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    label[m.root] = 0;
    order.push_back(m.root);
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (label[e] < 0) {
                label[e] = (int)order.size();
                order.push_back(e);
            }
        }
    }
    RootedMap r;
    r.sigma.resize(n);
    r.alpha.resize(n);
    r.root = 0;
    for (int d = 0; d < n; ++d) {
        r.sigma[label[d]] = label[m.sigma[d]];
        r.alpha[label[d]] = label[m.alpha[d]];
    }
    return r;
}

Rotations rotations(const RootedMap& m, const std::vector<int>* dart_colors) {
    Rotations rot;
    auto faces = face_labels(m);
    int rf = faces[m.alpha[m.root]];
    for (int d = 0; d < m.dart_count(); ++d) {
        if (faces[m.alpha[d]] == rf) rot.all_roots.push_back(d);
    }
    std::vector<std::pair<CanonicalKey, int>> classes;
    for (int d : rot.all_roots) {
        CanonicalKey k = canonical_key(m, d, dart_colors);
        bool found = false;
        for (auto& [key, rep] : classes) {
            if (key == k) { found = true; break; }
        }
        if (!found) classes.push_back({std::move(k), d});
    }
    std::sort(classes.begin(), classes.end());
    rot.count = (int)classes.size();
    for (auto& [key, rep] : classes) rot.representatives.push_back(rep);
    return rot;
}

bool BoundaryShape::operator==(const BoundaryShape& o) const {
    auto norm = [](const std::vector<int>& v) {
        std::vector<int> r = v;
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    return h == o.h && e == o.e && norm(s) == norm(o.s);
}

std::string BoundaryShape::str() const {
    std::ostringstream os;
    os << "(" << h << "," << e;
    int top = (int)s.size() - 1;
    while (top >= 1 && s[top] == 0) --top;
    for (int k = 1; k <= top; ++k) os << "," << s[k];
    os << ")";
    return os.str();
}

namespace {

struct WalkParse {
    int e = 0;                          // bridges
    std::vector<std::vector<int>> cycles;  // each: darts of one simple cycle, in walk order
};

// First-return parse of a face boundary walk. Bridge excursions cancel as
// adjacent (d, alpha(d)) pairs on the stack; simple cycles close when a
// contiguous top segment of the stack returns to its starting vertex.
WalkParse parse_face_walk(const RootedMap& m, const std::vector<int>& walk,
                          const std::vector<int>& vertex_of) {
    // An edge traversed twice by this walk is a bridge of the face.
    std::vector<char> is_bridge_dart(m.dart_count(), 0);
    {
        std::vector<char> in_walk(m.dart_count(), 0);
        for (int d : walk) in_walk[d] = 1;
        for (int d : walk)
            if (in_walk[m.alpha[d]]) is_bridge_dart[d] = 1;
    }
    WalkParse out;
    std::vector<int> stack;
    auto head = [&](int d) { return vertex_of[m.alpha[d]]; };
    auto tail = [&](int d) { return vertex_of[d]; };
    for (int d : walk) {
        if (is_bridge_dart[d] && !stack.empty() && stack.back() == m.alpha[d]) {
            stack.pop_back();
            ++out.e;
        } else {
            stack.push_back(d);
        }
        // Close topmost simple cycles as long as one completes: the segment
        // stack[i..top] is a first-return cycle when its tail vertices are
        // pairwise distinct, contain no bridge dart, and tail(stack[i])
        // equals head(stack.top()).
        bool progress = true;
        while (progress && !stack.empty()) {
            progress = false;
            int w = head(stack.back());
            std::vector<int> seen_tails;
            for (int i = (int)stack.size() - 1; i >= 0; --i) {
                if (is_bridge_dart[stack[i]]) break;
                int dv = tail(stack[i]);
                if (std::find(seen_tails.begin(), seen_tails.end(), dv) != seen_tails.end())
                    break;
                seen_tails.push_back(dv);
                if (dv == w) {
                    out.cycles.emplace_back(stack.begin() + i, stack.end());
                    stack.resize(i);
                    progress = true;
                    break;
                }
            }
        }
    }
    if (!stack.empty()) throw std::logic_error("face walk parse left unmatched darts");
    return out;
}

} // namespace

BoundaryShape boundary_shape_at(const RootedMap& m, int start_dart) {
    auto verts = vertex_labels(m);
    auto walk = face_orbit(m, start_dart);
    auto parse = parse_face_walk(m, walk, verts);
    BoundaryShape shape;
    shape.e = parse.e;
    int hcycle = -1;
    for (size_t c = 0; c < parse.cycles.size(); ++c) {
        if (std::find(parse.cycles[c].begin(), parse.cycles[c].end(), start_dart) !=
            parse.cycles[c].end()) {
            hcycle = (int)c;
            break;
        }
    }
    if (hcycle < 0) throw std::invalid_argument("start dart is a bridge of its face");
    shape.h = (int)parse.cycles[hcycle].size();
    int maxlen = 0;
    for (size_t c = 0; c < parse.cycles.size(); ++c)
        if ((int)c != hcycle) maxlen = std::max(maxlen, (int)parse.cycles[c].size());
    shape.s.assign(maxlen + 1, 0);
    for (size_t c = 0; c < parse.cycles.size(); ++c)
        if ((int)c != hcycle) shape.s[parse.cycles[c].size()] += 1;
    return shape;
}

BoundaryShape boundary_shape(const RootedMap& m, int face_dart) {
    auto verts = vertex_labels(m);
    auto walk = face_orbit(m, face_dart);
    // rotate the walk to start at its smallest dart, for determinism
    auto mn = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), mn, walk.end());
    auto parse = parse_face_walk(m, walk, verts);
    if (parse.cycles.empty()) {
        // all-bridge boundary (tree-like face): degenerate shape with h = 0
        BoundaryShape shape;
        shape.h = 0;
        shape.e = parse.e;
        return shape;
    }
    // start at the first cycle dart in walk order
    std::vector<char> on_cycle(m.dart_count(), 0);
    for (auto& c : parse.cycles)
        for (int d : c) on_cycle[d] = 1;
    for (int d : walk)
        if (on_cycle[d]) return boundary_shape_at(m, d);
    throw std::invalid_argument("face boundary has no simple cycle");
}

std::string write_map(const RootedMap& m, std::optional<int> exterior_dart) {
    std::ostringstream os;
    os << "darts=" << m.dart_count() << " root=" << m.root;
    if (exterior_dart) os << " exterior=" << *exterior_dart;
    os << "\n";
    for (int i = 0; i < m.dart_count(); ++i) os << (i ? " " : "") << m.sigma[i];
    os << "\n";
    for (int i = 0; i < m.dart_count(); ++i) os << (i ? " " : "") << m.alpha[i];
    os << "\n";
    return os.str();
}

ParsedMap read_map(std::istream& is) {
    ParsedMap out;
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty map input");
    int darts = -1;
    {
        std::istringstream h(line);
        std::string kv;
        while (h >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad map header token: " + kv);
            std::string key = kv.substr(0, eq);
            int val = std::stoi(kv.substr(eq + 1));
            if (key == "darts") darts = val;
            else if (key == "root") out.map.root = val;
            else if (key == "exterior") out.exterior_dart = val;
            else throw std::invalid_argument("unknown map header key: " + key);
        }
    }
    if (darts <= 0) throw std::invalid_argument("map header missing darts");
    auto read_perm = [&](std::vector<int>& p) {
        if (!std::getline(is, line)) throw std::invalid_argument("truncated map input");
        std::istringstream ls(line);
        p.resize(darts);
        for (int i = 0; i < darts; ++i) {
            if (!(ls >> p[i])) throw std::invalid_argument("short permutation line");
        }
    };
    read_perm(out.map.sigma);
    read_perm(out.map.alpha);
    auto diag = validate(out.map);
    if (!diag.ok) throw std::invalid_argument("invalid map: " + diag.violation);
    return out;
}

ParsedMap read_map_string(const std::string& text) {
    std::istringstream is(text);
    return read_map(is);
}

ParsedMap read_map_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open map file: " + path);
    return read_map(f);
}

} // namespace pm
