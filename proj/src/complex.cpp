#include "kkbounds/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace kkb {

namespace {

Face sorted_set(Face face) {
    std::sort(face.begin(), face.end());
    require(std::adjacent_find(face.begin(), face.end()) == face.end(), "a face may not repeat a vertex");
    require(face.empty() || face.front() > 0, "vertex labels must be positive");
    return face;
}

[[noreturn]] void face_limit(std::size_t limit) {
    throw LimitExceeded("complex exceeds the storage limit of " + std::to_string(limit) + " faces");
}

}  // namespace

bool RevlexLess::operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// For sorted sets of equal size, the top-most position where they differ
// holds max(A symmetric-difference B) on the side with the larger entry.
bool revlex_precedes(const Face& a, const Face& b) {
    require(a.size() == b.size(), "revlex_precedes requires sets of equal size");
    const Face sa = sorted_set(a);
    const Face sb = sorted_set(b);
    require(sa != sb, "revlex_precedes requires distinct sets");
    return RevlexLess{}(sa, sb);
}

SimplicialComplex::SimplicialComplex() : levels_{{Face{}}} {}

SimplicialComplex SimplicialComplex::closure(const std::vector<Face>& generators,
                                             const std::vector<int>& extra_vertices, const OracleLimits& limits) {
    std::vector<std::set<Face, RevlexLess>> sets(1);
    sets[0].insert(Face{});
    std::size_t total = 1;

    auto insert_closed = [&](const Face& face) {
        if (face.size() >= 63 || (std::size_t{1} << face.size()) > limits.max_faces) face_limit(limits.max_faces);
        if (sets.size() <= face.size()) sets.resize(face.size() + 1);
        if (sets[face.size()].contains(face)) return;
        const std::uint64_t end = std::uint64_t{1} << face.size();
        for (std::uint64_t mask = 1; mask < end; ++mask) {
            Face sub;
            for (std::size_t i = 0; i < face.size(); ++i)
                if (mask >> i & 1u) sub.push_back(face[i]);
            if (sets[sub.size()].insert(std::move(sub)).second && ++total > limits.max_faces)
                face_limit(limits.max_faces);
        }
    };

    std::vector<Face> ordered;
    ordered.reserve(generators.size() + extra_vertices.size());
    for (const Face& g : generators) ordered.push_back(sorted_set(g));
    for (int v : extra_vertices) ordered.push_back(sorted_set({v}));
    // Largest first, so faces already covered are skipped without enumeration.
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Face& a, const Face& b) { return a.size() > b.size(); });
    for (const Face& face : ordered) insert_closed(face);

    SimplicialComplex complex;
    complex.levels_.clear();
    for (auto& level : sets) {
        if (level.empty()) break;
        complex.levels_.emplace_back(level.begin(), level.end());
    }
    if (complex.levels_.size() > 1)
        for (const Face& v : complex.levels_[1]) complex.vertices_.push_back(v.front());
    return complex;
}

std::span<const Face> SimplicialComplex::faces_of_size(std::size_t i) const {
    if (i >= levels_.size()) return {};
    return levels_[i];
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& level : levels_) total += level.size();
    return total;
}

bool SimplicialComplex::contains(const Face& face) const {
    const Face sorted = sorted_set(face);
    if (sorted.size() >= levels_.size()) return false;
    const auto& level = levels_[sorted.size()];
    return std::binary_search(level.begin(), level.end(), sorted, RevlexLess{});
}

Graph::Graph(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    require(vertices_.empty() || vertices_.front() > 0, "vertex labels must be positive");
}

void Graph::add_edge(int u, int v) {
    require(u != v, "graphs have no loops");
    require(std::binary_search(vertices_.begin(), vertices_.end(), u) &&
                std::binary_search(vertices_.begin(), vertices_.end(), v),
            "edge references a missing vertex");
    edges_.emplace(std::min(u, v), std::max(u, v));
}

bool Graph::adjacent(int u, int v) const { return edges_.contains({std::min(u, v), std::max(u, v)}); }

Graph to_graph(const TuranGraph& t) {
    std::vector<int> vertices(t.n());
    for (int v = 1; v <= t.n(); ++v) vertices[v - 1] = v;
    Graph g(std::move(vertices));
    for (int u = 1; u <= t.n(); ++u)
        for (int v = u + 1; v <= t.n(); ++v)
            if (t.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

Graph one_skeleton(const SimplicialComplex& complex) {
    Graph g(complex.vertices());
    for (const Face& e : complex.faces_of_size(2)) g.add_edge(e[0], e[1]);
    return g;
}

std::vector<Face> revlex_ksets(std::size_t m, int k) {
    require(k >= 1, "revlex_ksets requires k >= 1");
    std::vector<Face> sets;
    sets.reserve(m);
    Face current(k);
    for (int i = 0; i < k; ++i) current[i] = i + 1;
    for (std::size_t n = 0; n < m; ++n) {
        sets.push_back(current);
        // Successor: bump the lowest entry that has room below its neighbour,
        // then reset everything beneath it to 1, 2, ...
        int i = 0;
        while (i + 1 < k && current[i] + 1 == current[i + 1]) ++i;
        ++current[i];
        for (int j = 0; j < i; ++j) current[j] = j + 1;
    }
    return sets;
}

SimplicialComplex revlex_complex(const Count& m, int k, const OracleLimits& limits) {
    require(m >= 1, "revlex_complex requires m >= 1");
    require(k >= 1, "revlex_complex requires k >= 1");
    if (m > limits.max_faces) face_limit(limits.max_faces);
    return SimplicialComplex::closure(revlex_ksets(m.convert_to<std::size_t>(), k), {}, limits);
}

FaceVector f_vector(const SimplicialComplex& complex) {
    std::vector<Count> entries;
    for (std::size_t i = 0; i < complex.levels(); ++i) entries.emplace_back(complex.faces_of_size(i).size());
    return FaceVector(std::move(entries));
}

SimplicialComplex replicate(const SimplicialComplex& complex, int q, const OracleLimits& limits) {
    require(q >= 1, "replicate requires q >= 1");
    Count projected = 0;
    Count scale = 1;
    for (std::size_t i = 0; i < complex.levels(); ++i, scale *= q) projected += scale * complex.faces_of_size(i).size();
    if (projected > limits.max_faces) face_limit(limits.max_faces);

    const auto& vertices = complex.vertices();
    auto clone = [&](int v, int copy) {
        const auto rank = std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
        return static_cast<int>(rank) * q + copy + 1;
    };
    std::vector<Face> generators;
    for (std::size_t i = complex.levels(); i-- > 1;) {
        for (const Face& face : complex.faces_of_size(i)) {
            std::vector<int> copies(face.size(), 0);
            for (;;) {
                Face image(face.size());
                for (std::size_t j = 0; j < face.size(); ++j) image[j] = clone(face[j], copies[j]);
                generators.push_back(std::move(image));
                std::size_t j = 0;
                while (j < copies.size() && ++copies[j] == q) copies[j++] = 0;
                if (j == copies.size()) break;
            }
        }
    }
    return SimplicialComplex::closure(generators, {}, limits);
}

SimplicialComplex clique_complex(const Graph& graph, const OracleLimits& limits) {
    const auto& vertices = graph.vertices();
    std::vector<Face> cliques;
    std::vector<Face> frontier;
    for (int v : vertices) frontier.push_back({v});
    while (!frontier.empty()) {
        std::vector<Face> next;
        for (const Face& c : frontier) {
            const auto start = std::upper_bound(vertices.begin(), vertices.end(), c.back());
            for (auto it = start; it != vertices.end(); ++it) {
                if (std::all_of(c.begin(), c.end(), [&](int u) { return graph.adjacent(u, *it); })) {
                    Face bigger = c;
                    bigger.push_back(*it);
                    next.push_back(std::move(bigger));
                }
            }
        }
        cliques.insert(cliques.end(), frontier.begin(), frontier.end());
        if (cliques.size() + 1 > limits.max_faces) face_limit(limits.max_faces);
        frontier = std::move(next);
    }
    return SimplicialComplex::closure(cliques, {}, limits);
}

// A clique that is not a face contains a minimal non-face S with |S| >= 3;
// S minus its largest vertex is a face, so extending faces by one larger
// adjacent vertex finds S.
bool is_flag(const SimplicialComplex& complex) {
    const Graph skeleton = one_skeleton(complex);
    const auto& vertices = complex.vertices();
    for (std::size_t size = 2; size < complex.levels(); ++size) {
        for (const Face& face : complex.faces_of_size(size)) {
            const auto start = std::upper_bound(vertices.begin(), vertices.end(), face.back());
            for (auto it = start; it != vertices.end(); ++it) {
                if (!std::all_of(face.begin(), face.end(), [&](int u) { return skeleton.adjacent(u, *it); }))
                    continue;
                Face bigger = face;
                bigger.push_back(*it);
                if (!complex.contains(bigger)) return false;
            }
        }
    }
    return true;
}

namespace {

bool color_from(std::size_t index, const std::vector<std::vector<bool>>& adjacent, std::vector<int>& colors, int r,
                int used) {
    if (index == colors.size()) return true;
    // Colors are interchangeable, so only one fresh color is ever tried.
    const int limit = std::min(r, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        for (std::size_t j = 0; j < index && !clash; ++j) clash = adjacent[index][j] && colors[j] == c;
        if (clash) continue;
        colors[index] = c;
        if (color_from(index + 1, adjacent, colors, r, std::max(used, c + 1))) return true;
    }
    return false;
}

}  // namespace

bool is_r_colorable(const SimplicialComplex& complex, int r, const OracleLimits& limits) {
    require(r >= 1, "is_r_colorable requires r >= 1");
    const auto& vertices = complex.vertices();
    if (vertices.size() > static_cast<std::size_t>(limits.max_vertices))
        throw LimitExceeded("is_r_colorable: " + std::to_string(vertices.size()) + " vertices exceed oracle limit " +
                            std::to_string(limits.max_vertices));
    const Graph skeleton = one_skeleton(complex);
    std::vector<std::vector<bool>> adjacent(vertices.size(), std::vector<bool>(vertices.size(), false));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            adjacent[i][j] = i != j && skeleton.adjacent(vertices[i], vertices[j]);
    std::vector<int> colors(vertices.size(), -1);
    return color_from(0, adjacent, colors, r, 0);
}

int chromatic_number(const SimplicialComplex& complex, const OracleLimits& limits) {
    if (complex.vertices().empty()) return 0;
    int r = 1;
    while (!is_r_colorable(complex, r, limits)) ++r;
    return r;
}

InvalidFaceVector::InvalidFaceVector(int failing_k)
    : PreconditionError("face vector fails the shadow inequality at k=" + std::to_string(failing_k)),
      failing_k_(failing_k) {}

SimplicialComplex realize_face_vector(const FaceVector& f, const OracleLimits& limits) {
    const Validation verdict = validate_face_vector(f);
    if (!verdict) throw InvalidFaceVector(*verdict.failing_k);
    Count total = 0;
    for (const Count& e : f.entries()) total += e;
    if (total > limits.max_faces) face_limit(limits.max_faces);
    std::vector<Face> generators;
    for (std::size_t i = 1; i < f.size(); ++i) {
        auto sets = revlex_ksets(f.faces_on(i).convert_to<std::size_t>(), static_cast<int>(i));
        generators.insert(generators.end(), sets.begin(), sets.end());
    }
    return SimplicialComplex::closure(generators, {}, limits);
}

SimplicialComplex random_complex(int n, double density, std::uint64_t seed, RandomComplexOptions options,
                                 const OracleLimits& limits) {
    require(n >= 0, "random_complex requires n >= 0");
    require(density >= 0.0 && density <= 1.0, "random_complex density must lie in [0,1]");
    require(options.prune_fraction >= 0.0 && options.prune_fraction <= 1.0,
            "random_complex prune fraction must lie in [0,1]");
    if (n > limits.max_vertices)
        throw LimitExceeded("random_complex: n = " + std::to_string(n) + " exceeds oracle limit " +
                            std::to_string(limits.max_vertices));
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(density);
    std::vector<int> vertices(n);
    for (int v = 1; v <= n; ++v) vertices[v - 1] = v;
    Graph g(vertices);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    SimplicialComplex complex = clique_complex(g, limits);
    if (options.prune_fraction <= 0.0 || complex.dimension() < 1) return complex;

    std::bernoulli_distribution drop(options.prune_fraction);
    std::vector<Face> kept;
    const std::size_t top = complex.levels() - 1;
    for (std::size_t i = 1; i < top; ++i)
        kept.insert(kept.end(), complex.faces_of_size(i).begin(), complex.faces_of_size(i).end());
    for (const Face& face : complex.faces_of_size(top))
        if (!drop(rng)) kept.push_back(face);
    return SimplicialComplex::closure(kept, vertices, limits);
}

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
    for (std::size_t i = 1; i < complex.levels(); ++i) {
        for (const Face& face : complex.faces_of_size(i)) {
            for (std::size_t j = 0; j < face.size(); ++j) {
                if (j) out << ',';
                out << face[j];
            }
            out << '\n';
        }
    }
}

std::string serialize(const SimplicialComplex& complex) {
    std::ostringstream out;
    write_complex(out, complex);
    return out.str();
}

SimplicialComplex parse_complex(std::istream& in, const OracleLimits& limits) {
    std::vector<Face> faces;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Face face;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::size_t used = 0;
            int label = 0;
            try {
                label = std::stoi(field, &used);
            } catch (const std::exception&) {
                throw PreconditionError("complex listing: bad vertex label '" + field + "'");
            }
            if (field.find_first_not_of(" \t\r", used) != std::string::npos)
                throw PreconditionError("complex listing: bad vertex label '" + field + "'");
            face.push_back(label);
        }
        faces.push_back(std::move(face));
    }
    return SimplicialComplex::closure(faces, {}, limits);
}

}  // namespace kkb
