#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kkbounds/cascade.hpp"
#include "kkbounds/combinatorics.hpp"
#include "kkbounds/count.hpp"

namespace kkb {

/// A face as strictly increasing positive vertex labels.
using Face = std::vector<int>;

/// Rev-lex (colex) order on distinct sets of equal size: A precedes B iff
/// max(A symmetric-difference B) lies in B. Arguments need not be sorted.
bool revlex_precedes(const Face& a, const Face& b);

/// Strict weak ordering by (size, rev-lex) on sorted faces.
struct RevlexLess {
    bool operator()(const Face& a, const Face& b) const;
};

/// A vertex set with a downward-closed family of faces, empty face included.
/// Faces are kept per cardinality in rev-lex order.
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Downward closure of the given faces plus singletons for extra vertices.
    static SimplicialComplex closure(const std::vector<Face>& generators,
                                     const std::vector<int>& extra_vertices = {},
                                     const OracleLimits& limits = {});

    const std::vector<int>& vertices() const { return vertices_; }
    /// Faces on i vertices, sorted rev-lex.
    std::span<const Face> faces_of_size(std::size_t i) const;
    std::size_t levels() const { return levels_.size(); }
    std::size_t face_count() const;
    int dimension() const { return static_cast<int>(levels_.size()) - 2; }
    bool contains(const Face& face) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<int> vertices_;
    std::vector<std::vector<Face>> levels_;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<int> vertices);

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& vertices() const { return vertices_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

private:
    std::vector<int> vertices_;
    std::set<std::pair<int, int>> edges_;
};

Graph to_graph(const TuranGraph& t);
Graph one_skeleton(const SimplicialComplex& complex);

/// The first m k-subsets of {1, 2, ...} in rev-lex order, by successor generation.
std::vector<Face> revlex_ksets(std::size_t m, int k);

SimplicialComplex revlex_complex(const Count& m, int k, const OracleLimits& limits = {});

FaceVector f_vector(const SimplicialComplex& complex);

/// Every vertex cloned q times; vertex i (1-based rank) copy j becomes
/// label (i-1)*q + j.
SimplicialComplex replicate(const SimplicialComplex& complex, int q,
                            const OracleLimits& limits = {});

SimplicialComplex clique_complex(const Graph& graph, const OracleLimits& limits = {});

bool is_flag(const SimplicialComplex& complex);

bool is_r_colorable(const SimplicialComplex& complex, int r, const OracleLimits& limits = {});

/// Smallest r for which is_r_colorable holds (0 for a vertex-free complex).
int chromatic_number(const SimplicialComplex& complex, const OracleLimits& limits = {});

/// Thrown by realize_face_vector for a vector failing the shadow inequalities.
class InvalidFaceVector : public PreconditionError {
public:
    InvalidFaceVector(int failing_k);
    int failing_k() const { return failing_k_; }

private:
    int failing_k_;
};

/// Complex whose i-faces are the first f_{i-1} rev-lex i-sets.
SimplicialComplex realize_face_vector(const FaceVector& f, const OracleLimits& limits = {});

struct RandomComplexOptions {
    /// Probability of deleting each top-dimensional face after the clique step.
    double prune_fraction = 0.0;
};

/// Clique complex of G(n, density) on vertices 1..n, optionally pruned.
/// Deterministic for fixed arguments.
SimplicialComplex random_complex(int n, double density, std::uint64_t seed,
                                 RandomComplexOptions options = {},
                                 const OracleLimits& limits = {});

/// One non-empty face per line, labels comma-separated, ordered by
/// (size, rev-lex). The empty face is implicit.
void write_complex(std::ostream& out, const SimplicialComplex& complex);
std::string serialize(const SimplicialComplex& complex);
SimplicialComplex parse_complex(std::istream& in, const OracleLimits& limits = {});

}  // namespace kkb
