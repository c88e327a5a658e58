#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "kkbounds/cascade.hpp"
#include "kkbounds/combinatorics.hpp"
#include "kkbounds/complex.hpp"

using namespace kkb;

namespace {

SimplicialComplex simplex(int n) {
    Face all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    return SimplicialComplex::closure({all});
}

Graph cycle(int n) {
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    Graph g(vs);
    for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
    return g;
}

FaceVector fv(std::initializer_list<long long> xs) { return FaceVector(xs); }

std::vector<Face> listed(std::span<const Face> faces) { return {faces.begin(), faces.end()}; }

}  // namespace

TEST_CASE("rev-lex comparison") {
    CHECK(revlex_precedes({2, 3, 5}, {1, 4, 5}));
    CHECK(revlex_precedes({3, 4, 5}, {1, 2, 6}));
    CHECK_FALSE(revlex_precedes({1, 4, 5}, {2, 3, 5}));
    CHECK_THROWS_AS(revlex_precedes({1, 2}, {1, 2, 3}), PreconditionError);
    CHECK_THROWS_AS(revlex_precedes({1, 2}, {1, 2}), PreconditionError);
}

TEST_CASE("rev-lex comparison matches the symmetric-difference definition") {
    for (int k = 1; k <= 4; ++k) {
        const auto sets = oracle::sorted_ksets(7, k);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j)
                if (i != j) CHECK(revlex_precedes(sets[i], sets[j]) == (i < j));
    }
}

TEST_CASE("first k-sets in rev-lex order") {
    CHECK(revlex_ksets(4, 2) == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}, {1, 4}});
    CHECK(revlex_ksets(1, 5) == std::vector<Face>{{1, 2, 3, 4, 5}});
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto count = binomial(n, k).convert_to<std::size_t>();
            CHECK(revlex_ksets(count, k) == oracle::sorted_ksets(n, k));
        }
    for (int k = 1; k <= 5; ++k) {
        const auto sets = revlex_ksets(3000, k);
        for (std::size_t i = 0; i < sets.size(); i += 7) CHECK(sets[i] == oracle::unrank_revlex(i, k));
    }
}

TEST_CASE("rev-lex complexes") {
    CHECK(f_vector(revlex_complex(11, 3)) == fv({1, 6, 12, 11}));
    CHECK(f_vector(revlex_complex(1, 3)) == fv({1, 3, 3, 1}));
    CHECK(f_vector(revlex_complex(binomial(5, 3), 3)) == fv({1, 5, 10, 10}));
    CHECK_THROWS_AS(revlex_complex(0, 3), PreconditionError);
    CHECK_THROWS_AS(revlex_complex(binomial(60, 3), 3), LimitExceeded);
}

TEST_CASE("rev-lex complexes attain the shadow bound") {
    for (int k = 2; k <= 5; ++k)
        for (int m = 1; m <= 200; ++m) {
            const SimplicialComplex complex = revlex_complex(m, k);
            CHECK(oracle::downward_closed(complex));
            const FaceVector f = f_vector(complex);
            CHECK(f.faces_on(k) == m);
            for (int p = 1; p < k; ++p) CHECK(shadow_bound(m, k, p) == f.faces_on(p));
        }
}

TEST_CASE("face vectors") {
    CHECK(f_vector(simplex(4)) == fv({1, 4, 6, 4, 1}));
    CHECK(f_vector(SimplicialComplex::closure({})) == fv({1}));
    CHECK(f_vector(SimplicialComplex::closure({}, {1, 2, 3})) == fv({1, 3}));
}

TEST_CASE("replication") {
    const SimplicialComplex edge = SimplicialComplex::closure({{1, 2}});
    CHECK(f_vector(replicate(edge, 2)) == fv({1, 4, 4}));
    CHECK(f_vector(replicate(simplex(3), 2)) == fv({1, 6, 12, 8}));
    const SimplicialComplex base = revlex_complex(7, 3);
    CHECK(replicate(base, 1) == base);
    for (int q = 1; q <= 3; ++q) {
        const FaceVector fb = f_vector(base);
        const FaceVector fq = f_vector(replicate(base, q));
        Count scale = 1;
        for (std::size_t i = 0; i < fb.size(); ++i, scale *= q) CHECK(fq.faces_on(i) == scale * fb.faces_on(i));
    }
    CHECK_THROWS_AS(replicate(base, 0), PreconditionError);
}

TEST_CASE("clique complexes") {
    const SimplicialComplex square = clique_complex(cycle(4));
    CHECK(f_vector(square) == fv({1, 4, 4}));
    CHECK(square.dimension() == 1);
    CHECK(f_vector(clique_complex(to_graph(TuranGraph(6, 3)))) == fv({1, 6, 12, 8}));
    for (int n = 1; n <= 7; ++n) CHECK(clique_complex(one_skeleton(simplex(n))) == simplex(n));
    for (int n = 1; n <= 10; ++n)
        for (int r = 1; r <= n; ++r) {
            const FaceVector f = f_vector(clique_complex(to_graph(TuranGraph(n, r))));
            for (int k = 0; k <= n; ++k) CHECK(f.faces_on(k) == turan_coefficient(n, k, r));
        }
}

TEST_CASE("flag detection") {
    const SimplicialComplex hollow = SimplicialComplex::closure({{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_flag(hollow));
    CHECK(is_flag(simplex(5)));
    CHECK(is_flag(clique_complex(cycle(5))));
    CHECK_FALSE(is_flag(revlex_complex(11, 3)));
}

TEST_CASE("colorability") {
    const SimplicialComplex turan = clique_complex(to_graph(TuranGraph(6, 3)));
    CHECK(is_r_colorable(turan, 3));
    CHECK_FALSE(is_r_colorable(turan, 2));
    CHECK_FALSE(is_r_colorable(simplex(4), 3));
    CHECK(is_r_colorable(simplex(4), 4));
    CHECK(chromatic_number(clique_complex(cycle(5))) == 3);
    CHECK(chromatic_number(SimplicialComplex::closure({})) == 0);
    CHECK_THROWS_AS(is_r_colorable(turan, 0), PreconditionError);
}

TEST_CASE("colorability agrees with exhaustive search") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const SimplicialComplex complex = random_complex(1 + seed % 7, 0.55, seed);
        for (int r = 1; r <= 4; ++r) {
            CHECK(is_r_colorable(complex, r) == oracle::colorable_exhaustive(complex, r));
            if (is_r_colorable(complex, r)) CHECK(is_r_colorable(complex, r + 1));
        }
    }
}

TEST_CASE("rev-lex complexes below the colorability threshold") {
    for (int k = 2; k <= 4; ++k)
        for (int r = k; r <= 8; ++r) {
            const Count top = binomial(r, k) + binomial(r - 1, k - 1);
            for (Count m = 1; m <= top; m += 3) {
                const SimplicialComplex complex = revlex_complex(m, k);
                for (const Face& face : complex.faces_of_size(k))
                    CHECK_FALSE((std::count(face.begin(), face.end(), r) && std::count(face.begin(), face.end(), r + 1)));
                CHECK(is_r_colorable(complex, r));
            }
        }
}

TEST_CASE("realizing face vectors") {
    const SimplicialComplex complex = realize_face_vector(fv({1, 4, 5, 2}));
    CHECK(listed(complex.faces_of_size(3)) == std::vector<Face>{{1, 2, 3}, {1, 2, 4}});
    CHECK(listed(complex.faces_of_size(2)) == std::vector<Face>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    CHECK(oracle::downward_closed(complex));
    CHECK(f_vector(realize_face_vector(fv({1, 6}))) == fv({1, 6}));
    try {
        realize_face_vector(fv({1, 3, 3, 2}));
        FAIL("expected rejection");
    } catch (const InvalidFaceVector& e) {
        CHECK(e.failing_k() == 3);
    }
}

TEST_CASE("random complexes") {
    CHECK(f_vector(random_complex(6, 0.0, 3)) == fv({1, 6}));
    CHECK(random_complex(6, 1.0, 3) == simplex(6));
    CHECK(random_complex(8, 0.5, 42) == random_complex(8, 0.5, 42));
    CHECK(validate_face_vector(f_vector(random_complex(8, 0.5, 42))));
    RandomComplexOptions pruned;
    pruned.prune_fraction = 0.5;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const SimplicialComplex plain = random_complex(7, 0.6, seed);
        CHECK(is_flag(plain));
        CHECK(clique_complex(one_skeleton(plain)) == plain);
        const SimplicialComplex cut = random_complex(7, 0.6, seed, pruned);
        CHECK(oracle::downward_closed(cut));
        CHECK(validate_face_vector(f_vector(cut)));
    }
    CHECK_THROWS_AS(random_complex(5, 1.5, 1), PreconditionError);
    CHECK_THROWS_AS(random_complex(20, 0.5, 1), LimitExceeded);
}

TEST_CASE("serialization round trip") {
    const SimplicialComplex complex = realize_face_vector(fv({1, 4, 5, 2}));
    const std::string text = serialize(complex);
    CHECK(text == "1\n2\n3\n4\n1,2\n1,3\n2,3\n1,4\n2,4\n1,2,3\n1,2,4\n");
    std::istringstream in(text);
    CHECK(parse_complex(in) == complex);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const SimplicialComplex random = random_complex(8, 0.5, seed);
        std::istringstream again(serialize(random));
        CHECK(parse_complex(again) == random);
    }
    std::istringstream bad("1,2\n1,x\n");
    CHECK_THROWS_AS(parse_complex(bad), PreconditionError);
}
