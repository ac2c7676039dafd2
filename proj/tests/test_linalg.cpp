#include <doctest.h>

#include "helpers.hpp"

using namespace axc;
using namespace axc::testing;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c,
                     std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) m.set_row(i, random_vec(f, c, rng));
    return m;
}

}  // namespace

TEST_CASE("rref canonical examples") {
    FieldSpec f = QQ();
    Matrix id = Matrix::identity(f, 3);
    auto [r1, p1] = rref(id);
    CHECK(r1 == id);
    CHECK(p1 == std::vector<std::size_t>{0, 1, 2});

    Matrix z(f, 2, 3);
    auto [r2, p2] = rref(z);
    CHECK(r2 == z);
    CHECK(p2.empty());

    Matrix m(f, 2, 2);
    m.set_row(0, vec(f, {2, 4}));
    m.set_row(1, vec(f, {1, 2}));
    auto [r3, p3] = rref(m);
    CHECK(p3 == std::vector<std::size_t>{0});
    CHECK(r3.row(0) == vec(f, {1, 2}));
    CHECK(r3.row(1).is_zero());
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
    std::mt19937_64 rng(42);
    for (const FieldSpec& f : {QQ(), FieldSpec::prime(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Matrix m = random_matrix(f, r, c, rng);
            auto [r1, p1] = rref(m);
            auto [r2, p2] = rref(r1);
            CHECK(r1 == r2);
            CHECK(p1 == p2);
            CHECK(rank(m) + kernel(m).dim() == c);
        }
    }
}

TEST_CASE("kernel examples") {
    FieldSpec f = QQ();
    CHECK(kernel(Matrix::identity(f, 4)).dim() == 0);
    Matrix z(f, 2, 3);
    CHECK(kernel(z) == Subspace::full(f, 3));
}

TEST_CASE("two spanning sets give one canonical subspace") {
    FieldSpec f = QQ();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_vec(f, 4, rng));
        Subspace s = Subspace::span(f, 4, gens);
        // rescale and recombine the generators
        std::vector<Vec> gens2;
        gens2.push_back(q(3) * gens[0]);
        gens2.push_back(gens[1] + gens[0]);
        gens2.push_back(gens[2] - gens[1]);
        gens2.push_back(gens[0] + gens[1] + gens[2]);
        CHECK(Subspace::span(f, 4, gens2) == s);
    }
}

TEST_CASE("subspace membership and operations") {
    FieldSpec f = QQ();
    Subspace u = Subspace::span(f, 3, {vec(f, {0, 1, -1})});
    CHECK(u.contains(vec(f, {0, 2, -2})));
    CHECK_FALSE(u.contains(vec(f, {0, 1, 1})));
    CHECK(subspace_intersect(u, Subspace::zero(f, 3)) == Subspace::zero(f, 3));

    Subspace v = Subspace::span(f, 3, {vec(f, {1, 0, 0}), vec(f, {0, 1, 0})});
    Subspace w = Subspace::span(f, 3, {vec(f, {0, 1, 0}), vec(f, {0, 0, 1})});
    CHECK(subspace_sum(v, w) == Subspace::full(f, 3));
    CHECK(subspace_intersect(v, w) ==
          Subspace::span(f, 3, {vec(f, {0, 1, 0})}));

    CHECK(is_direct_sum({Subspace::span(f, 3, {vec(f, {1, 0, 0})}),
                         Subspace::span(f, 3, {vec(f, {0, 1, 0})}),
                         Subspace::span(f, 3, {vec(f, {0, 0, 1})})},
                        3));
    CHECK_FALSE(is_direct_sum({v, w}, 3));  // dims 2+2 > 3
}

TEST_CASE("solve") {
    FieldSpec f = QQ();
    Matrix a(f, 2, 2);
    a.set_row(0, vec(f, {1, 1}));
    a.set_row(1, vec(f, {0, 1}));
    auto x = solve(a, vec(f, {3, 1}));
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == vec(f, {3, 1}));
    Matrix bad(f, 2, 1);
    bad.set_row(0, vec(f, {1}));
    bad.set_row(1, vec(f, {1}));
    CHECK_FALSE(solve(bad, vec(f, {0, 1})).has_value());
}

TEST_CASE("matrix inverse") {
    FieldSpec f = QQ();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(f, 3, 3, rng);
        auto inv = inverse(m);
        if (!inv) continue;
        CHECK((*inv) * m == Matrix::identity(f, 3));
        CHECK(m * (*inv) == Matrix::identity(f, 3));
    }
    CHECK_FALSE(inverse(Matrix(f, 2, 2)).has_value());
}
