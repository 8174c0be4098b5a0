#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mrsc/linalg.hpp"
#include "mrsc/rng.hpp"
#include "oracles.hpp"

using mrsc::Field;
using mrsc::FieldMatrix;
using mrsc::make_field;

TEST_SUITE("linalg") {

TEST_CASE("matmul matches the definition") {
    mrsc::Rng rng(1);
    for (const Field& f : {make_field(2, 3), make_field(3, 2)}) {
        for (int i = 0; i < 20; ++i) {
            FieldMatrix a = oracle::random_matrix(rng, f, 3, 4);
            FieldMatrix b = oracle::random_matrix(rng, f, 4, 2);
            CHECK(mrsc::matmul(a, b) == oracle::mat_mul(a, b));
        }
    }
    CHECK_THROWS_AS(mrsc::matmul(FieldMatrix(make_field(2, 3), 2, 3),
                                 FieldMatrix(make_field(2, 3), 2, 3)),
                    mrsc::InputError);
}

TEST_CASE("matvec and vecmat agree with matmul") {
    mrsc::Rng rng(2);
    const Field f = make_field(2, 3);
    FieldMatrix m = oracle::random_matrix(rng, f, 3, 5);
    std::vector<std::uint64_t> v{1, 3, 7, 2, 5};
    CHECK(mrsc::matvec(m, v) == oracle::mat_vec(m, v));
    std::vector<std::uint64_t> u{4, 6, 2};
    FieldMatrix urow(f, 1, 3, {4, 6, 2});
    CHECK(mrsc::vecmat(u, m) == oracle::mat_mul(urow, m).row(0));
}

TEST_CASE("rank equals the largest nonzero minor") {
    mrsc::Rng rng(3);
    for (const Field& f : {make_field(2, 2), make_field(3, 2), make_field(2, 3)}) {
        for (int i = 0; i < 25; ++i) {
            FieldMatrix m = oracle::random_matrix(rng, f, 3, 4);
            CHECK(mrsc::rank(m) == oracle::rank_by_minors(m));
        }
        // products of thin matrices give reliably deficient cases
        for (int i = 0; i < 10; ++i) {
            FieldMatrix m = oracle::mat_mul(oracle::random_matrix(rng, f, 4, 2),
                                            oracle::random_matrix(rng, f, 2, 4));
            CHECK(mrsc::rank(m) == oracle::rank_by_minors(m));
        }
    }
    CHECK(mrsc::rank(FieldMatrix(make_field(2, 1), 0, 4)) == 0);
}

TEST_CASE("rref is canonical and spans the same rows") {
    mrsc::Rng rng(4);
    const Field f = make_field(3, 2);
    for (int i = 0; i < 20; ++i) {
        FieldMatrix m = oracle::random_matrix(rng, f, 3, 4);
        std::vector<std::uint32_t> pivots;
        FieldMatrix r = mrsc::rref(m, &pivots);
        CHECK(r == mrsc::rref(r));
        CHECK(pivots.size() == mrsc::rank(m));
        CHECK(std::is_sorted(pivots.begin(), pivots.end()));
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            CHECK(r.at(pi, pivots[pi]) == 1);
            for (std::uint64_t rr = 0; rr < r.rows; ++rr)
                if (rr != pi) CHECK(r.at(rr, pivots[pi]) == 0);
        }
        CHECK(oracle::span_set(r) == oracle::span_set(m));
    }
}

TEST_CASE("kernel basis solves and fills the kernel") {
    mrsc::Rng rng(5);
    for (const Field& f : {make_field(2, 2), make_field(3, 1)}) {
        for (int i = 0; i < 15; ++i) {
            FieldMatrix m = oracle::random_matrix(rng, f, 2, 4);
            FieldMatrix kb = mrsc::kernel_basis(m);
            CHECK(kb.rows == 4 - oracle::rank_by_minors(m));
            CHECK(oracle::rank_by_minors(kb) == kb.rows);
            for (std::uint64_t r = 0; r < kb.rows; ++r) {
                const auto img = oracle::mat_vec(m, kb.row(r));
                CHECK(std::all_of(img.begin(), img.end(),
                                  [](std::uint64_t x) { return x == 0; }));
            }
        }
        // identity has trivial kernel, zero-row matrix has full kernel
        CHECK(mrsc::kernel_basis(FieldMatrix::identity(f, 3)).rows == 0);
        CHECK(mrsc::kernel_basis(FieldMatrix(f, 0, 3)).rows == 3);
    }
}

TEST_CASE("kernel is exactly the annihilator on a small case") {
    const Field f = make_field(2, 1);
    FieldMatrix m(f, 2, 4, {1, 1, 0, 1, 0, 1, 1, 0});
    FieldMatrix kb = mrsc::kernel_basis(m);
    std::uint64_t count = 0;
    for (const auto& v : oracle::vectors_up_to_weight(f, 4, 4)) {
        const auto img = oracle::mat_vec(m, v);
        const bool in_kernel =
            std::all_of(img.begin(), img.end(), [](std::uint64_t x) { return x == 0; });
        if (in_kernel) {
            ++count;
            CHECK(oracle::in_span(kb, v));
        }
    }
    CHECK(count == 4); // dim 2 kernel over GF(2)
}

TEST_CASE("solve_right and solve_left round trip") {
    mrsc::Rng rng(6);
    const Field f = make_field(2, 3);
    for (int i = 0; i < 15; ++i) {
        FieldMatrix m = oracle::random_matrix(rng, f, 3, 5);
        FieldMatrix x = oracle::random_matrix(rng, f, 5, 2);
        FieldMatrix b = oracle::mat_mul(m, x);
        auto sol = mrsc::solve_right(m, b);
        REQUIRE(sol.has_value());
        CHECK(oracle::mat_mul(m, *sol) == b);

        FieldMatrix y = oracle::random_matrix(rng, f, 2, 3);
        FieldMatrix c = oracle::mat_mul(y, m);
        auto sol2 = mrsc::solve_left(m, c);
        REQUIRE(sol2.has_value());
        CHECK(oracle::mat_mul(*sol2, m) == c);
    }
    // inconsistent system
    FieldMatrix m(f, 2, 2, {1, 0, 1, 0});
    FieldMatrix b(f, 2, 1, {0, 1});
    CHECK(!mrsc::solve_right(m, b).has_value());
}

TEST_CASE("row space predicates") {
    const Field f = make_field(2, 2);
    FieldMatrix g(f, 2, 3, {1, 0, 2, 0, 1, 3});
    for (const auto& v : oracle::span_set(g)) CHECK(mrsc::in_row_space(g, v));
    CHECK(!mrsc::in_row_space(g, {0, 0, 1}));
    FieldMatrix g2(f, 2, 3, {1, 1, 1, 1, 0, 2}); // row1+row2, row1
    CHECK(mrsc::row_spaces_equal(g, g2));
    FieldMatrix g3(f, 1, 3, {1, 0, 2});
    CHECK(!mrsc::row_spaces_equal(g, g3));
}

TEST_CASE("column restriction and subset ranks") {
    mrsc::Rng rng(7);
    const Field f = make_field(3, 2);
    FieldMatrix m = oracle::random_matrix(rng, f, 3, 6);
    std::vector<std::uint32_t> idx{0, 2, 5};
    FieldMatrix r = mrsc::restrict_columns_idx(m, idx);
    CHECK(r.cols == 3);
    for (std::uint64_t i = 0; i < 3; ++i)
        for (std::uint64_t j = 0; j < 3; ++j) CHECK(r.at(i, j) == m.at(i, idx[j]));
    std::vector<std::uint64_t> scratch;
    CHECK(mrsc::rank_of_columns(m, idx.data(), 3, scratch) == oracle::rank_by_minors(r));
    const auto s = mrsc::SupportSet::from_zero_based(6, idx);
    CHECK(mrsc::restrict_columns(m, s) == r);
}

TEST_CASE("row space intersection is exactly the common span") {
    const Field f = make_field(2, 1);
    FieldMatrix a(f, 2, 4, {1, 0, 0, 1, 0, 1, 0, 1});
    FieldMatrix b(f, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1});
    FieldMatrix inter = mrsc::row_space_intersection(a, b);
    const auto sa = oracle::span_set(a);
    const auto sb = oracle::span_set(b);
    std::uint64_t common = 0;
    for (const auto& v : sa)
        if (sb.count(v)) {
            ++common;
            CHECK(oracle::in_span(inter, v));
        }
    // the intersection generator lies in both spans
    for (std::uint64_t r = 0; r < inter.rows; ++r) {
        CHECK(sa.count(inter.row(r)) == 1);
        CHECK(sb.count(inter.row(r)) == 1);
    }
    const std::uint64_t q = 2;
    std::uint64_t expect = 1;
    for (std::uint64_t i = 0; i < inter.rows; ++i) expect *= q;
    CHECK(common == expect);

    // disjoint spans give the 0 x n generator
    FieldMatrix c(f, 1, 4, {1, 0, 0, 0});
    FieldMatrix d(f, 1, 4, {0, 1, 0, 0});
    CHECK(mrsc::row_space_intersection(c, d).rows == 0);
}

TEST_CASE("min weight preimage is exact against brute force") {
    mrsc::Rng rng(8);
    const Field f = make_field(2, 2);
    for (int i = 0; i < 10; ++i) {
        FieldMatrix h = oracle::random_matrix(rng, f, 2, 5);
        for (const auto& e : oracle::vectors_up_to_weight(f, 5, 2)) {
            const auto syn = oracle::mat_vec(h, e);
            const auto got = mrsc::min_weight_preimage(h, syn, 2);
            REQUIRE(got.has_value());
            // brute force the true minimum and the tie-break order
            std::vector<std::uint64_t> best;
            std::uint64_t best_w = UINT64_MAX;
            for (const auto& cand : oracle::vectors_up_to_weight(f, 5, 2)) {
                if (oracle::mat_vec(h, cand) != syn) continue;
                std::uint64_t w = 0;
                for (const auto x : cand)
                    if (x) ++w;
                if (w < best_w) {
                    best_w = w;
                    best = cand;
                }
            }
            CHECK(got->weight() == best_w);
            CHECK(oracle::mat_vec(h, got->to_dense()) == syn);
        }
    }
    // unreachable syndrome
    CHECK(!mrsc::min_weight_preimage(FieldMatrix(f, 1, 3, {0, 0, 0}), {1}, 3).has_value());
}

TEST_CASE("min weight ties break to the lex smallest support then values") {
    const Field f = make_field(2, 2);
    // two columns equal: syndrome of col 3 is also reachable via col 1
    FieldMatrix h(f, 2, 3, {1, 0, 1, 1, 0, 1});
    const auto got = mrsc::min_weight_preimage(h, {1, 1}, 1);
    REQUIRE(got.has_value());
    REQUIRE(got->entries.size() == 1);
    CHECK(got->entries[0].first == 0); // position 0 wins over position 2
    CHECK(got->entries[0].second == 1);
}

TEST_CASE("map_entries commutes with multiplication") {
    mrsc::Rng rng(9);
    const Field small = make_field(2, 2);
    const Field big = make_field(2, 4);
    const auto phi = mrsc::embed_map(small, big);
    FieldMatrix a = oracle::random_matrix(rng, small, 3, 3);
    FieldMatrix b = oracle::random_matrix(rng, small, 3, 2);
    CHECK(mrsc::map_entries(oracle::mat_mul(a, b), phi, big) ==
          oracle::mat_mul(mrsc::map_entries(a, phi, big), mrsc::map_entries(b, phi, big)));
}

TEST_CASE("stacking keeps shapes and content") {
    const Field f = make_field(2, 3);
    FieldMatrix a(f, 1, 2, {1, 2});
    FieldMatrix b(f, 1, 2, {3, 4});
    FieldMatrix v = mrsc::vstack(a, b);
    CHECK(v.rows == 2);
    CHECK(v.row(0) == std::vector<std::uint64_t>{1, 2});
    CHECK(v.row(1) == std::vector<std::uint64_t>{3, 4});
    FieldMatrix h = mrsc::hstack(a, b);
    CHECK(h.cols == 4);
    CHECK(h.row(0) == std::vector<std::uint64_t>{1, 2, 3, 4});
    FieldMatrix t = mrsc::transpose(v);
    CHECK(t.rows == 2);
    CHECK(t.at(0, 1) == 3);
    CHECK(t.at(1, 0) == 2);
}

} // TEST_SUITE
