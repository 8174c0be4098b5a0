#include <doctest.h>

#include <cstdint>
#include <vector>

#include "mrsc/update.hpp"
#include "oracles.hpp"

using mrsc::Field;
using mrsc::FieldMatrix;
using mrsc::make_field;
using mrsc::MrscMethod;
using mrsc::P2PScheme;

TEST_SUITE("update") {

TEST_CASE("the update floor is the smaller of m and two eps") {
    CHECK(mrsc::p2p_lower_bound(4, 1) == 2);
    CHECK(mrsc::p2p_lower_bound(4, 2) == 4);
    CHECK(mrsc::p2p_lower_bound(1, 3) == 1);
    CHECK(mrsc::p2p_lower_bound(0, 1) == 0);
}

TEST_CASE("striped scheme hits the floor on the stripe pattern") {
    const Field f = make_field(2, 3);
    FieldMatrix a = mrsc::build_striped_matrix(f, {1, 1, 1}, 4);
    P2PScheme s = build_p2p_scheme(a, 1, MrscMethod::striped, 1);
    CHECK(s.cost == 2);
    CHECK(s.cost == mrsc::p2p_lower_bound(4, 1));
    CHECK(s.H.rows == 2);
    CHECK(s.A == a);
    CHECK(s.certificate.verified);
    CHECK(s.certificate.subsets_checked == 66);
    CHECK(oracle::mat_mul(s.S, s.A) == s.H);

    // auto picks the striped route here (q = 8 > m = 4) and lands on the
    // same deterministic encoder
    P2PScheme auto_s = build_p2p_scheme(a, 1, MrscMethod::auto_pick, 1);
    CHECK(auto_s.H == s.H);

    // needs m > 2*eps so the request reaches the shape check
    FieldMatrix vand(f, 3, 4, {1, 1, 1, 1, 1, 2, 3, 4, 1, 4, 5, 6});
    CHECK_THROWS_AS(build_p2p_scheme(vand, 1, MrscMethod::striped, 1), mrsc::InputError);
    FieldMatrix flat(f, 2, 4, {1, 0, 1, 0, 1, 0, 1, 0}); // rank 1
    CHECK_THROWS_AS(build_p2p_scheme(flat, 1, MrscMethod::random, 1), mrsc::InputError);
}

TEST_CASE("wide updates keep the full matrix") {
    const Field f = make_field(2, 2);
    mrsc::Rng rng(5);
    FieldMatrix a = oracle::random_full_rank(rng, f, 2, 5);
    P2PScheme s = build_p2p_scheme(a, 1, MrscMethod::auto_pick, 0);
    CHECK(s.H == a);
    CHECK(s.S == FieldMatrix::identity(f, 2));
    CHECK(s.cost == 2);
    CHECK(s.certificate.verified);
}

TEST_CASE("encode and decode recover the updated image") {
    const Field f = make_field(2, 3);
    FieldMatrix a = mrsc::build_striped_matrix(f, {1, 1, 1}, 4);
    P2PScheme s = build_p2p_scheme(a, 1, MrscMethod::random, 2);
    CHECK(s.cost == 2);
    CHECK(s.certificate.verified);
    CHECK(oracle::mat_mul(s.S, s.A) == s.H);

    mrsc::Rng rng(6);
    const auto diffs = oracle::vectors_up_to_weight(f, 12, 1); // 1 + 12*7 = 85
    CHECK(diffs.size() == 85);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::uint64_t> x_old(12);
        for (auto& v : x_old) v = mrsc::uniform_below(rng, 8);
        const auto side = oracle::mat_vec(a, x_old);
        for (const auto& e : diffs) {
            std::vector<std::uint64_t> x_new(12);
            for (std::size_t i = 0; i < 12; ++i) x_new[i] = f->add(x_old[i], e[i]);
            const auto y = p2p_encode(s, x_new);
            CHECK(p2p_decode(s, y, side) == oracle::mat_vec(a, x_new));
        }
    }

    CHECK_THROWS_AS(p2p_decode(s, {0}, std::vector<std::uint64_t>(4, 0)), mrsc::InputError);
    CHECK_THROWS_AS(p2p_decode(s, {0, 0}, std::vector<std::uint64_t>(3, 0)), mrsc::InputError);
}

TEST_CASE("an unexplainable syndrome raises a decode error") {
    // m <= 2*eps keeps H = A, so a difference touching all three stripe
    // blocks of a weight cap two decoder cannot be explained
    const Field f = make_field(2, 3);
    FieldMatrix a = mrsc::build_striped_matrix(f, {1, 1, 1}, 4);
    P2PScheme s = build_p2p_scheme(a, 2, MrscMethod::auto_pick, 0);
    CHECK(s.H == a);
    std::vector<std::uint64_t> x_new(12, 0);
    x_new[0] = x_new[3] = x_new[6] = 1;
    const auto y = p2p_encode(s, x_new);
    CHECK_THROWS_AS(p2p_decode(s, y, std::vector<std::uint64_t>(4, 0)), mrsc::DecodeError);
}

TEST_CASE("confusable pairs self-validate") {
    const Field f = make_field(2, 3);
    FieldMatrix a = mrsc::build_striped_matrix(f, {1, 1, 1}, 4);
    P2PScheme s = build_p2p_scheme(a, 1, MrscMethod::striped, 1);
    CHECK(!mrsc::find_counterexample(s.H, a, 1).has_value());

    // cutting the encoder to one row leaves it blind to some update
    FieldMatrix h1(f, 1, 12);
    for (std::uint64_t j = 0; j < 12; ++j) h1.at(0, j) = s.H.at(0, j);
    const auto pair = mrsc::find_counterexample(h1, a, 1);
    REQUIRE(pair.has_value());
    CHECK(pair->h_images_equal);
    CHECK(pair->ax_images_equal);
    CHECK(pair->ae_images_differ);
    CHECK(pair->e1.weight() <= 1);
    CHECK(pair->e2.weight() <= 1);

    // recompute the three claims from scratch
    auto plus = [&](const std::vector<std::uint64_t>& x, const mrsc::SparseVector& e) {
        auto v = x;
        for (const auto& [idx, val] : e.entries) v[idx] = f->add(v[idx], val);
        return v;
    };
    CHECK(oracle::mat_vec(h1, plus(pair->x1, pair->e1)) ==
          oracle::mat_vec(h1, plus(pair->x2, pair->e2)));
    CHECK(oracle::mat_vec(a, pair->x1) == oracle::mat_vec(a, pair->x2));
    CHECK(oracle::mat_vec(a, pair->e1.to_dense()) != oracle::mat_vec(a, pair->e2.to_dense()));

    CHECK_THROWS_AS(mrsc::find_counterexample(h1, FieldMatrix(make_field(2, 2), 1, 12), 1),
                    mrsc::InputError);
    CHECK_THROWS_AS(mrsc::find_counterexample(h1, FieldMatrix(f, 1, 4), 1), mrsc::InputError);
}

TEST_CASE("linearized scheme lifts the whole problem") {
    const Field f2 = make_field(2, 1);
    FieldMatrix a = mrsc::build_striped_matrix(f2, {1, 1, 1}, 3); // [9,3] over GF(2)
    P2PScheme s = build_p2p_scheme(a, 1, MrscMethod::linearized, 0);
    const Field& big = s.A.field;
    CHECK(big->order() == 8); // degree m = 3 extension
    CHECK(s.cost == 2);
    CHECK(s.certificate.verified);
    CHECK(s.H == FieldMatrix(big, 2, 9, {1, 1, 1, 2, 2, 2, 4, 4, 4,
                                         1, 1, 1, 4, 4, 4, 6, 6, 6}));
    CHECK(oracle::mat_mul(s.S, s.A) == s.H);

    mrsc::Rng rng(7);
    std::vector<std::uint64_t> x_old(9);
    for (auto& v : x_old) v = mrsc::uniform_below(rng, 8);
    const auto side = oracle::mat_vec(s.A, x_old);
    for (const auto& e : oracle::vectors_up_to_weight(big, 9, 1)) {
        std::vector<std::uint64_t> x_new(9);
        for (std::size_t i = 0; i < 9; ++i) x_new[i] = big->add(x_old[i], e[i]);
        CHECK(p2p_decode(s, p2p_encode(s, x_new), side) == oracle::mat_vec(s.A, x_new));
    }
}

} // TEST_SUITE
