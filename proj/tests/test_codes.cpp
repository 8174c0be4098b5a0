#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "mrsc/code.hpp"
#include "mrsc/combin.hpp"
#include "mrsc/linalg.hpp"
#include "oracles.hpp"

using mrsc::Field;
using mrsc::FieldMatrix;
using mrsc::LinearCode;
using mrsc::make_field;
using mrsc::SupportSet;

namespace {

// The [9,3] binary stripe code and its [9,2] subcode that stays full rank on
// every pair of coordinates the big code can serve.
LinearCode stripe9() {
    return LinearCode(FieldMatrix(make_field(2, 1), 3, 9,
                                  {1, 1, 1, 0, 0, 0, 0, 0, 0,
                                   0, 0, 0, 1, 1, 1, 0, 0, 0,
                                   0, 0, 0, 0, 0, 0, 1, 1, 1}));
}

LinearCode goodsub9() {
    return LinearCode(FieldMatrix(make_field(2, 1), 2, 9,
                                  {1, 1, 1, 0, 0, 0, 1, 1, 1,
                                   0, 0, 0, 1, 1, 1, 1, 1, 1}));
}

LinearCode badsub9() {
    return LinearCode(FieldMatrix(make_field(2, 1), 2, 9,
                                  {1, 1, 1, 0, 0, 0, 0, 0, 0,
                                   0, 0, 0, 1, 1, 1, 0, 0, 0}));
}

} // namespace

TEST_SUITE("codes") {

TEST_CASE("combination walk is lexicographic and complete") {
    CHECK(mrsc::binomial(9, 2) == 36);
    CHECK(mrsc::binomial(18, 4) == 3060);
    CHECK(mrsc::binomial(200, 100) == UINT64_MAX); // saturates
    std::vector<std::vector<std::uint32_t>> seen;
    mrsc::for_each_combination(4, 2, [&](const std::vector<std::uint32_t>& c) {
        seen.push_back(c);
        return true;
    });
    const std::vector<std::vector<std::uint32_t>> want{{0, 1}, {0, 2}, {0, 3},
                                                       {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == want);
    for (std::uint64_t i = 0; i < want.size(); ++i)
        CHECK(mrsc::combination_unrank(4, 2, i) == want[i]);
}

TEST_CASE("support sets and sparse vectors") {
    const auto s = SupportSet::from_zero_based(9, {0, 3, 6});
    CHECK(s.indices == std::vector<std::uint64_t>{1, 4, 7});
    CHECK(s.to_string() == "{1,4,7}");
    CHECK(s.zero_based() == std::vector<std::uint32_t>{0, 3, 6});
    CHECK(s.complement_zero_based() == std::vector<std::uint32_t>{1, 2, 4, 5, 7, 8});
    CHECK_THROWS_AS((SupportSet{3, {0}}.validate()), mrsc::InputError);
    CHECK_THROWS_AS((SupportSet{3, {1, 1}}.validate()), mrsc::InputError);
    CHECK_THROWS_AS((SupportSet{3, {4}}.validate()), mrsc::InputError);

    mrsc::SparseVector v{6, {{1, 3}, {4, 2}}};
    CHECK(v.weight() == 2);
    const auto dense = v.to_dense();
    CHECK(dense == std::vector<std::uint64_t>{0, 3, 0, 0, 2, 0});
    CHECK(mrsc::SparseVector::from_dense(dense) == v);
}

TEST_CASE("generator validation and canonical span") {
    const Field f = make_field(2, 1);
    CHECK_THROWS_AS(LinearCode(FieldMatrix(f, 2, 3, {1, 0, 1, 1, 0, 1})), mrsc::InputError);
    FieldMatrix g(f, 3, 4, {1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0}); // rank 2
    LinearCode c = LinearCode::from_span(g);
    CHECK(c.k() == 2);
    CHECK(oracle::span_set(c.generator()) == oracle::span_set(g));
    CHECK(LinearCode::zero_code(f, 5).k() == 0);
    CHECK(LinearCode::full_code(f, 5).k() == 5);
    CHECK(same_code(LinearCode::from_span(c.generator()), c));
}

TEST_CASE("dual annihilates and involutes") {
    mrsc::Rng rng(21);
    for (const Field& f : {make_field(2, 2), make_field(3, 1)}) {
        for (int i = 0; i < 10; ++i) {
            LinearCode c(oracle::random_full_rank(rng, f, 2, 5));
            LinearCode d = dual(c);
            CHECK(d.k() == 3);
            FieldMatrix prod = oracle::mat_mul(c.generator(), mrsc::transpose(d.generator()));
            CHECK(std::all_of(prod.data.begin(), prod.data.end(),
                              [](std::uint64_t x) { return x == 0; }));
            CHECK(same_code(dual(d), c));
        }
    }
}

TEST_CASE("puncture and shorten match the codeword-set definitions") {
    const Field f = make_field(3, 1);
    LinearCode c(FieldMatrix(f, 2, 4, {1, 0, 1, 2, 0, 1, 1, 1}));
    const auto s = SupportSet::from_zero_based(4, {0, 1, 3});
    const auto keep = s.zero_based();

    std::set<std::vector<std::uint64_t>> punct, shortd;
    for (const auto& w : oracle::span_set(c.generator())) {
        std::vector<std::uint64_t> proj;
        for (const auto i : keep) proj.push_back(w[i]);
        punct.insert(proj);
        bool inside = true;
        for (std::uint64_t i = 0; i < 4; ++i)
            if (w[i] != 0 && std::find(keep.begin(), keep.end(), i) == keep.end())
                inside = false;
        if (inside) shortd.insert(proj);
    }
    CHECK(oracle::span_set(puncture(c, s).generator()) == punct);
    CHECK(oracle::span_set(shorten(c, s).generator()) == shortd);
    // shortening is dual to puncturing
    CHECK(same_code(dual(puncture(c, s)), shorten(dual(c), s)));
}

TEST_CASE("cores contain no dual support") {
    LinearCode c = stripe9();
    // definition cross-check on all pairs: no nonzero dual codeword may live
    // inside a core
    const auto dual_words = oracle::span_set(dual(c).generator());
    std::uint64_t cores = 0;
    mrsc::for_each_combination(9, 2, [&](const std::vector<std::uint32_t>& idx) {
        const auto s = SupportSet::from_zero_based(9, idx);
        bool clean = true;
        for (const auto& w : dual_words) {
            bool inside = std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
            for (std::uint64_t i = 0; i < 9 && inside; ++i)
                if (w[i] != 0 && std::find(idx.begin(), idx.end(), i) == idx.end()) inside = false;
            if (inside) clean = false;
        }
        CHECK(is_core(c, s) == clean);
        if (clean) ++cores;
        return true;
    });
    CHECK(cores == 27);
    CHECK(enumerate_cores(c, 2).size() == 27);
    std::uint64_t visited = 0;
    for_each_core(c, 2, [&](const SupportSet&) {
        ++visited;
        return true;
    });
    CHECK(visited == 27);
}

TEST_CASE("subcode factor exists exactly for subcodes") {
    LinearCode c0 = stripe9();
    LinearCode good = goodsub9();
    const auto fac = subcode_factor(good, c0);
    REQUIRE(fac.has_value());
    CHECK(oracle::mat_mul(*fac, c0.generator()) == good.generator());
    LinearCode other(FieldMatrix(make_field(2, 1), 1, 9, {1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(!subcode_factor(other, c0).has_value());
}

TEST_CASE("the stripe pair passes every criterion") {
    LinearCode c0 = stripe9();
    LinearCode sub = goodsub9();
    for (const auto mode : {mrsc::MrscMode::definition1, mrsc::MrscMode::cores,
                            mrsc::MrscMode::parity, mrsc::MrscMode::all_sizes}) {
        const auto v = is_mrsc(sub, c0, mode);
        CHECK(v.ok);
        CHECK(!v.witness.has_value());
        if (mode == mrsc::MrscMode::all_sizes)
            CHECK(v.subsets_checked == 45); // sizes 1 and 2
        else
            CHECK(v.subsets_checked == 36);
    }
    // agreement with the reference definition
    CHECK(oracle::is_mrsc_reference(sub.generator(), c0.generator(), 2));
}

TEST_CASE("the failing pair reports the first witness in scan order") {
    LinearCode c0 = stripe9();
    LinearCode sub = badsub9();
    CHECK(!oracle::is_mrsc_reference(sub.generator(), c0.generator(), 2));
    for (const auto mode :
         {mrsc::MrscMode::definition1, mrsc::MrscMode::cores, mrsc::MrscMode::parity}) {
        const auto v = is_mrsc(sub, c0, mode);
        CHECK(!v.ok);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->to_string() == "{1,7}");
    }
    const auto v = is_mrsc(sub, c0, mrsc::MrscMode::all_sizes);
    CHECK(!v.ok);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->to_string() == "{7}"); // a size-1 failure surfaces first
}

TEST_CASE("mode agreement on random pairs matches the reference") {
    mrsc::Rng rng(22);
    const Field f = make_field(2, 2);
    int checked = 0;
    while (checked < 12) {
        FieldMatrix g0 = oracle::random_matrix(rng, f, 3, 6);
        if (oracle::rank_by_minors(g0) != 3) continue;
        FieldMatrix mix = oracle::random_matrix(rng, f, 2, 3);
        FieldMatrix g = oracle::mat_mul(mix, g0);
        if (oracle::rank_by_minors(g) != 2) continue;
        ++checked;
        LinearCode super(g0), sub(g);
        const bool ref = oracle::is_mrsc_reference(g, g0, 2);
        for (const auto mode : {mrsc::MrscMode::definition1, mrsc::MrscMode::cores,
                                mrsc::MrscMode::parity, mrsc::MrscMode::all_sizes}) {
            const auto v = is_mrsc(sub, super, mode);
            CHECK(v.ok == ref);
        }
    }
}

TEST_CASE("threaded scans return identical verdicts") {
    LinearCode c0 = stripe9();
    for (const LinearCode& sub : {goodsub9(), badsub9()}) {
        for (const auto mode : {mrsc::MrscMode::definition1, mrsc::MrscMode::cores,
                                mrsc::MrscMode::parity, mrsc::MrscMode::all_sizes}) {
            const auto v1 = is_mrsc(sub, c0, mode, 1);
            const auto v4 = is_mrsc(sub, c0, mode, 4);
            CHECK(v1.ok == v4.ok);
            CHECK(v1.subsets_checked == v4.subsets_checked);
            CHECK(v1.witness.has_value() == v4.witness.has_value());
            if (v1.witness) CHECK(v1.witness->indices == v4.witness->indices);
        }
    }
}

TEST_CASE("striped matrices build and detect") {
    const Field f = make_field(2, 3);
    const std::vector<std::uint64_t> a{1, 2, 4};
    FieldMatrix m = mrsc::build_striped_matrix(f, a, 3);
    CHECK(m.rows == 3);
    CHECK(m.cols == 9);
    CHECK(m.row(0) == std::vector<std::uint64_t>{1, 2, 4, 0, 0, 0, 0, 0, 0});
    CHECK(m.row(2) == std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0, 1, 2, 4});
    const auto det = mrsc::detect_striped(m);
    REQUIRE(det.has_value());
    CHECK(det->first == a);
    CHECK(det->second == 3);
    // a Vandermonde matrix is not striped
    FieldMatrix v(f, 2, 4, {1, 1, 1, 1, 1, 2, 3, 4});
    CHECK(!mrsc::detect_striped(v).has_value());
}

TEST_CASE("locality check and partial MDS bookkeeping") {
    LinearCode c = stripe9();
    CHECK(mrsc::check_locality(c, {1, 3, 3}));
    CHECK(!mrsc::check_locality(c, {2, 2, 3}));
    const Field f = make_field(2, 3);
    LinearCode mds(FieldMatrix(f, 2, 4, {1, 1, 1, 1, 1, 2, 3, 4}));
    CHECK(!mrsc::check_locality(mds, {1, 2, 2}));

    const auto p = mrsc::partial_mds_params(9, 2, 1, 3);
    CHECK(p.blocks == 3);
    CHECK(p.block_length == 3);
    CHECK(p.local_parities == 2);
    CHECK(p.global_parities == 1);
}

} // TEST_SUITE
