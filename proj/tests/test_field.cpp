#include <doctest.h>

#include <cstdint>
#include <vector>

#include "mrsc/field.hpp"
#include "mrsc/rng.hpp"

using mrsc::Field;
using mrsc::make_field;

namespace {

// Reference multiplication straight from the definition: base-p digit
// vectors multiplied as polynomials and reduced mod the field's modulus.
std::vector<std::uint64_t> to_digits(std::uint64_t v, std::uint64_t p, std::uint64_t len) {
    std::vector<std::uint64_t> d(len, 0);
    for (std::uint64_t i = 0; i < len; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint64_t from_digits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

std::uint64_t slow_mul(const Field& f, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t p = f->characteristic();
    const std::uint64_t m = f->degree();
    const auto& mod = f->modulus();
    const auto da = to_digits(a, p, m);
    const auto db = to_digits(b, p, m);
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::uint64_t d = 2 * m - 1; d >= m && d < 2 * m; --d) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (std::uint64_t i = 0; i <= m; ++i) {
            const std::uint64_t sub = (c * mod[i]) % p;
            prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
        }
    }
    prod.resize(m);
    return from_digits(prod, p);
}

std::uint64_t slow_add(const Field& f, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t p = f->characteristic();
    const std::uint64_t m = f->degree();
    auto da = to_digits(a, p, m);
    const auto db = to_digits(b, p, m);
    for (std::uint64_t i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
    return from_digits(da, p);
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("default moduli are the first irreducible polynomials in digit order") {
    CHECK(make_field(2, 2)->modulus() == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(make_field(2, 3)->modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
    CHECK(make_field(2, 4)->modulus() == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
    CHECK(make_field(2, 6)->modulus() == std::vector<std::uint64_t>{1, 1, 0, 0, 0, 0, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4, 2), mrsc::InputError);  // p not prime
    CHECK_THROWS_AS(make_field(2, 0), mrsc::InputError);
    CHECK_THROWS_AS(make_field(2, 33), mrsc::InputError); // order above the cap
    CHECK_THROWS_AS(make_field(2, 2, {0, 0, 1}), mrsc::InputError); // x^2 reducible
    CHECK_THROWS_AS(make_field(2, 2, {1, 1}), mrsc::InputError);    // wrong length
    CHECK_THROWS_AS(make_field(3, 2, {1, 0, 2}), mrsc::InputError); // not monic
}

TEST_CASE("multiplication matches polynomial reduction exhaustively") {
    for (const Field& f : {make_field(2, 3), make_field(3, 2), make_field(2, 4)}) {
        for (std::uint64_t a = 0; a < f->order(); ++a)
            for (std::uint64_t b = 0; b < f->order(); ++b) {
                CHECK(f->mul(a, b) == slow_mul(f, a, b));
                CHECK(f->add(a, b) == slow_add(f, a, b));
            }
    }
}

TEST_CASE("GF(8) value pins") {
    const Field f = make_field(2, 3);
    CHECK(f->order() == 8);
    CHECK(f->name() == "GF(8)");
    CHECK(f->mul(2, 2) == 4);
    CHECK(f->mul(4, 2) == 3);
    CHECK(f->mul(3, 3) == 5);
    CHECK(f->mul(5, 7) == 6);
    CHECK(f->mul(4, 7) == 1);
    CHECK(f->mul(7, 7) == 3);
    CHECK(f->inv(2) == 5);
    CHECK(f->inv(3) == 6);
    CHECK(f->inv(4) == 7);
    CHECK(f->pow(2, 3) == 3);
    CHECK(f->smallest_primitive() == 2);
    CHECK(f->multiplicative_order(2) == 7);
}

TEST_CASE("GF(9) value pins") {
    const Field f = make_field(3, 2);
    CHECK(f->smallest_primitive() == 4);
    CHECK(f->multiplicative_order(4) == 8);
    CHECK(f->multiplicative_order(2) == 2);
    CHECK(f->multiplicative_order(3) == 4); // x^2 = -1
    CHECK(f->mul(3, 3) == 2);
    CHECK(!f->is_primitive(3));
    CHECK(f->is_primitive(4));
}

TEST_CASE("inverse and power laws hold on every element") {
    for (const Field& f : {make_field(2, 3), make_field(3, 2), make_field(5, 1)}) {
        CHECK_THROWS_AS(f->inv(0), mrsc::InputError);
        for (std::uint64_t a = 1; a < f->order(); ++a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, f->order() - 1) == 1);
            std::uint64_t acc = 1;
            for (std::uint64_t e = 0; e < 5; ++e) {
                CHECK(f->pow(a, e) == acc);
                acc = f->mul(acc, a);
            }
        }
        CHECK(f->pow(0, 0) == 1);
        CHECK(f->pow(0, 3) == 0);
    }
}

TEST_CASE("untabled field agrees with the same laws") {
    const Field f = make_field(2, 17); // above the table limit
    CHECK(f->order() == (std::uint64_t(1) << 17));
    mrsc::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t a = mrsc::uniform_below(rng, f->order());
        const std::uint64_t b = mrsc::uniform_below(rng, f->order());
        const std::uint64_t c = mrsc::uniform_below(rng, f->order());
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        CHECK(f->mul(a, b) == f->mul(b, a));
        if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->frobenius_q(a, 2, 3) == f->pow(a, 8));
        CHECK(f->mul(a, b) == slow_mul(f, a, b));
    }
}

TEST_CASE("frobenius iterates the q-power map") {
    const Field f = make_field(2, 6);
    for (std::uint64_t a = 0; a < 64; ++a) {
        CHECK(f->frobenius_q(a, 2, 1) == f->mul(a, a));
        CHECK(f->frobenius_q(a, 4, 1) == f->pow(a, 4));
        CHECK(f->frobenius_q(a, 8, 2) == f->pow(a, 64));
        CHECK(f->frobenius_q(a, 8, 0) == a);
    }
}

TEST_CASE("subfield structure of GF(64)") {
    const Field f = make_field(2, 6);
    std::uint32_t t = 0;
    CHECK(f->is_subfield_order(2, &t));
    CHECK(t == 6);
    CHECK(f->is_subfield_order(8, &t));
    CHECK(t == 2);
    CHECK(f->is_subfield_order(4, &t));
    CHECK(t == 3);
    CHECK(!f->is_subfield_order(16));
    CHECK(!f->is_subfield_order(3));

    const auto elems = f->subfield_elements(8);
    CHECK(elems.size() == 8);
    for (const auto a : elems) {
        // closure under the field operations
        CHECK(std::count(elems.begin(), elems.end(), f->mul(a, a)) == 1);
        for (const auto b : elems) {
            CHECK(std::count(elems.begin(), elems.end(), f->add(a, b)) == 1);
            CHECK(std::count(elems.begin(), elems.end(), f->mul(a, b)) == 1);
        }
    }

    const auto basis = f->subfield_basis(8);
    CHECK(basis == std::vector<std::uint64_t>{1, 2});
    CHECK(f->subfield_basis(2) == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32});
}

TEST_CASE("embeddings are field homomorphisms") {
    struct Pair {
        Field small, big;
    };
    for (const auto& [small, big] : {Pair{make_field(2, 2), make_field(2, 4)},
                                     Pair{make_field(2, 3), make_field(2, 6)}}) {
        const auto phi = mrsc::embed_map(small, big);
        REQUIRE(phi.size() == small->order());
        CHECK(phi[0] == 0);
        CHECK(phi[1] == 1);
        for (std::uint64_t a = 0; a < small->order(); ++a)
            for (std::uint64_t b = 0; b < small->order(); ++b) {
                CHECK(phi[small->add(a, b)] == big->add(phi[a], phi[b]));
                CHECK(phi[small->mul(a, b)] == big->mul(phi[a], phi[b]));
            }
        // injective
        std::vector<std::uint64_t> sorted = phi;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("large prime-square field is tabled and consistent") {
    const Field f = make_field(251, 2);
    CHECK(f->order() == 63001);
    CHECK(f->name() == "GF(63001)");
    mrsc::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t a = mrsc::uniform_below(rng, f->order());
        const std::uint64_t b = mrsc::uniform_below(rng, f->order());
        CHECK(f->mul(a, b) == slow_mul(f, a, b));
        CHECK(f->sub(f->add(a, b), b) == a);
    }
}

TEST_CASE("digit round trip") {
    const Field f = make_field(3, 2);
    for (std::uint64_t v = 0; v < 9; ++v)
        CHECK(f->digits_to_value(f->value_to_digits(v)) == v);
}

} // TEST_SUITE
