#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mrsc/errors.hpp"

namespace mrsc {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// GF(p^m) with elements encoded as integers in [0, p^m): the value of an
// element is the base-p evaluation of its coefficient vector, least
// significant digit first. The modulus is monic of degree m, stored
// little-endian with m+1 coefficients.
//
// Fields of order <= 2^16 carry log/antilog tables keyed by the smallest
// primitive element; larger fields (up to order 2^32) fall back to direct
// polynomial arithmetic.
class FieldSpec {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 32;
    static constexpr std::uint64_t kTableLimit = std::uint64_t(1) << 16;

    std::uint64_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            const std::uint64_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_general(a, b);
    }

    std::uint64_t neg(std::uint64_t a) const {
        if (p_ == 2) return a;
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_general(a);
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables_) {
            std::uint64_t e = log_[a] + log_[b];
            const std::uint64_t g = order_ - 1;
            if (e >= g) e -= g;
            return exp_[e];
        }
        return mul_general(a, b);
    }

    std::uint64_t inv(std::uint64_t a) const;

    // a^e with 0^0 = 1.
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    // a^(q^i) for a valid subfield order q.
    std::uint64_t frobenius_q(std::uint64_t a, std::uint64_t q, std::uint64_t i) const;

    // True iff q = p^j and p^m = q^t for an integer t >= 1; t is reported.
    bool is_subfield_order(std::uint64_t q, std::uint32_t* t_out = nullptr) const;

    // The t elements 1, x, x^2, ..., x^(t-1), linearly independent over the
    // order-q subfield. Their integer values are 1, p, p^2, ...
    std::vector<std::uint64_t> subfield_basis(std::uint64_t q) const;

    // All q elements of the order-q subfield copy inside this field,
    // sorted by value.
    std::vector<std::uint64_t> subfield_elements(std::uint64_t q) const;

    std::uint64_t multiplicative_order(std::uint64_t a) const;
    bool is_primitive(std::uint64_t a) const;
    std::uint64_t smallest_primitive() const;

    std::string name() const; // e.g. "GF(8)"

    std::vector<std::uint64_t> value_to_digits(std::uint64_t v) const;
    std::uint64_t digits_to_value(const std::vector<std::uint64_t>& d) const;

private:
    friend Field make_field(std::uint64_t, std::uint32_t);
    friend Field make_field(std::uint64_t, std::uint32_t, std::vector<std::uint64_t>);
    FieldSpec(std::uint64_t p, std::uint32_t m, std::vector<std::uint64_t> modulus);

    std::uint64_t add_general(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_general(std::uint64_t a) const;
    std::uint64_t mul_general(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_;
    std::uint32_t m_;
    std::uint64_t order_;
    std::vector<std::uint64_t> modulus_;
    bool has_tables_ = false;
    std::uint64_t generator_ = 0; // smallest primitive element when tabled
    std::vector<std::uint32_t> log_;  // index: element value, valid for v >= 1
    std::vector<std::uint32_t> exp_;  // index: exponent in [0, order-1)
};

// Uses the lexicographically smallest monic irreducible modulus of degree m
// (coefficient lists compared little-endian).
Field make_field(std::uint64_t p, std::uint32_t m);
Field make_field(std::uint64_t p, std::uint32_t m, std::vector<std::uint64_t> modulus);

// Canonical ring embedding GF(q) -> GF(Q) for q = p^a, Q = p^(a*b): the
// generator of the small field is sent to the smallest root of the small
// modulus inside the big field. Returns the full value map, indexed by the
// small field's element values.
std::vector<std::uint64_t> embed_map(const Field& sub, const Field& big);

// Monic polynomial irreducibility over GF(p) by trial division against every
// monic polynomial of degree <= deg/2. Coefficients little-endian.
bool poly_is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly);

struct FieldElement {
    const FieldSpec* field = nullptr;
    std::uint64_t value = 0;

    FieldElement() = default;
    FieldElement(const FieldSpec* f, std::uint64_t v) : field(f), value(v) {
        if (f == nullptr) throw InputError("FieldElement: null field");
        if (v >= f->order()) throw InputError("FieldElement: value out of range");
    }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.field, a.field->add(a.value, b.value)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.field, a.field->sub(a.value, b.value)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.field, a.field->mul(a.value, b.value)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.field, a.field->mul(a.value, b.field->inv(b.value))};
    }
    friend bool operator==(FieldElement a, FieldElement b) {
        check(a, b);
        return a.value == b.value;
    }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.field == nullptr || b.field == nullptr || *a.field != *b.field)
            throw InputError("FieldElement: mixed fields");
    }
};

} // namespace mrsc
