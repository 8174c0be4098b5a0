#include "mrsc/field.hpp"

#include <algorithm>

namespace mrsc {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t modpow(std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t acc = 1;
    base %= mod;
    while (e) {
        if (e & 1) acc = acc * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return acc;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Remainder of a by monic b over GF(p); both little-endian, b monic.
// Returns true iff the remainder is zero.
bool poly_divides(std::uint64_t p, const std::vector<std::uint64_t>& b,
                  std::vector<std::uint64_t> a) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0) {
            for (std::size_t j = 0; j <= db; ++j) {
                std::uint64_t t = a[shift + j] + (p - c * b[j] % p) % p;
                a[shift + j] = t >= p ? t - p : t;
            }
        }
        a.pop_back();
    }
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

} // namespace

bool poly_is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly) {
    if (poly.size() < 2 || poly.back() == 0)
        throw InputError("poly_is_irreducible: not a monic nonconstant polynomial");
    const std::size_t deg = poly.size() - 1;
    std::vector<std::uint64_t> divisor;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        divisor.assign(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t v = code;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = v % p;
                v /= p;
            }
            if (poly_divides(p, divisor, poly)) return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(std::uint64_t p, std::uint32_t m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    order_ = 1;
    for (std::uint32_t i = 0; i < m_; ++i) order_ *= p_;

    if (order_ <= kTableLimit) {
        const std::uint64_t g = order_ - 1;
        const auto fs = prime_factors(g);
        for (std::uint64_t v = 1; v < order_; ++v) {
            bool prim = true;
            for (const std::uint64_t f : fs) {
                std::uint64_t e = g / f, acc = 1, b = v;
                while (e) {
                    if (e & 1) acc = mul_general(acc, b);
                    b = mul_general(b, b);
                    e >>= 1;
                }
                if (acc == 1) {
                    prim = false;
                    break;
                }
            }
            if (prim) {
                generator_ = v;
                break;
            }
        }
        exp_.resize(g ? g : 1);
        log_.assign(order_, 0);
        std::uint64_t cur = 1;
        for (std::uint64_t e = 0; e < g; ++e) {
            exp_[e] = static_cast<std::uint32_t>(cur);
            log_[cur] = static_cast<std::uint32_t>(e);
            cur = mul_general(cur, generator_);
        }
        if (g == 0) exp_[0] = 1;
        has_tables_ = true;
    }
}

std::uint64_t FieldSpec::add_general(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint64_t FieldSpec::neg_general(std::uint64_t a) const {
    std::uint64_t out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const std::uint64_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

std::uint64_t FieldSpec::mul_general(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return a * b % p_;

    std::uint64_t da[64], db[64], acc[127];
    for (std::uint32_t i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    const std::uint32_t dlen = 2 * m_ - 1;
    for (std::uint32_t i = 0; i < dlen; ++i) acc[i] = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
    }
    for (std::uint32_t i = dlen; i-- > m_;) {
        const std::uint64_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (std::uint32_t j = 0; j < m_; ++j) {
            std::uint64_t t = acc[i - m_ + j] + (p_ - c * modulus_[j] % p_) % p_;
            acc[i - m_ + j] = t >= p_ ? t - p_ : t;
        }
    }
    std::uint64_t out = 0;
    for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + acc[i];
    return out;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) throw InputError("field inverse of zero");
    if (has_tables_) {
        const std::uint64_t g = order_ - 1;
        if (g == 0) return 1;
        return exp_[(g - log_[a]) % g];
    }
    if (m_ == 1) return modpow(a, p_ - 2, p_);
    return pow(a, order_ - 2);
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t g = order_ - 1;
    if (g > 0) e %= g;
    if (has_tables_) {
        if (g == 0) return 1;
        return exp_[log_[a] * e % g];
    }
    std::uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mul_general(acc, a);
        a = mul_general(a, a);
        e >>= 1;
    }
    return acc;
}

std::uint64_t FieldSpec::frobenius_q(std::uint64_t a, std::uint64_t q, std::uint64_t i) const {
    if (!is_subfield_order(q))
        throw InputError("frobenius_q: " + std::to_string(q) + " is not a subfield order of " + name());
    if (a == 0) return 0;
    const std::uint64_t g = order_ - 1;
    if (g <= 1) return a;
    return pow(a, modpow(q, i, g));
}

bool FieldSpec::is_subfield_order(std::uint64_t q, std::uint32_t* t_out) const {
    std::uint64_t v = q;
    std::uint32_t j = 0;
    while (v > 1 && v % p_ == 0) {
        v /= p_;
        ++j;
    }
    if (v != 1 || j == 0 || m_ % j != 0) return false;
    if (t_out) *t_out = m_ / j;
    return true;
}

std::vector<std::uint64_t> FieldSpec::subfield_basis(std::uint64_t q) const {
    std::uint32_t t = 0;
    if (!is_subfield_order(q, &t))
        throw InputError("subfield_basis: " + std::to_string(q) + " is not a subfield order of " + name());
    std::vector<std::uint64_t> basis(t);
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        basis[i] = v;
        v *= p_;
    }
    return basis;
}

std::vector<std::uint64_t> FieldSpec::subfield_elements(std::uint64_t q) const {
    if (!is_subfield_order(q))
        throw InputError("subfield_elements: " + std::to_string(q) + " is not a subfield order of " + name());
    if (q == order_) {
        std::vector<std::uint64_t> all(order_);
        for (std::uint64_t v = 0; v < order_; ++v) all[v] = v;
        return all;
    }
    std::vector<std::uint64_t> out;
    out.reserve(q);
    out.push_back(0);
    const std::uint64_t w = pow(smallest_primitive(), (order_ - 1) / (q - 1));
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
        out.push_back(cur);
        cur = mul(cur, w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t FieldSpec::multiplicative_order(std::uint64_t a) const {
    if (a == 0) throw InputError("multiplicative_order of zero");
    const std::uint64_t g = order_ - 1;
    if (g == 0) return 1;
    std::uint64_t ord = g;
    for (const std::uint64_t f : prime_factors(g))
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    return ord;
}

bool FieldSpec::is_primitive(std::uint64_t a) const {
    return a != 0 && multiplicative_order(a) == order_ - 1;
}

std::uint64_t FieldSpec::smallest_primitive() const {
    if (has_tables_) return generator_;
    for (std::uint64_t v = 1; v < order_; ++v)
        if (is_primitive(v)) return v;
    throw InputError("no primitive element found"); // unreachable for valid fields
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(order_) + ")"; }

std::vector<std::uint64_t> FieldSpec::value_to_digits(std::uint64_t v) const {
    std::vector<std::uint64_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

std::uint64_t FieldSpec::digits_to_value(const std::vector<std::uint64_t>& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
    return v;
}

Field make_field(std::uint64_t p, std::uint32_t m, std::vector<std::uint64_t> modulus) {
    if (!is_prime_u64(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw InputError("field degree must be >= 1");
    unsigned __int128 ord = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        ord *= p;
        if (ord > FieldSpec::kMaxOrder) throw InputError("field order exceeds 2^32");
    }
    if (modulus.size() != static_cast<std::size_t>(m) + 1)
        throw InputError("modulus must have degree m (m+1 coefficients)");
    for (const std::uint64_t c : modulus)
        if (c >= p) throw InputError("modulus coefficient out of range");
    if (modulus.back() != 1) throw InputError("modulus must be monic");
    if (m >= 2 && !poly_is_irreducible(p, modulus))
        throw InputError("modulus is reducible over GF(" + std::to_string(p) + ")");
    return Field(new FieldSpec(p, m, std::move(modulus)));
}

Field make_field(std::uint64_t p, std::uint32_t m) {
    if (!is_prime_u64(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw InputError("field degree must be >= 1");
    unsigned __int128 ord = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        ord *= p;
        if (ord > FieldSpec::kMaxOrder) throw InputError("field order exceeds 2^32");
    }
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    std::vector<std::uint64_t> mod(m + 1, 0);
    mod[m] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t v = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            mod[i] = v % p;
            v /= p;
        }
        if (m == 1 || poly_is_irreducible(p, mod))
            return Field(new FieldSpec(p, m, mod));
    }
    throw InputError("no irreducible modulus found"); // unreachable
}

std::vector<std::uint64_t> embed_map(const Field& sub, const Field& big) {
    if (sub->characteristic() != big->characteristic())
        throw InputError("embed_map: different characteristics");
    if (!big->is_subfield_order(sub->order()))
        throw InputError("embed_map: " + sub->name() + " does not embed in " + big->name());

    // The image of the small generator is the smallest root of the small
    // modulus; all roots live in the canonical subfield copy.
    const auto& mu = sub->modulus();
    std::uint64_t root = 0;
    bool found = false;
    for (const std::uint64_t z : big->subfield_elements(sub->order())) {
        std::uint64_t acc = 0;
        for (std::size_t i = mu.size(); i-- > 0;)
            acc = big->add(big->mul(acc, z), mu[i]); // coefficients are prime-field constants
        if (acc == 0) {
            root = z;
            found = true;
            break;
        }
    }
    if (!found) throw InputError("embed_map: modulus has no root in target subfield");

    std::vector<std::uint64_t> map(sub->order());
    for (std::uint64_t v = 0; v < sub->order(); ++v) {
        const auto digits = sub->value_to_digits(v);
        std::uint64_t acc = 0;
        for (std::size_t i = digits.size(); i-- > 0;)
            acc = big->add(big->mul(acc, root), digits[i]);
        map[v] = acc;
    }
    return map;
}

} // namespace mrsc
