#pragma once

#include <cstdint>
#include <optional>

#include "mrsc/code.hpp"

namespace mrsc {

struct MrscCertificate {
    bool verified = false;
    std::uint64_t subsets_checked = 0;
};

struct ConstructedCode {
    LinearCode code;
    MrscCertificate certificate;
};

struct ConstructOptions {
    std::uint64_t max_tries = 200;
    // When random draws exhaust, walk entry-by-entry over the free
    // coefficients, keeping changes that reduce the number of violated
    // subsets. Deterministic given the seed.
    bool repair = false;
    std::uint64_t repair_sweeps = 16;
    unsigned threads = 1;
};

// depth x n matrix whose rows are evaluations iterated under x -> x^base_q:
// row i holds evaluations[j]^(base_q^i).
struct MooreMatrix {
    Field field;
    std::uint64_t base_q = 0;
    std::uint64_t depth = 0;
    std::vector<std::uint64_t> evaluations;

    FieldMatrix to_matrix() const;
};

// Searches k x t coefficient matrices over the base field, random restarts
// refined by greedy entry repair when enabled, until the resulting subcode
// passes the full rank scan. Every output is certified.
ConstructedCode construct_random_mrsc(const LinearCode& super, std::uint64_t k,
                                      std::uint64_t seed, const ConstructOptions& opts = {});

struct LinearizedConstruction {
    ConstructedCode built;    // over GF(q^t)
    LinearCode lifted_super;  // the base code embedded in GF(q^t)
    MooreMatrix moore;
};

// Deterministic subcode over the degree-t extension: evaluations are the
// subfield basis combined through the base generator, rows iterate the
// q-power map. Certified against the lifted base code.
LinearizedConstruction construct_linearized_mrsc(const LinearCode& super, std::uint64_t k);

LinearCode extend_code(const LinearCode& c, const FieldMatrix& tail_cols);

struct ExtensionCheck {
    bool ok = false;
    std::optional<SupportSet> witness;
    std::uint64_t subsets_checked = 0;
};

// For an [n+delta, t] code whose last delta coordinates are the extension
// tail: every size-(t-delta) subset S of the body must satisfy
// rank over S plus tail = rank over S (body only) + delta.
ExtensionCheck check_extension_property(const LinearCode& extended, std::uint64_t delta);

struct ShortenedExtension {
    ConstructedCode built;  // [n, t-delta], certified against `base`
    LinearCode base;        // the body code (first n coordinates)
};

// Checks the extension property, then shortens onto the body coordinates.
ShortenedExtension shorten_extension(const LinearCode& extended, std::uint64_t delta);

// Inverse direction: from a certified [n, k] subcode of an [n, t] code,
// build an [n + (t-k), t] extension that passes check_extension_property and
// shortens back to the subcode.
LinearCode derive_extension_from_mrsc(const LinearCode& sub, const LinearCode& super);

struct StripedConstruction {
    ConstructedCode built;  // [m*|a|, 2*eps]
    LinearCode base;        // the striped code itself
    FieldMatrix tail;       // the m x (m-2*eps) extension block
};

// Stripes the row vector a into m blocks and shortens a Vandermonde
// extension: needs q > m and m >= 2*eps. Works with zero entries in a as
// long as a is not the zero vector.
StripedConstruction construct_striped_mrsc(const Field& f, const std::vector<std::uint64_t>& a,
                                           std::uint64_t m, std::uint64_t eps);

// A target dimension k between an inner code and an outer code,
// inner ⊆ result ⊆ super with dim(inner) = s <= k <= t = dim(super).
struct SandwichSpec {
    LinearCode super;
    LinearCode inner;
    std::uint64_t k;

    SandwichSpec(LinearCode super_, LinearCode inner_, std::uint64_t k_);
};

struct SandwichCheck {
    bool ok = false;
    std::optional<SupportSet> witness;
    std::uint64_t subsets_checked = 0;
};

// Necessary condition for a sandwiched subcode to exist: on every size-k
// subset where the outer generator has rank k, the inner generator must
// already have rank s.
SandwichCheck check_sandwich_necessary(const SandwichSpec& spec);

// Random route: the same coefficient search as construct_random_mrsc, with
// the rows that reproduce the inner code pinned so it stays inside every
// candidate.
ConstructedCode construct_sandwiched_random(const SandwichSpec& spec, std::uint64_t seed,
                                            const ConstructOptions& opts = {});

struct SandwichLinearized {
    ConstructedCode built;     // over GF(q^(t-s))
    LinearCode lifted_super;
    LinearCode lifted_inner;
};

// Deterministic route over GF(q^(t-s)): inner rows pass through unchanged,
// the remaining k-s rows are Moore rows built from a basis completion.
SandwichLinearized construct_sandwiched_linearized(const SandwichSpec& spec);

// Entrywise embedding of a code into an extension field.
LinearCode lift_code(const LinearCode& c, const Field& big);

} // namespace mrsc
