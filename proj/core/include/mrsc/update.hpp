#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mrsc/construct.hpp"

namespace mrsc {

// Fewest symbols any zero-error update encoder can send: min(m, 2*eps).
std::uint64_t p2p_lower_bound(std::uint64_t m, std::uint64_t eps);

enum class MrscMethod { random, linearized, striped, auto_pick };

// One-receiver update scheme: the receiver holds A*X, the sender ships
// H*(X+E) with E at most eps-sparse, and the receiver recovers A*(X+E).
struct P2PScheme {
    FieldMatrix A;   // m x n, full row rank
    std::uint64_t eps = 0;
    FieldMatrix H;   // ell x n encoder
    FieldMatrix S;   // ell x m with H = S*A
    std::uint64_t cost = 0; // ell
    MrscCertificate certificate;
};

// m <= 2*eps keeps H = A; otherwise H generates a certified 2*eps-dimensional
// subcode built by the chosen method. The linearized method moves the whole
// scheme (A included) into the degree-m extension field.
P2PScheme build_p2p_scheme(const FieldMatrix& a, std::uint64_t eps, MrscMethod method,
                           std::uint64_t seed, const ConstructOptions& opts = {});

std::vector<std::uint64_t> p2p_encode(const P2PScheme& s, const std::vector<std::uint64_t>& x_new);

// side = A*X for the receiver's stale X. Recovers A*(X+E) by finding the
// lightest difference pattern explaining the syndrome y - S*side.
std::vector<std::uint64_t> p2p_decode(const P2PScheme& s, const std::vector<std::uint64_t>& y,
                                      const std::vector<std::uint64_t>& side);

// Two (X, E) pairs an encoder H cannot tell apart even though the receiver's
// stored content must change differently. The three checks are precomputed
// so a pair validates itself.
struct ConfusablePair {
    std::vector<std::uint64_t> x1;
    SparseVector e1;
    std::vector<std::uint64_t> x2;
    SparseVector e2;
    bool h_images_equal = false;   // H(x1+e1) == H(x2+e2)
    bool ax_images_equal = false;  // A*x1 == A*x2
    bool ae_images_differ = false; // A*e1 != A*e2
};

// Exhaustive search for a 2*eps-sparse vector in the dual of the
// intersection of the two row spaces but outside A's dual; splitting it
// yields the confusable pair. Returns nothing when H is a valid encoder.
std::optional<ConfusablePair> find_counterexample(const FieldMatrix& h, const FieldMatrix& a,
                                                  std::uint64_t eps);

} // namespace mrsc
