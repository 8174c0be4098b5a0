#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mrsc/update.hpp"

namespace mrsc {

// theta_X = smallest rank the intersection code's generator takes on any
// 2*eps-subset that carries no codeword of C_X. Governs how many symbols a
// joint encoder saves over two separate ones.
struct ThetaReport {
    std::uint64_t theta_a = 0;
    std::uint64_t theta_b = 0;
    std::uint64_t theta = 0;
    std::optional<SupportSet> argmin_a;
    std::optional<SupportSet> argmin_b;
    bool trivial_intersection = false;
    FieldMatrix intersection; // canonical generator of rowspace(A) ∩ rowspace(B)
    std::uint64_t subsets_checked = 0;
};

ThetaReport compute_theta(const FieldMatrix& a, const FieldMatrix& b, std::uint64_t eps,
                          std::uint64_t max_subsets = 10'000'000);

enum class BroadcastRegime { trivial_intersection, general, uncovered };

struct BroadcastCost {
    BroadcastRegime regime = BroadcastRegime::uncovered;
    std::optional<std::uint64_t> cost; // empty exactly in the uncovered regime
    std::uint64_t theta = 0;
};

// Trivial intersection: min(m_A,2eps) + min(m_B,2eps). Both ranks above
// 2*eps: 4*eps - theta. The remaining mixed regime has no established
// formula and reports that instead of guessing.
BroadcastCost optimal_broadcast_cost(const FieldMatrix& a, const FieldMatrix& b,
                                     std::uint64_t eps, std::uint64_t max_subsets = 10'000'000);

enum class Receiver { A, B };

struct BroadcastScheme {
    FieldMatrix A;
    FieldMatrix B;
    std::uint64_t eps = 0;
    FieldMatrix H;    // ell x n joint encoder
    FieldMatrix HA;   // per-receiver encoders, rowspace(H) = rowspace(HA)+rowspace(HB)
    FieldMatrix HB;
    FieldMatrix TA;   // HA = TA*H
    FieldMatrix TB;   // HB = TB*H
    FieldMatrix SA;   // HA = SA*A
    FieldMatrix SB;   // HB = SB*B
    FieldMatrix Hhat; // generator of rowspace(HA) ∩ rowspace(HB)
    std::uint64_t cost = 0;
    BroadcastRegime regime = BroadcastRegime::uncovered;
    std::uint64_t theta = 0;
    MrscCertificate certificate_a;
    MrscCertificate certificate_b;
};

// Trivial intersection stacks two independent point-to-point encoders. The
// general regime anchors both per-receiver codes on a shared theta-dimensional
// subcode of the intersection so the stack loses theta rows.
BroadcastScheme build_broadcast_scheme(const FieldMatrix& a, const FieldMatrix& b,
                                       std::uint64_t eps, std::uint64_t seed,
                                       const ConstructOptions& opts = {});

std::vector<std::uint64_t> broadcast_encode(const BroadcastScheme& s,
                                            const std::vector<std::uint64_t>& x_new);

// Projects the shared transmission onto the receiver's rows, then runs the
// point-to-point pipeline against that receiver's matrix.
std::vector<std::uint64_t> broadcast_decode(const BroadcastScheme& s, Receiver r,
                                            const std::vector<std::uint64_t>& y,
                                            const std::vector<std::uint64_t>& side);

} // namespace mrsc
