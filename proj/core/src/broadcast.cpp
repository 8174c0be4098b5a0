#include "mrsc/broadcast.hpp"

#include <sstream>

#include "mrsc/combin.hpp"
#include "mrsc/errors.hpp"
#include "mrsc/linalg.hpp"
#include "mrsc/rng.hpp"

namespace mrsc {

ThetaReport compute_theta(const FieldMatrix& a, const FieldMatrix& b, std::uint64_t eps,
                          std::uint64_t max_subsets) {
    if (!same_field(a.field, b.field)) throw InputError("compute_theta: field mismatch");
    if (a.cols != b.cols) throw InputError("compute_theta: length mismatch");
    if (rank(a) != a.rows || rank(b) != b.rows)
        throw InputError("compute_theta: matrices must have full row rank");
    const std::uint64_t n = a.cols;

    ThetaReport rep;
    rep.intersection = row_space_intersection(a, b);
    if (rep.intersection.rows == 0) {
        rep.trivial_intersection = true;
        return rep;
    }
    if (binomial(n, 2 * eps) > max_subsets)
        throw BudgetError("compute_theta: subset budget exceeded");

    auto scan = [&](const FieldMatrix& x, std::optional<SupportSet>& argmin) {
        const LinearCode dx = dual(LinearCode(x));
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        std::vector<std::uint64_t> scratch;
        for_each_core(dx, static_cast<std::uint32_t>(2 * eps), [&](const SupportSet& s) {
            ++rep.subsets_checked;
            const auto idx = s.zero_based();
            const std::uint64_t r = rank_of_columns(
                rep.intersection, idx.data(), static_cast<std::uint32_t>(idx.size()), scratch);
            if (r < best) {
                best = r;
                argmin = s;
            }
            return best != 0;
        });
        if (best == std::numeric_limits<std::uint64_t>::max())
            throw InputError("compute_theta: a receiver's dual has no 2*eps-core");
        return best;
    };
    rep.theta_a = scan(a, rep.argmin_a);
    rep.theta_b = scan(b, rep.argmin_b);
    rep.theta = std::min(rep.theta_a, rep.theta_b);
    return rep;
}

BroadcastCost optimal_broadcast_cost(const FieldMatrix& a, const FieldMatrix& b,
                                     std::uint64_t eps, std::uint64_t max_subsets) {
    const ThetaReport rep = compute_theta(a, b, eps, max_subsets);
    BroadcastCost out;
    out.theta = rep.theta;
    if (rep.trivial_intersection) {
        out.regime = BroadcastRegime::trivial_intersection;
        out.cost = p2p_lower_bound(a.rows, eps) + p2p_lower_bound(b.rows, eps);
    } else if (a.rows > 2 * eps && b.rows > 2 * eps) {
        out.regime = BroadcastRegime::general;
        out.cost = 4 * eps - rep.theta;
    } else {
        out.regime = BroadcastRegime::uncovered;
    }
    return out;
}

BroadcastScheme build_broadcast_scheme(const FieldMatrix& a, const FieldMatrix& b,
                                       std::uint64_t eps, std::uint64_t seed,
                                       const ConstructOptions& opts) {
    const ThetaReport rep = compute_theta(a, b, eps);
    const Field& f = a.field;
    const std::uint64_t n = a.cols;
    Rng rng(seed);
    const std::uint64_t seed_hat = rng();
    const std::uint64_t seed_a = rng();
    const std::uint64_t seed_b = rng();

    BroadcastScheme out;
    out.A = a;
    out.B = b;
    out.eps = eps;
    out.theta = rep.theta;

    if (rep.trivial_intersection) {
        out.regime = BroadcastRegime::trivial_intersection;
        P2PScheme pa = build_p2p_scheme(a, eps, MrscMethod::auto_pick, seed_a, opts);
        P2PScheme pb = build_p2p_scheme(b, eps, MrscMethod::auto_pick, seed_b, opts);
        out.H = vstack(pa.H, pb.H);
        if (rank(out.H) != out.H.rows)
            throw ConstructionError(
                "build_broadcast_scheme: stacked encoders lost rank despite trivial intersection");
        out.TA = hstack(FieldMatrix::identity(f, pa.H.rows), FieldMatrix(f, pa.H.rows, pb.H.rows));
        out.TB = hstack(FieldMatrix(f, pb.H.rows, pa.H.rows), FieldMatrix::identity(f, pb.H.rows));
        out.HA = std::move(pa.H);
        out.HB = std::move(pb.H);
        out.SA = std::move(pa.S);
        out.SB = std::move(pb.S);
        out.Hhat = FieldMatrix(f, 0, n);
        out.cost = out.H.rows;
        out.certificate_a = pa.certificate;
        out.certificate_b = pb.certificate;
        return out;
    }

    if (a.rows <= 2 * eps || b.rows <= 2 * eps)
        throw ConstructionError(
            "build_broadcast_scheme: row spaces intersect nontrivially but a receiver rank is "
            "<= 2*eps; no verified formula covers this regime");

    out.regime = BroadcastRegime::general;
    // Anchor: a theta-dimensional subcode of the intersection that both
    // per-receiver codes will contain, so stacking saves theta rows.
    ConstructedCode anchor = construct_random_mrsc(LinearCode(rep.intersection), rep.theta,
                                                   seed_hat, opts);
    ConstructedCode built_a = construct_sandwiched_random(
        SandwichSpec(LinearCode(a), anchor.code, 2 * eps), seed_a, opts);
    ConstructedCode built_b = construct_sandwiched_random(
        SandwichSpec(LinearCode(b), anchor.code, 2 * eps), seed_b, opts);
    out.HA = built_a.code.generator();
    out.HB = built_b.code.generator();

    out.Hhat = row_space_intersection(out.HA, out.HB);
    if (out.Hhat.rows != rep.theta ||
        !row_spaces_equal(out.Hhat, anchor.code.generator()))
        throw ConstructionError(
            "build_broadcast_scheme: the two encoders share more than the anchored subcode");

    out.H = LinearCode::from_span(vstack(out.HA, out.HB)).generator();
    out.cost = out.H.rows;
    if (out.cost != 4 * eps - rep.theta)
        throw ConstructionError("build_broadcast_scheme: stacked rank is not 4*eps - theta");

    auto ta = solve_left(out.H, out.HA);
    auto tb = solve_left(out.H, out.HB);
    auto sa = solve_left(a, out.HA);
    auto sb = solve_left(b, out.HB);
    if (!ta || !tb || !sa || !sb)
        throw ConstructionError("build_broadcast_scheme: projection factors failed to solve");
    out.TA = std::move(*ta);
    out.TB = std::move(*tb);
    out.SA = std::move(*sa);
    out.SB = std::move(*sb);
    out.certificate_a = built_a.certificate;
    out.certificate_b = built_b.certificate;
    return out;
}

std::vector<std::uint64_t> broadcast_encode(const BroadcastScheme& s,
                                            const std::vector<std::uint64_t>& x_new) {
    return matvec(s.H, x_new);
}

std::vector<std::uint64_t> broadcast_decode(const BroadcastScheme& s, Receiver r,
                                            const std::vector<std::uint64_t>& y,
                                            const std::vector<std::uint64_t>& side) {
    const FieldMatrix& hx = r == Receiver::A ? s.HA : s.HB;
    const FieldMatrix& tx = r == Receiver::A ? s.TA : s.TB;
    const FieldMatrix& sx = r == Receiver::A ? s.SA : s.SB;
    const FieldMatrix& ax = r == Receiver::A ? s.A : s.B;
    if (y.size() != s.H.rows) throw InputError("broadcast_decode: transmission length mismatch");
    if (side.size() != ax.rows)
        throw InputError("broadcast_decode: side information length mismatch");
    const FieldSpec& f = *ax.field;

    const std::vector<std::uint64_t> yx = matvec(tx, y);
    const std::vector<std::uint64_t> proj = matvec(sx, side);
    std::vector<std::uint64_t> syndrome(yx.size());
    for (std::size_t i = 0; i < yx.size(); ++i) syndrome[i] = f.sub(yx[i], proj[i]);

    const auto e = min_weight_preimage(hx, syndrome, static_cast<std::uint32_t>(s.eps));
    if (!e)
        throw DecodeError(
            "broadcast_decode: no difference pattern of weight <= eps explains the syndrome");
    std::vector<std::uint64_t> out = side;
    for (const auto& [idx, val] : e->entries)
        for (std::uint64_t i = 0; i < ax.rows; ++i)
            out[i] = f.add(out[i], f.mul(val, ax.at(i, idx)));
    return out;
}

} // namespace mrsc
