#include "mrsc/update.hpp"

#include <sstream>

#include "mrsc/combin.hpp"
#include "mrsc/errors.hpp"
#include "mrsc/linalg.hpp"

namespace mrsc {

std::uint64_t p2p_lower_bound(std::uint64_t m, std::uint64_t eps) {
    return std::min(m, 2 * eps);
}

P2PScheme build_p2p_scheme(const FieldMatrix& a, std::uint64_t eps, MrscMethod method,
                           std::uint64_t seed, const ConstructOptions& opts) {
    if (rank(a) != a.rows) throw InputError("build_p2p_scheme: A must have full row rank");
    LinearCode ca(a);
    const std::uint64_t m = a.rows;

    if (m <= 2 * eps) {
        // Corollary: nothing shorter than A itself can work here.
        MrscVerdict v = is_mrsc(ca, ca, MrscMode::definition1, opts.threads);
        return {a,      eps, a, FieldMatrix::identity(a.field, m), m,
                {v.ok, v.subsets_checked}};
    }

    if (method == MrscMethod::auto_pick) {
        const auto det = detect_striped(a);
        method = (det && a.field->order() > det->second) ? MrscMethod::striped
                                                         : MrscMethod::random;
    }

    FieldMatrix scheme_a = a;
    ConstructedCode built = [&]() -> ConstructedCode {
        switch (method) {
        case MrscMethod::random:
            return construct_random_mrsc(ca, 2 * eps, seed, opts);
        case MrscMethod::striped: {
            const auto det = detect_striped(a);
            if (!det) throw InputError("build_p2p_scheme: A is not in striped form");
            StripedConstruction sc = construct_striped_mrsc(a.field, det->first, det->second, eps);
            return std::move(sc.built);
        }
        case MrscMethod::linearized: {
            LinearizedConstruction lc = construct_linearized_mrsc(ca, 2 * eps);
            scheme_a = lc.lifted_super.generator();
            return std::move(lc.built);
        }
        default:
            throw InputError("build_p2p_scheme: unknown method");
        }
    }();

    FieldMatrix h = built.code.generator();
    auto s = solve_left(scheme_a, h);
    if (!s) throw ConstructionError("build_p2p_scheme: encoder rows escaped the row space of A");
    const std::uint64_t cost = h.rows;
    return {std::move(scheme_a), eps, std::move(h), std::move(*s), cost, built.certificate};
}

std::vector<std::uint64_t> p2p_encode(const P2PScheme& s, const std::vector<std::uint64_t>& x_new) {
    return matvec(s.H, x_new);
}

std::vector<std::uint64_t> p2p_decode(const P2PScheme& s, const std::vector<std::uint64_t>& y,
                                      const std::vector<std::uint64_t>& side) {
    if (y.size() != s.H.rows) throw InputError("p2p_decode: y length mismatch");
    if (side.size() != s.A.rows) throw InputError("p2p_decode: side information length mismatch");
    const FieldSpec& f = *s.A.field;

    const std::vector<std::uint64_t> proj = matvec(s.S, side);
    std::vector<std::uint64_t> syndrome(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) syndrome[i] = f.sub(y[i], proj[i]);

    const auto e = min_weight_preimage(s.H, syndrome, static_cast<std::uint32_t>(s.eps));
    if (!e)
        throw DecodeError(
            "p2p_decode: no difference pattern of weight <= eps explains the syndrome");

    std::vector<std::uint64_t> out = side;
    for (const auto& [idx, val] : e->entries)
        for (std::uint64_t r = 0; r < s.A.rows; ++r)
            out[r] = f.add(out[r], f.mul(val, s.A.at(r, idx)));
    return out;
}

std::optional<ConfusablePair> find_counterexample(const FieldMatrix& h, const FieldMatrix& a,
                                                  std::uint64_t eps) {
    if (!same_field(h.field, a.field)) throw InputError("find_counterexample: field mismatch");
    if (h.cols != a.cols) throw InputError("find_counterexample: length mismatch");
    const std::uint64_t n = a.cols;
    const FieldSpec& f = *a.field;

    const FieldMatrix chat = row_space_intersection(h, a);

    // Lightest y with chat*y = 0 but a*y != 0, by support size then kernel
    // basis order.
    std::vector<std::uint64_t> y;
    for (std::uint64_t w = 1; w <= 2 * eps && y.empty(); ++w) {
        for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(w),
                             [&](const std::vector<std::uint32_t>& supp) {
                                 const FieldMatrix kt =
                                     kernel_basis(restrict_columns_idx(chat, supp));
                                 for (std::uint64_t r = 0; r < kt.rows; ++r) {
                                     std::vector<std::uint64_t> cand(n, 0);
                                     for (std::uint64_t j = 0; j < w; ++j)
                                         cand[supp[j]] = kt.at(r, j);
                                     bool hits = false;
                                     for (std::uint64_t i = 0; i < a.rows && !hits; ++i) {
                                         std::uint64_t acc = 0;
                                         for (std::uint64_t j = 0; j < w; ++j)
                                             acc = f.add(acc, f.mul(a.at(i, supp[j]),
                                                                    kt.at(r, j)));
                                         hits = acc != 0;
                                     }
                                     if (hits) {
                                         y = std::move(cand);
                                         return false;
                                     }
                                 }
                                 return true;
                             });
    }
    if (y.empty()) return std::nullopt;

    // e1 - e2 = y: front half of y's support goes to e1, the negated back
    // half to e2; each half is at most eps heavy.
    const SparseVector ysp = SparseVector::from_dense(y);
    const std::size_t cut = (ysp.weight() + 1) / 2;
    SparseVector e1{n, {}};
    SparseVector e2{n, {}};
    for (std::size_t i = 0; i < ysp.entries.size(); ++i) {
        if (i < cut)
            e1.entries.push_back(ysp.entries[i]);
        else
            e2.entries.push_back({ysp.entries[i].first, f.neg(ysp.entries[i].second)});
    }

    // y = u + v with u in A's right kernel and v in H's; x1 = -u makes the
    // two transmissions collide while A tells E1 and E2 apart.
    const FieldMatrix da = kernel_basis(a);
    const FieldMatrix dh = kernel_basis(h);
    const FieldMatrix stacked = vstack(da, dh);
    FieldMatrix yrow(a.field, 1, n, y);
    const auto coeff = solve_left(stacked, yrow);
    if (!coeff)
        throw ConstructionError("find_counterexample: split into the two dual spaces failed");
    std::vector<std::uint64_t> u(n, 0);
    for (std::uint64_t j = 0; j < da.rows; ++j) {
        const std::uint64_t c = coeff->at(0, j);
        if (!c) continue;
        for (std::uint64_t i = 0; i < n; ++i) u[i] = f.add(u[i], f.mul(c, da.at(j, i)));
    }

    ConfusablePair out;
    out.x1.assign(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) out.x1[i] = f.neg(u[i]);
    out.x2.assign(n, 0);
    out.e1 = std::move(e1);
    out.e2 = std::move(e2);

    auto plus = [&](const std::vector<std::uint64_t>& x, const SparseVector& e) {
        std::vector<std::uint64_t> v = x;
        for (const auto& [idx, val] : e.entries) v[idx] = f.add(v[idx], val);
        return v;
    };
    out.h_images_equal = matvec(h, plus(out.x1, out.e1)) == matvec(h, plus(out.x2, out.e2));
    out.ax_images_equal = matvec(a, out.x1) == matvec(a, out.x2);
    out.ae_images_differ = matvec(a, out.e1.to_dense()) != matvec(a, out.e2.to_dense());
    return out;
}

} // namespace mrsc
