#include "mrsc/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "mrsc/combin.hpp"
#include "mrsc/errors.hpp"
#include "mrsc/linalg.hpp"
#include "mrsc/rng.hpp"

namespace mrsc {

namespace {

FieldMatrix single_row(const Field& f, const std::uint64_t* src, std::uint64_t n) {
    FieldMatrix m(f, 1, n);
    std::copy(src, src + n, m.data.begin());
    return m;
}

// Greedily picks rows of `pool` that grow the row space of `start`. Returns
// the picked rows as a matrix; throws if fewer than `want` exist.
FieldMatrix complete_basis(const FieldMatrix& start, const FieldMatrix& pool, std::uint64_t want,
                           const char* who) {
    FieldMatrix picked(start.field, 0, start.cols);
    FieldMatrix cur = start;
    for (std::uint64_t r = 0; r < pool.rows && picked.rows < want; ++r) {
        FieldMatrix cand = vstack(cur, single_row(pool.field, pool.row_ptr(r), pool.cols));
        if (rank(cand) == cur.rows + 1) {
            picked = vstack(picked, single_row(pool.field, pool.row_ptr(r), pool.cols));
            cur = std::move(cand);
        }
    }
    if (picked.rows != want)
        throw ConstructionError(std::string(who) + ": basis completion fell short");
    return picked;
}

MrscCertificate certify(const LinearCode& sub, const LinearCode& super, unsigned threads,
                        const char* who) {
    MrscVerdict v = is_mrsc(sub, super, MrscMode::definition1, threads);
    if (!v.ok) {
        std::ostringstream os;
        os << who << ": rank scan failed on subset " << v.witness->to_string();
        throw ConstructionError(os.str());
    }
    return {true, v.subsets_checked};
}

std::vector<std::vector<std::uint32_t>> full_rank_subsets(const FieldMatrix& g0, std::uint64_t n,
                                                          std::uint64_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint64_t> scratch;
    for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                         [&](const std::vector<std::uint32_t>& c) {
                             if (rank_of_columns(g0, c.data(), static_cast<std::uint32_t>(c.size()),
                                                 scratch) == k)
                                 out.push_back(c);
                             return true;
                         });
    return out;
}

// State for the coefficient search behind the random constructions. A
// candidate subcode is rowspace(w * g0) where the first `fixed` rows of w
// are pinned (they lift the inner code when there is one) and the rest are
// free. A subset of full outer rank is violated exactly when the k x k
// product of w with the matching column slice of g0 has determinant zero.
// That determinant is linear in each row of w, so trying every field value
// at one free entry costs one cofactor row per subset instead of a fresh
// rank scan, and a whole greedy sweep stays cheap enough to restart often.
struct CoefficientSearch {
    Field f;
    std::uint64_t t, k, q, fixed;
    std::vector<FieldMatrix> slices; // per subset: t x k column slice of g0
    FieldMatrix w;                   // k x t coefficients, rows [0, fixed) constant
    std::vector<std::uint64_t> prods; // per subset: w * slice, k x k row-major
    std::vector<std::uint64_t> dets;  // per subset: det of that product
    std::uint64_t bad = 0;            // subsets with det zero

    std::vector<std::uint64_t> minor_buf, cof, a_buf, b_buf, touched;
    std::vector<std::uint32_t> counts; // per field value, only for tabled q

    CoefficientSearch(const FieldMatrix& g0, const std::vector<std::vector<std::uint32_t>>& subs,
                      const FieldMatrix& pinned, std::uint64_t k_)
        : f(g0.field), t(g0.rows), k(k_), q(f->order()), fixed(pinned.rows), w(f, k_, g0.rows) {
        slices.reserve(subs.size());
        for (const auto& c : subs) {
            FieldMatrix s(f, t, k);
            for (std::uint64_t i = 0; i < t; ++i)
                for (std::uint64_t j = 0; j < k; ++j) s.at(i, j) = g0.at(i, c[j]);
            slices.push_back(std::move(s));
        }
        for (std::uint64_t r = 0; r < fixed; ++r)
            std::copy(pinned.row_ptr(r), pinned.row_ptr(r) + t, w.row_ptr(r));
        prods.resize(slices.size() * k * k);
        dets.resize(slices.size());
        minor_buf.resize(k * k);
        cof.resize(slices.size() * k);
        a_buf.resize(slices.size());
        b_buf.resize(slices.size());
        if (q <= FieldSpec::kTableLimit) counts.assign(q, 0);
        refresh_rows(0); // the pinned product rows never change after this
    }

    // Determinant of the leading n x n block of m, in place.
    std::uint64_t det_destructive(std::uint64_t* m, std::uint64_t n) const {
        const FieldSpec& ff = *f;
        std::uint64_t det = 1;
        for (std::uint64_t c = 0; c < n; ++c) {
            std::uint64_t piv = c;
            while (piv < n && m[piv * n + c] == 0) ++piv;
            if (piv == n) return 0;
            if (piv != c) {
                for (std::uint64_t j = c; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
                det = ff.neg(det);
            }
            const std::uint64_t pv = m[c * n + c];
            det = ff.mul(det, pv);
            const std::uint64_t pinv = ff.inv(pv);
            for (std::uint64_t r = c + 1; r < n; ++r) {
                const std::uint64_t x = m[r * n + c];
                if (x == 0) continue;
                const std::uint64_t fac = ff.mul(x, pinv);
                for (std::uint64_t j = c + 1; j < n; ++j)
                    m[r * n + j] = ff.sub(m[r * n + j], ff.mul(fac, m[c * n + j]));
                m[r * n + c] = 0;
            }
        }
        return det;
    }

    void refresh_rows(std::uint64_t row_lo) {
        const FieldSpec& ff = *f;
        bad = 0;
        std::vector<std::uint64_t> dbuf(k * k);
        for (std::size_t s = 0; s < slices.size(); ++s) {
            std::uint64_t* p = &prods[s * k * k];
            const FieldMatrix& sl = slices[s];
            for (std::uint64_t i = row_lo; i < k; ++i)
                for (std::uint64_t j = 0; j < k; ++j) {
                    std::uint64_t acc = 0;
                    for (std::uint64_t c = 0; c < t; ++c)
                        acc = ff.add(acc, ff.mul(w.at(i, c), sl.at(c, j)));
                    p[i * k + j] = acc;
                }
            std::copy(p, p + k * k, dbuf.begin());
            dets[s] = det_destructive(dbuf.data(), k);
            if (dets[s] == 0) ++bad;
        }
    }

    void randomize_free(Rng& rng) {
        for (std::uint64_t r = fixed; r < k; ++r)
            for (std::uint64_t c = 0; c < t; ++c) w.at(r, c) = uniform_below(rng, q);
        refresh_rows(fixed);
    }

    void reroll_one_row(Rng& rng) {
        if (fixed == k) return;
        const std::uint64_t r = fixed + uniform_below(rng, k - fixed);
        for (std::uint64_t c = 0; c < t; ++c) w.at(r, c) = uniform_below(rng, q);
        const FieldSpec& ff = *f;
        bad = 0;
        std::vector<std::uint64_t> dbuf(k * k);
        for (std::size_t s = 0; s < slices.size(); ++s) {
            std::uint64_t* p = &prods[s * k * k];
            const FieldMatrix& sl = slices[s];
            for (std::uint64_t j = 0; j < k; ++j) {
                std::uint64_t acc = 0;
                for (std::uint64_t c = 0; c < t; ++c)
                    acc = ff.add(acc, ff.mul(w.at(r, c), sl.at(c, j)));
                p[r * k + j] = acc;
            }
            std::copy(p, p + k * k, dbuf.begin());
            dets[s] = det_destructive(dbuf.data(), k);
            if (dets[s] == 0) ++bad;
        }
    }

    // Signed (k-1)-minors of prods[s] along row r. They only read the other
    // rows, so they stay valid across value changes within row r.
    void cofactor_row(std::size_t s, std::uint64_t r) {
        const FieldSpec& ff = *f;
        const std::uint64_t* p = &prods[s * k * k];
        for (std::uint64_t j = 0; j < k; ++j) {
            std::uint64_t idx = 0;
            for (std::uint64_t i = 0; i < k; ++i) {
                if (i == r) continue;
                for (std::uint64_t c = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor_buf[idx++] = p[i * k + c];
                }
            }
            std::uint64_t d = det_destructive(minor_buf.data(), k - 1);
            if (((r + j) & 1) != 0) d = ff.neg(d);
            cof[s * k + j] = d;
        }
    }

    // One greedy pass over the free entries, taking the exact best value for
    // each (random among ties). Returns whether the violation count dropped.
    bool sweep(Rng& rng) {
        const FieldSpec& ff = *f;
        bool improved = false;
        for (std::uint64_t r = fixed; r < k && bad != 0; ++r) {
            for (std::size_t s = 0; s < slices.size(); ++s) cofactor_row(s, r);
            for (std::uint64_t c = 0; c < t && bad != 0; ++c) {
                const std::uint64_t orig = w.at(r, c);
                std::uint64_t floor_bad = 0; // violations this entry cannot move
                touched.clear();
                for (std::size_t s = 0; s < slices.size(); ++s) {
                    const FieldMatrix& sl = slices[s];
                    std::uint64_t b = 0;
                    for (std::uint64_t j = 0; j < k; ++j)
                        b = ff.add(b, ff.mul(sl.at(c, j), cof[s * k + j]));
                    const std::uint64_t a = ff.sub(dets[s], ff.mul(orig, b));
                    a_buf[s] = a;
                    b_buf[s] = b;
                    if (b == 0) {
                        if (a == 0) ++floor_bad;
                    } else {
                        // det(v) = a + v b = 0 at exactly one value
                        const std::uint64_t vs = ff.mul(ff.neg(a), ff.inv(b));
                        touched.push_back(vs);
                        if (!counts.empty()) ++counts[vs];
                    }
                }
                const auto [best_v, best_cnt] = pick_value(rng, floor_bad, orig);
                if (!counts.empty())
                    for (const auto v : touched) counts[v] = 0;
                if (floor_bad + best_cnt < bad && best_v != orig) {
                    const std::uint64_t delta = ff.sub(best_v, orig);
                    for (std::size_t s = 0; s < slices.size(); ++s) {
                        const FieldMatrix& sl = slices[s];
                        std::uint64_t* row = &prods[s * k * k + r * k];
                        for (std::uint64_t j = 0; j < k; ++j)
                            row[j] = ff.add(row[j], ff.mul(delta, sl.at(c, j)));
                        dets[s] = ff.add(a_buf[s], ff.mul(best_v, b_buf[s]));
                    }
                    w.at(r, c) = best_v;
                    bad = floor_bad + best_cnt;
                    improved = true;
                }
            }
        }
        return improved;
    }

    // Value minimizing the number of killed subsets, uniform among ties.
    std::pair<std::uint64_t, std::uint64_t> pick_value(Rng& rng, std::uint64_t floor_bad,
                                                       std::uint64_t orig) {
        if (floor_bad >= bad) return {orig, bad}; // no value can improve
        if (!counts.empty()) {
            std::uint64_t best_v = 0, best_cnt = UINT64_MAX, seen = 0;
            for (std::uint64_t v = 0; v < q; ++v) {
                const std::uint64_t cn = counts[v];
                if (cn < best_cnt) {
                    best_cnt = cn;
                    best_v = v;
                    seen = 1;
                } else if (cn == best_cnt && uniform_below(rng, ++seen) == 0) {
                    best_v = v;
                }
            }
            return {best_v, best_cnt};
        }
        // untabled field: the killed values are sparse, sort and look for a gap
        std::sort(touched.begin(), touched.end());
        std::uint64_t distinct = 0;
        for (std::size_t i = 0; i < touched.size(); ++i)
            if (i == 0 || touched[i] != touched[i - 1]) ++distinct;
        if (distinct < q) {
            std::uint64_t v;
            do {
                v = uniform_below(rng, q);
            } while (std::binary_search(touched.begin(), touched.end(), v));
            return {v, 0};
        }
        std::uint64_t best_v = touched[0], best_cnt = UINT64_MAX, seen = 0, i = 0;
        while (i < touched.size()) {
            std::uint64_t jx = i;
            while (jx < touched.size() && touched[jx] == touched[i]) ++jx;
            const std::uint64_t cn = jx - i;
            if (cn < best_cnt) {
                best_cnt = cn;
                best_v = touched[i];
                seen = 1;
            } else if (cn == best_cnt && uniform_below(rng, ++seen) == 0) {
                best_v = touched[i];
            }
            i = jx;
        }
        return {best_v, best_cnt};
    }
};

struct CoeffOutcome {
    bool ok = false;
    FieldMatrix w;
    std::uint64_t best_bad = UINT64_MAX;
    std::optional<std::size_t> first_bad; // index into the subset list
};

// Random restarts, each refined by greedy sweeps when repair is on; a sweep
// that changes nothing rerolls one free row to leave the local minimum.
CoeffOutcome search_coefficients(CoefficientSearch& cs, Rng& rng, const ConstructOptions& opts) {
    CoeffOutcome out;
    out.w = cs.w;
    const std::uint64_t tries = std::max<std::uint64_t>(opts.max_tries, 1);
    for (std::uint64_t tr = 0; tr < tries; ++tr) {
        cs.randomize_free(rng);
        if (opts.repair)
            for (std::uint64_t sw = 0; sw < opts.repair_sweeps && cs.bad != 0; ++sw)
                if (!cs.sweep(rng) && cs.bad != 0) cs.reroll_one_row(rng);
        if (cs.bad == 0 && cs.slices.empty() && rank(cs.w) != cs.k) continue;
        if (cs.bad < out.best_bad) {
            out.best_bad = cs.bad;
            out.w = cs.w;
            if (cs.bad == 0) break;
        }
    }
    out.ok = out.best_bad == 0;
    if (!out.ok && !cs.slices.empty()) {
        cs.w = out.w;
        cs.refresh_rows(0);
        for (std::size_t s = 0; s < cs.dets.size(); ++s)
            if (cs.dets[s] == 0) {
                out.first_bad = s;
                break;
            }
    }
    return out;
}

} // namespace

FieldMatrix MooreMatrix::to_matrix() const {
    FieldMatrix m(field, depth, evaluations.size());
    for (std::uint64_t i = 0; i < depth; ++i)
        for (std::uint64_t j = 0; j < evaluations.size(); ++j)
            m.at(i, j) = field->frobenius_q(evaluations[j], base_q, i);
    return m;
}

ConstructedCode construct_random_mrsc(const LinearCode& super, std::uint64_t k,
                                      std::uint64_t seed, const ConstructOptions& opts) {
    const std::uint64_t t = super.k();
    if (k > t) throw InputError("construct_random_mrsc: k exceeds the base dimension");
    if (k == t)
        return {super, certify(super, super, opts.threads, "construct_random_mrsc")};
    if (k == 0) {
        LinearCode z = LinearCode::zero_code(super.field(), super.n());
        MrscCertificate c = certify(z, super, opts.threads, "construct_random_mrsc");
        return {std::move(z), c};
    }

    const std::uint64_t n = super.n();
    const FieldMatrix& g0 = super.generator();
    const std::vector<std::vector<std::uint32_t>> subs = full_rank_subsets(g0, n, k);
    CoefficientSearch cs(g0, subs, FieldMatrix(super.field(), 0, t), k);
    Rng rng(seed);
    CoeffOutcome got = search_coefficients(cs, rng, opts);
    if (!got.ok) {
        std::ostringstream os;
        os << "construct_random_mrsc: no candidate passed after " << opts.max_tries << " tries"
           << (opts.repair ? " plus repair sweeps" : "");
        if (got.first_bad)
            os << "; best candidate first dropped rank on subset "
               << SupportSet::from_zero_based(n, subs[*got.first_bad]).to_string();
        throw ConstructionError(os.str());
    }
    LinearCode cand(matmul(got.w, g0));
    MrscCertificate cert = certify(cand, super, opts.threads, "construct_random_mrsc");
    return {std::move(cand), cert};
}

LinearCode lift_code(const LinearCode& c, const Field& big) {
    return LinearCode(map_entries(c.generator(), embed_map(c.field(), big), big));
}

LinearizedConstruction construct_linearized_mrsc(const LinearCode& super, std::uint64_t k) {
    const std::uint64_t t = super.k();
    if (t == 0) throw InputError("construct_linearized_mrsc: base code has dimension 0");
    if (k > t) throw InputError("construct_linearized_mrsc: k exceeds the base dimension");
    const Field& f = super.field();
    const std::uint64_t q = f->order();

    Field big = make_field(f->characteristic(), f->degree() * static_cast<std::uint32_t>(t));
    FieldMatrix g0b = map_entries(super.generator(), embed_map(f, big), big);
    MooreMatrix moore{big, q, k, vecmat(big->subfield_basis(q), g0b)};
    LinearCode lifted(std::move(g0b));

    LinearCode code = [&] {
        try {
            return LinearCode(moore.to_matrix());
        } catch (const InputError&) {
            throw ConstructionError("construct_linearized_mrsc: iterated-power rows are dependent");
        }
    }();
    MrscCertificate cert = certify(code, lifted, 1, "construct_linearized_mrsc");
    return {{std::move(code), cert}, std::move(lifted), std::move(moore)};
}

LinearCode extend_code(const LinearCode& c, const FieldMatrix& tail_cols) {
    if (!same_field(c.field(), tail_cols.field)) throw InputError("extend_code: field mismatch");
    if (tail_cols.rows != c.k())
        throw InputError("extend_code: tail must have one row per generator row");
    return LinearCode(hstack(c.generator(), tail_cols));
}

ExtensionCheck check_extension_property(const LinearCode& extended, std::uint64_t delta) {
    const std::uint64_t t = extended.k();
    const std::uint64_t ntot = extended.n();
    if (delta > t) throw InputError("check_extension_property: delta exceeds the dimension");
    if (delta >= ntot) throw InputError("check_extension_property: no body coordinates left");
    const std::uint64_t n = ntot - delta;
    const std::uint64_t k = t - delta;
    const FieldMatrix& g = extended.generator();

    ExtensionCheck out;
    std::vector<std::uint64_t> scratch;
    std::vector<std::uint32_t> idx(k + delta);
    for (std::uint64_t d = 0; d < delta; ++d) idx[k + d] = static_cast<std::uint32_t>(n + d);
    for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                         [&](const std::vector<std::uint32_t>& c) {
                             ++out.subsets_checked;
                             const auto body = rank_of_columns(g, c.data(),
                                                               static_cast<std::uint32_t>(c.size()),
                                                               scratch);
                             std::copy(c.begin(), c.end(), idx.begin());
                             const auto full = rank_of_columns(g, idx.data(),
                                                               static_cast<std::uint32_t>(idx.size()),
                                                               scratch);
                             if (full != body + delta) {
                                 out.witness = SupportSet::from_zero_based(ntot, c);
                                 return false;
                             }
                             return true;
                         });
    out.ok = !out.witness.has_value();
    return out;
}

ShortenedExtension shorten_extension(const LinearCode& extended, std::uint64_t delta) {
    ExtensionCheck chk = check_extension_property(extended, delta);
    if (!chk.ok) {
        std::ostringstream os;
        os << "shorten_extension: extension property fails on subset " << chk.witness->to_string();
        throw ConstructionError(os.str());
    }
    const std::uint64_t ntot = extended.n();
    const std::uint64_t n = ntot - delta;
    const std::uint64_t k = extended.k() - delta;

    std::vector<std::uint32_t> body(n);
    std::iota(body.begin(), body.end(), 0);
    LinearCode base = LinearCode::from_span(restrict_columns_idx(extended.generator(), body));
    LinearCode sh = shorten(extended, SupportSet::from_zero_based(ntot, body));
    if (sh.k() != k) {
        std::ostringstream os;
        os << "shorten_extension: shortened dimension is " << sh.k() << ", expected " << k;
        throw ConstructionError(os.str());
    }
    MrscCertificate cert = certify(sh, base, 1, "shorten_extension");
    return {{std::move(sh), cert}, std::move(base)};
}

LinearCode derive_extension_from_mrsc(const LinearCode& sub, const LinearCode& super) {
    if (!same_field(sub.field(), super.field()))
        throw InputError("derive_extension_from_mrsc: field mismatch");
    if (sub.n() != super.n()) throw InputError("derive_extension_from_mrsc: length mismatch");
    if (!subcode_factor(sub, super))
        throw InputError("derive_extension_from_mrsc: first code is not a subcode of the second");

    const std::uint64_t n = super.n();
    const std::uint64_t t = super.k();
    const std::uint64_t delta = t - sub.k();
    const Field& f = super.field();
    FieldMatrix h0 = dual(super).generator();
    // super's dual sits inside sub's dual; extend it to a full dual basis and
    // give the extra rows one fresh tail coordinate each.
    FieldMatrix he = complete_basis(h0, dual(sub).generator(), delta,
                                    "derive_extension_from_mrsc");
    FieldMatrix parity = vstack(hstack(h0, FieldMatrix(f, h0.rows, delta)),
                                hstack(he, FieldMatrix::identity(f, delta)));
    return LinearCode(kernel_basis(parity));
}

StripedConstruction construct_striped_mrsc(const Field& f, const std::vector<std::uint64_t>& a,
                                           std::uint64_t m, std::uint64_t eps) {
    if (m < 2 * eps)
        throw InputError(
            "construct_striped_mrsc: m < 2*eps, the striped matrix itself is already optimal");
    if (f->order() <= m)
        throw InputError("construct_striped_mrsc: field needs more than m elements");

    LinearCode base(build_striped_matrix(f, a, m));
    const std::uint64_t delta = m - 2 * eps;
    // One power column per tail coordinate, evaluated at m distinct nonzero
    // points, so every delta columns of the tail's transpose are independent.
    FieldMatrix tail(f, m, delta);
    for (std::uint64_t j = 0; j < m; ++j) {
        std::uint64_t pw = 1;
        for (std::uint64_t i = 0; i < delta; ++i) {
            tail.at(j, i) = pw;
            pw = f->mul(pw, j + 1);
        }
    }
    ShortenedExtension sh = shorten_extension(extend_code(base, tail), delta);
    return {std::move(sh.built), std::move(sh.base), std::move(tail)};
}

SandwichSpec::SandwichSpec(LinearCode super_, LinearCode inner_, std::uint64_t k_)
    : super(std::move(super_)), inner(std::move(inner_)), k(k_) {
    if (!same_field(super.field(), inner.field())) throw InputError("SandwichSpec: field mismatch");
    if (inner.n() != super.n()) throw InputError("SandwichSpec: length mismatch");
    if (!subcode_factor(inner, super))
        throw InputError("SandwichSpec: inner code is not inside the outer code");
    if (k < inner.k() || k > super.k())
        throw InputError("SandwichSpec: k must sit between the two dimensions");
}

SandwichCheck check_sandwich_necessary(const SandwichSpec& spec) {
    const std::uint64_t n = spec.super.n();
    const std::uint64_t k = spec.k;
    const std::uint64_t s = spec.inner.k();
    const FieldMatrix& g0 = spec.super.generator();
    const FieldMatrix& gi = spec.inner.generator();

    SandwichCheck out;
    std::vector<std::uint64_t> scratch;
    for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                         [&](const std::vector<std::uint32_t>& c) {
                             ++out.subsets_checked;
                             const auto cnt = static_cast<std::uint32_t>(c.size());
                             if (rank_of_columns(g0, c.data(), cnt, scratch) != k) return true;
                             if (rank_of_columns(gi, c.data(), cnt, scratch) != s) {
                                 out.witness = SupportSet::from_zero_based(n, c);
                                 return false;
                             }
                             return true;
                         });
    out.ok = !out.witness.has_value();
    return out;
}

ConstructedCode construct_sandwiched_random(const SandwichSpec& spec, std::uint64_t seed,
                                            const ConstructOptions& opts) {
    SandwichCheck nec = check_sandwich_necessary(spec);
    if (!nec.ok) {
        std::ostringstream os;
        os << "construct_sandwiched_random: no such subcode exists, the inner code drops rank "
              "on subset "
           << nec.witness->to_string();
        throw ConstructionError(os.str());
    }
    const std::uint64_t t = spec.super.k();
    const std::uint64_t s = spec.inner.k();
    const std::uint64_t k = spec.k;
    const std::uint64_t n = spec.super.n();
    if (k == t)
        return {spec.super, certify(spec.super, spec.super, opts.threads,
                                    "construct_sandwiched_random")};
    if (k == s)
        return {spec.inner, certify(spec.inner, spec.super, opts.threads,
                                    "construct_sandwiched_random")};

    const FieldMatrix& g0 = spec.super.generator();
    std::optional<FieldMatrix> pinned = subcode_factor(spec.inner, spec.super);
    if (!pinned)
        throw ConstructionError("construct_sandwiched_random: inner code lost its factorization");
    const std::vector<std::vector<std::uint32_t>> subs = full_rank_subsets(g0, n, k);
    CoefficientSearch cs(g0, subs, *pinned, k);
    Rng rng(seed);
    CoeffOutcome got = search_coefficients(cs, rng, opts);
    if (!got.ok) {
        std::ostringstream os;
        os << "construct_sandwiched_random: no candidate passed after " << opts.max_tries
           << " tries" << (opts.repair ? " plus repair sweeps" : "") << "; best candidate violates "
           << got.best_bad << " of " << subs.size() << " subsets";
        if (got.first_bad)
            os << ", first at "
               << SupportSet::from_zero_based(n, subs[*got.first_bad]).to_string();
        throw ConstructionError(os.str());
    }

    LinearCode code(matmul(got.w, g0));
    MrscCertificate cert = certify(code, spec.super, opts.threads, "construct_sandwiched_random");
    if (!subcode_factor(spec.inner, code))
        throw ConstructionError("construct_sandwiched_random: inner code escaped the span");
    return {std::move(code), cert};
}

SandwichLinearized construct_sandwiched_linearized(const SandwichSpec& spec) {
    SandwichCheck nec = check_sandwich_necessary(spec);
    if (!nec.ok) {
        std::ostringstream os;
        os << "construct_sandwiched_linearized: no such subcode exists, the inner code drops "
              "rank on subset "
           << nec.witness->to_string();
        throw ConstructionError(os.str());
    }
    const std::uint64_t t = spec.super.k();
    const std::uint64_t s = spec.inner.k();
    const std::uint64_t k = spec.k;
    if (s == t) {
        MrscCertificate cert = certify(spec.super, spec.super, 1,
                                       "construct_sandwiched_linearized");
        return {{spec.super, cert}, spec.super, spec.super};
    }

    const Field& f = spec.super.field();
    const std::uint64_t q = f->order();
    Field big = make_field(f->characteristic(),
                           f->degree() * static_cast<std::uint32_t>(t - s));
    LinearCode lifted_super = lift_code(spec.super, big);
    FieldMatrix b = complete_basis(spec.inner.generator(), spec.super.generator(), t - s,
                                   "construct_sandwiched_linearized");
    FieldMatrix bb = map_entries(b, embed_map(f, big), big);
    MooreMatrix moore{big, q, k - s, vecmat(big->subfield_basis(q), bb)};

    FieldMatrix gi = s > 0 ? map_entries(spec.inner.generator(), embed_map(f, big), big)
                           : FieldMatrix(big, 0, spec.inner.n());
    LinearCode lifted_inner = s > 0 ? LinearCode(gi) : LinearCode::zero_code(big, spec.inner.n());
    LinearCode code = [&] {
        try {
            return LinearCode(vstack(gi, moore.to_matrix()));
        } catch (const InputError&) {
            throw ConstructionError(
                "construct_sandwiched_linearized: iterated-power rows are dependent");
        }
    }();
    MrscCertificate cert = certify(code, lifted_super, 1, "construct_sandwiched_linearized");
    if (!subcode_factor(lifted_inner, code))
        throw ConstructionError("construct_sandwiched_linearized: inner code escaped the span");
    return {{std::move(code), cert}, std::move(lifted_super), std::move(lifted_inner)};
}

} // namespace mrsc
