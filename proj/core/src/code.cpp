#include "mrsc/code.hpp"

#include <algorithm>
#include <atomic>

#include "mrsc/combin.hpp"
#include "mrsc/parallel.hpp"

namespace mrsc {

LinearCode dual(const LinearCode& c) { return LinearCode(kernel_basis(c.generator())); }

LinearCode puncture(const LinearCode& c, const SupportSet& s) {
    if (s.n != c.n()) throw InputError("puncture: support length mismatch");
    if (s.size() < 1) throw InputError("puncture: empty support");
    return LinearCode::from_span(restrict_columns(c.generator(), s));
}

LinearCode shorten(const LinearCode& c, const SupportSet& s) {
    if (s.n != c.n()) throw InputError("shorten: support length mismatch");
    if (s.size() < 1) throw InputError("shorten: empty support");
    const auto comp = s.complement_zero_based();
    // Message vectors whose codeword vanishes off s.
    const FieldMatrix x = kernel_basis(transpose(restrict_columns_idx(c.generator(), comp)));
    return LinearCode::from_span(matmul(x, restrict_columns(c.generator(), s)));
}

bool is_core(const LinearCode& c, const SupportSet& s) {
    if (s.n != c.n()) throw InputError("is_core: support length mismatch");
    if (s.size() == 0) return true;
    if (s.size() <= c.k()) {
        const auto idx = s.zero_based();
        std::vector<std::uint64_t> scratch;
        return rank_of_columns(c.generator(), idx.data(), static_cast<std::uint32_t>(idx.size()),
                               scratch) == idx.size();
    }
    return shorten(dual(c), s).k() == 0;
}

void for_each_core(const LinearCode& c, std::uint32_t k,
                   const std::function<bool(const SupportSet&)>& fn) {
    if (k > c.k()) return; // rank(G|_S) = |S| needs |S| <= dim
    if (k == 0) {
        fn(SupportSet{c.n(), {}});
        return;
    }
    std::vector<std::uint64_t> scratch;
    const auto& g = c.generator();
    for_each_combination(static_cast<std::uint32_t>(c.n()), k,
                         [&](const std::vector<std::uint32_t>& idx) {
                             if (rank_of_columns(g, idx.data(), k, scratch) == k)
                                 return fn(SupportSet::from_zero_based(c.n(), idx));
                             return true;
                         });
}

std::vector<SupportSet> enumerate_cores(const LinearCode& c, std::uint32_t k,
                                        std::uint64_t max_subsets) {
    if (binomial(c.n(), k) > max_subsets)
        throw BudgetError("enumerate_cores: subset budget exceeded");
    std::vector<SupportSet> out;
    for_each_core(c, k, [&](const SupportSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::optional<FieldMatrix> subcode_factor(const LinearCode& sub, const LinearCode& super) {
    if (!same_field(sub.field(), super.field()) || sub.n() != super.n()) return std::nullopt;
    return solve_left(super.generator(), sub.generator());
}

namespace {

struct ScanScratch {
    std::vector<std::uint64_t> buf;
    std::vector<std::uint32_t> comp;
};

// Scans all size-k subsets of {0..n-1} in lexicographic order and returns the
// rank of the first one failing pred, or nullopt if all pass. Deterministic
// for any thread count.
std::optional<std::uint64_t> scan_subsets(std::uint32_t n, std::uint32_t k, unsigned threads,
                                          const std::function<bool(const std::uint32_t*, ScanScratch&)>& pred) {
    const std::uint64_t total = binomial(n, k);
    if (total == 0) return std::nullopt;
    if (k == 0) {
        ScanScratch s;
        std::uint32_t dummy = 0;
        return pred(&dummy, s) ? std::nullopt : std::optional<std::uint64_t>(0);
    }

    std::atomic<std::uint64_t> best{UINT64_MAX};
    parallel_chunks(total, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        ScanScratch scratch;
        auto combo = combination_unrank(n, k, begin);
        for (std::uint64_t r = begin; r < end; ++r) {
            if (r > best.load(std::memory_order_relaxed)) return;
            if (!pred(combo.data(), scratch)) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (r < cur && !best.compare_exchange_weak(cur, r)) {
                }
                return;
            }
            next_combination(combo, n);
        }
    });
    const std::uint64_t b = best.load();
    if (b == UINT64_MAX) return std::nullopt;
    return b;
}

MrscVerdict verdict_from_scan(std::uint32_t n, std::uint32_t k, std::uint64_t total,
                              const std::optional<std::uint64_t>& fail_rank) {
    MrscVerdict v;
    if (!fail_rank) {
        v.ok = true;
        v.subsets_checked = total;
        return v;
    }
    v.ok = false;
    v.subsets_checked = *fail_rank + 1;
    v.witness = SupportSet::from_zero_based(n, combination_unrank(n, k, *fail_rank));
    return v;
}

} // namespace

MrscVerdict is_mrsc(const LinearCode& sub, const LinearCode& super, MrscMode mode,
                    unsigned threads) {
    if (!same_field(sub.field(), super.field()) || sub.n() != super.n())
        throw InputError("is_mrsc: codes live in different spaces");
    if (!subcode_factor(sub, super))
        throw InputError("is_mrsc: first code is not a subcode of the second");

    const std::uint32_t n = static_cast<std::uint32_t>(sub.n());
    const std::uint32_t k = static_cast<std::uint32_t>(sub.k());
    const FieldMatrix& g = sub.generator();
    const FieldMatrix& g0 = super.generator();

    switch (mode) {
    case MrscMode::definition1: {
        auto fail = scan_subsets(n, k, threads, [&](const std::uint32_t* idx, ScanScratch& s) {
            if (rank_of_columns(g0, idx, k, s.buf) != k) return true;
            return rank_of_columns(g, idx, k, s.buf) == k;
        });
        return verdict_from_scan(n, k, binomial(n, k), fail);
    }
    case MrscMode::cores: {
        auto fail = scan_subsets(n, k, threads, [&](const std::uint32_t* idx, ScanScratch&) {
            const auto ss =
                SupportSet::from_zero_based(n, std::vector<std::uint32_t>(idx, idx + k));
            if (!is_core(super, ss)) return true;
            return is_core(sub, ss);
        });
        return verdict_from_scan(n, k, binomial(n, k), fail);
    }
    case MrscMode::parity: {
        const FieldMatrix h = dual(sub).generator(); // (n-k) x n
        auto fail = scan_subsets(n, k, threads, [&](const std::uint32_t* idx, ScanScratch& s) {
            if (rank_of_columns(g0, idx, k, s.buf) != k) return true;
            s.comp.clear();
            std::uint32_t j = 0;
            for (std::uint32_t col = 0; col < n; ++col) {
                if (j < k && idx[j] == col) {
                    ++j;
                } else {
                    s.comp.push_back(col);
                }
            }
            return rank_of_columns(h, s.comp.data(), n - k, s.buf) == n - k;
        });
        return verdict_from_scan(n, k, binomial(n, k), fail);
    }
    case MrscMode::all_sizes: {
        std::uint64_t checked = 0;
        for (std::uint32_t w = 1; w <= k; ++w) {
            auto fail = scan_subsets(n, w, threads, [&](const std::uint32_t* idx, ScanScratch& s) {
                return rank_of_columns(g0, idx, w, s.buf) == rank_of_columns(g, idx, w, s.buf);
            });
            if (fail) {
                MrscVerdict v;
                v.ok = false;
                v.subsets_checked = checked + *fail + 1;
                v.witness = SupportSet::from_zero_based(n, combination_unrank(n, w, *fail));
                return v;
            }
            checked += binomial(n, w);
        }
        MrscVerdict v;
        v.ok = true;
        v.subsets_checked = checked;
        return v;
    }
    }
    throw InputError("is_mrsc: unknown mode");
}

FieldMatrix build_striped_matrix(const Field& f, const std::vector<std::uint64_t>& a,
                                 std::uint64_t m) {
    if (a.empty()) throw InputError("build_striped_matrix: empty stripe vector");
    if (m < 1) throw InputError("build_striped_matrix: need at least one stripe");
    if (std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; }))
        throw InputError("build_striped_matrix: stripe vector is zero");
    for (const auto v : a)
        if (v >= f->order()) throw InputError("build_striped_matrix: entry out of field range");
    const std::uint64_t kk = a.size();
    FieldMatrix out(f, m, m * kk);
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < kk; ++j) out.at(i, i * kk + j) = a[j];
    return out;
}

std::optional<std::pair<std::vector<std::uint64_t>, std::uint64_t>> detect_striped(
    const FieldMatrix& a) {
    const std::uint64_t m = a.rows;
    if (m == 0 || a.cols % m != 0) return std::nullopt;
    const std::uint64_t kk = a.cols / m;
    std::vector<std::uint64_t> stripe(a.row_ptr(0), a.row_ptr(0) + kk);
    if (std::all_of(stripe.begin(), stripe.end(), [](std::uint64_t v) { return v == 0; }))
        return std::nullopt;
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < a.cols; ++j) {
            const std::uint64_t expect =
                (j >= i * kk && j < (i + 1) * kk) ? stripe[j - i * kk] : 0;
            if (a.at(i, j) != expect) return std::nullopt;
        }
    return std::make_pair(std::move(stripe), m);
}

bool check_locality(const LinearCode& c, const LocalityProfile& p) {
    if (p.r < 1 || p.delta < 1 || p.ell < 1) throw InputError("check_locality: bad profile");
    const std::uint64_t w = p.r + p.delta - 1;
    if (c.n() != p.ell * w) throw InputError("check_locality: length does not match profile");

    const LinearCode d = dual(c);
    std::uint64_t dual_dim_in_blocks = 0;
    std::vector<std::uint64_t> scratch;
    for (std::uint64_t b = 0; b < p.ell; ++b) {
        std::vector<std::uint64_t> block(w);
        for (std::uint64_t j = 0; j < w; ++j) block[j] = b * w + j + 1;
        const LinearCode local = shorten(d, SupportSet(c.n(), block));
        if (local.k() != p.delta - 1) return false;
        dual_dim_in_blocks += local.k();
        // MDS: every (delta-1)-column subset of the local generator has full rank.
        const std::uint32_t dd = static_cast<std::uint32_t>(p.delta - 1);
        bool mds = true;
        for_each_combination(static_cast<std::uint32_t>(w), dd,
                             [&](const std::vector<std::uint32_t>& idx) {
                                 if (rank_of_columns(local.generator(), idx.data(), dd, scratch) != dd) {
                                     mds = false;
                                     return false;
                                 }
                                 return true;
                             });
        if (!mds) return false;
    }
    return dual_dim_in_blocks == d.k();
}

PartialMdsParams partial_mds_params(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                                    std::uint64_t delta) {
    if (r < 1 || delta < 1) throw InputError("partial_mds_params: r and delta must be >= 1");
    const std::uint64_t w = r + delta - 1;
    if (n % w != 0) throw InputError("partial_mds_params: block length does not divide n");
    const std::uint64_t blocks = n / w;
    if (blocks * r < k) throw InputError("partial_mds_params: dimension too large for profile");
    return {blocks, w, delta - 1, blocks * r - k};
}

} // namespace mrsc
