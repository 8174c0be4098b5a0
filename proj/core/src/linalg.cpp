#include "mrsc/linalg.hpp"

#include <algorithm>

#include "mrsc/combin.hpp"

namespace mrsc {

namespace {

void require_same_field(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
    if (!same_field(a.field, b.field)) throw InputError(std::string(op) + ": field mismatch");
}

// In-place reduced row echelon form over f; a has r rows and c columns.
// Returns pivot column indices.
std::vector<std::uint32_t> rref_inplace(const FieldSpec& f, std::uint64_t* a, std::uint64_t r,
                                        std::uint64_t c) {
    std::vector<std::uint32_t> pivots;
    std::uint64_t pr = 0;
    for (std::uint64_t pc = 0; pc < c && pr < r; ++pc) {
        std::uint64_t sel = pr;
        while (sel < r && a[sel * c + pc] == 0) ++sel;
        if (sel == r) continue;
        if (sel != pr)
            for (std::uint64_t j = pc; j < c; ++j) std::swap(a[sel * c + j], a[pr * c + j]);
        const std::uint64_t scale = f.inv(a[pr * c + pc]);
        if (scale != 1)
            for (std::uint64_t j = pc; j < c; ++j) a[pr * c + j] = f.mul(a[pr * c + j], scale);
        for (std::uint64_t i = 0; i < r; ++i) {
            if (i == pr) continue;
            const std::uint64_t m = a[i * c + pc];
            if (m == 0) continue;
            for (std::uint64_t j = pc; j < c; ++j)
                a[i * c + j] = f.sub(a[i * c + j], f.mul(m, a[pr * c + j]));
        }
        pivots.push_back(static_cast<std::uint32_t>(pc));
        ++pr;
    }
    return pivots;
}

// Forward elimination rank; destroys a.
std::uint32_t rank_inplace(const FieldSpec& f, std::uint64_t* a, std::uint64_t r, std::uint64_t c) {
    std::uint32_t rk = 0;
    for (std::uint64_t pc = 0; pc < c && rk < r; ++pc) {
        std::uint64_t sel = rk;
        while (sel < r && a[sel * c + pc] == 0) ++sel;
        if (sel == r) continue;
        if (sel != rk)
            for (std::uint64_t j = pc; j < c; ++j) std::swap(a[sel * c + j], a[rk * c + j]);
        const std::uint64_t inv = f.inv(a[rk * c + pc]);
        for (std::uint64_t i = sel + 1; i < r; ++i) {
            const std::uint64_t m = a[i * c + pc];
            if (m == 0) continue;
            const std::uint64_t factor = f.mul(m, inv);
            a[i * c + pc] = 0;
            for (std::uint64_t j = pc + 1; j < c; ++j)
                a[i * c + j] = f.sub(a[i * c + j], f.mul(factor, a[rk * c + j]));
        }
        ++rk;
    }
    return rk;
}

} // namespace

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix out(m.field, m.cols, m.rows);
    for (std::uint64_t i = 0; i < m.rows; ++i)
        for (std::uint64_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "matmul");
    if (a.cols != b.rows) throw InputError("matmul: inner dimension mismatch");
    const FieldSpec& f = *a.field;
    FieldMatrix out(a.field, a.rows, b.cols);
    for (std::uint64_t i = 0; i < a.rows; ++i)
        for (std::uint64_t k = 0; k < a.cols; ++k) {
            const std::uint64_t v = a.at(i, k);
            if (v == 0) continue;
            for (std::uint64_t j = 0; j < b.cols; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(k, j)));
        }
    return out;
}

FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "hstack");
    if (a.rows != b.rows) throw InputError("hstack: row count mismatch");
    FieldMatrix out(a.field, a.rows, a.cols + b.cols);
    for (std::uint64_t i = 0; i < a.rows; ++i) {
        for (std::uint64_t j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
        for (std::uint64_t j = 0; j < b.cols; ++j) out.at(i, a.cols + j) = b.at(i, j);
    }
    return out;
}

FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "vstack");
    if (a.cols != b.cols) throw InputError("vstack: column count mismatch");
    FieldMatrix out(a.field, a.rows + b.rows, a.cols);
    std::copy(a.data.begin(), a.data.end(), out.data.begin());
    std::copy(b.data.begin(), b.data.end(), out.data.begin() + a.data.size());
    return out;
}

std::vector<std::uint64_t> matvec(const FieldMatrix& m, const std::vector<std::uint64_t>& v) {
    if (v.size() != m.cols) throw InputError("matvec: length mismatch");
    const FieldSpec& f = *m.field;
    std::vector<std::uint64_t> out(m.rows, 0);
    for (std::uint64_t i = 0; i < m.rows; ++i) {
        std::uint64_t acc = 0;
        const std::uint64_t* row = m.row_ptr(i);
        for (std::uint64_t j = 0; j < m.cols; ++j)
            if (row[j] && v[j]) acc = f.add(acc, f.mul(row[j], v[j]));
        out[i] = acc;
    }
    return out;
}

std::vector<std::uint64_t> vecmat(const std::vector<std::uint64_t>& v, const FieldMatrix& m) {
    if (v.size() != m.rows) throw InputError("vecmat: length mismatch");
    const FieldSpec& f = *m.field;
    std::vector<std::uint64_t> out(m.cols, 0);
    for (std::uint64_t i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        const std::uint64_t* row = m.row_ptr(i);
        for (std::uint64_t j = 0; j < m.cols; ++j)
            if (row[j]) out[j] = f.add(out[j], f.mul(v[i], row[j]));
    }
    return out;
}

std::uint64_t rank(const FieldMatrix& m) {
    std::vector<std::uint64_t> buf = m.data;
    return rank_inplace(*m.field, buf.data(), m.rows, m.cols);
}

FieldMatrix rref(const FieldMatrix& m, std::vector<std::uint32_t>* pivots) {
    FieldMatrix out = m;
    auto p = rref_inplace(*m.field, out.data.data(), out.rows, out.cols);
    if (pivots) *pivots = std::move(p);
    return out;
}

FieldMatrix kernel_basis(const FieldMatrix& m) {
    std::vector<std::uint32_t> pivots;
    const FieldMatrix r = rref(m, &pivots);
    const FieldSpec& f = *m.field;
    std::vector<std::uint32_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::uint64_t c = 0; c < m.cols; ++c) {
            if (pi < pivots.size() && pivots[pi] == c) {
                ++pi;
            } else {
                free_cols.push_back(static_cast<std::uint32_t>(c));
            }
        }
    }
    FieldMatrix k(m.field, free_cols.size(), m.cols);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        k.at(fi, free_cols[fi]) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k.at(fi, pivots[i]) = f.neg(r.at(i, free_cols[fi]));
    }
    return k;
}

std::optional<FieldMatrix> solve_right(const FieldMatrix& m, const FieldMatrix& b) {
    require_same_field(m, b, "solve_right");
    if (m.rows != b.rows) throw InputError("solve_right: row count mismatch");
    FieldMatrix aug = hstack(m, b);
    std::vector<std::uint32_t> pivots;
    const FieldMatrix r = rref(aug, &pivots);
    for (const auto pc : pivots)
        if (pc >= m.cols) return std::nullopt;
    FieldMatrix x(m.field, m.cols, b.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::uint64_t j = 0; j < b.cols; ++j) x.at(pivots[i], j) = r.at(i, m.cols + j);
    return x;
}

std::optional<FieldMatrix> solve_left(const FieldMatrix& m, const FieldMatrix& b) {
    auto xt = solve_right(transpose(m), transpose(b));
    if (!xt) return std::nullopt;
    return transpose(*xt);
}

bool in_row_space(const FieldMatrix& m, const std::vector<std::uint64_t>& v) {
    if (v.size() != m.cols) throw InputError("in_row_space: length mismatch");
    FieldMatrix stacked(m.field, m.rows + 1, m.cols);
    std::copy(m.data.begin(), m.data.end(), stacked.data.begin());
    std::copy(v.begin(), v.end(), stacked.data.begin() + m.data.size());
    return rank(stacked) == rank(m);
}

bool row_spaces_equal(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "row_spaces_equal");
    if (a.cols != b.cols) return false;
    const std::uint64_t ra = rank(a);
    if (ra != rank(b)) return false;
    return rank(vstack(a, b)) == ra;
}

FieldMatrix restrict_columns_idx(const FieldMatrix& m, const std::vector<std::uint32_t>& idx0) {
    FieldMatrix out(m.field, m.rows, idx0.size());
    for (std::uint64_t i = 0; i < m.rows; ++i) {
        const std::uint64_t* src = m.row_ptr(i);
        std::uint64_t* dst = out.row_ptr(i);
        for (std::size_t j = 0; j < idx0.size(); ++j) {
            if (idx0[j] >= m.cols) throw InputError("restrict_columns: index out of range");
            dst[j] = src[idx0[j]];
        }
    }
    return out;
}

FieldMatrix restrict_columns(const FieldMatrix& m, const SupportSet& s) {
    if (s.n != m.cols) throw InputError("restrict_columns: support length mismatch");
    return restrict_columns_idx(m, s.zero_based());
}

std::uint32_t rank_of_columns(const FieldMatrix& m, const std::uint32_t* idx, std::uint32_t cnt,
                              std::vector<std::uint64_t>& scratch) {
    scratch.resize(static_cast<std::size_t>(m.rows) * cnt);
    for (std::uint64_t i = 0; i < m.rows; ++i) {
        const std::uint64_t* src = m.row_ptr(i);
        std::uint64_t* dst = scratch.data() + i * cnt;
        for (std::uint32_t j = 0; j < cnt; ++j) dst[j] = src[idx[j]];
    }
    return rank_inplace(*m.field, scratch.data(), m.rows, cnt);
}

FieldMatrix row_space_intersection(const FieldMatrix& a, const FieldMatrix& b) {
    require_same_field(a, b, "row_space_intersection");
    if (a.cols != b.cols) throw InputError("row_space_intersection: length mismatch");
    const FieldSpec& f = *a.field;
    const std::uint64_t n = a.cols;

    // v in both row spaces iff v = y a = z b; solve [a^T | -b^T] (y;z)^T = 0.
    FieldMatrix w(a.field, n, a.rows + b.rows);
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; j < a.rows; ++j) w.at(i, j) = a.at(j, i);
        for (std::uint64_t j = 0; j < b.rows; ++j) w.at(i, a.rows + j) = f.neg(b.at(j, i));
    }
    const FieldMatrix k = kernel_basis(w);
    FieldMatrix gens(a.field, k.rows, n);
    for (std::uint64_t i = 0; i < k.rows; ++i) {
        std::vector<std::uint64_t> y(k.data.begin() + i * k.cols,
                                     k.data.begin() + i * k.cols + a.rows);
        const auto v = vecmat(y, a);
        std::copy(v.begin(), v.end(), gens.row_ptr(i));
    }
    std::vector<std::uint32_t> pivots;
    FieldMatrix r = rref(gens, &pivots);
    r.data.resize(pivots.size() * n);
    r.rows = pivots.size();
    return r;
}

std::optional<SparseVector> min_weight_preimage(const FieldMatrix& h,
                                                const std::vector<std::uint64_t>& syndrome,
                                                std::uint32_t w_max) {
    if (syndrome.size() != h.rows) throw InputError("min_weight_preimage: syndrome length mismatch");
    const FieldSpec& f = *h.field;
    const std::uint64_t q = f.order();
    const std::uint32_t n = static_cast<std::uint32_t>(h.cols);
    const std::uint64_t ell = h.rows;

    if (std::all_of(syndrome.begin(), syndrome.end(), [](std::uint64_t v) { return v == 0; })) {
        SparseVector z;
        z.n = n;
        return z;
    }

    std::vector<std::uint64_t> aug;       // ell x (w+1), reused across supports
    std::vector<std::uint32_t> pivots;    // pivot columns of the restricted system
    std::vector<std::uint32_t> free_cols;
    std::vector<std::uint64_t> assign, sol, best;

    for (std::uint32_t w = 1; w <= w_max && w <= n; ++w) {
        std::optional<SparseVector> found;
        for_each_combination(n, w, [&](const std::vector<std::uint32_t>& supp) {
            const std::uint64_t c = w + 1;
            aug.assign(ell * c, 0);
            for (std::uint64_t i = 0; i < ell; ++i) {
                const std::uint64_t* src = h.row_ptr(i);
                for (std::uint32_t j = 0; j < w; ++j) aug[i * c + j] = src[supp[j]];
                aug[i * c + w] = syndrome[i];
            }
            pivots = rref_inplace(f, aug.data(), ell, c);
            if (!pivots.empty() && pivots.back() == w) return true; // inconsistent; next support
            free_cols.clear();
            {
                std::size_t pi = 0;
                for (std::uint32_t col = 0; col < w; ++col) {
                    if (pi < pivots.size() && pivots[pi] == col) {
                        ++pi;
                    } else {
                        free_cols.push_back(col);
                    }
                }
            }
            const std::size_t d = free_cols.size();
            if (d > 0) {
                unsigned __int128 combos = 1;
                for (std::size_t i = 0; i < d; ++i) {
                    combos *= q;
                    if (combos > (std::uint64_t(1) << 20))
                        throw BudgetError("min_weight_preimage: free-variable enumeration too large");
                }
            }

            bool have_best = false;
            best.clear();
            assign.assign(d, 0);
            while (true) {
                sol.assign(w, 0);
                for (std::size_t i = 0; i < d; ++i) sol[free_cols[i]] = assign[i];
                for (std::size_t i = 0; i < pivots.size(); ++i) {
                    std::uint64_t v = aug[i * c + w];
                    for (std::size_t j = 0; j < d; ++j)
                        if (assign[j])
                            v = f.sub(v, f.mul(aug[i * c + free_cols[j]], assign[j]));
                    sol[pivots[i]] = v;
                }
                const bool all_nonzero =
                    std::all_of(sol.begin(), sol.end(), [](std::uint64_t v) { return v != 0; });
                if (all_nonzero && (!have_best || sol < best)) {
                    best = sol;
                    have_best = true;
                }
                // odometer over free assignments
                std::size_t pos = d;
                while (pos > 0) {
                    if (++assign[pos - 1] < q) break;
                    assign[pos - 1] = 0;
                    --pos;
                }
                if (pos == 0) break;
            }
            if (have_best) {
                SparseVector sv;
                sv.n = n;
                for (std::uint32_t j = 0; j < w; ++j) sv.entries.emplace_back(supp[j], best[j]);
                found = std::move(sv);
                return false; // lexicographically first support wins
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

FieldMatrix map_entries(const FieldMatrix& m, const std::vector<std::uint64_t>& value_map,
                        const Field& target) {
    if (value_map.size() != m.field->order())
        throw InputError("map_entries: value map size mismatch");
    FieldMatrix out(target, m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = value_map[m.data[i]];
    return out;
}

} // namespace mrsc
