#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mrsc/matrix.hpp"
#include "mrsc/support.hpp"

namespace mrsc {

FieldMatrix transpose(const FieldMatrix& m);
FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b);

std::vector<std::uint64_t> matvec(const FieldMatrix& m, const std::vector<std::uint64_t>& v);
std::vector<std::uint64_t> vecmat(const std::vector<std::uint64_t>& v, const FieldMatrix& m);

std::uint64_t rank(const FieldMatrix& m);

// Reduced row echelon form; pivot column indices are appended to *pivots
// when given. Deterministic: pivots are chosen left to right, topmost
// nonzero entry first.
FieldMatrix rref(const FieldMatrix& m, std::vector<std::uint32_t>* pivots = nullptr);

// Basis K of {v : m v^T = 0}, one row per free column of rref(m), ordered by
// free column. Shape (cols - rank) x cols; full space for a 0-row input.
FieldMatrix kernel_basis(const FieldMatrix& m);

// Solves m X = b columnwise (free variables set to zero); nullopt when
// inconsistent.
std::optional<FieldMatrix> solve_right(const FieldMatrix& m, const FieldMatrix& b);

// Solves X m = b, i.e. each row of b expressed over the rows of m.
std::optional<FieldMatrix> solve_left(const FieldMatrix& m, const FieldMatrix& b);

bool in_row_space(const FieldMatrix& m, const std::vector<std::uint64_t>& v);
bool row_spaces_equal(const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix restrict_columns(const FieldMatrix& m, const SupportSet& s);
FieldMatrix restrict_columns_idx(const FieldMatrix& m, const std::vector<std::uint32_t>& idx0);

// Rank of the submatrix formed by the given 0-based columns; scratch is
// reused across calls to avoid allocation in subset scans.
std::uint32_t rank_of_columns(const FieldMatrix& m, const std::uint32_t* idx, std::uint32_t cnt,
                              std::vector<std::uint64_t>& scratch);

// Canonical generator (rref, zero rows dropped) of rowspace(a) ∩ rowspace(b),
// computed from the kernel of [a^T | -b^T]. 0 x n when trivial.
FieldMatrix row_space_intersection(const FieldMatrix& a, const FieldMatrix& b);

// Minimum-weight e with h e^T = syndrome and weight(e) <= w_max, exact by
// support enumeration in increasing weight. Ties break toward the
// lexicographically smallest support, then the smallest value sequence.
std::optional<SparseVector> min_weight_preimage(const FieldMatrix& h,
                                                const std::vector<std::uint64_t>& syndrome,
                                                std::uint32_t w_max);

// Entrywise image of a matrix over a subfield under an embedding value map.
FieldMatrix map_entries(const FieldMatrix& m, const std::vector<std::uint64_t>& value_map,
                        const Field& target);

} // namespace mrsc
