#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mrsc/linalg.hpp"

namespace mrsc {

// An [n, k] linear code held as a full-row-rank k x n generator. k = 0 is
// the zero code (0 x n generator).
class LinearCode {
public:
    explicit LinearCode(FieldMatrix generator) : gen_(std::move(generator)) {
        if (gen_.cols < 1) throw InputError("LinearCode: length must be >= 1");
        if (rank(gen_) != gen_.rows) throw InputError("LinearCode: generator rows are dependent");
    }

    // Canonicalizes an arbitrary spanning set: rref with zero rows dropped.
    static LinearCode from_span(const FieldMatrix& m) {
        std::vector<std::uint32_t> pivots;
        FieldMatrix r = rref(m, &pivots);
        r.data.resize(pivots.size() * r.cols);
        r.rows = pivots.size();
        return LinearCode(std::move(r));
    }

    static LinearCode zero_code(Field f, std::uint64_t n) {
        return LinearCode(FieldMatrix(std::move(f), 0, n));
    }

    static LinearCode full_code(Field f, std::uint64_t n) {
        return LinearCode(FieldMatrix::identity(std::move(f), n));
    }

    const Field& field() const { return gen_.field; }
    std::uint64_t n() const { return gen_.cols; }
    std::uint64_t k() const { return gen_.rows; }
    const FieldMatrix& generator() const { return gen_; }

private:
    FieldMatrix gen_;
};

inline bool same_code(const LinearCode& a, const LinearCode& b) {
    return same_field(a.field(), b.field()) && row_spaces_equal(a.generator(), b.generator());
}

LinearCode dual(const LinearCode& c);
LinearCode puncture(const LinearCode& c, const SupportSet& s);

// Codewords supported inside s, restricted to s (a length-|s| code).
LinearCode shorten(const LinearCode& c, const SupportSet& s);

// True iff no nonzero codeword of dual(c) has support inside s; equivalently
// rank(G|_s) = |s|. Computed by the rank test for |s| <= k and by shortening
// the dual otherwise.
bool is_core(const LinearCode& c, const SupportSet& s);

// Visits every size-k subset S (lexicographic) with rank(G|_S) = k.
// fn returns false to stop.
void for_each_core(const LinearCode& c, std::uint32_t k,
                   const std::function<bool(const SupportSet&)>& fn);

std::vector<SupportSet> enumerate_cores(const LinearCode& c, std::uint32_t k,
                                        std::uint64_t max_subsets = 10'000'000);

// X with sub = X * super (rowwise), i.e. proof that sub is a subcode.
std::optional<FieldMatrix> subcode_factor(const LinearCode& sub, const LinearCode& super);

enum class MrscMode { definition1, cores, parity, all_sizes };

struct MrscVerdict {
    bool ok = false;
    std::optional<SupportSet> witness; // first failing subset, scan order
    std::uint64_t subsets_checked = 0;
};

// Checks that sub (dimension k) is maximally recoverable inside super: every
// size-k column set where super's generator has full rank keeps full rank in
// sub's generator. The four modes are equivalent formulations; all scan
// subsets in lexicographic order and report the first violation.
//   definition1: rank scan of both generators on size-k subsets
//   cores:       core-of-dual comparison on size-k subsets
//   parity:      rank of sub's parity matrix on subset complements
//   all_sizes:   rank equality over every subset of size 1..k
MrscVerdict is_mrsc(const LinearCode& sub, const LinearCode& super, MrscMode mode,
                    unsigned threads = 1);

// m copies of the row vector a on the block diagonal: an m x (m*|a|) matrix.
FieldMatrix build_striped_matrix(const Field& f, const std::vector<std::uint64_t>& a,
                                 std::uint64_t m);

// Recovers (a, m) from a striped matrix; nullopt if the shape doesn't match.
std::optional<std::pair<std::vector<std::uint64_t>, std::uint64_t>> detect_striped(
    const FieldMatrix& a);

struct LocalityProfile {
    std::uint64_t r = 0;     // locality
    std::uint64_t delta = 0; // local distance
    std::uint64_t ell = 0;   // number of local groups
};

// Verifies the dual splits into ell disjoint local blocks of length
// r+delta-1, each an MDS code of dimension delta-1 (checked by exhaustive
// column-subset ranks), and that the blocks exhaust the dual.
bool check_locality(const LinearCode& c, const LocalityProfile& p);

struct PartialMdsParams {
    std::uint64_t blocks;         // n / (r+delta-1)
    std::uint64_t block_length;   // r+delta-1
    std::uint64_t local_parities; // delta-1
    std::uint64_t global_parities;// blocks*r - k
};

PartialMdsParams partial_mds_params(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                                    std::uint64_t delta);

} // namespace mrsc
