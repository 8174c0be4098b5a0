#include "mrsc/mbr.hpp"

#include "mrsc/errors.hpp"

namespace mrsc {

namespace {

// Which message symbol sits at M[d][e]; the 4x4 matrix is symmetric with the
// upper-left 3x3 holding symbols 1..6, the last row/column 7..9 and a zero
// corner.
constexpr int kSymbolAt[4][4] = {
    {1, 2, 3, 7},
    {2, 4, 5, 8},
    {3, 5, 6, 9},
    {7, 8, 9, 0},
};

void validate(const Field& f, std::uint64_t gamma, std::uint64_t node) {
    if (node < 1 || node > 5) throw InputError("mbr: node index must be in 1..5");
    if (gamma == 0 || gamma >= f->order()) throw InputError("mbr: gamma must be a nonzero element");
    if (f->multiplicative_order(gamma) < 5)
        throw InputError("mbr: gamma's order is too small for five distinct nodes");
}

} // namespace

std::vector<std::uint64_t> mbr_psi(const Field& f, std::uint64_t gamma, std::uint64_t node) {
    validate(f, gamma, node);
    std::vector<std::uint64_t> psi(4);
    psi[0] = 1;
    const std::uint64_t g = f->pow(gamma, node);
    for (int d = 1; d < 4; ++d) psi[d] = f->mul(psi[d - 1], g);
    return psi;
}

FieldMatrix build_mbr_node_matrix(std::uint64_t node, std::uint64_t m, const Field& f,
                                  std::uint64_t gamma) {
    if (m < 1) throw InputError("mbr: stripe count must be >= 1");
    const std::vector<std::uint64_t> psi = mbr_psi(f, gamma, node);

    FieldMatrix block(f, 4, 9);
    for (int j = 0; j < 4; ++j)
        for (int d = 0; d < 4; ++d) {
            const int v = kSymbolAt[d][j];
            if (v != 0) block.at(j, v - 1) = f->add(block.at(j, v - 1), psi[d]);
        }

    FieldMatrix out(f, 4 * m, 9 * m);
    for (std::uint64_t s = 0; s < m; ++s)
        for (int j = 0; j < 4; ++j)
            for (int v = 0; v < 9; ++v) out.at(4 * s + j, 9 * s + v) = block.at(j, v);
    return out;
}

std::vector<std::uint64_t> mbr_common_codeword(std::uint64_t node_i, std::uint64_t node_j,
                                               const Field& f, std::uint64_t gamma) {
    if (node_i == node_j) throw InputError("mbr: common codeword needs two distinct nodes");
    const std::vector<std::uint64_t> pi = mbr_psi(f, gamma, node_i);
    const std::vector<std::uint64_t> pj = mbr_psi(f, gamma, node_j);

    std::vector<std::uint64_t> c(9, 0);
    for (int d = 0; d < 4; ++d)
        for (int e = 0; e < 4; ++e) {
            const int v = kSymbolAt[d][e];
            if (v != 0) c[v - 1] = f->add(c[v - 1], f->mul(pi[d], pj[e]));
        }
    return c;
}

} // namespace mrsc
