#pragma once

#include <cstdint>
#include <vector>

#include "mrsc/matrix.hpp"

namespace mrsc {

// Five-node [N=5, K=3, D=4] product-matrix minimum-bandwidth layout: node i
// stores psi_i * M where M is the symmetric 4x4 message matrix holding nine
// distinct symbols and psi_i = (1, gamma^i, gamma^{2i}, gamma^{3i}).

std::vector<std::uint64_t> mbr_psi(const Field& f, std::uint64_t gamma, std::uint64_t node);

// 4m x 9m: how node i's stored symbols depend on the nine message symbols,
// repeated block-diagonally over m stripes.
FieldMatrix build_mbr_node_matrix(std::uint64_t node, std::uint64_t m, const Field& f,
                                  std::uint64_t gamma);

// The 9-vector spanning rowspace(A_i) ∩ rowspace(A_j) for one stripe: the
// coefficient vector of psi_i * M * psi_j^T as a function of the message
// symbols.
std::vector<std::uint64_t> mbr_common_codeword(std::uint64_t node_i, std::uint64_t node_j,
                                               const Field& f, std::uint64_t gamma);

} // namespace mrsc
