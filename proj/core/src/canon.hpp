#pragma once

#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat::detail {

// Minimal-relabeling search for a binary relation given as up-masks.
// Minimizes the shell bit encoding (for each newly placed element, its
// relation bits against all earlier positions, both directions) over every
// permutation that starts with fixed_prefix. Returns all placements that
// achieve the minimum; placement[pos] = original element.
std::vector<std::vector<Elem>> canon_order(int n, const std::vector<ElemSet> &up,
                                           const std::vector<Elem> &fixed_prefix);

// All permutations preserving the relation (perm[x] = image of x).
std::vector<std::vector<Elem>> relation_automorphisms(int n,
                                                      const std::vector<ElemSet> &up);

// Key for the relation alone under bottom/top-fixed canonicalization:
// byte n followed by the packed row-major bit matrix of the canonical
// relabeling (spec index order: bottom, middles, top).
std::string leq_canonical_key(int n, const std::vector<ElemSet> &up);

// Position order (bottom, top, m1, m2, ...) -> spec order (0, 1, ..., n-1).
// g[spec_index] = original element.
std::vector<Elem> placement_to_spec_order(const std::vector<Elem> &placement);

void append_packed_bits(std::string &out, const std::vector<std::uint8_t> &bits);
std::vector<std::uint8_t> unpack_bits(const std::string &bytes, size_t offset, size_t count);

} // namespace reslat::detail
