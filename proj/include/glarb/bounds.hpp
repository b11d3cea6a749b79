#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glarb/lattice.hpp"

namespace glarb {

// Exact evaluation of the threshold functions as big integers. The nested
// Ramsey numbers inside them are unknown in general, so every R(...) is
// replaced by the multinomial (Erdos-Szekeres) upper bound; results are
// therefore valid upper bounds for the true thresholds, and every printout
// discloses the substitution. Values that would not even fit in max_bits
// bits (they become towers once omega >= 2) raise ResourceError instead of
// being materialized.

inline constexpr std::size_t kDefaultMaxBits = 1u << 20;

const char* ramsey_stub_note();

/// Multinomial upper bound for R(n_1,...,n_q). Exact for q == 1 and for any
/// n_i <= 2.
Int ramsey_upper(const std::vector<Int>& sizes, std::size_t max_bits = kDefaultMaxBits);

/// (omega+2) * 2^(d*(omega+1)+1): the long-cycle threshold.
Int g_long_cycle(int omega, int d, std::size_t max_bits = kDefaultMaxBits);

struct SubdivisionBounds {
    std::vector<Int> r;  // r_0 .. r_{omega+1}
    std::vector<Int> c;  // c_1 .. c_{omega+1}
    Int f;
};

/// r_i, c_i and f for the subdivision threshold:
///   r_{omega+1}(t) = t + C(t,2)(omega^2+omega-1)
///   r_{i-1}(t)     = R(t, R(r_i(t); omega))
///   c_i(t)         = sum_{j<i} C(r_j(t), 2)
///   f(t,d)         = (r_0 + 2 c_{omega+1}) * 2^(2(d+1) c_{omega+1})
SubdivisionBounds subdivision_bounds(int omega, const Int& t, int d,
                                     std::size_t max_bits = kDefaultMaxBits);

/// Constants of the cycles-in-subdivisions statement:
///   mu = max{(omega+2)^2, 2 omega+6}, beta = R(mu; p), r = R(beta; omega^3),
///   f(k) = (r+k)(omega+2).
Int mu_const(int omega);
Int beta_const(int omega, const Int& p, std::size_t max_bits = kDefaultMaxBits);
Int r_const(int omega, const Int& p, std::size_t max_bits = kDefaultMaxBits);
Int f_cycle_in_subdivision(int omega, const Int& p, const Int& k,
                           std::size_t max_bits = kDefaultMaxBits);

}  // namespace glarb
