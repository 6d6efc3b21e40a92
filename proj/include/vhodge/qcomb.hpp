#ifndef VHODGE_QCOMB_HPP
#define VHODGE_QCOMB_HPP

#include "vhodge/unipoly.hpp"

namespace vhodge {

/// Q_i(x) = x(x+1)...(x+i-1), with Q_0 = 1.
UniPoly q_poly(int i);

/// Q_i evaluated at a rational point.
Rat q_value(int i, const Rat& x);

/// Exact bivariate identity Q_j(x) = sum_i C(j,i) Q_{j-i}(y) Q_i(x-y).
bool verify_convolution_identity(int j);

/// Exact identity Q_j(x+1) = sum_i i! C(j,i) Q_{j-i}(x).
bool verify_shift_identity(int j);

inline constexpr int kQIdentityBound = 12;

}  // namespace vhodge

#endif
