#pragma once

// One-site spin-S operators in the |S;m> basis, rows/columns ordered m = -S..S.

#include "qvbs/linalg.hpp"

namespace qvbs::spin_ops {

Matrix sz(int spin);
Matrix splus(int spin);
Matrix sminus(int spin);
/// |S;m><S;m|
Matrix projector(int spin, int m);

}  // namespace qvbs::spin_ops
