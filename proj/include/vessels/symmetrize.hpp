#pragma once

#include "vessels/complex_matrix.hpp"

namespace vessels {

// B = C - U C* U*. Guarantees B* = -U B U* provided U is unitary and U^2
// commutes with C* (involutive permutations with phases qualify).
CMatrix symmetrize(const CMatrix& c, const CMatrix& u, double tol = 1e-12);

// Involutive permutation-with-phases unitary: pairs (k, n-1-k) are swapped
// with reciprocal phases, so U^2 = I.
CMatrix flip_unitary(Eigen::Index n, std::mt19937_64& rng);

}  // namespace vessels
