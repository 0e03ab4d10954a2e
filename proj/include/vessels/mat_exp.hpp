#pragma once

#include "vessels/complex_matrix.hpp"

namespace vessels {

// e^M by Pade approximation with scaling and squaring.
CMatrix mat_exp(const CMatrix& m);

}  // namespace vessels
