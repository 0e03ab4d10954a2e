#pragma once

#include "vessels/solitonic.hpp"

namespace vessels {

// Pointwise PDE residual of the sampled solitonic combination, by the
// equation tagged in the scene:
//   kdv: scalar compression s = g* S g on the one-dimensional nonhermitian
//        subspace, v = -2 s_x, residual (4/b) v_t - 6 v v_x + v_xxx, plus the
//        operator potential form (4/b) S_t + 6 S_x^2 + S_xxx;
//   nls: u = [S, B~],   -(2/b) u_t B~ + u_xx + 2 u^3;
//   sg:  d/dt (S^{-1} S_x) + S^{-1} B~ S B~ - B~ S^{-1} B~ S;
//   ds:  u = [S, B~], v = {S, B~},
//        -(2/beta) u_t B~ + u_xx - (1/alpha^2) u_yy + 2 u^3 - 2 {u, v_x}
//        and -(1/(i alpha)) v_y + v_x B~ - u^2.
// Grid points whose Gamma condition number exceeded the sampling limit are
// masked out of the statistics together with their stencil neighborhoods.
ResidualReport pde_residual(const SolitonScene& scene, const SField& field,
                            double rel_tol);

}  // namespace vessels
