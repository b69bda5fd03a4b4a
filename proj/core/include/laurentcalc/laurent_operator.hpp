#ifndef LAURENTCALC_LAURENT_OPERATOR_HPP
#define LAURENTCALC_LAURENT_OPERATOR_HPP

#include <laurentcalc/configuration.hpp>
#include <laurentcalc/laurent.hpp>
#include <laurentcalc/rational_function.hpp>

namespace lc
{

// L_* f on lsub, in its direction coordinates. L lives on V_L^perp in the
// transversal coordinates t of lsub (inner product lsub.perp_ip()); the value at
// s is L(t -> f(c(L) + B s + N t)).
RationalFn laurent_operator_apply(const LaurentFunctional &l, const Configuration &cfg, const RationalFn &f,
                                  const XSubspace &lsub);

// Inner product (1/2)(<z1,w1> + <z2,w2>) on V x V.
InnerProduct doubled_inner_product(const InnerProduct &ip);
// The configuration (X x 0) u (0 x X) on V x V induced by cfg.
Configuration doubled_config(const Configuration &cfg);
// lsub x lsub inside V x V with the first factor's hyperplanes listed first.
XSubspace doubled_subspace(const XSubspace &lsub);

// Pull-back to the diagonal of lsub of (w1, w2) -> L(Phi(. + w1, . + w2)), computed
// through the push-forward of L along t -> (t, t).
RationalFn lf_diagonal_apply(const LaurentFunctional &l, const Configuration &cfg, const RationalFn &phi,
                             const XSubspace &lsub);

} // namespace lc

#endif
