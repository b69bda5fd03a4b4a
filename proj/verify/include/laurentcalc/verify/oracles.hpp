#ifndef LAURENTCALC_VERIFY_ORACLES_HPP
#define LAURENTCALC_VERIFY_ORACLES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <laurentcalc/configuration.hpp>
#include <laurentcalc/laurent.hpp>
#include <laurentcalc/rational_function.hpp>
#include <laurentcalc/rootsys.hpp>

namespace lc::verify
{

// Dense one-variable polynomial, coefficients in ascending degree.
using Dense = std::vector<Scalar>;

Dense dense_mul(const Dense &a, const Dense &b);
// a = q b + r with deg r < deg b.
std::pair<Dense, Dense> dense_divide(const Dense &a, const Dense &b);
// First `count` Taylor coefficients of 1 / b, b(0) != 0.
Dense dense_inverse(const Dense &b, std::size_t count);
// Coefficient of z^k in the Laurent expansion of num / den at 0.
Scalar laurent_coefficient(const Dense &num, const Dense &den, int k);

struct CosetCollision {
    std::size_t s1 = 0, s2 = 0; // Weyl indices in different classes
    Vec point;                  // common element over the a_Pq basis
};

// Enumerates (s lambda + x - sum n_k alpha_k)|_{a_Pq} with n_k >= 0, sum n_k <= height,
// and reports a point shared by two elements s1, s2 inducing different maps a_Qq^* -> a_Pq^*.
std::optional<CosetCollision> coset_collision(const RootSystem &rs, const ParabolicData &p, const ParabolicData &q,
                                              const std::vector<Vec> &s, const Vec &lambda, unsigned height);

// Diagonal action computed by pulling Phi back along z -> (z, z) and applying L_*.
RationalFn diagonal_by_pullback(const LaurentFunctional &l, const Configuration &cfg, const RationalFn &phi,
                                const XSubspace &lsub);

} // namespace lc::verify

#endif
