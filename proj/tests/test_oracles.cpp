#include <doctest.h>

#include <laurentcalc/laurent_operator.hpp>
#include <laurentcalc/verify/acceptance.hpp>
#include <laurentcalc/verify/oracles.hpp>
#include <laurentcalc/verify/random.hpp>

#include "helpers.hpp"

using namespace lc;
using namespace lc::verify;
using th::vec;

TEST_CASE("dense one-variable expansion")
{
    // 1 / (z (1 - z)) = z^-1 + 1 + z + ...
    const Dense den{Scalar(0), Scalar(1), Scalar(-1)};
    CHECK(laurent_coefficient({Scalar(1)}, den, -1) == Scalar(1));
    CHECK(laurent_coefficient({Scalar(1)}, den, 0) == Scalar(1));
    CHECK(laurent_coefficient({Scalar(1)}, den, 5) == Scalar(1));
    CHECK(laurent_coefficient({Scalar(1)}, den, -2) == Scalar(0));

    // (3 + z^3) / (z^2 (2 + z)): frozen values.
    const Dense num{Scalar(3), Scalar(0), Scalar(0), Scalar(1)};
    const Dense d2{Scalar(0), Scalar(0), Scalar(2), Scalar(1)};
    CHECK(laurent_coefficient(num, d2, -2) == Scalar(3, 2));
    CHECK(laurent_coefficient(num, d2, -1) == Scalar(-3, 4));
    CHECK(laurent_coefficient(num, d2, 0) == Scalar(3, 8));
    CHECK(laurent_coefficient(num, d2, 1) == Scalar(5, 16));

    const auto [q, r] = dense_divide({Scalar(1), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)});
    CHECK(q == Dense{Scalar(-1), Scalar(1)});
    CHECK(r == Dense{Scalar(2)});
    CHECK(dense_inverse({Scalar(1), Scalar(-1)}, 4) == Dense(4, Scalar(1)));
}

TEST_CASE("coset sampling oracle")
{
    const RootSystem a2 = RootSystem::builtin("A2");
    const ParabolicData empty = parabolic(a2, {});
    const std::vector<Vec> s{vec({0, 0})};
    // lambda = 0 makes every Weyl translate coincide.
    CHECK(coset_collision(a2, empty, empty, s, vec({0, 0}), 2).has_value());
    const Vec generic = vec({Scalar(13, 45), Scalar(11, 45)});
    CHECK_FALSE(coset_collision(a2, empty, empty, s, generic, 6).has_value());
    CHECK(is_generic(a2, empty, empty, s, generic).generic);
}

TEST_CASE("diagonal action agrees with the pull-back route")
{
    const InnerProduct ip2 = InnerProduct::identity(2);
    const InnerProduct ip1 = InnerProduct::identity(1);
    const Hyperplane hz2(vec({0, 1}), 0), hdiag(vec({1, -1}), 0), hoff(vec({1, 1}), 1);
    const Configuration cfg(ip2, {hz2, hdiag, hoff}, {2, 1, 1});
    const Configuration dbl = doubled_config(cfg);
    const XSubspace lsub = subspace_from(ip2, {hz2});
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RationalFn::Factor> den;
        for (std::size_t h = 0; h < dbl.hyperplanes().size(); ++h) {
            const unsigned p = static_cast<unsigned>(rng.uniform(0, 1));
            if (p > 0) {
                den.emplace_back(dbl.hyperplanes()[h], p);
            }
        }
        Polynomial num = rng.poly(4, 2, 3);
        if (num.is_zero()) {
            num = th::c(4, 1);
        }
        const RationalFn phi(dbl.ip(), num, den);
        const unsigned d = static_cast<unsigned>(rng.uniform(2, 3));
        const LaurentFunctional l(
            ip1, {LaurentSummand{vec({0}), RootFrame(ip1, {vec({1})}), {d}, rng.diffop(1, 2, 2)}});
        CHECK(lf_diagonal_apply(l, cfg, phi, lsub) == diagonal_by_pullback(l, cfg, phi, lsub));
    }
}

TEST_CASE("generators are deterministic")
{
    Rng a(5), b(5);
    CHECK(a.poly(3, 3, 4) == b.poly(3, 3, 4));
    CHECK(a.spd_gram(3) == b.spd_gram(3));
}

TEST_CASE("acceptance criteria are named")
{
    for (int id = 1; id <= criterion_count; ++id) {
        CHECK_FALSE(criterion_name(id).empty());
    }
    CHECK(criterion_name(0).empty());
}
