#include <doctest.h>

#include <laurentcalc/configuration.hpp>
#include <laurentcalc/error.hpp>

#include "helpers.hpp"

using namespace lc;
using th::vec;
using th::z;

namespace
{

const InnerProduct ip2 = InnerProduct::identity(2);

Hyperplane hp(Vec n, Scalar c = 0)
{
    return Hyperplane(std::move(n), c);
}

} // namespace

TEST_CASE("hyperplane canonicalization")
{
    const Hyperplane h = hp(vec({-2, 0}), 4);
    CHECK(h.normal() == vec({1, 0}));
    CHECK(h.offset() == Scalar(-2));
    CHECK(hp(vec({Scalar(1, 2), Scalar(1, 3)}), 1) == hp(vec({3, 2}), 6));
    CHECK_THROWS_AS(hp(vec({0, 0})), precondition_error);
    auto cr = canonical_root(vec({Scalar(-3, 2), 0}));
    CHECK(cr.root == vec({1, 0}));
    CHECK(cr.factor == Rational(-3, 2));
}

TEST_CASE("configuration validation")
{
    CHECK_THROWS_AS(Configuration(ip2, {hp(vec({1, 0})), hp(vec({2, 0}))}, {1, 1}), precondition_error);
    const Configuration cfg(ip2, {hp(vec({1, 0})), hp(vec({1, -1}), 2)}, {2, 1});
    CHECK(cfg.x0_set().size() == 2);
    CHECK(cfg.index_of(hp(vec({-1, 1}), -2)) == std::optional<std::size_t>(1));
}

TEST_CASE("subspace_from")
{
    const XSubspace l = subspace_from(ip2, {hp(vec({1, 0}), 2)});
    CHECK(l.dim() == 1);
    CHECK(l.direction_basis().size() == 1);
    CHECK(rank_of({l.direction_basis()[0], vec({0, 1})}) == 1);
    CHECK(l.center() == vec({2, 0}));

    const XSubspace p = subspace_from(ip2, {hp(vec({1, 0})), hp(vec({0, 1}))});
    CHECK(p.dim() == 0);
    CHECK(p.center() == vec({0, 0}));

    CHECK_THROWS_AS(subspace_from(ip2, {hp(vec({1, 0}), 1), hp(vec({1, 0}), 2)}), precondition_error);
}

TEST_CASE("central point lies on L and is orthogonal to V_L")
{
    const InnerProduct g(Matrix{vec({2, 1, 0}), vec({1, 2, 0}), vec({0, 0, 1})});
    const XSubspace l = subspace_from(g, {hp(vec({1, 1, 0}), 3), hp(vec({0, 1, 1}), Scalar(1, 2))});
    CHECK(l.contains(l.center()));
    for (const auto &b : l.direction_basis()) {
        CHECK(g.dot(l.center(), b).is_zero());
    }
}

TEST_CASE("hyperplanes_through")
{
    const Configuration cfg(ip2, {hp(vec({1, 0})), hp(vec({0, 1}))}, {1, 1});
    const auto on_axis = hyperplanes_through(cfg, subspace_from(ip2, {hp(vec({1, 0}))}));
    CHECK(on_axis.indices == std::vector<std::size_t>{0});
    CHECK(hyperplanes_through(cfg, subspace_from(ip2, {})).indices.empty());

    const Configuration cfg2(ip2, {hp(vec({1, 0})), hp(vec({1, -1}))}, {2, 1});
    const auto at_origin = hyperplanes_through(cfg2, subspace_from(ip2, {hp(vec({1, 0})), hp(vec({0, 1}))}));
    CHECK(at_origin.indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("induced_config")
{
    const Configuration cfg(ip2, {hp(vec({0, 1})), hp(vec({1, -1}))}, {1, 1});
    const XSubspace l = subspace_from(ip2, {hp(vec({0, 1}))});
    const Configuration at0 = induced_config(cfg, l, {vec({0})});
    REQUIRE(at0.hyperplanes().size() == 1);
    CHECK(at0.hyperplanes()[0] == hp(vec({1}), 0));

    const Configuration through(ip2, {hp(vec({0, 1}))}, {3});
    CHECK(induced_config(through, l, {vec({0}), vec({5})}).hyperplanes().empty());

    // The functional sits at z2 = 3, so z1 - z2 = 0 meets L at w1 = 3.
    const Configuration shifted = induced_config(cfg, l, {vec({3})});
    REQUIRE(shifted.hyperplanes().size() == 1);
    CHECK(shifted.hyperplanes()[0] == hp(vec({1}), 3));
}

TEST_CASE("pi_omega_d")
{
    const Configuration far(ip2, {hp(vec({1, 0}), 5)}, {1});
    CHECK(pi_omega_d(far, vec({0, 0}), 1) == th::c(2, 1));
    const Configuration through(ip2, {hp(vec({1, 0}))}, {2});
    CHECK(pi_omega_d(through, vec({0, 0}), 1) == z(2, 0) * z(2, 0));
    const Configuration near(ip2, {hp(vec({1, 0}), 1)}, {1});
    CHECK(pi_omega_d(near, vec({0, 0}), 2) == z(2, 0) - th::c(2, 1));
    CHECK(pi_omega_d(near, vec({0, 0}), 1) == th::c(2, 1));
}

TEST_CASE("proportional roots change pi_a_d by the reported factor")
{
    const std::vector<Vec> x{vec({1, 0}), vec({1, 1})};
    const std::vector<Vec> scaled{vec({-2, 0}), vec({Scalar(1, 2), Scalar(1, 2)})};
    const PoleIndex d{2, 1};
    const Point a = vec({1, 2});
    const Scalar f = pi_rescale_factor(x, scaled, d);
    CHECK(pi_a_d(ip2, scaled, a, d) == f * pi_a_d(ip2, x, a, d));
    CHECK(f == Scalar(2));
}
