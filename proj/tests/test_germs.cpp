#include <doctest.h>

#include <random>

#include <laurentcalc/error.hpp>
#include <laurentcalc/germ.hpp>

#include "helpers.hpp"

using namespace lc;
using th::vec;
using th::z;

namespace
{

const InnerProduct ip1 = InnerProduct::identity(1);
const InnerProduct ip2 = InnerProduct::identity(2);

RootFrame frame1()
{
    return RootFrame(ip1, {vec({1})});
}

Germ germ1(unsigned pole, const Polynomial &jet, int order)
{
    return Germ(vec({0}), frame1(), {pole}, jet, order);
}

} // namespace

TEST_CASE("germ_normalize")
{
    const Polynomial x = z(1, 0), one = th::c(1, 1);
    const Germ n = germ_normalize(germ1(2, x * (one + x), 3));
    CHECK(n.pole() == PoleIndex{1});
    CHECK(n.jet() == one + x);

    const Germ h = germ1(0, one + x, 3);
    CHECK(germ_normalize(h).jet() == h.jet());
    CHECK(germ_normalize(h).pole() == PoleIndex{0});

    const Germ r = germ_normalize(germ1(1, one, 3));
    CHECK(r.pole() == PoleIndex{1});
    CHECK(r.jet() == one);
}

TEST_CASE("germ_normalize is idempotent")
{
    const Polynomial x = z(2, 0), y = z(2, 1), one = th::c(2, 1);
    const RootFrame f(ip2, {vec({1, 0}), vec({1, -1})});
    const Germ g(vec({0, 0}), f, {2, 1}, x * (x - y) * (one + y), 5);
    const Germ n = germ_normalize(g);
    CHECK(n.pole() == PoleIndex{1, 0});
    CHECK(germ_normalize(n).jet() == n.jet());
    CHECK(germ_equivalent(g, n));
}

TEST_CASE("germ_mul")
{
    const Polynomial x = z(1, 0), one = th::c(1, 1);
    const Germ g = germ1(1, one + Scalar(2) * x, 3);
    const Germ unit = germ1(0, one, 5);
    CHECK(germ_equivalent(germ_mul(g, unit), g));
    const Germ inv = germ1(1, one, 3);
    const Germ sq = germ_mul(inv, inv);
    CHECK(sq.pole() == PoleIndex{2});
    CHECK(sq.jet() == one);
    const Germ z_over_z = germ_normalize(germ1(1, x, 4));
    CHECK(germ_equivalent(germ_mul(z_over_z, g), g));
    CHECK_THROWS_AS(germ_mul(g, Germ(vec({1}), frame1(), {0}, one, 3)), precondition_error);
}

TEST_CASE("germ_diff")
{
    const Polynomial x = z(1, 0), one = th::c(1, 1);
    const Germ d = germ_diff(vec({1}), germ1(1, one, 3));
    CHECK(d.pole() == PoleIndex{2});
    CHECK(d.jet() == -one);

    const Germ h = germ_diff(vec({1}), germ1(0, one + x * x * x, 3));
    CHECK(h.pole() == PoleIndex{0});
    CHECK(h.jet() == Scalar(3) * x * x);
    CHECK(h.order() == 2);

    const Germ zz = germ_diff(vec({1}), germ1(1, x * x, 4));
    CHECK(zz.pole() == PoleIndex{0});
    CHECK(zz.jet() == one);

    CHECK_THROWS_AS(germ_diff(vec({1}), germ1(1, one, 0)), precondition_error);
}

TEST_CASE("germ_diff satisfies the Leibniz rule")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3);
    const RootFrame f(ip2, {vec({1, 0}), vec({1, 1})});
    for (int t = 0; t < 20; ++t) {
        Polynomial p(2), q(2);
        for (unsigned i = 0; i < 3; ++i) {
            for (unsigned j = 0; i + j < 3; ++j) {
                p.add_term({i, j}, coef(rng));
                q.add_term({i, j}, coef(rng));
            }
        }
        if (p.constant_term().is_zero()) {
            p.add_term({0, 0}, 1);
        }
        const Germ g1(vec({0, 0}), f, {1, 0}, p, 6);
        const Germ g2(vec({0, 0}), f, {static_cast<unsigned>(t % 2), 1}, q, 6);
        const Vec v = vec({1, coef(rng)});
        const Germ lhs = germ_diff(v, germ_mul(g1, g2));
        Germ rhs1 = germ_mul(germ_diff(v, g1), g2);
        Germ rhs2 = germ_mul(g1, germ_diff(v, g2));
        const PoleIndex top{3, 3};
        auto lift = [&](const Germ &g) {
            const Polynomial j = (f.pi(top - g.pole()) * g.jet()).truncate(g.order());
            return Germ(g.base(), f, top, j, g.order());
        };
        const Germ a = lift(lhs), b = lift(rhs1), c = lift(rhs2);
        const int order = std::min({a.order(), b.order(), c.order()});
        CHECK(a.jet().truncate(order) == (b.jet() + c.jet()).truncate(order));
    }
}

TEST_CASE("rationalfn_germ_at")
{
    const Hyperplane h0(vec({1}), 0), h1(vec({1}), 1);
    const RationalFn f(ip1, th::c(1, 1), {{h0, 1}, {h1, 1}});
    const Germ g = rationalfn_germ_at(f, vec({0}), 2);
    CHECK(g.pole() == PoleIndex{1});
    const Polynomial x = z(1, 0), one = th::c(1, 1);
    CHECK(g.jet() == -(one + x + x * x));

    const RationalFn p(ip1, x * x + one);
    const Germ gp = rationalfn_germ_at(p, vec({2}), 1);
    CHECK(gp.is_holomorphic());
    CHECK(gp.jet() == Scalar(5) * one + Scalar(4) * x);

    // 1/z1 at (1, 0): Taylor series of 1/(1 + w1).
    const RationalFn inv(ip2, th::c(2, 1), {{Hyperplane(vec({1, 0}), 0), 1}});
    const Germ gi = rationalfn_germ_at(inv, vec({1, 0}), 2);
    CHECK(gi.is_holomorphic());
    CHECK(gi.jet() == th::c(2, 1) - z(2, 0) + z(2, 0) * z(2, 0));
}

TEST_CASE("rationalfn_germ_at matches direct evaluation of the localized function")
{
    const Hyperplane h0(vec({1, 0}), 0), h1(vec({1, -1}), 0), h2(vec({0, 1}), 3);
    const Polynomial x = z(2, 0), y = z(2, 1);
    const RationalFn f(ip2, x * y + th::c(2, 2), {{h0, 2}, {h1, 1}, {h2, 1}});
    const Germ g = rationalfn_germ_at(f, vec({0, 0}), 4);
    // pi * f = num / (y - 3)
    const Polynomial num = x * y + th::c(2, 2);
    CHECK(g.frame().pi(g.pole()) == x * x * (x - y));
    CHECK((g.jet() * (y - th::c(2, 3))).truncate(4) == num);
}

TEST_CASE("rationalfn_restrict")
{
    const Polynomial one = th::c(2, 1);
    const XSubspace l = subspace_from(ip2, {Hyperplane(vec({0, 1}), 0)});
    const RationalFn f(ip2, one, {{Hyperplane(vec({1, -1}), 0), 1}});
    const RationalFn r = rationalfn_restrict(f, l);
    const InnerProduct gl = l.direction_ip();
    const Scalar s = l.direction_basis()[0][0];
    CHECK(r == RationalFn(gl, th::c(1, 1), {{Hyperplane::from_equation(gl, vec({s}), 0), 1}}));
    CHECK(r.eval(vec({2})) == Scalar(1) / (Scalar(2) * s));

    const RationalFn c(ip2, th::c(2, 7));
    CHECK(rationalfn_restrict(c, l) == RationalFn(gl, th::c(1, 7)));

    const RationalFn bad(ip2, one, {{Hyperplane(vec({0, 1}), 0), 1}});
    CHECK_THROWS_AS(rationalfn_restrict(bad, l), precondition_error);
}

TEST_CASE("rational function arithmetic")
{
    const Polynomial x = z(1, 0), one = th::c(1, 1);
    const Hyperplane h0(vec({1}), 0), h1(vec({1}), 1);
    const RationalFn a(ip1, one, {{h0, 1}});
    const RationalFn b(ip1, one, {{h1, 1}});
    // 1/z - 1/(z-1) = -1/(z(z-1))
    CHECK(a - b == RationalFn(ip1, -one, {{h0, 1}, {h1, 1}}));
    CHECK(RationalFn(ip1, x * x, {{h0, 1}}) == RationalFn(ip1, x));
    CHECK(a.derivative(vec({1})) == RationalFn(ip1, -one, {{h0, 2}}));
    CHECK(a.eval(vec({4})) == Scalar(1, 4));
    CHECK_THROWS_AS(a.eval(vec({0})), precondition_error);
}
