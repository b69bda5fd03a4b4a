#include <doctest.h>

#include <random>

#include <laurentcalc/error.hpp>
#include <laurentcalc/laurent.hpp>
#include <laurentcalc/laurent_operator.hpp>

#include "helpers.hpp"

using namespace lc;
using th::vec;
using th::z;

namespace
{

const InnerProduct ip1 = InnerProduct::identity(1);
const InnerProduct ip2 = InnerProduct::identity(2);

LaurentFunctional functional1(unsigned d_max, const DiffOp &u, const Point &a = vec({0}))
{
    return LaurentFunctional(ip1, {LaurentSummand{a, RootFrame(ip1, {vec({1})}), {d_max}, u}});
}

Germ germ1(unsigned pole, const Polynomial &jet, int order)
{
    return Germ(vec({0}), RootFrame(ip1, {vec({1})}), {pole}, jet, order);
}

const Polynomial x1 = z(1, 0);
const Polynomial one1 = th::c(1, 1);

} // namespace

TEST_CASE("lf_apply on one-variable germs")
{
    const LaurentFunctional res = functional1(1, DiffOp::identity(1));
    CHECK(lf_apply(res, germ1(1, one1 + Scalar(2) * x1, 3)) == Scalar(1));
    CHECK(lf_apply(res, germ1(0, one1 + x1, 3)) == Scalar(0));
    const LaurentFunctional ev = lf_from_evaluation(ip1, vec({0}), {vec({1})}, {1});
    CHECK(lf_apply(ev, germ1(0, Scalar(7) * one1 + x1, 3)) == Scalar(7));
    CHECK_THROWS_AS(lf_apply(res, germ1(2, one1, 3)), precondition_error);
    CHECK_THROWS_AS(lf_apply(functional1(1, DiffOp::partial(1, 0) * DiffOp::partial(1, 0)), germ1(1, one1, 0)),
                    precondition_error);
}

TEST_CASE("lf_apply is independent of the pole representation")
{
    const LaurentFunctional l = functional1(3, DiffOp::partial(1, 0) + Scalar(2) * DiffOp::identity(1));
    const Germ g = germ1(1, one1 + Scalar(3) * x1 * x1, 5);
    const Germ lifted = germ1(2, x1 * (one1 + Scalar(3) * x1 * x1), 6);
    CHECK(lf_apply(l, g, false) == lf_apply(l, lifted, false));
    CHECK(lf_apply(l, g) == lf_apply(l, lifted));
}

TEST_CASE("lf_from_evaluation")
{
    const DiffOp d = DiffOp::partial(1, 0);
    CHECK(lf_from_evaluation(ip1, vec({0}), {vec({1})}, {1}).summands()[0].u == d);
    CHECK(lf_from_evaluation(ip1, vec({0}), {vec({1})}, {2}).summands()[0].u == Scalar(1, 2) * d * d);
    CHECK(lf_from_evaluation(ip1, vec({0}), {vec({1})}, {0}).summands()[0].u == DiffOp::identity(1));

    const std::vector<Vec> roots{vec({1, 0}), vec({1, 1})};
    const LaurentFunctional ev = lf_from_evaluation(ip2, vec({1, 2}), roots, {2, 1});
    const Polynomial h = z(2, 0) * z(2, 1) + th::c(2, 3) + z(2, 1) * z(2, 1) * z(2, 1);
    const Germ g(vec({1, 2}), RootFrame(ip2, roots), {0, 0}, h, 5);
    CHECK(lf_apply(ev, g) == Scalar(3));
}

TEST_CASE("lf_pushforward")
{
    const LaurentFunctional res = functional1(1, DiffOp::identity(1));
    const Matrix axis{vec({1}), vec({0})};
    const LaurentFunctional pushed = lf_pushforward(axis, ip2, {vec({1, 0})}, res);
    // h(z1, z2) / z1 with h = 5 + z1 + 3 z2 + z1 z2.
    const Polynomial h = th::c(2, 5) + z(2, 0) + Scalar(3) * z(2, 1) + z(2, 0) * z(2, 1);
    const Germ g(vec({0, 0}), RootFrame(ip2, {vec({1, 0})}), {1}, h, 4);
    CHECK(lf_apply(pushed, g) == Scalar(5));

    const LaurentFunctional same = lf_pushforward(identity_matrix(1), ip1, {vec({1})}, res);
    CHECK(lf_apply(same, germ1(1, one1 + x1, 3)) == Scalar(1));

    const LaurentFunctional ev = lf_from_evaluation(ip1, vec({2}), {vec({1})}, {1});
    const LaurentFunctional ev2 = lf_pushforward(axis, ip2, {vec({1, 0})}, ev);
    const Germ hol(vec({2, 0}), RootFrame(ip2, {vec({1, 0})}), {0}, h, 4);
    CHECK(lf_apply(ev2, hol) == Scalar(5));

    CHECK_THROWS_AS(lf_pushforward(axis, ip2, {vec({0, 1})}, res), precondition_error);
}

TEST_CASE("lf_mul_action")
{
    const LaurentFunctional res = functional1(1, DiffOp::identity(1));
    const Germ g = germ1(1, one1 + Scalar(4) * x1, 3);
    const LaurentFunctional same = lf_mul_action(RationalFn(ip1, one1), res);
    CHECK(lf_apply(same, g) == lf_apply(res, g));

    const LaurentFunctional m = lf_mul_action(RationalFn(ip1, x1), res);
    CHECK(lf_apply(m, germ1(2, one1, 3)) == Scalar(1));

    const Polynomial x5 = x1 * x1 * x1 * x1 * x1;
    const LaurentFunctional killed = lf_mul_action(RationalFn(ip1, x5), functional1(2, DiffOp::partial(1, 0)));
    CHECK(lf_apply(killed, germ1(1, one1 + x1 + x1 * x1, 4)) == Scalar(0));
    CHECK(lf_apply(killed, germ1(0, one1 + x1, 4)) == Scalar(0));
}

TEST_CASE("lf_diff_action")
{
    const DiffOp d = DiffOp::partial(1, 0);
    const LaurentFunctional l = functional1(2, d * d + Scalar(3) * d);
    const LaurentFunctional dl = lf_diff_action(vec({1}), l);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 20; ++t) {
        Polynomial jet(1);
        for (unsigned k = 0; k <= 4; ++k) {
            jet.add_term({k}, coef(rng));
        }
        const Germ g = germ1(static_cast<unsigned>(t % 2), jet, 4);
        CHECK(lf_apply(dl, g) == lf_apply(l, germ_diff(vec({1}), g)));
    }

    const LaurentFunctional dres = lf_diff_action(vec({1}), functional1(1, DiffOp::identity(1)));
    CHECK(lf_apply(dres, germ1(0, one1 + x1 + x1 * x1, 3)) == Scalar(0));

    const LaurentFunctional zero = lf_diff_action(vec({0}), l);
    CHECK(lf_apply(zero, germ1(1, one1 + x1 + x1 * x1, 3)) == Scalar(0));

    const LaurentFunctional first = functional1(1, d);
    const Germ h = germ1(0, one1 + Scalar(2) * x1 + Scalar(5) * x1 * x1, 3);
    CHECK(lf_apply(lf_diff_action(vec({1}), first), h) == Scalar(2));
}

TEST_CASE("laurent_operator_apply")
{
    const Hyperplane hz2(vec({0, 1}), 0), hdiag(vec({1, -1}), 0);
    const Configuration cfg(ip2, {hz2, hdiag}, {2, 1});
    const XSubspace lsub = subspace_from(ip2, {hz2});
    const LaurentFunctional res = functional1(1, DiffOp::identity(1));
    const InnerProduct gl = lsub.direction_ip();
    const Scalar s = lsub.direction_basis()[0][0];

    const RationalFn f(ip2, th::c(2, 1), {{hz2, 1}, {hdiag, 1}});
    const RationalFn out = laurent_operator_apply(res, cfg, f, lsub);
    CHECK(out == RationalFn(gl, th::c(1, 1), {{Hyperplane::from_equation(gl, vec({s}), 0), 1}}));

    const RationalFn g(ip2, th::c(2, 1), {{hdiag, 1}});
    const LaurentFunctional ev = lf_from_evaluation(ip1, vec({0}), {vec({1})}, {1});
    CHECK(laurent_operator_apply(ev, cfg, g, lsub) == rationalfn_restrict(g, lsub));

    const RationalFn sq(ip2, th::c(2, 1), {{hz2, 2}});
    CHECK_THROWS_AS(laurent_operator_apply(res, cfg, sq, lsub), precondition_error);
}

TEST_CASE("lf_diagonal_apply")
{
    const Hyperplane hz2(vec({0, 1}), 0), hdiag(vec({1, -1}), 0);
    const Configuration cfg(ip2, {hz2, hdiag}, {1, 1});
    const XSubspace lsub = subspace_from(ip2, {hz2});
    const InnerProduct dbl = doubled_inner_product(ip2);
    const InnerProduct gl = lsub.direction_ip();
    const Scalar s = lsub.direction_basis()[0][0];
    const Polynomial w = Scalar(s) * z(1, 0);
    auto hyp4 = [](Vec n) { return Hyperplane(std::move(n), 0); };
    const LaurentFunctional res = functional1(1, DiffOp::identity(1));

    CHECK(lf_diagonal_apply(res, cfg, RationalFn(dbl, th::c(4, 1)), lsub) == RationalFn(gl, th::c(1, 0)));
    const LaurentFunctional ev = lf_from_evaluation(ip1, vec({0}), {vec({1})}, {1});
    CHECK(lf_diagonal_apply(ev, cfg, RationalFn(dbl, th::c(4, 1)), lsub) == RationalFn(gl, th::c(1, 1)));

    // Phi(z, w) = f(z) only.
    const RationalFn f(ip2, z(2, 0), {{hz2, 1}, {hdiag, 1}});
    Matrix first_factor = zero_matrix(2, 4);
    first_factor[0][0] = first_factor[1][1] = Scalar(1);
    const RationalFn phi = f.pullback(AffineMap{zero_vec(2), first_factor}, dbl);
    CHECK(lf_diagonal_apply(res, cfg, phi, lsub) == laurent_operator_apply(res, cfg, f, lsub));

    // Linear forms on V x V carry a factor 1/2 each.
    // (1 + z2 + w1) / (z2 w2) on the diagonal: (1 + t + w1) / t^2, read off at t^-2.
    const Scalar q(1, 4);
    const RationalFn cross(dbl, q * (th::c(4, 1) + z(4, 1) + z(4, 2)),
                           {{hyp4(vec({0, 1, 0, 0})), 1}, {hyp4(vec({0, 0, 0, 1})), 1}});
    const LaurentFunctional top = functional1(2, DiffOp::identity(1));
    CHECK(lf_diagonal_apply(top, cfg, cross, lsub) == RationalFn(gl, th::c(1, 1) + w));

    // 1 / (z2 (w1 - w2)) on the diagonal: 1 / (t (w1 - t)), residue 1 / w1.
    const RationalFn mixed(dbl, th::c(4, q), {{hyp4(vec({0, 1, 0, 0})), 1}, {hyp4(vec({0, 0, 1, -1})), 1}});
    CHECK(lf_diagonal_apply(res, cfg, mixed, lsub) ==
          RationalFn(gl, th::c(1, 1), {{Hyperplane::from_equation(gl, vec({s}), 0), 1}}));
}

TEST_CASE("lf_annihilator_witness")
{
    const auto w = lf_annihilator_witness(germ1(1, one1, 3));
    REQUIRE_FALSE(w.holomorphic);
    REQUIRE(w.functional.has_value());
    CHECK(lf_apply(*w.functional, germ1(1, one1, 3)) != Scalar(0));
    CHECK(lf_apply(*w.functional, germ1(0, one1 + x1, 3)) == Scalar(0));

    CHECK(lf_annihilator_witness(germ1(0, one1 + x1, 3)).holomorphic);
    CHECK(lf_annihilator_witness(germ1(1, x1, 3)).holomorphic);

    const Germ g2(vec({0, 0}), RootFrame(ip2, {vec({1, 0})}), {1}, th::c(2, 1), 3);
    const auto w2 = lf_annihilator_witness(g2);
    REQUIRE(w2.functional.has_value());
    CHECK(lf_apply(*w2.functional, g2) == Scalar(1));
    CHECK(w2.functional->summands()[0].u.order() == 0);
}
