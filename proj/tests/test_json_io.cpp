#include <doctest.h>

#include <laurentcalc/error.hpp>
#include <laurentcalc/json_io.hpp>

#include "helpers.hpp"

using namespace lc;
using namespace lc::io;
using th::vec;
using th::z;

TEST_CASE("scalars and polynomials")
{
    CHECK(write_scalar(Scalar(3, 4)) == json("3/4"));
    CHECK(read_scalar(json("1/2 - 1/3 i")) == Scalar(Rational(1, 2), Rational(-1, 3)));
    CHECK(read_scalar(json(5)) == Scalar(5));
    CHECK_THROWS_AS(read_scalar(json("x")), std::exception);
    CHECK_THROWS_AS(read_scalar(json::array()), parse_error);

    const Polynomial p = z(2, 0) * z(2, 1) + Scalar::i() * z(2, 1) + th::c(2, Scalar(1, 3));
    CHECK(read_poly(write_poly(p)) == p);
    CHECK(read_diffop(write_diffop(DiffOp(p))) == DiffOp(p));
    CHECK_THROWS_AS(read_poly(json{{"dim", 2}}), parse_error);
}

TEST_CASE("configuration and rational function")
{
    const InnerProduct ip(Matrix{vec({2, 1}), vec({1, 2})});
    const Hyperplane h1(vec({1, 0}), Scalar(1, 2)), h2(vec({1, -1}), 0);
    const Configuration cfg(ip, {h1, h2}, {2, 1});
    const Configuration back = read_config(write_config(cfg));
    CHECK(back.hyperplanes() == cfg.hyperplanes());
    CHECK(back.multiplicity() == cfg.multiplicity());
    CHECK(back.ip() == cfg.ip());

    const RationalFn f(ip, z(2, 0) + th::c(2, 1), {{h1, 2}, {h2, 1}});
    CHECK(read_rationalfn(write_rationalfn(f)) == f);

    const json byref = {{"numerator", write_poly(th::c(2, 1))},
                        {"inner_product", write_matrix(ip.gram())},
                        {"denominator", {{{"hyperplane", 1}, {"power", 2}}}}};
    CHECK(read_rationalfn(byref, {h1, h2}) == RationalFn(ip, th::c(2, 1), {{h2, 2}}));
}

TEST_CASE("germs and functionals")
{
    const InnerProduct ip = InnerProduct::identity(2);
    const Germ g(vec({1, 0}), RootFrame(ip, {vec({1, 0}), vec({1, 1})}), {1, 2}, z(2, 0) + th::c(2, 3), 4);
    const Germ back = read_germ(write_germ(g));
    CHECK(back.pole() == g.pole());
    CHECK(back.jet() == g.jet());
    CHECK(back.order() == g.order());
    CHECK(germ_equivalent(back, g));

    const json residue = json::parse(R"({"summands":[{"support":["0"],"x_set":[["1"]],"d_max":{"0":1},
        "u":{"dim":1,"terms":[{"idx":[0],"re":"1"}]}}]})");
    const LaurentFunctional l = read_functional(residue);
    REQUIRE(l.summands().size() == 1);
    CHECK(l.summands()[0].d_max == PoleIndex{1});
    const json germ = json::parse(R"({"roots":[["1"]],"pole":[1],"jet":{"dim":1,"terms":[{"idx":[0],"re":"1"}]},
        "order":2})");
    CHECK(lf_apply(l, read_germ(germ)) == Scalar(1));

    const LaurentFunctional again = read_functional(write_functional(l));
    CHECK(again.summands()[0].u == l.summands()[0].u);
    CHECK_THROWS_AS(read_pole(json{{"3", 1}}, 1), parse_error);
}

TEST_CASE("root systems and series")
{
    CHECK(read_rootsys(json("B2")).weyl().size() == 8);
    CHECK(read_rootsys(json{{"name", "G2"}}).weyl().size() == 12);
    const json a1 = json::parse(R"({"dim":1,"roots":[["1"],["-1"]]})");
    CHECK(read_rootsys(a1).weyl().size() == 2);

    const std::vector<Vec> delta{vec({1, 0}), vec({0, 1})};
    const Vec lam = vec({Scalar(1, 2), Scalar(1, 3)});
    const ExpPolySeries f(2, 0, 1, delta, {SeriesLeader{lam, 2}},
                          {{lam, {z(2, 0)}}, {lam - delta[0], {th::c(2, 2)}}});
    CHECK(read_series(write_series(f)) == f);

    const json plain = json::parse(R"({"delta":[["1"]],"trunc":2,
        "terms":[{"exponent":["1/2"],"coeff_poly":{"dim":1,"terms":[{"idx":[0],"re":"1"}]}},
                 {"exponent":["-1/2"],"coeff_poly":{"dim":1,"terms":[{"idx":[1],"re":"1"}]}}]})");
    const ExpPolySeries s = read_series(plain);
    CHECK(s.leaders().size() == 1);
    CHECK(s.trunc() == 2);
    CHECK(s.terms().size() == 2);
}
