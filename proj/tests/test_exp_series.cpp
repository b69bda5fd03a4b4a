#include <doctest.h>

#include <laurentcalc/error.hpp>
#include <laurentcalc/exp_series.hpp>

#include "helpers.hpp"

using namespace lc;
using th::vec;

namespace
{

ExpPolySeries series(std::size_t dim, std::vector<Vec> delta, std::vector<Vec> leaders, int trunc,
                     std::vector<std::pair<Vec, Polynomial>> terms)
{
    std::vector<SeriesLeader> ls;
    for (auto &x : leaders) {
        ls.push_back(SeriesLeader{std::move(x), trunc});
    }
    ExpPolySeries::TermMap map;
    for (auto &[xi, p] : terms) {
        map.emplace(xi, ExpPolySeries::Coefficient{p});
    }
    return ExpPolySeries(dim, 0, 1, std::move(delta), std::move(ls), std::move(map));
}

const Vec lam = vec({Scalar(1, 2), Scalar(1, 3)});
const Vec mu = vec({Scalar(1, 5), Scalar(2, 7)});
const Vec alpha = vec({1, 0});
const Vec gamma_ = vec({0, 1});
const std::vector<Vec> delta2{alpha, gamma_};

Polynomial one2()
{
    return th::c(2, 1);
}

} // namespace

TEST_CASE("series_exponents")
{
    const auto e1 = series_exponents(series(2, delta2, {lam}, 3, {{lam, one2()}}));
    CHECK(e1.exponents == std::vector<Vec>{lam});
    CHECK(e1.leading == std::vector<Vec>{lam});

    const auto e2 = series_exponents(series(2, delta2, {lam}, 3, {{lam, one2()}, {lam - alpha, one2()}}));
    CHECK(e2.exponents.size() == 2);
    CHECK(e2.leading == std::vector<Vec>{lam});

    const auto e3 = series_exponents(series(2, delta2, {lam, mu}, 3, {{lam, one2()}, {mu, one2()}}));
    CHECK(e3.leading.size() == 2);
}

TEST_CASE("series validity window")
{
    CHECK_THROWS_AS(series(2, delta2, {lam}, 1, {{lam - alpha - gamma_, one2()}}), precondition_error);
    CHECK_THROWS_AS(series(2, delta2, {lam}, 3, {{lam + alpha, one2()}}), precondition_error);
    const auto f = series(2, delta2, {lam}, 2, {{lam, one2()}});
    CHECK(f.known(lam - alpha - gamma_));
    CHECK_FALSE(f.known(lam - alpha - alpha - gamma_));
    CHECK(f.coefficient(lam - alpha)[0].is_zero());
}

TEST_CASE("series_diffop")
{
    const Polynomial h1 = Polynomial::variable(2, 0);
    const auto f = series(2, delta2, {lam}, 2, {{lam, one2()}});
    const auto df = series_diffop(h1, f);
    CHECK(df.coefficient(lam)[0] == th::c(2, lam[0]));

    const auto g = series(2, delta2, {lam}, 2, {{lam, th::z(2, 0)}});
    const auto dg = series_diffop(h1, g);
    CHECK(dg.coefficient(lam)[0] == lam[0] * th::z(2, 0) + one2());

    CHECK(series_diffop(one2(), g) == g);
}

TEST_CASE("series_mul")
{
    const auto f = series(2, delta2, {lam}, 2, {{lam, one2()}});
    const auto g = series(2, delta2, {mu}, 2, {{mu, one2()}});
    const auto fg = series_mul(f, g, scalar_pairing());
    CHECK(fg.terms().size() == 1);
    CHECK(fg.coefficient(lam + mu)[0] == one2());

    const auto zero = series(2, delta2, {mu}, 2, {});
    CHECK(series_mul(f, zero, scalar_pairing()).terms().empty());

    // Over Delta = {alpha} in one variable:
    // (a^l + a^{l-a} X)(2 a^m + 3 a^{m-a}) = 2 a^{l+m} + (3 + 2X) a^{l+m-a} + 3X a^{l+m-2a}.
    const std::vector<Vec> d1{vec({1})};
    const Vec l1 = vec({Scalar(1, 3)}), m1 = vec({Scalar(1, 4)}), a1 = vec({1});
    const Polynomial x = th::z(1, 0);
    const auto p = series(1, d1, {l1}, 2, {{l1, th::c(1, 1)}, {l1 - a1, x}});
    const auto q = series(1, d1, {m1}, 2, {{m1, th::c(1, 2)}, {m1 - a1, th::c(1, 3)}});
    const auto pq = series_mul(p, q, scalar_pairing());
    CHECK(pq.terms().size() == 3);
    CHECK(pq.coefficient(l1 + m1)[0] == th::c(1, 2));
    CHECK(pq.coefficient(l1 + m1 - a1)[0] == th::c(1, 3) + Scalar(2) * x);
    CHECK(pq.coefficient(l1 + m1 - a1 - a1)[0] == Scalar(3) * x);
    CHECK(pq.degree() <= p.degree() + q.degree());

    CHECK_THROWS_AS(series_mul(p, q, Pairing{{vec({1}), vec({1})}}), precondition_error);
}

TEST_CASE("series_mul with a vector pairing")
{
    // Complex multiplication on Q(i)^2 written as pairs.
    const Pairing cmul{{vec({1, 0}), vec({0, 1})}, {vec({0, 1}), vec({-1, 0})}};
    const std::vector<Vec> d1{vec({1})};
    const Vec l1 = vec({0});
    ExpPolySeries::TermMap tf{{l1, {th::c(1, 1), th::c(1, 2)}}}, tg{{l1, {th::c(1, 3), th::c(1, -1)}}};
    const ExpPolySeries f(1, 0, 2, d1, {SeriesLeader{l1, 1}}, tf), g(1, 0, 2, d1, {SeriesLeader{l1, 1}}, tg);
    const auto fg = series_mul(f, g, cmul);
    // (1 + 2i)(3 - i) = 5 + 5i
    CHECK(fg.coefficient(l1) == ExpPolySeries::Coefficient{th::c(1, 5), th::c(1, 5)});
}

TEST_CASE("series_split")
{
    const auto f = series(2, delta2, {lam}, 3, {{lam, one2()}, {lam - alpha, one2()}});
    const auto one = series_split(f, {lam});
    REQUIRE(one.size() == 1);
    CHECK(one.at(lam) == f);

    const auto g = series(2, delta2, {lam, mu}, 3, {{lam, one2()}, {mu - alpha, one2()}});
    const auto two = series_split(g, {lam, mu});
    CHECK(two.at(lam).terms().size() == 1);
    CHECK(two.at(mu).terms().size() == 1);
    CHECK(series_add(two.at(lam), two.at(mu)) == g);

    CHECK_THROWS_AS(series_split(g, {lam, lam - alpha}), precondition_error);
    CHECK_THROWS_AS(series_split(g, {lam}), precondition_error);
}

TEST_CASE("series_restrict grouping")
{
    const Matrix gram = identity_matrix(2);
    const auto single = series_restrict(series(2, delta2, {lam}, 3, {{lam, one2()}}), {0}, gram);
    REQUIRE(single.outer.size() == 1);
    CHECK(single.outer.begin()->first == vec({lam[1]}));
    CHECK(single.outer.begin()->second.terms().begin()->first == vec({lam[0]}));

    const auto same = series_restrict(series(2, delta2, {lam}, 3, {{lam, one2()}, {lam - alpha, one2()}}), {0}, gram);
    REQUIRE(same.outer.size() == 1);
    CHECK(same.outer.begin()->second.terms().size() == 2);

    const auto split = series_restrict(series(2, delta2, {lam}, 3, {{lam, one2()}, {lam - gamma_, one2()}}), {0}, gram);
    CHECK(split.outer.size() == 2);
}

TEST_CASE("series_restrict substitutes log b + log a")
{
    // q = X1 + 2 X2 with X = w x + c y; w = e2, c = e1.
    const Polynomial q = th::z(2, 0) + Scalar(2) * th::z(2, 1);
    const auto e = series_restrict(series(2, delta2, {lam}, 1, {{lam, q}}), {0}, identity_matrix(2));
    const auto &inner = e.outer.begin()->second;
    CHECK(inner.dim() == 1);
    CHECK(inner.params() == 1);
    CHECK(inner.terms().begin()->second[0] == th::z(2, 0) + Scalar(2) * th::z(2, 1));
    CHECK(wall_flatten(e, 2, 0) == series(2, delta2, {lam}, 1, {{lam, q}}).terms());
}

TEST_CASE("series_restrict transitivity on a rank three example")
{
    const std::vector<Vec> d3{vec({2, -1, 0}), vec({-1, 2, -1}), vec({0, -1, 2})};
    const Matrix gram{vec({2, 1, 0}), vec({1, 2, 0}), vec({0, 0, 1})};
    const Vec x = vec({Scalar(1, 2), Scalar(1, 3), Scalar(1, 7)});
    const Polynomial p = th::z(3, 0) * th::z(3, 2) + th::c(3, 2);
    std::vector<SeriesLeader> ls{{x, 3}};
    ExpPolySeries::TermMap terms{{x, {p}}, {x - d3[0], {th::z(3, 1)}}, {x - d3[1] - d3[2], {th::c(3, 5)}},
                                 {x - d3[0] - d3[0] - d3[2], {p * p}}};
    const ExpPolySeries f(3, 0, 1, d3, ls, terms);
    const auto once = series_restrict(f, {0, 2}, gram);
    const auto twice = series_restrict_nested(f, {0}, {0, 2}, gram);
    CHECK(wall_reindex(twice, once.w, once.c) == once);
    CHECK(wall_flatten(once, 3, 0) == f.terms());
    CHECK(wall_flatten(twice, 3, 0) == f.terms());
}
