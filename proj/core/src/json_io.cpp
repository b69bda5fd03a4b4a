#include <laurentcalc/json_io.hpp>

#include <algorithm>

#include <laurentcalc/error.hpp>

namespace lc::io
{

namespace
{

[[noreturn]] void fail(const std::string &what)
{
    throw parse_error(what);
}

const json &member(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing member '") + key + "'");
    }
    return j.at(key);
}

std::size_t read_size(const json &j)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        fail("expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

int read_int(const json &j)
{
    if (!j.is_number_integer()) {
        fail("expected an integer");
    }
    return j.get<int>();
}

Rational read_rational_field(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        fail("expected a rational string");
    }
    return parse_rational(j.get<std::string>());
}

} // namespace

json write_scalar(const Scalar &z)
{
    return z.to_string();
}

Scalar read_scalar(const json &j)
{
    if (j.is_number_integer()) {
        return Scalar(j.get<long>());
    }
    if (!j.is_string()) {
        fail("expected a Gaussian rational string");
    }
    return GaussianRational::parse(j.get<std::string>());
}

json write_vec(const Vec &v)
{
    json a = json::array();
    for (const auto &x : v) {
        a.push_back(write_scalar(x));
    }
    return a;
}

Vec read_vec(const json &j)
{
    if (!j.is_array()) {
        fail("expected an array of scalars");
    }
    Vec v;
    for (const auto &x : j) {
        v.push_back(read_scalar(x));
    }
    return v;
}

json write_matrix(const Matrix &m)
{
    json a = json::array();
    for (const auto &r : m) {
        a.push_back(write_vec(r));
    }
    return a;
}

Matrix read_matrix(const json &j)
{
    if (!j.is_array()) {
        fail("expected a matrix");
    }
    Matrix m;
    for (const auto &r : j) {
        m.push_back(read_vec(r));
    }
    return m;
}

json write_poly(const Polynomial &p)
{
    json terms = json::array();
    for (const auto &[m, c] : p.terms()) {
        terms.push_back({{"idx", m}, {"re", rational_to_string(c.re())}, {"im", rational_to_string(c.im())}});
    }
    return {{"dim", p.dim()}, {"terms", terms}};
}

Polynomial read_poly(const json &j)
{
    const std::size_t dim = read_size(member(j, "dim"));
    Polynomial p(dim);
    const json &terms = member(j, "terms");
    if (!terms.is_array()) {
        fail("polynomial terms must be an array");
    }
    for (const auto &t : terms) {
        const json &idx = member(t, "idx");
        if (!idx.is_array() || idx.size() != dim) {
            fail("monomial index of wrong length");
        }
        Monomial m;
        for (const auto &e : idx) {
            m.push_back(static_cast<std::uint32_t>(read_size(e)));
        }
        const Rational re = t.contains("re") ? read_rational_field(t.at("re")) : Rational(0);
        const Rational im = t.contains("im") ? read_rational_field(t.at("im")) : Rational(0);
        p.add_term(m, Scalar(re, im));
    }
    return p;
}

json write_diffop(const DiffOp &u)
{
    return write_poly(u.symbol());
}

DiffOp read_diffop(const json &j)
{
    return DiffOp(read_poly(j));
}

InnerProduct read_inner_product(const json &j, std::size_t dim)
{
    if (j.is_object() && j.contains("inner_product")) {
        InnerProduct ip(read_matrix(j.at("inner_product")));
        if (ip.dim() != dim) {
            fail("inner product of wrong size");
        }
        return ip;
    }
    return InnerProduct::identity(dim);
}

json write_hyperplane(const Hyperplane &h)
{
    return {{"normal", write_vec(h.normal())}, {"offset", write_scalar(h.offset())}};
}

Hyperplane read_hyperplane(const json &j)
{
    const Scalar offset = j.contains("offset") ? read_scalar(j.at("offset")) : Scalar(0);
    return Hyperplane(read_vec(member(j, "normal")), offset);
}

json write_config(const Configuration &cfg)
{
    json hs = json::array();
    for (std::size_t i = 0; i < cfg.hyperplanes().size(); ++i) {
        json h = write_hyperplane(cfg.hyperplanes()[i]);
        h["mult"] = cfg.multiplicity()[i];
        hs.push_back(h);
    }
    json x = json::array();
    for (const auto &v : cfg.x_set()) {
        x.push_back(write_vec(v));
    }
    return {{"dim", cfg.dim()}, {"inner_product", write_matrix(cfg.ip().gram())}, {"hyperplanes", hs}, {"x_set", x}};
}

Configuration read_config(const json &j)
{
    const std::size_t dim = read_size(member(j, "dim"));
    const InnerProduct ip = read_inner_product(j, dim);
    std::vector<Hyperplane> hs;
    std::vector<unsigned> mult;
    for (const auto &h : member(j, "hyperplanes")) {
        hs.push_back(read_hyperplane(h));
        mult.push_back(h.contains("mult") ? static_cast<unsigned>(read_size(h.at("mult"))) : 1u);
    }
    std::vector<Vec> x;
    if (j.contains("x_set")) {
        for (const auto &v : j.at("x_set")) {
            x.push_back(read_vec(v));
        }
    }
    return Configuration(ip, std::move(hs), std::move(mult), std::move(x));
}

XSubspace read_subspace(const json &j, const InnerProduct &ip)
{
    std::vector<Hyperplane> hs;
    const json &list = j.is_array() ? j : member(j, "hyperplanes");
    for (const auto &h : list) {
        hs.push_back(read_hyperplane(h));
    }
    return XSubspace(ip, std::move(hs));
}

json write_rationalfn(const RationalFn &f)
{
    json den = json::array();
    for (const auto &[h, p] : f.denominator()) {
        den.push_back({{"hyperplane", write_hyperplane(h)}, {"power", p}});
    }
    return {{"dim", f.dim()},
            {"inner_product", write_matrix(f.ip().gram())},
            {"numerator", write_poly(f.numerator())},
            {"denominator", den}};
}

RationalFn read_rationalfn(const json &j, const std::vector<Hyperplane> &hyperplanes)
{
    const Polynomial num = read_poly(member(j, "numerator"));
    const std::size_t dim = j.contains("dim") ? read_size(j.at("dim")) : num.dim();
    const InnerProduct ip = read_inner_product(j, dim);
    std::vector<Hyperplane> local = hyperplanes;
    if (j.contains("hyperplanes")) {
        for (const auto &h : j.at("hyperplanes")) {
            local.push_back(read_hyperplane(h));
        }
    }
    std::vector<RationalFn::Factor> den;
    if (j.contains("denominator")) {
        for (const auto &d : j.at("denominator")) {
            const json &ref = member(d, "hyperplane");
            const unsigned power = d.contains("power") ? static_cast<unsigned>(read_size(d.at("power"))) : 1u;
            if (ref.is_number_integer()) {
                const std::size_t i = read_size(ref);
                if (i >= local.size()) {
                    fail("hyperplane reference out of range");
                }
                den.emplace_back(local[i], power);
            } else {
                den.emplace_back(read_hyperplane(ref), power);
            }
        }
    }
    return RationalFn(ip, num, std::move(den));
}

json write_pole(const PoleIndex &d)
{
    return json(d);
}

PoleIndex read_pole(const json &j, std::size_t size)
{
    PoleIndex d(size, 0);
    if (j.is_array()) {
        if (j.size() != size) {
            fail("pole index of wrong length");
        }
        for (std::size_t i = 0; i < size; ++i) {
            d[i] = static_cast<unsigned>(read_size(j[i]));
        }
    } else if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            std::size_t i = 0;
            try {
                i = std::stoul(k);
            } catch (const std::exception &) {
                fail("pole index keys must be root indices");
            }
            if (i >= size) {
                fail("pole index key out of range");
            }
            d[i] = static_cast<unsigned>(read_size(v));
        }
    } else {
        fail("pole index must be an array or an object");
    }
    return d;
}

namespace
{

std::vector<Vec> read_vec_list(const json &j)
{
    if (!j.is_array()) {
        fail("expected a list of vectors");
    }
    std::vector<Vec> out;
    for (const auto &v : j) {
        out.push_back(read_vec(v));
    }
    return out;
}

json write_vec_list(const std::vector<Vec> &vs)
{
    json a = json::array();
    for (const auto &v : vs) {
        a.push_back(write_vec(v));
    }
    return a;
}

} // namespace

json write_germ(const Germ &g)
{
    return {{"dim", g.dim()},
            {"inner_product", write_matrix(g.frame().ip().gram())},
            {"base", write_vec(g.base())},
            {"roots", write_vec_list(g.frame().roots())},
            {"pole", write_pole(g.pole())},
            {"jet", write_poly(g.jet())},
            {"order", g.order()}};
}

Germ read_germ(const json &j)
{
    if (j.contains("rational")) {
        const RationalFn f = read_rationalfn(j.at("rational"));
        const Point a = read_vec(member(j, "at"));
        const int order = read_int(member(j, "order"));
        if (j.contains("roots")) {
            return rationalfn_germ_at(f, a, order, RootFrame(f.ip(), read_vec_list(j.at("roots"))));
        }
        return rationalfn_germ_at(f, a, order);
    }
    const Polynomial jet = read_poly(member(j, "jet"));
    const std::size_t dim = j.contains("dim") ? read_size(j.at("dim")) : jet.dim();
    const InnerProduct ip = read_inner_product(j, dim);
    const RootFrame frame(ip, j.contains("roots") ? read_vec_list(j.at("roots")) : std::vector<Vec>{});
    const Point base = j.contains("base") ? read_vec(j.at("base")) : zero_vec(dim);
    const PoleIndex pole = j.contains("pole") ? read_pole(j.at("pole"), frame.size()) : frame.zero_pole();
    return Germ(base, frame, pole, jet, read_int(member(j, "order")));
}

json write_functional(const LaurentFunctional &l)
{
    json ss = json::array();
    for (const auto &s : l.summands()) {
        ss.push_back({{"support", write_vec(s.support)},
                      {"x_set", write_vec_list(s.frame.roots())},
                      {"d_max", write_pole(s.d_max)},
                      {"u", write_diffop(s.u)}});
    }
    return {{"dim", l.dim()}, {"inner_product", write_matrix(l.ip().gram())}, {"summands", ss}};
}

LaurentFunctional read_functional(const json &j)
{
    const json &ss = member(j, "summands");
    if (!ss.is_array()) {
        fail("summands must be an array");
    }
    std::size_t dim = 0;
    if (j.contains("dim")) {
        dim = read_size(j.at("dim"));
    } else if (!ss.empty()) {
        dim = read_vec(member(ss[0], "support")).size();
    }
    const InnerProduct ip = read_inner_product(j, dim);
    std::vector<LaurentSummand> out;
    for (const auto &s : ss) {
        RootFrame frame(ip, s.contains("x_set") ? read_vec_list(s.at("x_set")) : std::vector<Vec>{});
        PoleIndex d = s.contains("d_max") ? read_pole(s.at("d_max"), frame.size()) : frame.zero_pole();
        out.push_back(LaurentSummand{read_vec(member(s, "support")), std::move(frame), std::move(d),
                                     read_diffop(member(s, "u"))});
    }
    return LaurentFunctional(ip, std::move(out));
}

RootSystem read_rootsys(const json &j)
{
    if (j.is_string()) {
        return RootSystem::builtin(j.get<std::string>());
    }
    if (j.contains("name")) {
        return RootSystem::builtin(j.at("name").get<std::string>());
    }
    const std::vector<Vec> roots = read_vec_list(member(j, "roots"));
    std::size_t dim = 0;
    if (j.contains("dim")) {
        dim = read_size(j.at("dim"));
    } else if (!roots.empty()) {
        dim = roots[0].size();
    }
    std::optional<std::vector<std::size_t>> positive;
    if (j.contains("positive")) {
        positive.emplace();
        for (const auto &i : j.at("positive")) {
            positive->push_back(read_size(i));
        }
    }
    return RootSystem(read_inner_product(j, dim), roots, positive);
}

json write_series(const ExpPolySeries &f)
{
    json leaders = json::array();
    for (const auto &l : f.leaders()) {
        leaders.push_back({{"exponent", write_vec(l.exponent)}, {"trunc", l.trunc}});
    }
    json terms = json::array();
    for (const auto &[xi, c] : f.terms()) {
        json t{{"exponent", write_vec(xi)}};
        if (c.size() == 1) {
            t["coeff_poly"] = write_poly(c[0]);
        } else {
            json v = json::array();
            for (const auto &p : c) {
                v.push_back(write_poly(p));
            }
            t["coeff_vec"] = v;
        }
        terms.push_back(t);
    }
    return {{"dim", f.dim()},
            {"params", f.params()},
            {"coeff_dim", f.coeff_dim()},
            {"delta", write_vec_list(f.delta())},
            {"trunc", f.trunc()},
            {"leaders", leaders},
            {"terms", terms}};
}

ExpPolySeries read_series(const json &j)
{
    const std::vector<Vec> delta = read_vec_list(member(j, "delta"));
    const json &terms = member(j, "terms");
    if (!terms.is_array()) {
        fail("series terms must be an array");
    }
    std::size_t dim = 0;
    if (j.contains("dim")) {
        dim = read_size(j.at("dim"));
    } else if (!delta.empty()) {
        dim = delta[0].size();
    } else if (!terms.empty()) {
        dim = read_vec(member(terms[0], "exponent")).size();
    }
    const std::size_t params = j.contains("params") ? read_size(j.at("params")) : 0;
    const int trunc = j.contains("trunc") ? read_int(j.at("trunc")) : 0;
    ExpPolySeries::TermMap map;
    std::size_t coeff_dim = j.contains("coeff_dim") ? read_size(j.at("coeff_dim")) : 0;
    bool have_dim = j.contains("coeff_dim");
    for (const auto &t : terms) {
        const Vec xi = read_vec(member(t, "exponent"));
        ExpPolySeries::Coefficient c;
        if (t.contains("coeff_poly")) {
            c.push_back(read_poly(t.at("coeff_poly")));
        } else {
            for (const auto &p : member(t, "coeff_vec")) {
                c.push_back(read_poly(p));
            }
        }
        if (!have_dim) {
            coeff_dim = c.size();
            have_dim = true;
        }
        if (!map.emplace(xi, std::move(c)).second) {
            fail("duplicate series exponent");
        }
    }
    if (!have_dim) {
        coeff_dim = 1;
    }
    std::vector<SeriesLeader> leaders;
    if (j.contains("leaders")) {
        for (const auto &l : j.at("leaders")) {
            if (l.is_array()) {
                leaders.push_back(SeriesLeader{read_vec(l), trunc});
            } else {
                leaders.push_back(
                    SeriesLeader{read_vec(member(l, "exponent")), l.contains("trunc") ? read_int(l.at("trunc")) : trunc});
            }
        }
    } else {
        std::vector<Vec> keys;
        for (const auto &[xi, c] : map) {
            keys.push_back(xi);
        }
        // Leaders default to the maximal exponents.
        for (const auto &xi : keys) {
            bool maximal = true;
            for (const auto &eta : keys) {
                if (eta != xi) {
                    auto n = lattice_coordinates(delta, eta - xi);
                    if (n && std::all_of(n->begin(), n->end(), [](const mpz_class &z) { return sgn(z) >= 0; })) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (maximal) {
                leaders.push_back(SeriesLeader{xi, trunc});
            }
        }
    }
    return ExpPolySeries(dim, params, coeff_dim, delta, std::move(leaders), std::move(map));
}

json write_wall(const WallExpansion &e)
{
    json outer = json::array();
    for (const auto &[eta, inner] : e.outer) {
        outer.push_back({{"exponent", write_vec(eta)}, {"inner", write_series(inner)}});
    }
    return {{"w", write_matrix(e.w)},
            {"c", write_matrix(e.c)},
            {"outer_delta", write_vec_list(e.outer_delta)},
            {"inner_delta", write_vec_list(e.inner_delta)},
            {"outer", outer}};
}

} // namespace lc::io
