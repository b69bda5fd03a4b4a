#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <laurentcalc/error.hpp>
#include <laurentcalc/json_io.hpp>
#include <laurentcalc/laurent_operator.hpp>
#include <laurentcalc/verify/acceptance.hpp>

using namespace lc;
using namespace lc::io;

namespace
{

constexpr int exit_parse = 1;
constexpr int exit_precondition = 2;

// A file path, or the JSON text itself.
json load(const std::string &arg)
{
    std::ifstream in(arg);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        return json::parse(ss.str());
    }
    try {
        return json::parse(arg);
    } catch (const json::exception &) {
        throw parse_error("'" + arg + "' is neither a readable file nor JSON text");
    }
}

json load_system(const std::string &arg)
{
    std::ifstream in(arg);
    if (in) {
        return load(arg);
    }
    try {
        return json::parse(arg);
    } catch (const json::exception &) {
        return json(arg);
    }
}

std::vector<std::size_t> simple_indices(const std::vector<std::string> &names)
{
    static const std::vector<std::string> greek{"alpha", "beta", "gamma", "delta"};
    std::vector<std::size_t> out;
    for (const auto &n : names) {
        if (n.empty()) {
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < greek.size(); ++i) {
            if (n == greek[i]) {
                out.push_back(i);
                found = true;
            }
        }
        if (!found) {
            try {
                out.push_back(std::stoul(n));
            } catch (const std::exception &) {
                throw parse_error("unknown simple root '" + n + "'");
            }
        }
    }
    return out;
}

std::vector<Vec> read_vec_list(const json &j)
{
    if (!j.is_array()) {
        throw parse_error("expected a list of vectors");
    }
    std::vector<Vec> out;
    for (const auto &v : j) {
        out.push_back(read_vec(v));
    }
    return out;
}

json write_vec_list(const std::vector<Vec> &vs)
{
    json out = json::array();
    for (const auto &v : vs) {
        out.push_back(write_vec(v));
    }
    return out;
}

json write_mpz_list(const std::vector<mpz_class> &xs)
{
    json out = json::array();
    for (const auto &x : xs) {
        out.push_back(x.get_str());
    }
    return out;
}

json write_weyl(const RootSystem &rs, std::size_t w)
{
    const auto &e = rs.weyl()[w];
    return {{"index", w}, {"length", e.length}, {"word", e.word}, {"matrix", write_matrix(e.matrix)}};
}

json write_weyl_list(const RootSystem &rs, const std::vector<std::size_t> &ws)
{
    json out = json::array();
    for (auto w : ws) {
        out.push_back(write_weyl(rs, w));
    }
    return out;
}

json write_partition(const Partition &p)
{
    return {{"classes", p.classes}, {"class_of", p.class_of}};
}

InnerProduct ip_option(const std::string &arg, std::size_t dim)
{
    return arg.empty() ? InnerProduct::identity(dim) : InnerProduct(read_matrix(load(arg)));
}

struct Options {
    std::string poly, point, op, at, d, dlow, roots, ip, config, subspace, support, center, radius2, germ, germ2,
        vector, function, functional, embedding, system, weights, lambda, xi, xi1, xi2, delta, omega, series, series2,
        pairing, leaders, gram, suite = "all";
    std::vector<std::string> delta_p, delta_q, delta_q2;
    int order = 0;
    std::size_t s = 0, alpha = 0, t = 0;
    std::uint64_t seed = lc::verify::SuiteOptions{}.seed;
    bool failed = false;
};

using Action = std::function<json(Options &)>;

// Registers `verb name` with its options and action.
CLI::App *command(CLI::App *verb, const std::string &name, const std::string &desc, json &result, Options &o,
                  Action act)
{
    CLI::App *sub = verb->add_subcommand(name, desc);
    sub->callback([&result, &o, act] { result = act(o); });
    return sub;
}

void register_poly(CLI::App &app, json &r, Options &o)
{
    CLI::App *v = app.add_subcommand("poly", "Polynomials and differential operators");
    v->require_subcommand(1);
    auto *c = command(v, "eval", "Evaluate a polynomial at a point", r, o, [](Options &o) {
        return json{{"value", write_scalar(read_poly(load(o.poly)).eval(read_vec(load(o.point))))}};
    });
    c->add_option("--poly", o.poly)->required();
    c->add_option("--point", o.point)->required();

    c = command(v, "apply", "Apply a differential operator to a polynomial", r, o, [](Options &o) {
        return json{{"poly", write_poly(read_diffop(load(o.op)).apply(read_poly(load(o.poly))))}};
    });
    c->add_option("--op", o.op)->required();
    c->add_option("--poly", o.poly)->required();

    c = command(v, "flatten", "Leibniz flattening u(p h)(a) = u'(h)(a)", r, o, [](Options &o) {
        return json{{"op", write_diffop(leibniz_flatten(read_diffop(load(o.op)), read_poly(load(o.poly)),
                                                        read_vec(load(o.at))))}};
    });
    c->add_option("--op", o.op)->required();
    c->add_option("--poly", o.poly)->required();
    c->add_option("--at", o.at)->required();

    c = command(v, "jmap", "Transfer map j_{d_low,d}", r, o, [](Options &o) {
        const DiffOp u = read_diffop(load(o.op));
        const auto roots = read_vec_list(load(o.roots));
        const InnerProduct ip = ip_option(o.ip, u.dim());
        return json{{"op", write_diffop(j_map(u, read_pole(load(o.d), roots.size()),
                                              read_pole(load(o.dlow), roots.size()), roots, read_vec(load(o.at)),
                                              ip))}};
    });
    c->add_option("--op", o.op)->required();
    c->add_option("--d", o.d)->required();
    c->add_option("--dlow", o.dlow)->required();
    c->add_option("--roots", o.roots)->required();
    c->add_option("--at", o.at)->required();
    c->add_option("--inner-product", o.ip);

    c = command(v, "pi", "The product pi_{a,d}", r, o, [](Options &o) {
        const auto roots = read_vec_list(load(o.roots));
        const Point a = read_vec(load(o.at));
        return json{{"poly", write_poly(pi_a_d(ip_option(o.ip, a.size()), roots, a,
                                               read_pole(load(o.d), roots.size())))}};
    });
    c->add_option("--roots", o.roots)->required();
    c->add_option("--at", o.at)->required();
    c->add_option("--d", o.d)->required();
    c->add_option("--inner-product", o.ip);
}

json write_subspace(const XSubspace &l)
{
    json defining = json::array();
    for (const auto &h : l.defining()) {
        defining.push_back(write_hyperplane(h));
    }
    return {{"dim", l.dim()},
            {"codim", l.codim()},
            {"center", write_vec(l.center())},
            {"direction_basis", write_vec_list(l.direction_basis())},
            {"perp_basis", write_vec_list(l.perp_basis())},
            {"hyperplanes", defining}};
}

void register_config(CLI::App &app, json &r, Options &o)
{
    CLI::App *v = app.add_subcommand("config", "Hyperplane configurations and subspaces");
    v->require_subcommand(1);
    auto *c = command(v, "subspace", "Intersection of hyperplanes", r, o, [](Options &o) {
        const json j = load(o.subspace);
        const std::size_t dim = read_hyperplane((j.is_array() ? j : j.at("hyperplanes")).at(0)).dim();
        const InnerProduct ip = o.ip.empty() ? read_inner_product(j, dim) : ip_option(o.ip, dim);
        return write_subspace(read_subspace(j, ip));
    });
    c->add_option("--subspace", o.subspace)->required();
    c->add_option("--inner-product", o.ip);

    c = command(v, "through", "Hyperplanes of a configuration containing a subspace", r, o, [](Options &o) {
        const Configuration cfg = read_config(load(o.config));
        const auto hits = hyperplanes_through(cfg, read_subspace(load(o.subspace), cfg.ip()));
        json hs = json::array();
        for (auto i : hits.indices) {
            hs.push_back(write_hyperplane(cfg.hyperplanes()[i]));
        }
        return json{{"indices", hits.indices}, {"hyperplanes", hs}, {"x_of_l", write_vec_list(hits.x_of_l)}};
    });
    c->add_option("--config", o.config)->required();
    c->add_option("--subspace", o.subspace)->required();

    c = command(v, "induced", "Induced configuration H_L(S) on a subspace", r, o, [](Options &o) {
        const Configuration cfg = read_config(load(o.config));
        const XSubspace l = read_subspace(load(o.subspace), cfg.ip());
        return write_config(induced_config(cfg, l, read_vec_list(load(o.support))));
    });
    c->add_option("--config", o.config)->required();
    c->add_option("--subspace", o.subspace)->required();
    c->add_option("--support", o.support)->required();

    c = command(v, "pi-omega", "Product over hyperplanes meeting a ball", r, o, [](Options &o) {
        const Configuration cfg = read_config(load(o.config));
        std::optional<std::vector<unsigned>> d;
        if (!o.d.empty()) {
            d = read_pole(load(o.d), cfg.hyperplanes().size());
        }
        const Scalar r2 = read_scalar(load(o.radius2));
        if (!r2.is_real()) {
            throw parse_error("radius2 must be real");
        }
        return json{{"poly", write_poly(pi_omega_d(cfg, read_vec(load(o.center)), r2.re(), d))}};
    });
    c->add_option("--config", o.config)->required();
    c->add_option("--center", o.center)->required();
    c->add_option("--radius2", o.radius2)->required();
    c->add_option("--d", o.d);
}

void register_germ(CLI::App &app, json &r, Options &o)
{
    CLI::App *v = app.add_subcommand("germ", "Germs and rational functions");
    v->require_subcommand(1);
    auto *c = command(v, "normalize", "Cancel root forms dividing the jet", r, o,
                      [](Options &o) { return write_germ(germ_normalize(read_germ(load(o.germ)))); });
    c->add_option("--germ", o.germ)->required();

    c = command(v, "mul", "Product of two germs", r, o, [](Options &o) {
        return write_germ(germ_mul(read_germ(load(o.germ)), read_germ(load(o.germ2))));
    });
    c->add_option("--germ", o.germ)->required();
    c->add_option("--germ2", o.germ2)->required();

    c = command(v, "diff", "Directional derivative of a germ", r, o, [](Options &o) {
        return write_germ(germ_diff(read_vec(load(o.vector)), read_germ(load(o.germ))));
    });
    c->add_option("--vector", o.vector)->required();
    c->add_option("--germ", o.germ)->required();

    c = command(v, "at", "Germ of a rational function at a point", r, o, [](Options &o) {
        return write_germ(rationalfn_germ_at(read_rationalfn(load(o.function)), read_vec(load(o.at)), o.order));
    });
    c->add_option("--function", o.function)->required();
    c->add_option("--at", o.at)->required();
    c->add_option("--order", o.order)->required();

    c = command(v, "restrict", "Restriction of a rational function to a subspace", r, o, [](Options &o) {
        const RationalFn f = read_rationalfn(load(o.function));
        return write_rationalfn(rationalfn_restrict(f, read_subspace(load(o.subspace), f.ip())));
    });
    c->add_option("--function", o.function)->required();
    c->add_option("--subspace", o.subspace)->required();
}

// Reads a rational function whose denominators may refer to the configuration's hyperplanes.
RationalFn config_function(const Options &o, const Configuration &cfg)
{
    json j = load(o.function);
    if (j.is_object() && !j.contains("inner_product")) {
        j["inner_product"] = write_matrix(cfg.ip().gram());
    }
    return read_rationalfn(j, cfg.hyperplanes());
}

void register_laurent(CLI::App &app, json &r, Options &o)
{
    CLI::App *v = app.add_subcommand("laurent", "Laurent functionals and operators");
    v->require_subcommand(1);
    auto *c = command(v, "apply", "Apply a functional to a germ or rational function", r, o, [](Options &o) {
        const LaurentFunctional l = read_functional(load(o.functional));
        if (!o.germ.empty()) {
            return json{{"value", write_scalar(lf_apply(l, read_germ(load(o.germ))))}};
        }
        if (o.function.empty()) {
            throw parse_error("either --germ or --function is required");
        }
        return json{{"value", write_scalar(lf_apply(l, read_rationalfn(load(o.function))))}};
    });
    c->add_option("--functional", o.functional)->required();
    c->add_option("--germ", o.germ);
    c->add_option("--function", o.function);

    c = command(v, "evaluation", "Evaluation functional at a point", r, o, [](Options &o) {
        const auto roots = read_vec_list(load(o.roots));
        const Point a = read_vec(load(o.at));
        return write_functional(
            lf_from_evaluation(ip_option(o.ip, a.size()), a, roots, read_pole(load(o.d), roots.size())));
    });
    c->add_option("--at", o.at)->required();
    c->add_option("--roots", o.roots)->required();
    c->add_option("--d-max", o.d)->required();
    c->add_option("--inner-product", o.ip);

    c = command(v, "pushforward", "Push a functional forward along an isometric embedding", r, o, [](Options &o) {
        const Matrix iota = read_matrix(load(o.embedding));
        return write_functional(lf_pushforward(iota, ip_option(o.ip, iota.size()), read_vec_list(load(o.roots)),
                                               read_functional(load(o.functional))));
    });
    c->add_option("--embedding", o.embedding)->required();
    c->add_option("--roots", o.roots)->required();
    c->add_option("--functional", o.functional)->required();
    c->add_option("--inner-product", o.ip);

    c = command(v, "mul", "Multiplication action m_psi^*", r, o, [](Options &o) {
        const LaurentFunctional l = read_functional(load(o.functional));
        if (!o.germ.empty()) {
            return write_functional(lf_mul_action(read_germ(load(o.germ)), l));
        }
        if (o.function.empty()) {
            throw parse_error("either --germ or --function is required");
        }
        return write_functional(lf_mul_action(read_rationalfn(load(o.function)), l));
    });
    c->add_option("--functional", o.functional)->required();
    c->add_option("--germ", o.germ);
    c->add_option("--function", o.function);

    c = command(v, "diff", "Differential action d_v^*", r, o, [](Options &o) {
        return write_functional(lf_diff_action(read_vec(load(o.vector)), read_functional(load(o.functional))));
    });
    c->add_option("--vector", o.vector)->required();
    c->add_option("--functional", o.functional)->required();

    c = command(v, "operator", "Laurent operator L_* applied to a rational function", r, o, [](Options &o) {
        const Configuration cfg = read_config(load(o.config));
        const XSubspace l = read_subspace(load(o.subspace), cfg.ip());
        return write_rationalfn(
            laurent_operator_apply(read_functional(load(o.functional)), cfg, config_function(o, cfg), l));
    });
    c->add_option("--functional", o.functional)->required();
    c->add_option("--config", o.config)->required();
    c->add_option("--function", o.function)->required();
    c->add_option("--subspace", o.subspace)->required();

    c = command(v, "diagonal", "Diagonal action on a function on V x V", r, o, [](Options &o) {
        const Configuration cfg = read_config(load(o.config));
        const XSubspace l = read_subspace(load(o.subspace), cfg.ip());
        const Configuration dbl = doubled_config(cfg);
        json j = load(o.function);
        if (j.is_object() && !j.contains("inner_product")) {
            j["inner_product"] = write_matrix(dbl.ip().gram());
        }
        return write_rationalfn(
            lf_diagonal_apply(read_functional(load(o.functional)), cfg, read_rationalfn(j, dbl.hyperplanes()), l));
    });
    c->add_option("--functional", o.functional)->required();
    c->add_option("--config", o.config)->required();
    c->add_option("--function", o.function)->required();
    c->add_option("--subspace", o.subspace)->required();

    c = command(v, "annihilator", "Functional detecting a genuine pole", r, o, [](Options &o) {
        const auto w = lf_annihilator_witness(read_germ(load(o.germ)));
        if (w.holomorphic) {
            return json{{"holomorphic", true}};
        }
        return json{{"holomorphic", false}, {"functional", write_functional(*w.functional)}};
    });
    c->add_option("--germ", o.germ)->required();
}

struct Parabolics {
    RootSystem rs;
    ParabolicData p, q;
};

Parabolics parabolics(const Options &o)
{
    RootSystem rs = read_rootsys(load_system(o.system));
    ParabolicData p = parabolic(rs, simple_indices(o.delta_p));
    ParabolicData q = parabolic(rs, simple_indices(o.delta_q));
    return {std::move(rs), std::move(p), std::move(q)};
}

void system_options(CLI::App *c, Options &o, bool with_p)
{
    c->add_option("--system", o.system, "Built-in name (A1, A1xA1, A2, B2, G2, A3) or JSON file")->required();
    if (with_p) {
        c->add_option("--deltaP", o.delta_p)->delimiter(',');
    }
    c->add_option("--deltaQ", o.delta_q, "Simple roots by index or as alpha, beta, gamma")->delimiter(',');
}

void register_rootsys(CLI::App &app, json &r, Options &o)
{
    CLI::App *v = app.add_subcommand("rootsys", "Root systems and Weyl group combinatorics");
    v->require_subcommand(1);
    auto *c = command(v, "weyl", "Enumerate the Weyl group", r, o, [](Options &o) {
        const RootSystem rs = read_rootsys(load_system(o.system));
        std::vector<std::size_t> all(rs.weyl().size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        return json{{"order", all.size()},
                    {"simple_roots", write_vec_list(rs.simple_roots())},
                    {"W", write_weyl_list(rs, all)}};
    });
    c->add_option("--system", o.system)->required();

    c = command(v, "subgroup", "Parabolic subgroup W_Q", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        return json{{"W_Q", write_weyl_list(pq.rs, wq_subgroup(pq.rs, pq.q))}};
    });
    system_options(c, o, false);

    c = command(v, "cosets", "Minimal coset representatives W^Q", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        return json{{"W^Q", write_weyl_list(pq.rs, min_coset_reps(pq.rs, pq.q))}};
    });
    system_options(c, o, false);

    c = command(v, "invariance", "Check s in W^Q t against s_alpha s in W^Q t", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        const auto [a, b] = wq_invariance_check(pq.rs, pq.q, o.s, o.alpha, o.t);
        return json{{"s_in_WQt", a}, {"s_alpha_s_in_WQt", b}};
    });
    system_options(c, o, false);
    c->add_option("--s", o.s, "Weyl index")->required();
    c->add_option("--alpha", o.alpha, "Simple root index")->required();
    c->add_option("--t", o.t, "Weyl index in W_Q");

    c = command(v, "equiv", "Partition of W by ~_{P|Q}", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        return write_partition(equiv_pq(pq.rs, pq.p, pq.q));
    });
    system_options(c, o, true);

    c = command(v, "double-cosets", "Partition of W into W_P w W_Q", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        return write_partition(double_cosets(pq.rs, pq.p, pq.q));
    });
    system_options(c, o, true);

    c = command(v, "generic", "Genericity of lambda for the exponent set S", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        const auto s = read_vec_list(load(o.weights));
        const Vec lambda = read_vec(load(o.lambda));
        const auto res = is_generic(pq.rs, pq.p, pq.q, s, lambda);
        json out{{"generic", res.generic}};
        if (res.witness) {
            const auto &w = *res.witness;
            out["witness"] = {{"class1", w.class1}, {"class2", w.class2}, {"s1", w.s1},
                              {"s2", w.s2},         {"x", w.x},           {"y", w.y},
                              {"coefficients", write_mpz_list(w.coefficients)},
                              {"valid", check_witness(pq.rs, pq.p, s, lambda, w)}};
        }
        return out;
    });
    system_options(c, o, true);
    c->add_option("--weights", o.weights, "List of weights S")->required();
    c->add_option("--lambda", o.lambda)->required();

    c = command(v, "classify", "Cosets containing an exponent", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        const auto res = exponent_classify(pq.rs, pq.p, pq.q, read_vec_list(load(o.weights)),
                                           read_vec(load(o.lambda)), read_vec(load(o.xi)));
        return json{{"candidates", res.candidates}, {"ambiguous", res.ambiguous()}};
    });
    system_options(c, o, true);
    c->add_option("--weights", o.weights)->required();
    c->add_option("--lambda", o.lambda)->required();
    c->add_option("--xi", o.xi)->required();

    c = command(v, "excluded", "Excluded affine subspaces meeting a ball", r, o, [](Options &o) {
        const auto pq = parabolics(o);
        const Scalar r2 = read_scalar(load(o.radius2));
        if (!r2.is_real()) {
            throw parse_error("radius2 must be real");
        }
        json out = json::array();
        for (const auto &a : excluded_subspaces(pq.rs, pq.p, pq.q, read_vec_list(load(o.weights)),
                                                read_vec(load(o.center)), r2.re())) {
            out.push_back({{"class1", a.class1},
                           {"class2", a.class2},
                           {"x", a.x},
                           {"y", a.y},
                           {"coefficients", write_mpz_list(a.coefficients)},
                           {"map", write_matrix(a.map)},
                           {"rhs", write_vec(a.rhs)}});
        }
        return json{{"subspaces", out}};
    });
    system_options(c, o, true);
    c->add_option("--weights", o.weights)->required();
    c->add_option("--center", o.center)->required();
    c->add_option("--radius2", o.radius2)->required();

    c = command(v, "preceq", "Order xi1 <= xi2 modulo N Delta", r, o, [](Options &o) {
        return json{{"preceq", preceq_delta(read_vec_list(load(o.delta)), read_vec(load(o.xi1)),
                                            read_vec(load(o.xi2)))}};
    });
    c->add_option("--delta", o.delta)->required();
    c->add_option("--xi1", o.xi1)->required();
    c->add_option("--xi2", o.xi2)->required();

    c = command(v, "lub", "Least upper bound of an equivalence class", r, o, [](Options &o) {
        return json{{"lub", write_vec(class_lub(read_vec_list(load(o.delta)), read_vec_list(load(o.omega))))}};
    });
    c->add_option("--delta", o.delta)->required();
    c->add_option("--omega", o.omega)->required();
}

Pairing read_pairing(const std::string &arg)
{
    if (arg.empty()) {
        return scalar_pairing();
    }
    const json j = load(arg);
    Pairing p;
    for (const auto &row : j) {
        p.push_back(read_vec_list(row));
    }
    return p;
}

void register_series(CLI::App &app, json &r, Options &o)
{
    CLI::App *v = app.add_subcommand("series", "Exponential polynomial series");
    v->require_subcommand(1);
    auto *c = command(v, "exponents", "Exponent set and leading exponents", r, o, [](Options &o) {
        const auto e = series_exponents(read_series(load(o.series)));
        return json{{"exponents", write_vec_list(e.exponents)}, {"leading", write_vec_list(e.leading)}};
    });
    c->add_option("--series", o.series)->required();

    c = command(v, "diffop", "Termwise application of u in S(a)", r, o, [](Options &o) {
        return write_series(series_diffop(read_poly(load(o.op)), read_series(load(o.series))));
    });
    c->add_option("--op", o.op, "Polynomial in dim(a) variables")->required();
    c->add_option("--series", o.series)->required();

    c = command(v, "mul", "Formal product", r, o, [](Options &o) {
        return write_series(
            series_mul(read_series(load(o.series)), read_series(load(o.series2)), read_pairing(o.pairing)));
    });
    c->add_option("--series", o.series)->required();
    c->add_option("--series2", o.series2)->required();
    c->add_option("--pairing", o.pairing, "pairing[i][j] = image of (e_i, e_j)");

    c = command(v, "split", "Split along inequivalent leaders", r, o, [](Options &o) {
        json out = json::array();
        for (const auto &[s, part] : series_split(read_series(load(o.series)), read_vec_list(load(o.leaders)))) {
            out.push_back({{"leader", write_vec(s)}, {"series", write_series(part)}});
        }
        return json{{"parts", out}};
    });
    c->add_option("--series", o.series)->required();
    c->add_option("--leaders", o.leaders)->required();

    c = command(v, "restrict", "Rearrangement along a wall", r, o, [](Options &o) {
        const ExpPolySeries f = read_series(load(o.series));
        const Matrix gram = o.gram.empty() ? identity_matrix(f.dim()) : read_matrix(load(o.gram));
        const auto q = simple_indices(o.delta_q);
        if (o.delta_q2.empty()) {
            return write_wall(series_restrict(f, q, gram));
        }
        return write_wall(series_restrict_nested(f, q, simple_indices(o.delta_q2), gram));
    });
    c->add_option("--series", o.series)->required();
    c->add_option("--deltaQ", o.delta_q, "Indices into delta")->delimiter(',');
    c->add_option("--then", o.delta_q2, "Larger wall for a nested restriction")->delimiter(',');
    c->add_option("--gram", o.gram);
}

void register_verify(CLI::App &app, json &r, Options &o)
{
    CLI::App *v = app.add_subcommand("verify", "Run the acceptance suite");
    v->add_option("--suite", o.suite, "all, or a criterion number 1-10");
    v->add_option("--seed", o.seed);
    v->callback([&r, &o] {
        lc::verify::SuiteOptions opts;
        opts.seed = o.seed;
        std::vector<lc::verify::CriterionResult> results;
        if (o.suite == "all") {
            results = lc::verify::run_all(opts);
        } else {
            int id = 0;
            try {
                id = std::stoi(o.suite);
            } catch (const std::exception &) {
                throw parse_error("unknown suite '" + o.suite + "'");
            }
            if (id < 1 || id > lc::verify::criterion_count) {
                throw parse_error("unknown suite '" + o.suite + "'");
            }
            results.push_back(lc::verify::run_criterion(id, opts));
        }
        std::ostringstream table;
        for (const auto &res : results) {
            table << lc::verify::format_line(res) << '\n';
            o.failed = o.failed || !res.passed;
        }
        r = json(table.str());
    });
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Laurent functional calculus, Weyl group combinatorics and exponential series"};
    app.require_subcommand(1);
    json result;
    Options o;
    register_poly(app, result, o);
    register_config(app, result, o);
    register_germ(app, result, o);
    register_laurent(app, result, o);
    register_rootsys(app, result, o);
    register_series(app, result, o);
    register_verify(app, result, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_parse;
    } catch (const precondition_error &e) {
        std::cout << json{{"error", e.code()}, {"detail", e.what()}}.dump(2) << std::endl;
        return exit_precondition;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << std::endl;
        return exit_parse;
    }
    if (result.is_string()) {
        std::cout << result.get<std::string>();
        return o.failed ? exit_precondition : 0;
    }
    std::cout << result.dump(2) << std::endl;
    return 0;
}
