#ifndef LAURENTCALC_JSON_IO_HPP
#define LAURENTCALC_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <laurentcalc/configuration.hpp>
#include <laurentcalc/exp_series.hpp>
#include <laurentcalc/germ.hpp>
#include <laurentcalc/laurent.hpp>
#include <laurentcalc/rational_function.hpp>
#include <laurentcalc/rootsys.hpp>

namespace lc::io
{

using nlohmann::json;

// All readers throw lc::parse_error on malformed input.
json write_scalar(const Scalar &z);
Scalar read_scalar(const json &j);
json write_vec(const Vec &v);
Vec read_vec(const json &j);
json write_matrix(const Matrix &m);
Matrix read_matrix(const json &j);

json write_poly(const Polynomial &p);
Polynomial read_poly(const json &j);
json write_diffop(const DiffOp &u);
DiffOp read_diffop(const json &j);

// "inner_product" member if present, identity of size dim otherwise.
InnerProduct read_inner_product(const json &j, std::size_t dim);

json write_hyperplane(const Hyperplane &h);
Hyperplane read_hyperplane(const json &j);
json write_config(const Configuration &cfg);
Configuration read_config(const json &j);
XSubspace read_subspace(const json &j, const InnerProduct &ip);

json write_rationalfn(const RationalFn &f);
// Denominator entries reference a hyperplane inline, or by index into `hyperplanes`.
RationalFn read_rationalfn(const json &j, const std::vector<Hyperplane> &hyperplanes = {});

json write_germ(const Germ &g);
// Either an explicit germ, or {"rational": f, "at": a, "order": k}.
Germ read_germ(const json &j);

json write_functional(const LaurentFunctional &l);
LaurentFunctional read_functional(const json &j);

json write_pole(const PoleIndex &d);
PoleIndex read_pole(const json &j, std::size_t size);

// A built-in name or {"dim", "roots", "positive", "inner_product"}.
RootSystem read_rootsys(const json &j);

json write_series(const ExpPolySeries &f);
ExpPolySeries read_series(const json &j);
json write_wall(const WallExpansion &e);

} // namespace lc::io

#endif
