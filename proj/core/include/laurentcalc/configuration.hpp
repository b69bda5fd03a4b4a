#ifndef LAURENTCALC_CONFIGURATION_HPP
#define LAURENTCALC_CONFIGURATION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include <laurentcalc/diffop.hpp>
#include <laurentcalc/linalg.hpp>
#include <laurentcalc/polynomial.hpp>

namespace lc
{

struct CanonicalRoot {
    Vec root;       // primitive integer vector, first nonzero coordinate positive
    Rational factor; // original = factor * root
};

// Requires a nonzero real vector.
CanonicalRoot canonical_root(const Vec &v);
// Returns c with a = c b when a and b are proportional.
std::optional<Scalar> proportionality(const Vec &a, const Vec &b);
// Scalar f with pi_{a,Xp,d} = f pi_{a,X,d} for elementwise proportional root lists.
Scalar pi_rescale_factor(const std::vector<Vec> &roots, const std::vector<Vec> &scaled, const PoleIndex &d);

// H = { z : <normal, z> = offset }, normal canonical.
class Hyperplane
{
public:
    Hyperplane(const Vec &normal, const Scalar &offset);
    // { z : row . z = rhs } for the plain dot product row . z.
    static Hyperplane from_equation(const InnerProduct &ip, const Vec &row, const Scalar &rhs);

    const Vec &normal() const
    {
        return m_normal;
    }
    const Scalar &offset() const
    {
        return m_offset;
    }
    std::size_t dim() const
    {
        return m_normal.size();
    }
    bool is_real() const
    {
        return m_offset.is_real();
    }
    // l_H(z) = <normal, z> - offset
    Polynomial form(const InnerProduct &ip) const;
    Scalar value(const InnerProduct &ip, const Point &z) const;
    bool contains(const InnerProduct &ip, const Point &z) const
    {
        return value(ip, z).is_zero();
    }

    friend bool operator==(const Hyperplane &, const Hyperplane &) = default;
    friend std::strong_ordering operator<=>(const Hyperplane &a, const Hyperplane &b);

private:
    Vec m_normal;
    Scalar m_offset;
};

// Finite X-configuration with multiplicities d(H).
class Configuration
{
public:
    Configuration() = default;
    Configuration(InnerProduct ip, std::vector<Hyperplane> hyperplanes, std::vector<unsigned> multiplicity,
                  std::vector<Vec> x_set = {});

    std::size_t dim() const
    {
        return m_ip.dim();
    }
    const InnerProduct &ip() const
    {
        return m_ip;
    }
    const std::vector<Hyperplane> &hyperplanes() const
    {
        return m_hyperplanes;
    }
    const std::vector<unsigned> &multiplicity() const
    {
        return m_mult;
    }
    const std::vector<Vec> &x_set() const
    {
        return m_x;
    }
    const std::vector<Vec> &x0_set() const
    {
        return m_x0;
    }
    std::optional<std::size_t> index_of(const Hyperplane &h) const;

private:
    InnerProduct m_ip;
    std::vector<Hyperplane> m_hyperplanes;
    std::vector<unsigned> m_mult;
    std::vector<Vec> m_x;
    std::vector<Vec> m_x0;
};

// Nonempty intersection L of X-hyperplanes. Direction coordinates s and
// transversal coordinates t parametrize z = c(L) + B s + N t, with B a basis of
// V_L and N the independent prefix of the defining normals (a basis of V_L^perp).
class XSubspace
{
public:
    XSubspace() = default;
    XSubspace(const InnerProduct &ip, std::vector<Hyperplane> defining);

    const InnerProduct &ip() const
    {
        return m_ip;
    }
    const std::vector<Hyperplane> &defining() const
    {
        return m_defining;
    }
    std::size_t ambient_dim() const
    {
        return m_ip.dim();
    }
    std::size_t dim() const
    {
        return m_directions.size();
    }
    std::size_t codim() const
    {
        return m_perp.size();
    }
    const std::vector<Vec> &direction_basis() const
    {
        return m_directions;
    }
    const std::vector<Vec> &perp_basis() const
    {
        return m_perp;
    }
    const Point &center() const
    {
        return m_center;
    }
    InnerProduct direction_ip() const
    {
        return m_ip.restrict_to(m_directions);
    }
    InnerProduct perp_ip() const
    {
        return m_ip.restrict_to(m_perp);
    }
    Point point_at(const Vec &s) const;
    Vec perp_vector(const Vec &t) const;
    bool contains(const Point &z) const;
    bool in_perp(const Vec &v) const;
    // Coordinates of v in the perp basis, if v lies in V_L^perp.
    std::optional<Vec> perp_coordinates(const Vec &v) const;
    // Coordinates in the direction basis of the orthogonal projection of v onto V_L.
    Vec direction_projection(const Vec &v) const;
    // Matrix with columns B then N.
    Matrix adapted_frame() const;

private:
    InnerProduct m_ip;
    std::vector<Hyperplane> m_defining;
    std::vector<Vec> m_directions;
    std::vector<Vec> m_perp;
    Point m_center;
};

XSubspace subspace_from(const InnerProduct &ip, const std::vector<Hyperplane> &hyperplanes);

struct HyperplanesThrough {
    std::vector<std::size_t> indices; // into cfg.hyperplanes()
    std::vector<Vec> x_of_l;          // X(L) = X intersected with V_L^perp
};
HyperplanesThrough hyperplanes_through(const Configuration &cfg, const XSubspace &l);

// H_L(S) as a configuration on L in direction coordinates; S given in transversal coordinates.
Configuration induced_config(const Configuration &cfg, const XSubspace &l, const std::vector<Vec> &support);

// Product of l_H^{d(H)} over hyperplanes meeting the open ball; d defaults to the multiplicities.
Polynomial pi_omega_d(const Configuration &cfg, const Point &center, const Rational &radius2,
                      const std::optional<std::vector<unsigned>> &d = std::nullopt);

} // namespace lc

#endif
