#ifndef LAURENTCALC_GERM_HPP
#define LAURENTCALC_GERM_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <laurentcalc/diffop.hpp>
#include <laurentcalc/rational_function.hpp>

namespace lc
{

// Pairwise non-proportional real roots in a space with inner product.
class RootFrame
{
public:
    RootFrame() = default;
    RootFrame(InnerProduct ip, std::vector<Vec> roots);

    const InnerProduct &ip() const
    {
        return m_ip;
    }
    const std::vector<Vec> &roots() const
    {
        return m_roots;
    }
    std::size_t size() const
    {
        return m_roots.size();
    }
    std::size_t dim() const
    {
        return m_ip.dim();
    }
    // w -> <xi_i, w>
    Polynomial form(std::size_t i) const;
    // pi_{0,d}(w)
    Polynomial pi(const PoleIndex &d) const;
    // Index j and factor c with xi = c roots[j].
    std::optional<std::pair<std::size_t, Scalar>> find(const Vec &xi) const;
    // This frame followed by the roots of `other` not proportional to any of ours.
    RootFrame merged(const RootFrame &other) const;
    PoleIndex zero_pole() const
    {
        return PoleIndex(m_roots.size(), 0);
    }

private:
    InnerProduct m_ip;
    std::vector<Vec> m_roots;
};

// pi_{a,d}^{-1} times a jet of order N at a; the jet is a polynomial in w = z - a
// known modulo terms of total degree > N.
class Germ
{
public:
    Germ() = default;
    Germ(Point base, RootFrame frame, PoleIndex pole, const Polynomial &jet, int order);

    const Point &base() const
    {
        return m_base;
    }
    const RootFrame &frame() const
    {
        return m_frame;
    }
    const PoleIndex &pole() const
    {
        return m_pole;
    }
    const Polynomial &jet() const
    {
        return m_jet;
    }
    int order() const
    {
        return m_order;
    }
    std::size_t dim() const
    {
        return m_frame.dim();
    }
    bool is_holomorphic() const
    {
        return total(m_pole) == 0;
    }
    // Same germ expressed over `target`, which must contain a proportional copy of every pole root.
    Germ reframe(const RootFrame &target) const;

private:
    Point m_base;
    RootFrame m_frame;
    PoleIndex m_pole;
    Polynomial m_jet;
    int m_order = 0;
};

Germ germ_normalize(const Germ &g);
// Output order: min of the input orders.
Germ germ_mul(const Germ &g1, const Germ &g2);
// Output order: N - 1 + |T| before normalization, T the roots with positive pole.
Germ germ_diff(const Vec &v, const Germ &g);
// Poles along the denominator hyperplanes through a, in denominator order.
Germ rationalfn_germ_at(const RationalFn &f, const Point &a, int order);
Germ rationalfn_germ_at(const RationalFn &f, const Point &a, int order, const RootFrame &frame);
// Germ of z0 -> g(iota z0) at a0, where g.base() = iota a0, V0 carrying ip0.
Germ germ_pullback(const Germ &g, const Matrix &iota, const InnerProduct &ip0, const Point &a0);
// Equality of represented germs up to the smaller known order.
bool germ_equivalent(const Germ &g1, const Germ &g2);

} // namespace lc

#endif
