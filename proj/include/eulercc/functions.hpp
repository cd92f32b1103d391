#ifndef EULERCC_FUNCTIONS_HPP
#define EULERCC_FUNCTIONS_HPP

#include "linalg.hpp"

namespace eulercc {

/// y |-> linear . y + constant
struct AffineFunction
{
    RatVector linear;
    Rational constant = 0;

    std::size_t dim() const noexcept { return linear.size(); }
    Rational operator()(const RatVector& y) const { return dot(linear, y) + constant; }
};

/// y |-> linear . y + constant + y^T quad y. The gradient is linear + 2 quad y.
struct QuadAffineFunction
{
    RatVector linear;
    Rational constant = 0;
    RatSymMatrix quad;

    QuadAffineFunction() = default;

    QuadAffineFunction(RatVector lin, Rational c, RatSymMatrix q)
        : linear(std::move(lin)), constant(std::move(c)), quad(std::move(q))
    {
        if (quad.dim() != linear.size())
            throw InputError("quadratic part dimension does not match the linear part");
    }

    // NOLINTNEXTLINE(google-explicit-constructor)
    QuadAffineFunction(const AffineFunction& f)
        : linear(f.linear), constant(f.constant), quad(f.linear.size())
    {
    }

    /// |y - center|^2
    static QuadAffineFunction squared_distance(const RatVector& center)
    {
        const Rational c = dot(center, center);
        return QuadAffineFunction(Rational(-2) * center, c, RatSymMatrix::identity(center.size()));
    }

    std::size_t dim() const noexcept { return linear.size(); }

    Rational operator()(const RatVector& y) const
    {
        return dot(linear, y) + constant + dot(y, quad.apply(y));
    }

    RatVector gradient(const RatVector& y) const
    {
        return linear + Rational(2) * quad.apply(y);
    }

    RatSymMatrix hessian() const
    {
        RatMatrix h = quad.entries();
        for (auto& row : h)
            for (auto& x : row)
                x *= 2;
        return RatSymMatrix(std::move(h));
    }

    bool is_affine() const { return quad.is_zero(); }

    /// this + s * other
    QuadAffineFunction plus_scaled(const Rational& s, const QuadAffineFunction& other) const
    {
        if (other.dim() != dim())
            throw InputError("adding functions of different dimensions");
        RatMatrix q = quad.entries();
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                q[i][j] += s * other.quad(i, j);
        return QuadAffineFunction(linear + s * other.linear, constant + s * other.constant,
                                  RatSymMatrix(std::move(q)));
    }
};

} // namespace eulercc

#endif // EULERCC_FUNCTIONS_HPP
