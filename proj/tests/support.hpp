#ifndef EULERCC_TESTS_SUPPORT_HPP
#define EULERCC_TESTS_SUPPORT_HPP

#include <memory>

#include <eulercc/eulercc.hpp>

namespace eulercc::testing {

inline RatVector v(std::initializer_list<int> xs)
{
    RatVector out;
    for (int x : xs)
        out.emplace_back(x);
    return out;
}

/// Closed complex from vertices and maximal simplices.
inline ComplexPtr make(std::size_t dim, std::vector<RatVector> verts, std::vector<Simplex> tops)
{
    return std::make_shared<const EmbeddedComplex>(dim, std::move(verts), std::move(tops), true);
}

inline ComplexPtr shared(EmbeddedComplex k)
{
    return std::make_shared<const EmbeddedComplex>(std::move(k));
}

inline ComplexPtr path3()
{
    return make(1, {v({0}), v({1}), v({2})}, {{0, 1}, {1, 2}});
}

inline ComplexPtr solid_triangle()
{
    return make(2, {v({0, 0}), v({4, 1}), v({1, 3})}, {{0, 1, 2}});
}

inline ComplexPtr circle()
{
    return make(2, {v({0, 0}), v({3, 1}), v({-1, 4})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline ComplexPtr cone3()
{
    return make(2, {v({0, 0}), v({-2, -2}), v({1, -3}), v({3, -1})}, {{0, 1}, {0, 2}, {0, 3}});
}

/// Alternating simplex count over a region.
inline std::int64_t chi(const EmbeddedComplex& k, const Subcomplex& region)
{
    std::int64_t s = 0;
    for (auto id : region)
        s += k.dim(id) % 2 == 0 ? 1 : -1;
    return s;
}

inline std::int64_t betti_chi(const EmbeddedComplex& k, const Subcomplex& region)
{
    std::int64_t s = 0, sg = 1;
    for (auto b : betti_oracle(k, region)) {
        s += sg * static_cast<std::int64_t>(b);
        sg = -sg;
    }
    return s;
}

inline std::vector<Fixture> corpus(std::size_t randoms = 6)
{
    auto out = builtin_fixtures();
    for (std::size_t i = 0; i < randoms; ++i)
        out.push_back(random_fixture(1000 + i, 1 + i % 3, 40));
    return out;
}

} // namespace eulercc::testing

#endif // EULERCC_TESTS_SUPPORT_HPP
