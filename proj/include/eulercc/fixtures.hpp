#ifndef EULERCC_FIXTURES_HPP
#define EULERCC_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "constructible.hpp"

namespace eulercc {

/// An expected integer with where it came from: "TRIVIAL" or "DERIVED", plus the oracle used.
struct ExpectedValue
{
    std::string operation;
    std::string function;
    std::int64_t value = 0;
    std::string provenance;
    std::string oracle;
};

/// An (α, f) pair meant for the intersection verifier.
struct TheoremCase
{
    std::string function;
    std::string morse_input;
    std::int64_t expected = 0;
};

struct Fixture
{
    std::string name;
    ComplexPtr complex;
    std::vector<std::pair<std::string, ConstructibleFunction>> functions;
    std::vector<std::pair<std::string, AffineFunction>> morse_inputs;
    std::vector<ExpectedValue> expected;
    std::vector<TheoremCase> theorem_cases;

    const ConstructibleFunction& function(const std::string& key) const
    {
        for (const auto& [n, f] : functions)
            if (n == key)
                return f;
        throw InputError("fixture " + name + " has no function " + key);
    }

    const AffineFunction& morse_input(const std::string& key) const
    {
        for (const auto& [n, f] : morse_inputs)
            if (n == key)
                return f;
        throw InputError("fixture " + name + " has no morse input " + key);
    }
};

namespace detail {

inline RatVector ints(std::initializer_list<long> xs)
{
    RatVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline ConstructibleFunction random_values(const ComplexPtr& k, std::uint64_t seed)
{
    RationalSampler rng(seed);
    std::vector<std::int64_t> v(k->size());
    for (auto& x : v)
        x = rng.next_int(-3, 3);
    return {k, std::move(v)};
}

/// The standard α families: constant, indicator of the first top cell, dual of 1, random.
inline void add_standard_functions(Fixture& fx, std::uint64_t seed)
{
    const auto& k = fx.complex;
    const auto one = ConstructibleFunction::constant(k, 1);
    const SimplexId top = k->size() - 1;
    fx.functions.emplace_back("one", one);
    fx.functions.emplace_back("cell", ConstructibleFunction::indicator(k, {top}));
    fx.functions.emplace_back("dual_one", dual(one));
    fx.functions.emplace_back("random", random_values(k, seed));
    fx.expected.push_back({"euler_integral", "cell", parity_sign(k->dim(top)), "TRIVIAL",
                           "chi_c of an open cell"});
}

inline Fixture make_fixture(std::string name, std::size_t dim, std::vector<RatVector> verts,
                            std::vector<Simplex> simplices, std::uint64_t seed)
{
    Fixture fx;
    fx.name = std::move(name);
    fx.complex = std::make_shared<const EmbeddedComplex>(dim, std::move(verts),
                                                         std::move(simplices), true);
    add_standard_functions(fx, seed);
    return fx;
}

} // namespace detail

/**
 * Curated complexes. Expected Euler integrals of the constant function are
 * alternating simplex counts, cross-checked in the tests by betti_oracle.
 */
inline std::vector<Fixture> builtin_fixtures()
{
    using detail::ints;
    std::vector<Fixture> out;

    {
        auto fx = detail::make_fixture("interval", 1, {ints({0}), ints({1}), ints({2})},
                                       {{0, 1}, {1, 2}}, 101);
        fx.expected.push_back({"euler_integral", "one", 1, "TRIVIAL", "contractible"});
        fx.expected.push_back({"euler_integral", "dual_one", 1, "DERIVED", "duality preserves the integral: 0 + 0 - 1 + 1 + 1"});
        fx.morse_inputs.emplace_back("coordinate", AffineFunction{ints({1}), Rational(0)});
        fx.theorem_cases.push_back({"one", "coordinate", 1});
        out.push_back(std::move(fx));
    }
    {
        // bottom vertex at height 0, the others strictly above
        auto fx = detail::make_fixture("circle", 2, {ints({0, 0}), ints({3, 1}), ints({-1, 4})},
                                       {{0, 1}, {1, 2}, {0, 2}}, 102);
        fx.expected.push_back({"euler_integral", "one", 0, "TRIVIAL", "chi of a circle"});
        fx.morse_inputs.emplace_back("height", AffineFunction{ints({0, 1}), Rational(0)});
        fx.theorem_cases.push_back({"one", "height", 1});
        out.push_back(std::move(fx));
    }
    {
        auto fx = detail::make_fixture("solid_triangle", 2,
                                       {ints({0, 0}), ints({4, 1}), ints({1, 3})}, {{0, 1, 2}}, 103);
        fx.expected.push_back({"euler_integral", "one", 1, "TRIVIAL", "contractible"});
        fx.morse_inputs.emplace_back("height", AffineFunction{ints({0, 1}), Rational(0)});
        fx.theorem_cases.push_back({"one", "height", 1});
        out.push_back(std::move(fx));
    }
    {
        auto fx = detail::make_fixture("y_graph", 2,
                                       {ints({0, 0}), ints({3, 1}), ints({-2, 1}), ints({1, -3})},
                                       {{0, 1}, {0, 2}, {0, 3}}, 104);
        fx.expected.push_back({"euler_integral", "one", 1, "TRIVIAL", "contractible"});
        fx.morse_inputs.emplace_back("height", AffineFunction{ints({0, 1}), Rational(3)});
        fx.theorem_cases.push_back({"one", "height", 1});
        out.push_back(std::move(fx));
    }
    {
        // apex at height 0, base points below
        auto fx = detail::make_fixture("cone3", 2,
                                       {ints({0, 0}), ints({-2, -2}), ints({1, -3}), ints({3, -1})},
                                       {{0, 1}, {0, 2}, {0, 3}}, 105);
        fx.expected.push_back({"euler_integral", "one", 1, "TRIVIAL", "contractible"});
        fx.morse_inputs.emplace_back("height", AffineFunction{ints({0, 1}), Rational(0)});
        fx.theorem_cases.push_back({"one", "height", -2});
        out.push_back(std::move(fx));
    }
    {
        auto fx = detail::make_fixture(
            "suspension3", 2,
            {ints({0, 3}), ints({0, -3}), ints({-2, 0}), ints({1, 0}), ints({3, 0})},
            {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, 106);
        fx.expected.push_back({"euler_integral", "one", -1, "DERIVED", "V - E = 5 - 6, betti_oracle"});
        fx.morse_inputs.emplace_back("height_top", AffineFunction{ints({0, 1}), Rational(-3)});
        fx.morse_inputs.emplace_back("depth_bottom", AffineFunction{ints({0, -1}), Rational(-3)});
        fx.theorem_cases.push_back({"one", "height_top", -2});
        fx.theorem_cases.push_back({"one", "depth_bottom", -2});
        out.push_back(std::move(fx));
    }
    {
        auto fx = detail::make_fixture(
            "sphere", 3, {ints({0, 0, 0}), ints({4, 1, 0}), ints({1, 3, 1}), ints({1, 1, 4})},
            {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 107);
        fx.expected.push_back({"euler_integral", "one", 2, "TRIVIAL", "chi of a 2-sphere"});
        // vanishes on the whole edge {0, 1}
        fx.morse_inputs.emplace_back("height", AffineFunction{ints({0, 0, 1}), Rational(0)});
        fx.theorem_cases.push_back({"one", "height", 1});
        out.push_back(std::move(fx));
    }
    {
        // three triangles glued along the edge {0, 1}
        auto fx = detail::make_fixture(
            "book3", 3,
            {ints({0, 0, 0}), ints({0, 0, 3}), ints({2, 0, 1}), ints({-1, 2, 2}), ints({-1, -2, 1})},
            {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, 108);
        fx.expected.push_back({"euler_integral", "one", 1, "DERIVED", "V - E + F = 5 - 7 + 3, betti_oracle"});
        fx.morse_inputs.emplace_back("height", AffineFunction{ints({0, 0, 1}), Rational(0)});
        fx.theorem_cases.push_back({"one", "height", 1});
        out.push_back(std::move(fx));
    }
    {
        auto fx = detail::make_fixture(
            "solid_tetrahedron", 3,
            {ints({0, 0, 0}), ints({3, 0, 1}), ints({0, 3, 1}), ints({1, 1, 4})}, {{0, 1, 2, 3}}, 109);
        fx.expected.push_back({"euler_integral", "one", 1, "TRIVIAL", "contractible"});
        fx.morse_inputs.emplace_back("height", AffineFunction{ints({0, 0, 1}), Rational(0)});
        fx.theorem_cases.push_back({"one", "height", 1});
        out.push_back(std::move(fx));
    }
    return out;
}

inline Fixture builtin_fixture(const std::string& name)
{
    for (auto& fx : builtin_fixtures())
        if (fx.name == name)
            return fx;
    throw InputError("unknown fixture " + name);
}

/**
 * Random closed subcomplex of an iterated barycentric subdivision of the
 * simplex conv(0, 4e_1, ..., 4e_d), with random values in [-3, 3].
 */
inline Fixture random_fixture(std::uint64_t seed, std::size_t ambient_dim, std::size_t size_budget)
{
    if (ambient_dim < 1 || ambient_dim > 3)
        throw InputError("random_fixture: ambient dimension must be 1, 2 or 3");
    if (size_budget < 1)
        throw InputError("random_fixture: empty budget");
    std::vector<RatVector> verts{zero_vector(ambient_dim)};
    Simplex top{0};
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        verts.push_back(Rational(4) * unit_vector(ambient_dim, i));
        top.push_back(i + 1);
    }
    auto base = std::make_shared<const EmbeddedComplex>(ambient_dim, verts, std::vector<Simplex>{top}, true);
    ComplexPtr k = base;
    for (int level = 0; level < 3; ++level) {
        if (k->size() * (ambient_dim + 1) > 3 * size_budget)
            break;
        k = barycentric_subdivide(*k).complex;
    }

    RationalSampler rng(seed);
    std::vector<SimplexId> tops;
    for (SimplexId i = 0; i < k->size(); ++i)
        if (k->coface_ids(i).empty())
            tops.push_back(i);
    for (std::size_t i = tops.size(); i > 1; --i)
        std::swap(tops[i - 1], tops[static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(i) - 1))]);
    const auto wanted = static_cast<std::size_t>(rng.next_int(1, static_cast<std::int64_t>(tops.size())));
    Subcomplex chosen;
    std::size_t taken = 0;
    for (auto t : tops) {
        if (taken == wanted)
            break;
        Subcomplex next = chosen;
        next.insert(t);
        next = closure(*k, next);
        if (next.size() > size_budget)
            continue;
        chosen = std::move(next);
        ++taken;
    }
    if (chosen.empty())
        chosen = {0}; // a single vertex always fits

    Fixture fx;
    fx.name = "random_" + std::to_string(ambient_dim) + "d_" + std::to_string(seed);
    fx.complex = extract(*k, chosen).complex;
    fx.functions.emplace_back("one", ConstructibleFunction::constant(fx.complex, 1));
    fx.functions.emplace_back("random", detail::random_values(fx.complex, seed ^ 0x9e3779b97f4a7c15ULL));
    return fx;
}

} // namespace eulercc

#endif // EULERCC_FIXTURES_HPP
