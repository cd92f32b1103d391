#ifndef EULERCC_CONSTRUCTIBLE_HPP
#define EULERCC_CONSTRUCTIBLE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "complex.hpp"
#include "functions.hpp"

namespace eulercc {

/// Integer value on every open simplex of a fixed complex.
class ConstructibleFunction
{
public:
    ConstructibleFunction() = default;

    explicit ConstructibleFunction(ComplexPtr complex)
        : complex_(std::move(complex)), values_(complex_->size(), 0)
    {
    }

    ConstructibleFunction(ComplexPtr complex, std::vector<std::int64_t> values)
        : complex_(std::move(complex)), values_(std::move(values))
    {
        if (values_.size() != complex_->size())
            throw InputError("constructible function has " + std::to_string(values_.size()) +
                             " values for " + std::to_string(complex_->size()) + " simplices");
    }

    static ConstructibleFunction constant(ComplexPtr complex, std::int64_t c)
    {
        const auto n = complex->size();
        return {std::move(complex), std::vector<std::int64_t>(n, c)};
    }

    /// 1 on the given open simplices, 0 elsewhere.
    static ConstructibleFunction indicator(ComplexPtr complex, const Subcomplex& cells)
    {
        ConstructibleFunction a(std::move(complex));
        for (auto id : cells)
            a.values_.at(id) = 1;
        return a;
    }

    const ComplexPtr& complex_ptr() const noexcept { return complex_; }
    const EmbeddedComplex& complex() const { return *complex_; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    std::int64_t operator()(SimplexId id) const { return values_.at(id); }
    std::int64_t& operator[](SimplexId id) { return values_.at(id); }

    bool is_zero() const
    {
        for (auto v : values_)
            if (v != 0)
                return false;
        return true;
    }

    Subcomplex support() const
    {
        Subcomplex s;
        for (SimplexId i = 0; i < values_.size(); ++i)
            if (values_[i] != 0)
                s.insert(s.end(), i);
        return s;
    }

    friend ConstructibleFunction operator+(const ConstructibleFunction& a,
                                           const ConstructibleFunction& b)
    {
        a.require_same(b);
        ConstructibleFunction r = a;
        for (std::size_t i = 0; i < r.values_.size(); ++i)
            r.values_[i] += b.values_[i];
        return r;
    }

    friend ConstructibleFunction operator-(const ConstructibleFunction& a,
                                           const ConstructibleFunction& b)
    {
        return a + (-1) * b;
    }

    friend ConstructibleFunction operator*(std::int64_t s, const ConstructibleFunction& a)
    {
        ConstructibleFunction r = a;
        for (auto& v : r.values_)
            v *= s;
        return r;
    }

    friend bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b)
    {
        return a.complex_ == b.complex_ && a.values_ == b.values_;
    }

private:
    void require_same(const ConstructibleFunction& b) const
    {
        if (complex_ != b.complex_)
            throw InputError("constructible functions live on different complexes");
    }

    ComplexPtr complex_;
    std::vector<std::int64_t> values_;
};

/// Pull α back to a subdivision: each new cell takes the value of its carrier.
inline ConstructibleFunction transport(const ConstructibleFunction& a, const Subdivision& sub)
{
    if (sub.ancestry.size() != sub.complex->size())
        throw InputError("transport: ancestry does not match the subdivision");
    std::vector<std::int64_t> v(sub.complex->size());
    for (SimplexId i = 0; i < v.size(); ++i)
        v[i] = a(sub.ancestry[i]);
    return {sub.complex, std::move(v)};
}

/// Restrict α to an extracted subcomplex.
inline ConstructibleFunction transport(const ConstructibleFunction& a, const ExtractedComplex& e)
{
    std::vector<std::int64_t> v(e.complex->size());
    for (SimplexId i = 0; i < v.size(); ++i)
        v[i] = a(e.origin[i]);
    return {e.complex, std::move(v)};
}

inline std::int64_t parity_sign(std::size_t d)
{
    return d % 2 == 0 ? 1 : -1;
}

inline std::int64_t euler_integral(const ConstructibleFunction& a)
{
    std::int64_t s = 0;
    for (SimplexId i = 0; i < a.values().size(); ++i)
        s += a(i) * parity_sign(a.complex().dim(i));
    return s;
}

inline std::int64_t integral_over(const ConstructibleFunction& a, const Subcomplex& region)
{
    require_subcomplex(a.complex(), region, "integral_over");
    std::int64_t s = 0;
    for (auto id : region)
        s += a(id) * parity_sign(a.complex().dim(id));
    return s;
}

/// Euler integral of α over region ∩ {f = c}, summed piece by piece.
inline std::int64_t slice_integral(const ConstructibleFunction& a, const Subcomplex& region,
                                   const AffineFunction& f, const Rational& c)
{
    const auto& k = a.complex();
    require_subcomplex(k, region, "slice_integral");
    if (f.dim() != k.ambient_dim())
        throw InputError("slice_integral: function dimension mismatch");
    for (auto id : region) {
        const Simplex& s = k.simplex(id);
        if (s.size() < 2)
            continue;
        const Rational f0 = f(k.vertex(s[0]));
        bool constant = true;
        bool hits = false;
        for (auto v : s) {
            const Rational fv = f(k.vertex(v));
            constant &= fv == f0;
            hits |= fv == c;
        }
        if (!constant && hits)
            throw UnstableLevelError("level " + to_string(c) + " passes through a vertex of {" +
                                     simplex_key(s) + "}, on which f is not constant");
    }
    std::int64_t total = 0;
    for (const auto& p : slice_pieces(k, region, f, c))
        if (p.nonempty)
            total += a(p.face.id) * (p.piece_dim % 2 == 0 ? 1 : -1);
    return total;
}

inline bool is_conormal(const StratumRef& s, const RatVector& xi)
{
    for (const auto& d : s.direction_basis)
        if (dot(xi, d) != 0)
            return false;
    return true;
}

inline void require_conormal(const StratumRef& s, const RatVector& xi, const char* where)
{
    if (!s.barycenter.empty() && xi.size() != s.barycenter.size())
        throw InputError(std::string(where) + ": covector has wrong dimension");
    if (!is_conormal(s, xi))
        throw InputError(std::string(where) + ": covector is not conormal to {" +
                         simplex_key(s.simplex) + "}");
}

/**
 * Euler integral of α over the lower halflink of S in direction ξ: the slice
 * {ξ(y - b) = -ε} of cl(star S) ∩ N, where N is the normal slice through
 * the barycenter b, split into relatively open convex pieces. ε is half the
 * smallest nonzero |ξ(w - b)| over vertices w of the polytopes cl τ ∩ N.
 */
inline std::int64_t halflink_integral(const ConstructibleFunction& a, const StratumRef& s,
                                      const RatVector& xi)
{
    const auto& k = a.complex();
    require_conormal(s, xi, "halflink_integral");
    const auto star = k.star_vertices(s.id);
    for (auto p : star)
        if (dot(xi, k.vertex(p) - s.barycenter) == 0)
            throw DegeneracyError("covector vanishes on star vertex " + std::to_string(p) +
                                  " of {" + simplex_key(s.simplex) + "}");
    Subcomplex open{s.id};
    open.insert(k.coface_ids(s.id).begin(), k.coface_ids(s.id).end());
    const Subcomplex faces = closure(k, open);

    // Barycentric variables over a face, constrained to N.
    auto slice_system = [&](const Simplex& f) {
        ConstraintSystem sys;
        sys.dim = f.size();
        sys.equalities.push_back({RatVector(f.size(), Rational(1)), Rational(1)});
        for (const auto& d : s.direction_basis) {
            LinearEquation e{zero_vector(f.size()), dot(d, s.barycenter)};
            for (std::size_t i = 0; i < f.size(); ++i)
                e.a[i] = dot(d, k.vertex(f[i]));
            sys.equalities.push_back(std::move(e));
        }
        return sys;
    };

    std::optional<Rational> min_positive;
    for (auto id : faces) {
        const Simplex& f = k.simplex(id);
        auto sol = solve_affine(slice_system(f).equalities, f.size());
        if (!sol || sol->dim() != 0)
            continue;
        if (!std::all_of(sol->basepoint.begin(), sol->basepoint.end(),
                         [](const Rational& w) { return w > 0; }))
            continue;
        RatVector w = zero_vector(k.ambient_dim());
        for (std::size_t i = 0; i < f.size(); ++i)
            w = w + sol->basepoint[i] * k.vertex(f[i]);
        Rational h = abs(dot(xi, w - s.barycenter));
        if (h > 0 && (!min_positive || h < *min_positive))
            min_positive = h;
    }
    if (!min_positive)
        return 0; // the tube is the single point b
    const Rational eps = *min_positive / 2;

    // A face F of the tube shrunk radially towards b lies in the open simplex
    // spanned by F and S, so its piece carries that value of α.
    auto germ_value = [&](const Simplex& f) {
        Simplex j = f;
        j.insert(j.end(), s.simplex.begin(), s.simplex.end());
        std::sort(j.begin(), j.end());
        j.erase(std::unique(j.begin(), j.end()), j.end());
        return a(k.id_of(j));
    };
    std::int64_t total = 0;
    for (auto id : faces) {
        const Simplex& f = k.simplex(id);
        const std::int64_t value = germ_value(f);
        if (value == 0)
            continue;
        ConstraintSystem sys = slice_system(f);
        LinearEquation level{zero_vector(f.size()), dot(xi, s.barycenter) - eps};
        for (std::size_t i = 0; i < f.size(); ++i)
            level.a[i] = dot(xi, k.vertex(f[i]));
        sys.equalities.push_back(std::move(level));
        for (std::size_t i = 0; i < f.size(); ++i)
            sys.strict.push_back({unit_vector(f.size(), i), Rational(0)});
        const auto res = strict_feasibility(sys);
        if (res.feasible)
            total += value * (res.dim % 2 == 0 ? 1 : -1);
    }
    return total;
}

/// (Dα)(σ) = Σ_{τ ⊇ σ} (-1)^{dim τ} α(τ)
inline ConstructibleFunction dual(const ConstructibleFunction& a)
{
    const auto& k = a.complex();
    ConstructibleFunction d(a.complex_ptr());
    for (SimplexId i = 0; i < k.size(); ++i) {
        std::int64_t s = a(i) * parity_sign(k.dim(i));
        for (auto c : k.coface_ids(i))
            s += a(c) * parity_sign(k.dim(c));
        d[i] = s;
    }
    return d;
}

/// Side of {g = δ} on which each open simplex lies; requires no simplex to straddle the level.
inline std::vector<int> level_sides(const EmbeddedComplex& k, const AffineFunction& g,
                                    const Rational& delta)
{
    if (g.dim() != k.ambient_dim())
        throw InputError("level function dimension mismatch");
    std::vector<int> vs(k.vertex_count());
    for (VertexId v = 0; v < vs.size(); ++v)
        vs[v] = sign(g(k.vertex(v)) - delta);
    std::vector<int> out(k.size());
    for (SimplexId i = 0; i < k.size(); ++i) {
        bool neg = false, pos = false;
        for (auto v : k.simplex(i)) {
            neg |= vs[v] < 0;
            pos |= vs[v] > 0;
        }
        if (neg && pos)
            throw InputError("simplex {" + simplex_key(k.simplex(i)) +
                             "} crosses the level; subdivide along the hyperplane first");
        out[i] = neg ? -1 : (pos ? 1 : 0);
    }
    return out;
}

/// α on {g < δ}, zero elsewhere.
inline ConstructibleFunction jshriek_extend(const ConstructibleFunction& a, const AffineFunction& g,
                                            const Rational& delta)
{
    const auto sides = level_sides(a.complex(), g, delta);
    ConstructibleFunction r = a;
    for (SimplexId i = 0; i < sides.size(); ++i)
        if (sides[i] >= 0)
            r[i] = 0;
    return r;
}

/// D(j_! D α) for the open side {g < δ}.
inline ConstructibleFunction jstar_extend(const ConstructibleFunction& a, const AffineFunction& g,
                                          const Rational& delta)
{
    return dual(jshriek_extend(dual(a), g, delta));
}

/// α on the cells inside {g = δ}.
inline ConstructibleFunction restrict_to_level(const ConstructibleFunction& a,
                                               const AffineFunction& g, const Rational& delta)
{
    const auto sides = level_sides(a.complex(), g, delta);
    ConstructibleFunction r = a;
    for (SimplexId i = 0; i < sides.size(); ++i)
        if (sides[i] != 0)
            r[i] = 0;
    return r;
}

inline AffineFunction negated(const AffineFunction& g)
{
    return {-g.linear, -g.constant};
}

} // namespace eulercc

#endif // EULERCC_CONSTRUCTIBLE_HPP
