#ifndef EULERCC_CHARCYCLE_HPP
#define EULERCC_CHARCYCLE_HPP

#include <map>
#include <optional>
#include <vector>

#include "constructible.hpp"

namespace eulercc {

/// Pairing of ξ with the star vertex directions p - b_S.
inline std::vector<Rational> star_pairings(const EmbeddedComplex& k, const StratumRef& s,
                                           const std::vector<VertexId>& star, const RatVector& xi)
{
    std::vector<Rational> out;
    out.reserve(star.size());
    for (auto p : star)
        out.push_back(dot(xi, k.vertex(p) - s.barycenter));
    return out;
}

inline bool is_nondegenerate(const EmbeddedComplex& k, const StratumRef& s, const RatVector& xi)
{
    require_conormal(s, xi, "is_nondegenerate");
    for (const auto& x : star_pairings(k, s, k.star_vertices(s.id), xi))
        if (x == 0)
            return false;
    return true;
}

/// A cell of the star-vertex hyperplane arrangement inside the conormal fiber of S.
struct ConormalChamber
{
    StratumRef stratum;
    std::map<VertexId, int> sign_vector;
    RatVector witness;
};

/// Integer basis of the covectors annihilating dir(S).
inline std::vector<RatVector> conormal_basis(const EmbeddedComplex& k, const StratumRef& s)
{
    return orthogonal_complement(s.direction_basis, k.ambient_dim());
}

namespace detail {

/// Linear forms c ↦ (Σ c_j C_j)·(p - b) in conormal coordinates c.
inline std::vector<RatVector> pairing_forms(const EmbeddedComplex& k, const StratumRef& s,
                                            const std::vector<RatVector>& basis,
                                            const std::vector<VertexId>& star)
{
    std::vector<RatVector> forms;
    for (auto p : star) {
        const RatVector d = k.vertex(p) - s.barycenter;
        RatVector f(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            f[j] = dot(basis[j], d);
        forms.push_back(std::move(f));
    }
    return forms;
}

/// Witness c with sign(form_i · c) = signs[i] for every assigned form, if any.
inline std::optional<RatVector> realize(const std::vector<RatVector>& forms,
                                        const std::vector<int>& signs, std::size_t dim)
{
    ConstraintSystem sys;
    sys.dim = dim;
    for (std::size_t i = 0; i < signs.size(); ++i)
        sys.strict.push_back({Rational(signs[i]) * forms[i], Rational(0)});
    auto r = strict_feasibility(sys);
    if (!r.feasible)
        return std::nullopt;
    return r.witness;
}

inline RatVector combine(const std::vector<RatVector>& basis, const RatVector& c,
                         std::size_t ambient)
{
    RatVector xi = zero_vector(ambient);
    for (std::size_t j = 0; j < basis.size(); ++j)
        xi = xi + c[j] * basis[j];
    return xi;
}

} // namespace detail

/// All realizable sign vectors over the star vertices of S, lexicographic in (-, +).
inline std::vector<ConormalChamber> enumerate_chambers(const EmbeddedComplex& k,
                                                       const StratumRef& s)
{
    const auto star = k.star_vertices(s.id);
    const auto basis = conormal_basis(k, s);
    const auto forms = detail::pairing_forms(k, s, basis, star);

    std::vector<std::pair<std::vector<int>, RatVector>> partial{{{}, zero_vector(basis.size())}};
    for (std::size_t i = 0; i < star.size(); ++i) {
        std::vector<std::pair<std::vector<int>, RatVector>> next;
        for (const auto& [signs, w] : partial)
            for (int sg : {-1, 1}) {
                std::vector<int> ext = signs;
                ext.push_back(sg);
                // cheap check: the previous witness may already realize ext
                if (sg * sign(dot(forms[i], w)) > 0) {
                    next.emplace_back(std::move(ext), w);
                    continue;
                }
                if (auto c = detail::realize(forms, ext, basis.size()))
                    next.emplace_back(std::move(ext), *c);
            }
        partial = std::move(next);
    }

    std::vector<ConormalChamber> out;
    for (const auto& [signs, c] : partial) {
        ConormalChamber ch;
        ch.stratum = s;
        for (std::size_t i = 0; i < star.size(); ++i)
            ch.sign_vector[star[i]] = signs[i];
        ch.witness = primitive(detail::combine(basis, c, k.ambient_dim()));
        out.push_back(std::move(ch));
    }
    return out;
}

/**
 * Lazy view of CC(α). The multiplicity over a chamber is α(S) minus the
 * Euler integral over the lower halflink; the latter is evaluated from the
 * sign vector alone: a coface τ contributes α(τ)(-1)^{dim τ - dim S - 1}
 * exactly when all of its vertices outside S lie on the negative side.
 */
class LagrangianCycleView
{
public:
    explicit LagrangianCycleView(ConstructibleFunction alpha) : alpha_(std::move(alpha)) {}

    const ConstructibleFunction& base() const noexcept { return alpha_; }
    const EmbeddedComplex& complex() const { return alpha_.complex(); }

    /// Multiplicity from a full sign vector over star vertices.
    std::int64_t multiplicity_for_signs(const StratumRef& s,
                                        const std::map<VertexId, int>& signs) const
    {
        const auto& k = complex();
        std::int64_t half = 0;
        for (auto c : k.coface_ids(s.id)) {
            bool lower = true;
            for (auto v : k.simplex(c))
                if (!std::binary_search(s.simplex.begin(), s.simplex.end(), v) &&
                    signs.at(v) > 0) {
                    lower = false;
                    break;
                }
            if (lower)
                half += alpha_(c) * parity_sign(k.dim(c) - s.dim - 1);
        }
        return alpha_(s.id) - half;
    }

    std::int64_t multiplicity(const StratumRef& s, const RatVector& xi) const
    {
        const auto& k = complex();
        require_conormal(s, xi, "multiplicity");
        const auto star = k.star_vertices(s.id);
        const auto pairing = star_pairings(k, s, star, xi);
        std::map<VertexId, int> signs;
        for (std::size_t i = 0; i < star.size(); ++i) {
            if (pairing[i] == 0)
                throw DegeneracyError("covector (" + describe(xi) + ") is degenerate at {" +
                                      simplex_key(s.simplex) + "}: it vanishes on star vertex " +
                                      std::to_string(star[i]));
            signs[star[i]] = sign(pairing[i]);
        }
        return multiplicity_for_signs(s, signs);
    }

    static std::string describe(const RatVector& xi)
    {
        std::string out;
        for (std::size_t i = 0; i < xi.size(); ++i)
            out += (i ? ", " : "") + to_string(xi[i]);
        return out;
    }

private:
    ConstructibleFunction alpha_;
};

inline std::int64_t multiplicity(const LagrangianCycleView& cc, const StratumRef& s,
                                 const RatVector& xi)
{
    return cc.multiplicity(s, xi);
}

/// What support tests over a point need from one stratum whose closure contains it.
struct StratumGerm
{
    StratumRef stratum;
    std::vector<VertexId> star;
    std::vector<RatVector> basis;
    std::vector<RatVector> forms;
};

/// The carrier and its cofaces, with their conormal data.
inline std::vector<StratumGerm> germs_over(const EmbeddedComplex& k, SimplexId carrier)
{
    std::vector<SimplexId> ids{carrier};
    ids.insert(ids.end(), k.coface_ids(carrier).begin(), k.coface_ids(carrier).end());
    std::vector<StratumGerm> out;
    for (auto id : ids) {
        StratumGerm g{k.stratum(id), k.star_vertices(id), {}, {}};
        g.basis = conormal_basis(k, g.stratum);
        g.forms = detail::pairing_forms(k, g.stratum, g.basis, g.star);
        out.push_back(std::move(g));
    }
    return out;
}

/**
 * Is (x, ω) in the closure of a chamber with nonzero multiplicity over some
 * stratum whose closure contains x? Chambers adjacent to ω are the
 * realizable completions of ω's sign vector over star vertices where ω
 * vanishes.
 */
inline bool support_contains_germs(const LagrangianCycleView& cc, const std::vector<StratumGerm>& germs,
                                   const RatVector& omega)
{
    const auto& k = cc.complex();
    if (omega.size() != k.ambient_dim())
        throw InputError("support_contains: covector has wrong dimension");
    for (const auto& g : germs) {
        const StratumRef& s = g.stratum;
        if (!is_conormal(s, omega))
            continue;
        const auto& star = g.star;
        const auto pairing = star_pairings(k, s, star, omega);
        std::map<VertexId, int> fixed;
        std::vector<std::size_t> zero;
        for (std::size_t i = 0; i < star.size(); ++i) {
            if (pairing[i] == 0)
                zero.push_back(i);
            else
                fixed[star[i]] = sign(pairing[i]);
        }
        if (zero.empty()) {
            if (cc.multiplicity_for_signs(s, fixed) != 0)
                return true;
            continue;
        }
        // pairings that are nonzero at ω keep their sign nearby, so the adjacent
        // chambers are the chambers of the central arrangement of the vanishing forms
        std::vector<RatVector> forms;
        for (auto i : zero)
            forms.push_back(g.forms[i]);
        std::vector<int> sg;
        std::map<VertexId, int> signs = fixed;
        // depth-first over sign extensions, reusing the parent's witness when it already fits
        const auto search = [&](const auto& self, const RatVector& w) -> bool {
            const std::size_t z = sg.size();
            if (z == zero.size()) {
                for (std::size_t j = 0; j < z; ++j)
                    signs[star[zero[j]]] = sg[j];
                return cc.multiplicity_for_signs(s, signs) != 0;
            }
            const int here = sign(dot(forms[z], w));
            for (int t : {-1, 1}) {
                sg.push_back(t);
                std::optional<RatVector> next;
                if (here == t)
                    next = w;
                else
                    next = detail::realize(forms, sg, g.basis.size());
                const bool found = next && self(self, *next);
                sg.pop_back();
                if (found)
                    return true;
            }
            return false;
        };
        if (search(search, zero_vector(g.basis.size())))
            return true;
    }
    return false;
}

/// Support membership at a point carried by the open simplex `carrier`.
inline bool support_contains_over(const LagrangianCycleView& cc, SimplexId carrier,
                                  const RatVector& omega)
{
    return support_contains_germs(cc, germs_over(cc.complex(), carrier), omega);
}

inline bool support_contains(const LagrangianCycleView& cc, const RatVector& x,
                             const RatVector& omega)
{
    const auto carrier = locate(cc.complex(), x);
    if (!carrier)
        throw InputError("support_contains: point lies outside the complex");
    return support_contains_over(cc, *carrier, omega);
}

struct AntipodalViolation
{
    StratumRef stratum;
    RatVector witness;
    std::int64_t dual_multiplicity;
    std::int64_t antipodal_multiplicity;
};

/// Chamber witnesses where |CC(Dα)| and -|CC(α)| disagree.
inline std::vector<AntipodalViolation> antipodal_violations(const ConstructibleFunction& a)
{
    const LagrangianCycleView cc(a), dcc(dual(a));
    std::vector<AntipodalViolation> out;
    const auto& k = a.complex();
    for (SimplexId id = 0; id < k.size(); ++id) {
        const StratumRef s = k.stratum(id);
        for (const auto& ch : enumerate_chambers(k, s)) {
            const auto md = dcc.multiplicity_for_signs(s, ch.sign_vector);
            std::map<VertexId, int> flipped;
            for (const auto& [v, sg] : ch.sign_vector)
                flipped[v] = -sg;
            const auto ma = cc.multiplicity_for_signs(s, flipped);
            if ((md != 0) != (ma != 0))
                out.push_back({s, ch.witness, md, ma});
        }
    }
    return out;
}

inline bool antipodal_support_check(const ConstructibleFunction& a)
{
    return antipodal_violations(a).empty();
}

} // namespace eulercc

#endif // EULERCC_CHARCYCLE_HPP
