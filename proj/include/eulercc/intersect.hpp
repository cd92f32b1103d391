#ifndef EULERCC_INTERSECT_HPP
#define EULERCC_INTERSECT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "morse.hpp"

namespace eulercc {

struct HypothesisCheck
{
    std::string name;
    bool passed = true;
    std::string witness;
};

struct TheoremReport
{
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    std::vector<HypothesisCheck> hypothesis_log;
    Json artifacts = Json::object();
};

inline Json report_to_json(const TheoremReport& r)
{
    Json log = Json::array();
    for (const auto& h : r.hypothesis_log)
        log.push_back({{"check", h.name}, {"passed", h.passed}, {"witness", h.witness}});
    return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}, {"hypothesis_log", log},
                {"artifacts", r.artifacts}};
}

inline Json simplex_list_json(const EmbeddedComplex& k, const Subcomplex& s)
{
    Json a = Json::array();
    for (auto id : s)
        a.push_back(simplex_key(k.simplex(id)));
    return a;
}

inline Json critical_point_json(const CriticalPoint& cp)
{
    return Json{{"stratum", simplex_key(cp.stratum.simplex)},
                {"point", to_json(cp.point)},
                {"covector", to_json(cp.covector)},
                {"index", cp.index},
                {"multiplicity", cp.multiplicity}};
}

inline Json trace_json(const std::vector<EtaStep>& trace)
{
    Json a = Json::array();
    for (const auto& s : trace) {
        Json j{{"eta", to_string(s.eta)}, {"status", s.status}};
        if (s.value)
            j["value"] = *s.value;
        if (!s.detail.empty())
            j["detail"] = s.detail;
        a.push_back(std::move(j));
    }
    return a;
}

// ---------------------------------------------------------------------------
// intersection locus

struct IntersectionLocus
{
    std::vector<SimplexId> strata; ///< strata S with (relint S, df) ⊂ |CC(α)|
    RatVector covector;
    Subcomplex K;                  ///< union of their closures
};

inline IntersectionLocus compute_intersection_locus(const ConstructibleFunction& a,
                                                    const AffineFunction& f)
{
    const auto& k = a.complex();
    if (f.dim() != k.ambient_dim())
        throw InputError("compute_intersection_locus: function dimension mismatch");
    IntersectionLocus out;
    out.covector = f.linear;
    const LagrangianCycleView cc(a);
    Subcomplex seeds;
    for (SimplexId id = 0; id < k.size(); ++id) {
        const StratumRef s = k.stratum(id);
        if (!is_conormal(s, f.linear))
            continue;
        if (support_contains(cc, s.barycenter, f.linear)) {
            out.strata.push_back(id);
            seeds.insert(id);
        }
    }
    out.K = closure(k, seeds);
    return out;
}

/// Connected components of a subcomplex, each as a subcomplex.
inline std::vector<Subcomplex> components(const EmbeddedComplex& k, const Subcomplex& region)
{
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto id : region)
        for (auto v : k.simplex(id))
            parent.emplace(v, v);
    for (auto id : region) {
        const auto& s = k.simplex(id);
        for (std::size_t i = 1; i < s.size(); ++i)
            parent[find(s[i])] = find(s[0]);
    }
    std::map<VertexId, Subcomplex> groups;
    for (auto id : region)
        groups[find(k.simplex(id)[0])].insert(id);
    std::vector<Subcomplex> out;
    for (auto& [root, g] : groups)
        out.push_back(std::move(g));
    return out;
}

struct VerifierOptions
{
    std::uint64_t seed = 0;
    Rational eta_start{1, 8};
    Rational eta_ratio{1, 8};
    std::size_t stability_window = 3;
    std::size_t eta_steps = 10;
    std::size_t reseeds = 4;
};

namespace detail {

template <typename Run>
StabilizedCount with_reseeding(std::size_t dim, const VerifierOptions& opt, Run&& run)
{
    for (std::size_t r = 0; r <= opt.reseeds; ++r) {
        const auto schedule = PerturbationSchedule::seeded(dim, opt.seed + r, opt.eta_start,
                                                           opt.eta_ratio, opt.stability_window,
                                                           opt.eta_steps);
        try {
            return run(schedule);
        } catch (const BoundaryCollisionError&) {
            if (r == opt.reseeds)
                throw;
        } catch (const ConvergenceError&) {
            if (r == opt.reseeds)
                throw;
        }
    }
    throw ConvergenceError("no schedule stabilized");
}

inline std::string vertex_witness(const EmbeddedComplex& k, VertexId v, const Rational& value,
                                  const std::string& name = "f")
{
    std::string pt;
    for (std::size_t i = 0; i < k.ambient_dim(); ++i)
        pt += (i ? "," : "") + to_string(k.vertex(v)[i]);
    return "vertex " + std::to_string(v) + " at (" + pt + ") has " + name + " = " + to_string(value);
}

} // namespace detail

/**
 * Both sides of the intersection formula around the part K0 of the
 * intersection locus on which f vanishes. Components of the locus on which
 * f has no zero are separated from K0 by subdividing until the tube around
 * K0 avoids them.
 */
inline TheoremReport verify_theorem1(const ConstructibleFunction& a, const AffineFunction& f,
                                     const VerifierOptions& opt = {})
{
    const auto& k = a.complex();
    TheoremReport rep;
    const auto locus = compute_intersection_locus(a, f);
    rep.artifacts["covector"] = to_json(f.linear);
    Json istrata = Json::array();
    for (auto id : locus.strata)
        istrata.push_back(simplex_key(k.simplex(id)));
    rep.artifacts["I"] = istrata;
    rep.artifacts["K"] = simplex_list_json(k, locus.K);

    if (locus.K.empty()) {
        rep.hypothesis_log.push_back({"intersection locus empty (vacuous)", true, ""});
        rep.lhs = rep.rhs = 0;
        rep.holds = true;
        return rep;
    }

    Subcomplex K0, others;
    for (const auto& comp : components(k, locus.K)) {
        std::optional<VertexId> zero, nonzero;
        for (auto id : comp)
            for (auto v : k.simplex(id))
                (f(k.vertex(v)) == 0 ? zero : nonzero) = v;
        if (zero && nonzero) {
            const std::string w = detail::vertex_witness(k, *nonzero, f(k.vertex(*nonzero)));
            rep.hypothesis_log.push_back({"each locus component lies in {f = 0} or misses it", false, w});
            throw HypothesisError("a component of the intersection locus meets {f = 0} without lying in it", w);
        }
        (zero ? K0 : others).insert(comp.begin(), comp.end());
    }
    if (K0.empty()) {
        const VertexId v = k.simplex(*others.begin())[0];
        const std::string w = detail::vertex_witness(k, v, f(k.vertex(v)));
        rep.hypothesis_log.push_back({"K contained in {f = 0}", false, w});
        throw HypothesisError("intersection locus K is not contained in {f = 0}", w);
    }
    rep.hypothesis_log.push_back({"K0 contained in {f = 0} (checked on vertices)", true,
                                  std::to_string(K0.size()) + " simplices"});
    rep.hypothesis_log.push_back({"other locus components avoid {f = 0}", true,
                                  std::to_string(others.size()) + " simplices"});
    rep.artifacts["K0"] = simplex_list_json(k, K0);

    const auto ext = extract(k, closed_star(k, K0));
    const auto aL = transport(a, ext);
    std::vector<int> tag(ext.complex->size(), 0); // 1: in K0, 2: other locus component
    for (SimplexId i = 0; i < tag.size(); ++i)
        tag[i] = K0.count(ext.origin[i]) ? 1 : (others.count(ext.origin[i]) ? 2 : 0);

    Subdivision sub;
    Subcomplex tube;
    std::size_t level = 0;
    for (level = 1; level <= 4; ++level) {
        sub = barycentric_subdivide(*ext.complex, level);
        Subcomplex k0;
        for (SimplexId i = 0; i < sub.complex->size(); ++i)
            if (tag[sub.ancestry[i]] == 1)
                k0.insert(i);
        tube = closed_star(*sub.complex, k0);
        bool clear = true;
        for (auto id : tube)
            if (sub.complex->dim(id) == 0 && tag[sub.ancestry[id]] == 2)
                clear = false;
        if (clear)
            break;
    }
    if (level > 4)
        throw ConvergenceError("could not separate K0 from the rest of the intersection locus");
    rep.hypothesis_log.push_back({"tube around K0 avoids other locus components", true,
                                  "subdivision level " + std::to_string(level)});

    const auto& kt = *sub.complex;
    const auto at = transport(aL, sub);
    std::optional<Rational> min_abs;
    for (auto id : tube)
        if (kt.dim(id) == 0) {
            const Rational v = abs(f(kt.vertex(kt.simplex(id)[0])));
            if (v != 0 && (!min_abs || v < *min_abs))
                min_abs = v;
        }
    const Rational eps = min_abs ? *min_abs / 2 : Rational(1);
    rep.hypothesis_log.push_back({"0 < epsilon < |f(v)| for tube vertices off {f = 0}", true,
                                  "epsilon = " + to_string(eps)});

    const auto inner = integral_over(a, K0);
    const auto slice = slice_integral(at, tube, f, -eps);
    rep.lhs = inner - slice;

    const auto count = detail::with_reseeding(k.ambient_dim(), opt, [&](const PerturbationSchedule& s) {
        return stabilized_count(at, QuadAffineFunction(f), s, tube);
    });
    rep.rhs = count.value;
    rep.holds = rep.lhs == rep.rhs;
    rep.hypothesis_log.push_back({"contributing critical points strictly inside the tube", true, ""});
    rep.hypothesis_log.push_back({"restricted Hessians positive definite", count.all_hessians_positive_definite, ""});

    rep.artifacts["tube_simplices"] = tube.size();
    rep.artifacts["subdivision_level"] = level;
    rep.artifacts["epsilon"] = to_string(eps);
    rep.artifacts["integral_over_K0"] = inner;
    rep.artifacts["slice_integral"] = slice;
    rep.artifacts["schedule_trace"] = trace_json(count.trace);
    Json cps = Json::array();
    for (const auto& cp : count.contributing)
        cps.push_back(critical_point_json(cp));
    rep.artifacts["critical_points"] = cps;
    return rep;
}

/// Euler integral against a seeded convex Morse count over the whole complex.
inline TheoremReport global_index(const ConstructibleFunction& a, std::uint64_t seed)
{
    const auto& k = a.complex();
    TheoremReport rep;
    rep.lhs = euler_integral(a);
    for (std::uint64_t s = seed; s < seed + 32; ++s) {
        const auto f = generic_convex_function(k.ambient_dim(), s);
        std::vector<CriticalPoint> cps;
        try {
            rep.rhs = stratified_morse_sum(a, f, k.all(), &cps);
        } catch (const DegeneracyError& e) {
            rep.hypothesis_log.push_back({"generic function at seed " + std::to_string(s), false, e.what()});
            continue;
        }
        rep.hypothesis_log.push_back({"critical points isolated, covectors and Hessians nondegenerate",
                                      true, "seed " + std::to_string(s)});
        rep.holds = rep.lhs == rep.rhs;
        rep.artifacts["seed"] = s;
        rep.artifacts["function"] = quad_to_json(f);
        Json list = Json::array();
        for (const auto& cp : cps)
            if (cp.multiplicity != 0)
                list.push_back(critical_point_json(cp));
        rep.artifacts["critical_points"] = list;
        return rep;
    }
    throw DegeneracyError("no generic function found in 32 seeds");
}

/**
 * α(v) against the stabilized Morse count of |y - v|² (plus a seeded tiny
 * convex term) on closed stars of v, refined by subdivision until two
 * consecutive levels agree.
 */
inline TheoremReport local_index(const ConstructibleFunction& a, VertexId v,
                                 const VerifierOptions& opt = {}, std::size_t max_levels = 4)
{
    const auto& k = a.complex();
    if (v >= k.vertex_count())
        throw InputError("local_index: unknown vertex " + std::to_string(v));
    const auto vid = k.find({v});
    if (!vid)
        throw InputError("local_index: vertex " + std::to_string(v) + " is not a simplex of the complex");
    TheoremReport rep;
    rep.lhs = a(*vid);
    const RatVector center = k.vertex(v);
    rep.hypothesis_log.push_back({"v is a vertex of the complex", true, std::to_string(v)});

    auto ext = extract(k, closed_star(k, {*vid}));
    ConstructibleFunction cur = transport(a, ext);
    ComplexPtr cur_k = ext.complex;
    std::optional<std::int64_t> previous;
    Json levels = Json::array();
    for (std::size_t level = 1; level <= max_levels; ++level) {
        const auto sub = barycentric_subdivide(*cur_k);
        const auto at = transport(cur, sub);
        const auto& kt = *sub.complex;
        std::optional<SimplexId> vnew;
        for (SimplexId i = 0; i < kt.size() && !vnew; ++i)
            if (kt.dim(i) == 0 && kt.vertex(kt.simplex(i)[0]) == center)
                vnew = i;
        const Subcomplex tube = closed_star(kt, {*vnew});
        const auto count = detail::with_reseeding(k.ambient_dim(), opt, [&](const PerturbationSchedule& s) {
            return stabilized_count(at, QuadAffineFunction::squared_distance(center), s, tube);
        });
        levels.push_back({{"level", level}, {"tube_simplices", tube.size()}, {"value", count.value},
                          {"schedule_trace", trace_json(count.trace)}});
        if (previous && *previous == count.value) {
            rep.rhs = count.value;
            rep.holds = rep.lhs == rep.rhs;
            rep.hypothesis_log.push_back({"stabilized over consecutive subdivision levels", true,
                                          "level " + std::to_string(level)});
            rep.artifacts["levels"] = levels;
            return rep;
        }
        previous = count.value;
        const auto next = extract(kt, tube);
        cur = transport(at, next);
        cur_k = next.complex;
    }
    throw ConvergenceError("local index did not stabilize over subdivision levels");
}

// ---------------------------------------------------------------------------
// boundary estimates

enum class ExtensionSide { shriek, star };

inline std::string side_name(ExtensionSide s)
{
    return s == ExtensionSide::shriek ? "shriek" : "star";
}

struct BoundaryViolation
{
    Simplex stratum;
    RatVector point;
    RatVector covector;
    std::int64_t multiplicity = 0;
};

struct BoundaryReport
{
    bool holds = true;
    std::size_t chambers_checked = 0;
    std::size_t witnesses_checked = 0;
    std::vector<BoundaryViolation> violations;
    std::vector<HypothesisCheck> hypothesis_log;
    Json artifacts = Json::object();
};

inline Json boundary_report_json(const BoundaryReport& r)
{
    Json log = Json::array();
    for (const auto& h : r.hypothesis_log)
        log.push_back({{"check", h.name}, {"passed", h.passed}, {"witness", h.witness}});
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"stratum", simplex_key(x.stratum)}, {"point", to_json(x.point)},
                     {"covector", to_json(x.covector)}, {"multiplicity", x.multiplicity}});
    return Json{{"holds", r.holds},          {"chambers_checked", r.chambers_checked},
                {"witnesses_checked", r.witnesses_checked}, {"violations", v},
                {"hypothesis_log", log},     {"artifacts", r.artifacts}};
}

/**
 * Is there λ of the given sign (λ ≥ 0 for +1, λ ≤ 0 for -1) with ξ - λ·dg in
 * |CC| over x? Support membership is piecewise constant in λ with breaks
 * where a conormality or star-vertex pairing changes, so testing the breaks,
 * the gaps between them and one point past the last is exact.
 */
inline bool decomposes_over(const LagrangianCycleView& cc, const std::vector<StratumGerm>& germs,
                            const RatVector& xi, const RatVector& dg, int lambda_sign)
{
    std::set<Rational> breaks{Rational(0)};
    auto add_root = [&](const RatVector& d) {
        // (ξ - λ dg)·d = 0
        const Rational b = dot(dg, d);
        if (b == 0)
            return;
        const Rational lam = dot(xi, d) / b;
        if (lambda_sign * sign(lam) >= 0)
            breaks.insert(lam);
    };
    const auto& k = cc.complex();
    for (const auto& g : germs) {
        for (const auto& d : g.stratum.direction_basis)
            add_root(d);
        for (auto p : g.star)
            add_root(k.vertex(p) - g.stratum.barycenter);
    }
    std::vector<Rational> pts(breaks.begin(), breaks.end());
    std::vector<Rational> tests = pts;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        tests.push_back((pts[i] + pts[i + 1]) / 2);
    tests.push_back(lambda_sign > 0 ? pts.back() + 1 : pts.front() - 1);
    for (const auto& lam : tests) {
        if (lambda_sign * sign(lam) < 0)
            continue;
        if (support_contains_germs(cc, germs, xi - lam * dg))
            return true;
    }
    return false;
}

inline bool decomposes_over(const LagrangianCycleView& cc, SimplexId carrier, const RatVector& xi,
                            const RatVector& dg, int lambda_sign)
{
    return decomposes_over(cc, germs_over(cc.complex(), carrier), xi, dg, lambda_sign);
}

inline bool decomposes(const LagrangianCycleView& cc, const RatVector& x, const RatVector& xi,
                       const RatVector& dg, int lambda_sign)
{
    const auto carrier = locate(cc.complex(), x);
    if (!carrier)
        throw InputError("decomposes: point outside the complex");
    return decomposes_over(cc, *carrier, xi, dg, lambda_sign);
}

inline BoundaryReport boundary_estimate_check(const ConstructibleFunction& a, const AffineFunction& g,
                                              const Rational& delta, ExtensionSide side,
                                              std::uint64_t seed = 0, std::size_t extra_witnesses = 2)
{
    const auto& k = a.complex();
    if (g.dim() != k.ambient_dim())
        throw InputError("boundary_estimate_check: function dimension mismatch");
    if (is_zero(g.linear))
        throw InputError("boundary_estimate_check: g must be nonconstant");
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        if (g(k.vertex(v)) == delta)
            throw TransversalityError("level {g = " + to_string(delta) + "} passes through a vertex",
                                      detail::vertex_witness(k, v, g(k.vertex(v)), "g"));
    BoundaryReport rep;
    rep.hypothesis_log.push_back({"{g = delta} misses every vertex", true, ""});

    const auto sub = subdivide_along_hyperplane(k, g.linear, delta - g.constant);
    const auto& ks = *sub.complex;
    const auto as = transport(a, sub);
    const auto beta = side == ExtensionSide::star ? jstar_extend(as, g, delta) : jshriek_extend(as, g, delta);
    const LagrangianCycleView cca(as), ccb(beta);
    const int lambda_sign = side == ExtensionSide::shriek ? 1 : -1;
    RationalSampler rng(seed);

    std::size_t boundary_strata = 0;
    for (SimplexId id = 0; id < ks.size(); ++id) {
        const auto& s = ks.simplex(id);
        if (!std::all_of(s.begin(), s.end(), [&](VertexId v) { return g(ks.vertex(v)) == delta; }))
            continue;
        ++boundary_strata;
        const StratumRef st = ks.stratum(id);
        const auto basis = conormal_basis(ks, st);
        const auto germs = germs_over(ks, id);
        for (const auto& ch : enumerate_chambers(ks, st)) {
            const auto m = ccb.multiplicity_for_signs(st, ch.sign_vector);
            if (m == 0)
                continue;
            ++rep.chambers_checked;
            std::vector<RatVector> witnesses{ch.witness};
            for (std::size_t e = 0; e < extra_witnesses && !basis.empty(); ++e) {
                RatVector offset = zero_vector(ks.ambient_dim());
                for (const auto& b : basis)
                    offset = offset + rng.next_rational(9, 4) * b;
                Rational t = 1;
                for (int tries = 0; tries < 40; ++tries, t /= 2) {
                    const RatVector cand = ch.witness + t * offset;
                    bool same = true;
                    for (const auto& [p, sg] : ch.sign_vector)
                        if (sign(dot(cand, ks.vertex(p) - st.barycenter)) != sg) {
                            same = false;
                            break;
                        }
                    if (same) {
                        witnesses.push_back(primitive(cand));
                        break;
                    }
                }
            }
            for (const auto& xi : witnesses) {
                ++rep.witnesses_checked;
                if (!decomposes_over(cca, germs, xi, g.linear, lambda_sign))
                    rep.violations.push_back({s, st.barycenter, xi, m});
            }
        }
    }
    rep.holds = rep.violations.empty();
    rep.artifacts["side"] = side_name(side);
    rep.artifacts["delta"] = to_string(delta);
    rep.artifacts["boundary_strata"] = boundary_strata;
    rep.artifacts["subdivided_simplices"] = ks.size();
    return rep;
}

} // namespace eulercc

#endif // EULERCC_INTERSECT_HPP
