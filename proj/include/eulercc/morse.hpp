#ifndef EULERCC_MORSE_HPP
#define EULERCC_MORSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "charcycle.hpp"

namespace eulercc {

struct CriticalPoint
{
    StratumRef stratum;
    RatVector point;
    RatVector covector;          ///< df at the point
    std::size_t index = 0;       ///< negative directions of the restricted Hessian
    Inertia inertia;             ///< of the Hessian restricted to dir(stratum)
    bool nondegenerate_covector = false;
    std::int64_t multiplicity = 0;
};

/// A stratum on which the critical locus is not isolated.
struct DegeneracyFinding
{
    StratumRef stratum;
    RatVector sample; ///< a critical point in the relative interior
    std::size_t locus_dim = 0;
};

struct CriticalSearch
{
    std::vector<CriticalPoint> points;
    std::vector<DegeneracyFinding> degeneracies;
};

/**
 * Critical points of f restricted to each open simplex of `region`. On a
 * stratum y = v0 + D t the condition D^T ∇f(y) = 0 reads
 * (2 D^T Q D) t = -D^T (a + 2 Q v0).
 */
inline CriticalSearch critical_points(const QuadAffineFunction& f, const EmbeddedComplex& k,
                                      const Subcomplex& region)
{
    if (f.dim() != k.ambient_dim())
        throw InputError("critical_points: function dimension mismatch");
    CriticalSearch out;
    for (auto id : region) {
        const StratumRef s = k.stratum(id);
        const auto& dirs = s.direction_basis;
        const RatVector& v0 = k.vertex(s.simplex[0]);
        auto make = [&](RatVector y) {
            CriticalPoint cp;
            cp.stratum = s;
            cp.covector = f.gradient(y);
            cp.point = std::move(y);
            cp.inertia = s.dim == 0 ? Inertia{} : inertia(f.hessian().restricted_to(dirs));
            cp.index = cp.inertia.n_negative;
            cp.nondegenerate_covector = is_nondegenerate(k, s, cp.covector);
            return cp;
        };
        if (s.dim == 0) {
            out.points.push_back(make(v0));
            continue;
        }
        const RatVector g0 = f.gradient(v0);
        std::vector<LinearEquation> eqs;
        const RatSymMatrix h2 = f.hessian().restricted_to(dirs);
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            LinearEquation e{zero_vector(dirs.size()), -dot(dirs[i], g0)};
            for (std::size_t j = 0; j < dirs.size(); ++j)
                e.a[j] = h2(i, j);
            eqs.push_back(std::move(e));
        }
        const auto sol = solve_affine(eqs, dirs.size());
        if (!sol)
            continue;
        // barycentric weights: 1 - Σt > 0, t_i > 0
        auto weights_positive = [&](const RatVector& t) {
            Rational rest = 1;
            for (const auto& x : t) {
                if (x <= 0)
                    return false;
                rest -= x;
            }
            return rest > 0;
        };
        auto to_point = [&](const RatVector& t) {
            RatVector y = v0;
            for (std::size_t i = 0; i < dirs.size(); ++i)
                y = y + t[i] * dirs[i];
            return y;
        };
        if (sol->dim() == 0) {
            if (weights_positive(sol->basepoint))
                out.points.push_back(make(to_point(sol->basepoint)));
            continue;
        }
        ConstraintSystem sys;
        sys.dim = dirs.size();
        sys.equalities = eqs;
        LinearEquation rest{RatVector(dirs.size(), Rational(-1)), Rational(-1)};
        sys.strict.push_back(rest);
        for (std::size_t i = 0; i < dirs.size(); ++i)
            sys.strict.push_back({unit_vector(dirs.size(), i), Rational(0)});
        const auto r = strict_feasibility(sys);
        if (r.feasible)
            out.degeneracies.push_back({s, to_point(*r.witness), sol->dim()});
    }
    return out;
}

inline CriticalSearch critical_points(const QuadAffineFunction& f, const EmbeddedComplex& k)
{
    return critical_points(f, k, k.all());
}

inline int morse_sign(const CriticalPoint& cp)
{
    if (cp.inertia.n_zero != 0)
        throw DegeneracyError("restricted Hessian is degenerate on {" +
                              simplex_key(cp.stratum.simplex) + "}");
    if (!cp.nondegenerate_covector)
        throw DegeneracyError("covector at critical point on {" +
                              simplex_key(cp.stratum.simplex) + "} is degenerate");
    return cp.index % 2 == 0 ? 1 : -1;
}

inline void require_isolated(const CriticalSearch& search)
{
    if (!search.degeneracies.empty()) {
        const auto& d = search.degeneracies.front();
        throw DegeneracyError("critical locus of dimension " + std::to_string(d.locus_dim) +
                              " on {" + simplex_key(d.stratum.simplex) + "}");
    }
}

/// Σ (-1)^index · m over the critical points in region; fills in the multiplicities.
inline std::int64_t stratified_morse_sum(const ConstructibleFunction& a, const QuadAffineFunction& f,
                                         const Subcomplex& region,
                                         std::vector<CriticalPoint>* report = nullptr)
{
    auto search = critical_points(f, a.complex(), region);
    require_isolated(search);
    const LagrangianCycleView cc(a);
    std::int64_t total = 0;
    for (auto& cp : search.points) {
        cp.multiplicity = cc.multiplicity(cp.stratum, cp.covector);
        total += morse_sign(cp) * cp.multiplicity;
    }
    if (report)
        *report = std::move(search.points);
    return total;
}

inline std::int64_t stratified_morse_sum(const ConstructibleFunction& a, const QuadAffineFunction& f)
{
    return stratified_morse_sum(a, f, a.complex().all());
}

/// ζ·y + |y - y0|² with ζ, y0 drawn from the seed.
inline QuadAffineFunction generic_convex_function(std::size_t dim, std::uint64_t seed)
{
    RationalSampler rng(seed);
    const RatVector zeta = rng.next_vector(dim);
    const RatVector y0 = rng.next_vector(dim, 40, 7);
    return QuadAffineFunction::squared_distance(y0).plus_scaled(1, AffineFunction{zeta, Rational(0)});
}

struct PerturbationSchedule
{
    std::uint64_t seed = 0;
    RatVector center;      ///< y0
    RatVector direction;   ///< ζ
    std::vector<Rational> eta_sequence;
    std::size_t stability_window = 3;

    /// Geometric sequence start·ratio^k, k < steps, with seeded ζ and y0.
    static PerturbationSchedule seeded(std::size_t dim, std::uint64_t seed,
                                       Rational start = Rational(1, 8),
                                       Rational ratio = Rational(1, 8), std::size_t window = 3,
                                       std::size_t steps = 10)
    {
        if (start <= 0 || ratio <= 0 || ratio >= 1)
            throw InputError("perturbation schedule needs start > 0 and 0 < ratio < 1");
        if (window < 2)
            throw InputError("stability window must be at least 2");
        PerturbationSchedule s;
        s.seed = seed;
        RationalSampler rng(seed ^ 0x5bd1e995ULL);
        s.direction = rng.next_vector(dim);
        s.center = rng.next_vector(dim, 40, 7);
        s.stability_window = window;
        Rational eta = start;
        for (std::size_t i = 0; i < steps; ++i) {
            s.eta_sequence.push_back(eta);
            eta *= ratio;
        }
        return s;
    }

    QuadAffineFunction perturbation() const
    {
        return QuadAffineFunction::squared_distance(center).plus_scaled(
            1, AffineFunction{direction, Rational(0)});
    }
};

struct EtaStep
{
    Rational eta;
    std::optional<std::int64_t> value;
    std::string status; ///< "ok", "degenerate" or "boundary-collision"
    std::string detail;
};

struct StabilizedCount
{
    std::int64_t value = 0;
    std::vector<EtaStep> trace;
    std::vector<CriticalPoint> contributing; ///< nonzero-multiplicity points at the last η
    bool all_inside_tube = true;
    bool all_covectors_nondegenerate = true;
    bool all_hessians_positive_definite = true;
};

/**
 * Morse count of base + η·(ζ·y + |y - y0|²) over the critical points in the
 * tube with nonzero multiplicity, for decreasing η, until the value repeats
 * for `stability_window` consecutive steps. A step is skipped (and the run
 * restarted) when the perturbed function is degenerate or a contributing
 * point sits on the tube frontier.
 */
inline StabilizedCount stabilized_count(const ConstructibleFunction& a, const QuadAffineFunction& base,
                                        const PerturbationSchedule& schedule, const Subcomplex& tube)
{
    const auto& k = a.complex();
    require_subcomplex(k, tube, "stabilized_count");
    const Subcomplex edge = frontier(k, tube);
    const LagrangianCycleView cc(a);
    const QuadAffineFunction bump = schedule.perturbation();

    StabilizedCount result;
    std::optional<std::int64_t> last;
    std::size_t run = 0;
    bool collided = false;
    for (const auto& eta : schedule.eta_sequence) {
        const QuadAffineFunction f = base.plus_scaled(eta, bump);
        EtaStep step{eta, std::nullopt, "ok", {}};
        std::vector<CriticalPoint> contributing;
        std::int64_t total = 0;
        bool pd = true;
        try {
            auto search = critical_points(f, k, tube);
            require_isolated(search);
            for (auto& cp : search.points) {
                cp.multiplicity = cc.multiplicity(cp.stratum, cp.covector);
                if (cp.multiplicity == 0)
                    continue;
                if (edge.count(cp.stratum.id)) {
                    step.status = "boundary-collision";
                    step.detail = "critical point on frontier simplex {" +
                                  simplex_key(cp.stratum.simplex) + "}";
                    break;
                }
                total += morse_sign(cp) * cp.multiplicity;
                pd &= cp.inertia.n_negative == 0 && cp.inertia.n_zero == 0;
                contributing.push_back(std::move(cp));
            }
        } catch (const DegeneracyError& e) {
            step.status = "degenerate";
            step.detail = e.what();
        }
        if (step.status != "ok") {
            collided |= step.status == "boundary-collision";
            result.trace.push_back(std::move(step));
            last.reset();
            run = 0;
            continue;
        }
        step.value = total;
        result.trace.push_back(step);
        run = (last && *last == total) ? run + 1 : 1;
        last = total;
        if (run >= schedule.stability_window) {
            result.value = total;
            result.contributing = std::move(contributing);
            result.all_hessians_positive_definite = pd;
            return result;
        }
    }
    if (collided)
        throw BoundaryCollisionError("perturbed counts hit the tube frontier and did not stabilize");
    throw ConvergenceError("perturbed Morse counts did not stabilize within the schedule");
}

} // namespace eulercc

#endif // EULERCC_MORSE_HPP
