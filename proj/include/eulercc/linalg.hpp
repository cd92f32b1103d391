#ifndef EULERCC_LINALG_HPP
#define EULERCC_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace eulercc {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>; // row major

inline RatVector zero_vector(std::size_t dim)
{
    return RatVector(dim, Rational(0));
}

inline RatVector unit_vector(std::size_t dim, std::size_t i)
{
    RatVector v = zero_vector(dim);
    v[i] = 1;
    return v;
}

inline void require_same_dim(const RatVector& a, const RatVector& b, const char* where)
{
    if (a.size() != b.size())
        throw InputError(std::string(where) + ": dimension mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
}

inline Rational dot(const RatVector& a, const RatVector& b)
{
    require_same_dim(a, b, "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline RatVector operator+(const RatVector& a, const RatVector& b)
{
    require_same_dim(a, b, "vector add");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline RatVector operator-(const RatVector& a, const RatVector& b)
{
    require_same_dim(a, b, "vector subtract");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline RatVector operator-(const RatVector& a)
{
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline RatVector operator*(const Rational& s, const RatVector& a)
{
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

inline bool is_zero(const RatVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Scale a nonzero vector to the primitive integer vector on the same ray.
inline RatVector primitive(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
    Integer g = 0;
    for (const auto& x : v) {
        const Integer n = boost::multiprecision::numerator(x) * (l / Integer(boost::multiprecision::denominator(x)));
        g = boost::multiprecision::gcd(g, n);
    }
    if (g == 0)
        return v;
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] * Rational(l) / Rational(g);
    return r;
}

/// Symmetric rational matrix; construction rejects asymmetric input.
class RatSymMatrix
{
public:
    RatSymMatrix() = default;

    explicit RatSymMatrix(std::size_t dim) : entries_(dim, zero_vector(dim)) {}

    explicit RatSymMatrix(RatMatrix entries) : entries_(std::move(entries))
    {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].size() != entries_.size())
                throw InputError("symmetric matrix must be square");
            for (std::size_t j = 0; j < i; ++j)
                if (entries_[i][j] != entries_[j][i])
                    throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        }
    }

    static RatSymMatrix identity(std::size_t dim)
    {
        RatSymMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            m.entries_[i][i] = 1;
        return m;
    }

    std::size_t dim() const noexcept { return entries_.size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const RatMatrix& entries() const noexcept { return entries_; }

    RatVector apply(const RatVector& v) const
    {
        if (v.size() != dim())
            throw InputError("symmetric matrix apply: dimension mismatch");
        RatVector r = zero_vector(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                r[i] += entries_[i][j] * v[j];
        return r;
    }

    /// Gram form B^T S B for the columns b_k of `basis`.
    RatSymMatrix restricted_to(const std::vector<RatVector>& basis) const
    {
        const std::size_t k = basis.size();
        RatMatrix g(k, zero_vector(k));
        std::vector<RatVector> sb;
        sb.reserve(k);
        for (const auto& b : basis)
            sb.push_back(apply(b));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                g[i][j] = dot(basis[i], sb[j]);
        return RatSymMatrix(std::move(g));
    }

    bool is_zero() const
    {
        for (const auto& row : entries_)
            if (!eulercc::is_zero(row))
                return false;
        return true;
    }

private:
    RatMatrix entries_;
};

struct Inertia
{
    std::size_t n_positive = 0;
    std::size_t n_negative = 0;
    std::size_t n_zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/**
 * Signature of a symmetric form by symmetric Gaussian elimination (a chain
 * of congruences, so Sylvester's law applies at every step). When every
 * remaining diagonal entry vanishes but some off-diagonal a_ij does not,
 * adding row/column j to row/column i produces the pivot 2 a_ij.
 */
inline Inertia inertia(const RatSymMatrix& form)
{
    RatMatrix a = form.entries();
    std::size_t n = a.size();
    Inertia result;
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i)
        live[i] = i;

    while (!live.empty()) {
        std::optional<std::size_t> pivot;
        for (std::size_t p = 0; p < live.size(); ++p)
            if (a[live[p]][live[p]] != 0) {
                pivot = p;
                break;
            }
        if (!pivot) {
            std::optional<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t p = 0; p < live.size() && !off; ++p)
                for (std::size_t q = p + 1; q < live.size(); ++q)
                    if (a[live[p]][live[q]] != 0) {
                        off = {p, q};
                        break;
                    }
            if (!off) {
                result.n_zero += live.size();
                break;
            }
            const std::size_t i = live[off->first], j = live[off->second];
            for (std::size_t k : live)
                a[i][k] += a[j][k];
            for (std::size_t k : live)
                a[k][i] += a[k][j];
            pivot = off->first;
        }
        const std::size_t p = live[*pivot];
        const Rational d = a[p][p];
        if (d > 0)
            ++result.n_positive;
        else
            ++result.n_negative;
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(*pivot));
        for (std::size_t i : live) {
            if (a[i][p] == 0)
                continue;
            const Rational f = a[i][p] / d;
            for (std::size_t j : live)
                a[i][j] -= f * a[p][j];
        }
    }
    return result;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[sel], m[row]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < m[i].size(); ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(const std::vector<RatVector>& rows, std::size_t ncols)
{
    RatMatrix m = rows;
    return rref(m, ncols).size();
}

/// a . y = rhs
struct LinearEquation
{
    RatVector a;
    Rational rhs;
};

/// Exact parametrization basepoint + span(basis) of an affine solution set.
struct AffineSolution
{
    RatVector basepoint;
    std::vector<RatVector> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

/**
 * Solve {y : a_i . y = c_i for all i} in dimension `dim`. Returns nullopt when
 * the system is inconsistent.
 */
inline std::optional<AffineSolution> solve_affine(const std::vector<LinearEquation>& equations,
                                                  std::size_t dim)
{
    RatMatrix m;
    m.reserve(equations.size());
    for (const auto& eq : equations) {
        if (eq.a.size() != dim)
            throw InputError("solve_affine: equation of dimension " + std::to_string(eq.a.size()) +
                             " in a system of dimension " + std::to_string(dim));
        RatVector row = eq.a;
        row.push_back(eq.rhs);
        m.push_back(std::move(row));
    }
    const auto pivots = rref(m, dim);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (m[i][dim] != 0)
            return std::nullopt;

    AffineSolution sol;
    sol.basepoint = zero_vector(dim);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol.basepoint[pivots[r]] = m[r][dim];

    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free])
            continue;
        RatVector v = zero_vector(dim);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

/**
 * Basis of the orthogonal complement (standard inner product) of the span
 * of `basis`, scaled to primitive integer vectors. Throws InputError when the
 * input vectors are linearly dependent.
 */
inline std::vector<RatVector> orthogonal_complement(const std::vector<RatVector>& basis,
                                                    std::size_t ambient_dim)
{
    std::vector<LinearEquation> eqs;
    for (const auto& b : basis) {
        if (b.size() != ambient_dim)
            throw InputError("orthogonal_complement: vector dimension does not match ambient dimension");
        eqs.push_back({b, Rational(0)});
    }
    if (rank(basis, ambient_dim) != basis.size())
        throw InputError("orthogonal_complement: input vectors are linearly dependent");
    auto sol = solve_affine(eqs, ambient_dim);
    std::vector<RatVector> out;
    for (const auto& v : sol->basis)
        out.push_back(primitive(v));
    return out;
}

// ---------------------------------------------------------------------------
// Linear programming over the rationals (dense two-phase simplex, Bland's rule)

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult
{
    LpStatus status = LpStatus::infeasible;
    Rational value;
    RatVector x;
};

namespace detail {

class Tableau
{
public:
    Tableau(RatMatrix rows, std::vector<std::size_t> basis)
        : t_(std::move(rows)), basis_(std::move(basis))
    {
    }

    RatMatrix& rows() { return t_; }
    std::vector<std::size_t>& basis() { return basis_; }
    RatVector& objective() { return obj_; }

    std::size_t rhs_col() const { return t_.empty() ? obj_.size() - 1 : t_[0].size() - 1; }

    void set_objective(const RatVector& c)
    {
        // Row encodes z + sum obj_j x_j = obj_rhs; basic columns are then eliminated.
        obj_.assign(c.size() + 1, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j)
            obj_[j] = -c[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
            const Rational f = obj_[basis_[i]];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < obj_.size(); ++j)
                obj_[j] -= f * t_[i][j];
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        const Rational inv = Rational(1) / t_[r][c];
        for (auto& x : t_[r])
            x *= inv;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0)
                continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j < t_[i].size(); ++j)
                if (t_[r][j] != 0)
                    t_[i][j] -= f * t_[r][j];
        }
        if (obj_[c] != 0) {
            const Rational f = obj_[c];
            for (std::size_t j = 0; j < obj_.size(); ++j)
                if (t_[r][j] != 0)
                    obj_[j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    /// Maximize; only columns < ncols may enter. Returns false when unbounded.
    bool optimize(std::size_t ncols)
    {
        const std::size_t rhs = obj_.size() - 1;
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < ncols; ++j)
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (!enter)
                return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][*enter] <= 0)
                    continue;
                const Rational ratio = t_[i][rhs] / t_[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave)
                return false;
            pivot(*leave, *enter);
        }
    }

private:
    RatMatrix t_;
    std::vector<std::size_t> basis_;
    RatVector obj_;
};

} // namespace detail

/**
 * Maximize c . x over free x subject to a . x = b (equalities) and
 * a . x >= b (inequalities).
 */
inline LpResult lp_maximize(const RatVector& c, const std::vector<LinearEquation>& equalities,
                            const std::vector<LinearEquation>& inequalities)
{
    const std::size_t n = c.size();
    for (const auto& e : equalities)
        if (e.a.size() != n)
            throw InputError("lp_maximize: constraint dimension mismatch");
    for (const auto& e : inequalities)
        if (e.a.size() != n)
            throw InputError("lp_maximize: constraint dimension mismatch");

    // Columns: u (n), w (n), surplus (one per inequality), artificial (one per row), rhs.
    const std::size_t g = inequalities.size();
    const std::size_t m = equalities.size() + g;
    const std::size_t nstd = 2 * n + g;
    const std::size_t width = nstd + m + 1;

    RatMatrix rows;
    rows.reserve(m);
    auto make_row = [&](const LinearEquation& e, std::optional<std::size_t> surplus) {
        RatVector row(width, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = e.a[j];
            row[n + j] = -e.a[j];
        }
        if (surplus)
            row[2 * n + *surplus] = -1;
        row[width - 1] = e.rhs;
        if (e.rhs < 0)
            for (auto& x : row)
                x = -x;
        return row;
    };
    for (const auto& e : equalities)
        rows.push_back(make_row(e, std::nullopt));
    for (std::size_t k = 0; k < g; ++k)
        rows.push_back(make_row(inequalities[k], k));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][nstd + i] = 1;
        basis[i] = nstd + i;
    }

    detail::Tableau tab(std::move(rows), std::move(basis));
    RatVector phase1(width - 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        phase1[nstd + i] = -1;
    tab.set_objective(phase1);
    tab.optimize(width - 1);
    LpResult result;
    if (tab.objective().back() < 0) {
        result.status = LpStatus::infeasible;
        return result;
    }

    // Drive artificial variables out of the basis, dropping redundant rows.
    auto& t = tab.rows();
    auto& b = tab.basis();
    for (std::size_t i = 0; i < t.size();) {
        if (b[i] < nstd) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < nstd; ++j)
            if (t[i][j] != 0) {
                col = j;
                break;
            }
        if (col) {
            tab.pivot(i, *col);
            ++i;
        } else {
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
            b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    for (auto& row : t) {
        row.erase(row.begin() + static_cast<std::ptrdiff_t>(nstd),
                  row.begin() + static_cast<std::ptrdiff_t>(nstd + m));
    }

    RatVector phase2(nstd, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        phase2[j] = c[j];
        phase2[n + j] = -c[j];
    }
    if (t.empty()) {
        // Every constraint was trivially 0 = 0; the origin is feasible.
        if (!is_zero(c)) {
            result.status = LpStatus::unbounded;
            return result;
        }
        result.status = LpStatus::optimal;
        result.value = 0;
        result.x = zero_vector(n);
        return result;
    }
    tab.set_objective(phase2);
    if (!tab.optimize(nstd)) {
        result.status = LpStatus::unbounded;
        return result;
    }
    RatVector z(nstd, Rational(0));
    for (std::size_t i = 0; i < t.size(); ++i)
        z[b[i]] = t[i].back();
    result.status = LpStatus::optimal;
    result.value = tab.objective().back();
    result.x = zero_vector(n);
    for (std::size_t j = 0; j < n; ++j)
        result.x[j] = z[j] - z[n + j];
    return result;
}

/// Equalities a.x = b, strict inequalities a.x > b, weak inequalities a.x >= b.
struct ConstraintSystem
{
    std::size_t dim = 0;
    std::vector<LinearEquation> equalities;
    std::vector<LinearEquation> strict;
    std::vector<LinearEquation> weak;
};

struct FeasibilityResult
{
    bool feasible = false;
    std::optional<RatVector> witness; ///< relative-interior point when feasible
    int dim = -1;                     ///< dimension of the feasible set, -1 when empty
};

namespace detail {

/// A point satisfying the strict constraints strictly, or nullopt.
inline std::optional<RatVector> strict_point(const ConstraintSystem& sys)
{
    if (sys.strict.empty()) {
        auto r = lp_maximize(zero_vector(sys.dim), sys.equalities, sys.weak);
        if (r.status != LpStatus::optimal)
            return std::nullopt;
        return r.x;
    }
    // maximize t subject to a.x - t >= b (strict rows), weak rows, t <= 1.
    const std::size_t n = sys.dim + 1;
    auto lift = [&](const LinearEquation& e, const Rational& tcoef) {
        LinearEquation l{e.a, e.rhs};
        l.a.push_back(tcoef);
        return l;
    };
    std::vector<LinearEquation> eqs, ineqs;
    for (const auto& e : sys.equalities)
        eqs.push_back(lift(e, 0));
    for (const auto& e : sys.strict)
        ineqs.push_back(lift(e, -1));
    for (const auto& e : sys.weak)
        ineqs.push_back(lift(e, 0));
    LinearEquation cap{zero_vector(n), Rational(-1)};
    cap.a[sys.dim] = -1;
    ineqs.push_back(cap);
    auto r = lp_maximize(unit_vector(n, sys.dim), eqs, ineqs);
    if (r.status != LpStatus::optimal || r.value <= 0)
        return std::nullopt;
    r.x.pop_back();
    return r.x;
}

} // namespace detail

/**
 * Exact decision of {equalities, strict, weak}. When feasible, the witness
 * lies in the relative interior of the feasible set: it satisfies every weak
 * inequality that is not an implicit equality strictly. The dimension is
 * dim - rank(equalities + implicit equalities).
 */
inline FeasibilityResult strict_feasibility(const ConstraintSystem& sys)
{
    auto check = [&](const std::vector<LinearEquation>& list) {
        for (const auto& e : list)
            if (e.a.size() != sys.dim)
                throw InputError("strict_feasibility: constraint dimension mismatch");
    };
    check(sys.equalities);
    check(sys.strict);
    check(sys.weak);

    FeasibilityResult res;
    auto base = detail::strict_point(sys);
    if (!base)
        return res;
    res.feasible = true;

    std::vector<RatVector> rows;
    for (const auto& e : sys.equalities)
        rows.push_back(e.a);
    RatVector sum = *base;
    std::size_t count = 1;
    for (std::size_t j = 0; j < sys.weak.size(); ++j) {
        const auto& w = sys.weak[j];
        if (dot(w.a, *base) > w.rhs)
            continue;
        ConstraintSystem probe = sys;
        probe.strict.push_back(w);
        probe.weak.erase(probe.weak.begin() + static_cast<std::ptrdiff_t>(j));
        if (auto p = detail::strict_point(probe)) {
            sum = sum + *p;
            ++count;
        } else {
            rows.push_back(w.a);
        }
    }
    res.witness = (Rational(1) / Rational(count)) * sum;
    res.dim = static_cast<int>(sys.dim) - static_cast<int>(rank(rows, sys.dim));
    return res;
}

} // namespace eulercc

#endif // EULERCC_LINALG_HPP
