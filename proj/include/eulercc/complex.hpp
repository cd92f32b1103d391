#ifndef EULERCC_COMPLEX_HPP
#define EULERCC_COMPLEX_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "functions.hpp"
#include "linalg.hpp"

namespace eulercc {

using VertexId = std::size_t;
using SimplexId = std::size_t;
using Simplex = std::vector<VertexId>;   ///< sorted vertex ids
using Subcomplex = std::set<SimplexId>;  ///< set of simplex ids (closure-closed when a subcomplex)

inline std::string simplex_key(const Simplex& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

inline bool is_face_of(const Simplex& face, const Simplex& s)
{
    return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

/// An open simplex viewed as a stratum: tangent directions and a relative-interior basepoint.
struct StratumRef
{
    SimplexId id = 0;
    Simplex simplex;
    std::size_t dim = 0;
    std::vector<RatVector> direction_basis; ///< v_i - v_0
    RatVector barycenter;
};

/**
 * Finite simplicial complex with rational vertex coordinates. Simplices are
 * kept sorted by dimension, then lexicographically, and are addressed by
 * their position in that order.
 */
class EmbeddedComplex
{
public:
    EmbeddedComplex() = default;

    EmbeddedComplex(std::size_t ambient_dim, std::vector<RatVector> vertices,
                    std::vector<Simplex> simplices, bool close = false)
        : ambient_dim_(ambient_dim), vertices_(std::move(vertices))
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i].size() != ambient_dim_)
                throw InputError("vertex " + std::to_string(i) + " has dimension " +
                                 std::to_string(vertices_[i].size()) + ", expected " +
                                 std::to_string(ambient_dim_));
        std::set<Simplex> all;
        for (auto s : simplices) {
            std::sort(s.begin(), s.end());
            if (s.empty())
                throw InputError("empty simplex");
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw InputError("simplex {" + simplex_key(s) + "} repeats a vertex");
            if (s.back() >= vertices_.size())
                throw InputError("simplex {" + simplex_key(s) + "} references an unknown vertex");
            if (close) {
                const std::size_t k = s.size();
                for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
                    Simplex f;
                    for (std::size_t i = 0; i < k; ++i)
                        if (mask & (std::size_t(1) << i))
                            f.push_back(s[i]);
                    all.insert(std::move(f));
                }
            } else {
                all.insert(std::move(s));
            }
        }
        simplices_.assign(all.begin(), all.end());
        std::stable_sort(simplices_.begin(), simplices_.end(),
                         [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
        for (SimplexId i = 0; i < simplices_.size(); ++i)
            index_.emplace(simplices_[i], i);

        faces_.resize(simplices_.size());
        cofaces_.resize(simplices_.size());
        for (SimplexId i = 0; i < simplices_.size(); ++i) {
            const Simplex& s = simplices_[i];
            const std::size_t k = s.size();
            if (k > 16)
                throw InputError("simplex dimension too large");
            for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
                Simplex f;
                for (std::size_t j = 0; j < k; ++j)
                    if (mask & (std::size_t(1) << j))
                        f.push_back(s[j]);
                if (auto it = index_.find(f); it != index_.end()) {
                    faces_[i].push_back(it->second);
                    cofaces_[it->second].push_back(i);
                }
            }
        }
        for (auto& c : cofaces_)
            std::sort(c.begin(), c.end());
        for (auto& f : faces_)
            std::sort(f.begin(), f.end());
    }

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
    const RatVector& vertex(VertexId v) const { return vertices_.at(v); }

    std::size_t size() const noexcept { return simplices_.size(); }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    const Simplex& simplex(SimplexId id) const { return simplices_.at(id); }
    std::size_t dim(SimplexId id) const { return simplices_.at(id).size() - 1; }

    std::size_t top_dim() const { return simplices_.empty() ? 0 : simplices_.back().size() - 1; }

    std::optional<SimplexId> find(Simplex s) const
    {
        std::sort(s.begin(), s.end());
        if (auto it = index_.find(s); it != index_.end())
            return it->second;
        return std::nullopt;
    }

    SimplexId id_of(const Simplex& s) const
    {
        if (auto id = find(s))
            return *id;
        throw InputError("unknown simplex {" + simplex_key(s) + "}");
    }

    /// Proper faces present in the complex.
    const std::vector<SimplexId>& faces(SimplexId id) const { return faces_.at(id); }
    /// Simplices strictly containing `id`.
    const std::vector<SimplexId>& coface_ids(SimplexId id) const { return cofaces_.at(id); }

    StratumRef stratum(SimplexId id) const
    {
        const Simplex& s = simplex(id);
        StratumRef r;
        r.id = id;
        r.simplex = s;
        r.dim = s.size() - 1;
        const RatVector& v0 = vertices_[s[0]];
        for (std::size_t i = 1; i < s.size(); ++i)
            r.direction_basis.push_back(vertices_[s[i]] - v0);
        r.barycenter = zero_vector(ambient_dim_);
        for (auto v : s)
            r.barycenter = r.barycenter + vertices_[v];
        r.barycenter = (Rational(1) / Rational(s.size())) * r.barycenter;
        return r;
    }

    /// Vertices of cofaces of `id` that are not vertices of `id`, sorted.
    std::vector<VertexId> star_vertices(SimplexId id) const
    {
        std::set<VertexId> out;
        const Simplex& s = simplex(id);
        for (auto c : cofaces_.at(id))
            for (auto v : simplices_[c])
                if (!std::binary_search(s.begin(), s.end(), v))
                    out.insert(v);
        return {out.begin(), out.end()};
    }

    Subcomplex all() const
    {
        Subcomplex s;
        for (SimplexId i = 0; i < size(); ++i)
            s.insert(s.end(), i);
        return s;
    }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<RatVector> vertices_;
    std::vector<Simplex> simplices_;
    std::map<Simplex, SimplexId> index_;
    std::vector<std::vector<SimplexId>> faces_;
    std::vector<std::vector<SimplexId>> cofaces_;
};

using ComplexPtr = std::shared_ptr<const EmbeddedComplex>;

// ---------------------------------------------------------------------------
// validation

struct Violation
{
    enum class Kind { closure, affine_dependence, geometric_consistency };
    Kind kind;
    std::vector<Simplex> simplices;
    std::string message;
};

namespace detail {

inline bool affinely_independent(const EmbeddedComplex& k, const Simplex& s)
{
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < s.size(); ++i)
        diffs.push_back(k.vertex(s[i]) - k.vertex(s[0]));
    return rank(diffs, k.ambient_dim()) == diffs.size();
}

inline bool boxes_overlap(const EmbeddedComplex& k, const Simplex& a, const Simplex& b)
{
    for (std::size_t c = 0; c < k.ambient_dim(); ++c) {
        Rational alo = k.vertex(a[0])[c], ahi = alo, blo = k.vertex(b[0])[c], bhi = blo;
        for (auto v : a) {
            alo = std::min(alo, k.vertex(v)[c]);
            ahi = std::max(ahi, k.vertex(v)[c]);
        }
        for (auto v : b) {
            blo = std::min(blo, k.vertex(v)[c]);
            bhi = std::max(bhi, k.vertex(v)[c]);
        }
        if (ahi < blo || bhi < alo)
            return false;
    }
    return true;
}

/// Do two closed simplices meet outside the face spanned by their common vertices?
inline bool meet_improperly(const EmbeddedComplex& k, const Simplex& a, const Simplex& b)
{
    const std::size_t na = a.size(), nb = b.size(), n = na + nb;
    LinearEquation sa{zero_vector(n), Rational(1)}, sb{zero_vector(n), Rational(1)};
    for (std::size_t i = 0; i < na; ++i)
        sa.a[i] = 1;
    for (std::size_t j = 0; j < nb; ++j)
        sb.a[na + j] = 1;
    std::vector<LinearEquation> eqs{sa, sb};
    for (std::size_t c = 0; c < k.ambient_dim(); ++c) {
        LinearEquation e{zero_vector(n), Rational(0)};
        for (std::size_t i = 0; i < na; ++i)
            e.a[i] = k.vertex(a[i])[c];
        for (std::size_t j = 0; j < nb; ++j)
            e.a[na + j] = -k.vertex(b[j])[c];
        eqs.push_back(std::move(e));
    }
    std::vector<LinearEquation> nonneg;
    for (std::size_t i = 0; i < n; ++i)
        nonneg.push_back({unit_vector(n, i), Rational(0)});
    RatVector outside = zero_vector(n);
    for (std::size_t i = 0; i < na; ++i)
        if (!std::binary_search(b.begin(), b.end(), a[i]))
            outside[i] = 1;
    const auto r = lp_maximize(outside, eqs, nonneg);
    return r.status == LpStatus::optimal && r.value > 0;
}

} // namespace detail

/**
 * Checks closure, affine independence and geometric consistency. The last
 * only needs maximal simplices: if any two of them meet in their common face,
 * so do all of their faces.
 */
inline std::vector<Violation> validate(const EmbeddedComplex& k)
{
    std::vector<Violation> out;
    for (const auto& s : k.simplices()) {
        if (s.size() < 2)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            if (!k.find(f))
                out.push_back({Violation::Kind::closure, {s, f},
                               "face {" + simplex_key(f) + "} of {" + simplex_key(s) + "} is missing"});
        }
    }
    bool independent = true;
    for (const auto& s : k.simplices())
        if (!detail::affinely_independent(k, s)) {
            independent = false;
            out.push_back({Violation::Kind::affine_dependence, {s},
                           "vertices of {" + simplex_key(s) + "} are affinely dependent"});
        }
    if (!independent)
        return out;
    std::vector<Simplex> maximal;
    for (SimplexId id = 0; id < k.size(); ++id)
        if (k.coface_ids(id).empty())
            maximal.push_back(k.simplex(id));
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            const auto& a = maximal[i];
            const auto& b = maximal[j];
            if (!detail::boxes_overlap(k, a, b))
                continue;
            if (detail::meet_improperly(k, a, b))
                out.push_back({Violation::Kind::geometric_consistency, {a, b},
                               "simplices {" + simplex_key(a) + "} and {" + simplex_key(b) +
                                   "} intersect outside a common face"});
        }
    return out;
}

// ---------------------------------------------------------------------------
// subcomplexes and stars

inline bool is_subcomplex(const EmbeddedComplex& k, const Subcomplex& s)
{
    for (auto id : s) {
        if (id >= k.size())
            return false;
        for (auto f : k.faces(id))
            if (!s.count(f))
                return false;
    }
    return true;
}

inline void require_subcomplex(const EmbeddedComplex& k, const Subcomplex& s, const char* where)
{
    if (!is_subcomplex(k, s))
        throw InputError(std::string(where) + ": region is not a subcomplex");
}

/// Smallest subcomplex containing the given simplices.
inline Subcomplex closure(const EmbeddedComplex& k, const Subcomplex& s)
{
    Subcomplex out;
    for (auto id : s) {
        out.insert(id);
        for (auto f : k.faces(id))
            out.insert(f);
    }
    return out;
}

/// All simplices incident to `id` together with `id`.
inline std::vector<StratumRef> cofaces(const EmbeddedComplex& k, const StratumRef& s)
{
    if (s.id >= k.size() || k.simplex(s.id) != s.simplex)
        throw InputError("cofaces: stratum is not a simplex of this complex");
    std::vector<StratumRef> out;
    for (auto c : k.coface_ids(s.id))
        out.push_back(k.stratum(c));
    return out;
}

/// Simplices whose closure meets |region|, i.e. those sharing a vertex with it.
inline Subcomplex open_star(const EmbeddedComplex& k, const Subcomplex& region)
{
    std::set<VertexId> verts;
    for (auto id : region)
        for (auto v : k.simplex(id))
            verts.insert(v);
    Subcomplex out;
    for (SimplexId i = 0; i < k.size(); ++i)
        for (auto v : k.simplex(i))
            if (verts.count(v)) {
                out.insert(i);
                break;
            }
    return out;
}

inline Subcomplex closed_star(const EmbeddedComplex& k, const Subcomplex& region)
{
    require_subcomplex(k, region, "closed_star");
    return closure(k, open_star(k, region));
}

/// Tube simplices that are faces of something outside the tube.
inline Subcomplex frontier(const EmbeddedComplex& k, const Subcomplex& tube)
{
    Subcomplex out;
    for (auto id : tube)
        for (auto c : k.coface_ids(id))
            if (!tube.count(c)) {
                out.insert(id);
                break;
            }
    return out;
}

inline std::int64_t euler_characteristic(const EmbeddedComplex& k, const Subcomplex& region)
{
    std::int64_t chi = 0;
    for (auto id : region)
        chi += (k.dim(id) % 2 == 0) ? 1 : -1;
    return chi;
}

/// The simplex whose relative interior contains x, if x lies in |k|.
inline std::optional<SimplexId> locate(const EmbeddedComplex& k, const RatVector& x)
{
    if (x.size() != k.ambient_dim())
        throw InputError("locate: point dimension mismatch");
    for (SimplexId id = 0; id < k.size(); ++id) {
        const Simplex& s = k.simplex(id);
        bool boxed = true;
        for (std::size_t c = 0; c < k.ambient_dim() && boxed; ++c) {
            bool below = false, above = false;
            for (auto v : s) {
                below |= k.vertex(v)[c] <= x[c];
                above |= k.vertex(v)[c] >= x[c];
            }
            boxed = below && above;
        }
        if (!boxed)
            continue;
        // Solve for barycentric weights: sum w = 1, sum w v = x.
        std::vector<LinearEquation> eqs;
        LinearEquation sum{RatVector(s.size(), Rational(1)), Rational(1)};
        eqs.push_back(sum);
        for (std::size_t c = 0; c < k.ambient_dim(); ++c) {
            LinearEquation e{zero_vector(s.size()), x[c]};
            for (std::size_t i = 0; i < s.size(); ++i)
                e.a[i] = k.vertex(s[i])[c];
            eqs.push_back(std::move(e));
        }
        auto sol = solve_affine(eqs, s.size());
        if (!sol || sol->dim() != 0)
            continue;
        if (std::all_of(sol->basepoint.begin(), sol->basepoint.end(),
                        [](const Rational& w) { return w > 0; }))
            return id;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// subdivisions

/// A subdivided complex with, for each new simplex, the old open simplex containing it.
struct Subdivision
{
    ComplexPtr complex;
    std::vector<SimplexId> ancestry;
};

inline Subdivision barycentric_subdivide(const EmbeddedComplex& k, std::size_t times = 1)
{
    Subdivision result;
    result.complex = std::make_shared<const EmbeddedComplex>(k);
    result.ancestry.resize(k.size());
    for (SimplexId i = 0; i < k.size(); ++i)
        result.ancestry[i] = i;

    for (std::size_t round = 0; round < times; ++round) {
        const EmbeddedComplex& old = *result.complex;
        std::vector<RatVector> verts;
        verts.reserve(old.size());
        for (SimplexId i = 0; i < old.size(); ++i)
            verts.push_back(old.stratum(i).barycenter);

        // chains[i]: all flags of simplices ending at simplex i, as sorted id lists.
        std::vector<std::vector<Simplex>> chains(old.size());
        std::vector<Simplex> all;
        std::vector<SimplexId> top;
        for (SimplexId i = 0; i < old.size(); ++i) {
            chains[i].push_back({i});
            for (auto f : old.faces(i))
                for (const auto& c : chains[f]) {
                    Simplex ext = c;
                    ext.push_back(i);
                    chains[i].push_back(std::move(ext));
                }
            for (const auto& c : chains[i]) {
                Simplex sorted = c;
                std::sort(sorted.begin(), sorted.end());
                all.push_back(std::move(sorted));
                top.push_back(i);
            }
        }
        auto next = std::make_shared<const EmbeddedComplex>(old.ambient_dim(), std::move(verts), all);
        std::vector<SimplexId> anc(next->size());
        for (std::size_t j = 0; j < all.size(); ++j)
            anc[next->id_of(all[j])] = result.ancestry[top[j]];
        result.complex = std::move(next);
        result.ancestry = std::move(anc);
    }
    return result;
}

/**
 * Cut every simplex by the hyperplane a . y = c and triangulate the convex
 * pieces with a pulling triangulation (cone from the smallest vertex id over
 * the facets not containing it). A face's triangulation depends only on the
 * face, so pieces glue consistently.
 */
inline Subdivision subdivide_along_hyperplane(const EmbeddedComplex& k, const RatVector& a,
                                              const Rational& c)
{
    if (a.size() != k.ambient_dim())
        throw InputError("subdivide_along_hyperplane: normal has wrong dimension");
    const std::size_t n = k.vertex_count();
    std::vector<int> side(n);
    std::vector<Rational> value(n);
    for (VertexId v = 0; v < n; ++v) {
        value[v] = dot(a, k.vertex(v)) - c;
        side[v] = sign(value[v]);
    }

    std::vector<RatVector> verts = k.vertices();
    std::vector<Simplex> carrier;
    for (VertexId v = 0; v < n; ++v)
        carrier.push_back({v});
    std::map<SimplexId, VertexId> cut_of_edge;
    for (SimplexId id = 0; id < k.size(); ++id) {
        const Simplex& s = k.simplex(id);
        if (s.size() != 2 || side[s[0]] * side[s[1]] >= 0)
            continue;
        const Rational t = value[s[0]] / (value[s[0]] - value[s[1]]);
        verts.push_back(k.vertex(s[0]) + t * (k.vertex(s[1]) - k.vertex(s[0])));
        carrier.push_back(s);
        cut_of_edge[id] = verts.size() - 1;
    }

    struct Cell
    {
        Simplex vertices;
        std::size_t dim;
    };
    std::map<std::pair<SimplexId, int>, Cell> cells;
    auto sides_of = [&](const Simplex& s) {
        bool neg = false, pos = false;
        for (auto v : s) {
            neg |= side[v] < 0;
            pos |= side[v] > 0;
        }
        return std::pair{neg, pos};
    };
    auto cuts_in = [&](SimplexId id) {
        std::vector<VertexId> out;
        for (auto f : k.faces(id))
            if (auto it = cut_of_edge.find(f); it != cut_of_edge.end())
                out.push_back(it->second);
        if (auto it = cut_of_edge.find(id); it != cut_of_edge.end())
            out.push_back(it->second);
        return out;
    };
    for (SimplexId id = 0; id < k.size(); ++id) {
        const Simplex& s = k.simplex(id);
        const auto [neg, pos] = sides_of(s);
        const auto cuts = cuts_in(id);
        auto build = [&](auto keep) {
            Simplex vs;
            for (auto v : s)
                if (keep(side[v]))
                    vs.push_back(v);
            vs.insert(vs.end(), cuts.begin(), cuts.end());
            std::sort(vs.begin(), vs.end());
            return vs;
        };
        if (!neg && !pos) {
            cells[{id, 0}] = {s, s.size() - 1};
            continue;
        }
        if (neg)
            cells[{id, -1}] = {build([](int sd) { return sd <= 0; }), s.size() - 1};
        if (pos)
            cells[{id, 1}] = {build([](int sd) { return sd >= 0; }), s.size() - 1};
        if (neg && pos)
            cells[{id, 0}] = {build([](int sd) { return sd == 0; }), s.size() - 2};
    }

    // Facets of a cell: cells in its closure of one lower dimension.
    auto facets = [&](SimplexId id, int sd) {
        std::vector<std::pair<SimplexId, int>> out;
        const std::size_t d = cells.at({id, sd}).dim;
        std::vector<SimplexId> pool = k.faces(id);
        pool.push_back(id);
        for (auto t : pool) {
            for (int s2 : {sd, 0}) {
                if (t == id && s2 == sd)
                    continue;
                auto it = cells.find({t, s2});
                if (it != cells.end() && it->second.dim + 1 == d)
                    out.push_back(it->first);
            }
        }
        return out;
    };

    std::map<std::pair<SimplexId, int>, std::set<Simplex>> memo;
    std::function<const std::set<Simplex>&(SimplexId, int)> triangulate =
        [&](SimplexId id, int sd) -> const std::set<Simplex>& {
        auto key = std::pair{id, sd};
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const Cell& cell = cells.at(key);
        std::set<Simplex> out;
        const VertexId apex = cell.vertices.front();
        out.insert({apex});
        if (cell.dim > 0) {
            for (const auto& f : facets(id, sd)) {
                const auto& sub = triangulate(f.first, f.second);
                out.insert(sub.begin(), sub.end());
                const Simplex& fv = cells.at(f).vertices;
                if (std::binary_search(fv.begin(), fv.end(), apex))
                    continue;
                for (const auto& s : sub) {
                    Simplex cone = s;
                    cone.insert(std::lower_bound(cone.begin(), cone.end(), apex), apex);
                    out.insert(std::move(cone));
                }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };

    std::set<Simplex> all;
    for (const auto& [key, cell] : cells) {
        const auto& t = triangulate(key.first, key.second);
        all.insert(t.begin(), t.end());
    }
    std::vector<Simplex> list(all.begin(), all.end());
    Subdivision result;
    result.complex = std::make_shared<const EmbeddedComplex>(k.ambient_dim(), std::move(verts), list);
    result.ancestry.resize(result.complex->size());
    for (SimplexId id = 0; id < result.complex->size(); ++id) {
        std::set<VertexId> old;
        for (auto v : result.complex->simplex(id))
            old.insert(carrier[v].begin(), carrier[v].end());
        result.ancestry[id] = k.id_of(Simplex(old.begin(), old.end()));
    }
    return result;
}

/// Copy of a subcomplex as a standalone complex; `origin` maps new ids to old ids.
struct ExtractedComplex
{
    ComplexPtr complex;
    std::vector<SimplexId> origin;
    std::vector<VertexId> vertex_origin;
};

inline ExtractedComplex extract(const EmbeddedComplex& k, const Subcomplex& region)
{
    require_subcomplex(k, region, "extract");
    std::map<VertexId, VertexId> vmap;
    ExtractedComplex out;
    std::vector<RatVector> verts;
    for (auto id : region)
        for (auto v : k.simplex(id))
            vmap.emplace(v, 0);
    for (auto& [old, neu] : vmap) {
        neu = verts.size();
        verts.push_back(k.vertex(old));
        out.vertex_origin.push_back(old);
    }
    std::vector<Simplex> simplices;
    for (auto id : region) {
        Simplex s;
        for (auto v : k.simplex(id))
            s.push_back(vmap[v]);
        simplices.push_back(std::move(s));
    }
    out.complex = std::make_shared<const EmbeddedComplex>(k.ambient_dim(), std::move(verts), simplices);
    out.origin.resize(out.complex->size());
    std::size_t j = 0;
    for (auto id : region)
        out.origin[out.complex->id_of(simplices[j++])] = id;
    return out;
}

// ---------------------------------------------------------------------------
// slicing and homology

/// relint(face) ∩ {f = c}
struct SlicePiece
{
    StratumRef face;
    int piece_dim = -1;
    bool nonempty = false;
};

inline std::vector<SlicePiece> slice_pieces(const EmbeddedComplex& k, const Subcomplex& region,
                                            const AffineFunction& f, const Rational& c)
{
    require_subcomplex(k, region, "slice_pieces");
    if (f.dim() != k.ambient_dim())
        throw InputError("slice_pieces: function dimension mismatch");
    std::vector<SlicePiece> out;
    for (auto id : region) {
        const Simplex& s = k.simplex(id);
        bool below = false, above = false, all_on = true;
        for (auto v : s) {
            const int sd = sign(f(k.vertex(v)) - c);
            below |= sd < 0;
            above |= sd > 0;
            all_on &= sd == 0;
        }
        SlicePiece p;
        p.face = k.stratum(id);
        if (all_on) {
            p.piece_dim = static_cast<int>(s.size()) - 1;
            p.nonempty = true;
        } else if (below && above) {
            p.piece_dim = static_cast<int>(s.size()) - 2;
            p.nonempty = true;
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Rational Betti numbers of a subcomplex via sparse column reduction of boundary matrices.
inline std::vector<std::size_t> betti_oracle(const EmbeddedComplex& k, const Subcomplex& region)
{
    require_subcomplex(k, region, "betti_oracle");
    if (region.empty())
        return {};
    std::size_t top = 0;
    for (auto id : region)
        top = std::max(top, k.dim(id));
    std::vector<std::vector<SimplexId>> by_dim(top + 1);
    for (auto id : region)
        by_dim[k.dim(id)].push_back(id);

    std::vector<std::size_t> ranks(top + 2, 0); // ranks[d] = rank of boundary C_d -> C_{d-1}
    for (std::size_t d = 1; d <= top; ++d) {
        std::map<SimplexId, std::size_t> row_of;
        for (std::size_t r = 0; r < by_dim[d - 1].size(); ++r)
            row_of[by_dim[d - 1][r]] = r;
        std::map<std::size_t, std::map<std::size_t, Rational>> pivot_cols; // low -> column
        std::size_t r = 0;
        for (auto id : by_dim[d]) {
            const Simplex& s = k.simplex(id);
            std::map<std::size_t, Rational> col;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                col[row_of.at(k.id_of(f))] = (i % 2 == 0) ? 1 : -1;
            }
            while (!col.empty()) {
                const std::size_t low = col.rbegin()->first;
                auto it = pivot_cols.find(low);
                if (it == pivot_cols.end())
                    break;
                const Rational factor = col.rbegin()->second / it->second.at(low);
                for (const auto& [row, val] : it->second) {
                    Rational& x = col[row];
                    x -= factor * val;
                    if (x == 0)
                        col.erase(row);
                }
            }
            if (!col.empty()) {
                const std::size_t low = col.rbegin()->first;
                pivot_cols.emplace(low, std::move(col));
                ++r;
            }
        }
        ranks[d] = r;
    }
    std::vector<std::size_t> betti(top + 1);
    for (std::size_t d = 0; d <= top; ++d)
        betti[d] = by_dim[d].size() - ranks[d] - ranks[d + 1];
    return betti;
}

} // namespace eulercc

#endif // EULERCC_COMPLEX_HPP
