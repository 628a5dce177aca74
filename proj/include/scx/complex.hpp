#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scx/fourier_motzkin.hpp"
#include "scx/simplex.hpp"

namespace scx {

/// Abstract simplex: a nonempty set of vertex labels, kept sorted.
class AbstractSimplex {
public:
    explicit AbstractSimplex(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw ValueError("abstract simplex must be nonempty");
        std::sort(labels_.begin(), labels_.end());
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
            throw ValueError("abstract simplex has a repeated label");
    }
    AbstractSimplex(std::initializer_list<std::string> labels)
        : AbstractSimplex(std::vector<std::string>(labels)) {}

    std::size_t dim() const { return labels_.size() - 1; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool contains(const std::string& label) const {
        return std::binary_search(labels_.begin(), labels_.end(), label);
    }
    bool is_face_of(const AbstractSimplex& other) const {
        return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                             labels_.end());
    }

    /// Shared labels with another simplex (may be empty).
    std::vector<std::string> shared_labels(const AbstractSimplex& other) const {
        std::vector<std::string> out;
        std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                              other.labels_.end(), std::back_inserter(out));
        return out;
    }

    /// Every nonempty proper subset, ascending dimension then lexicographic.
    std::vector<AbstractSimplex> proper_faces() const {
        std::vector<AbstractSimplex> out;
        std::size_t n = labels_.size();
        for (std::size_t k = 1; k < n; ++k) {
            detail::combinations(n, k, [&](const std::vector<std::size_t>& idx) {
                std::vector<std::string> f;
                f.reserve(k);
                for (std::size_t i : idx) f.push_back(labels_[i]);
                out.emplace_back(std::move(f));
            });
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) os << ",";
            os << labels_[i];
        }
        os << "}";
        return os.str();
    }

    friend bool operator==(const AbstractSimplex& a, const AbstractSimplex& b) {
        return a.labels_ == b.labels_;
    }
    friend bool operator<(const AbstractSimplex& a, const AbstractSimplex& b) {
        if (a.labels_.size() != b.labels_.size()) return a.labels_.size() < b.labels_.size();
        return a.labels_ < b.labels_;
    }

private:
    std::vector<std::string> labels_;
};

using SimplexSet = std::set<AbstractSimplex>;

/// Simplicial complex: a vertex table (label -> ambient coordinates) plus a
/// set of abstract simplices over those labels. Construction checks label
/// coverage and uniform ambient dimension; geometric validity is the
/// validators' job.
class SimplicialComplex {
public:
    SimplicialComplex(std::map<std::string, Vector> vertex_table, SimplexSet simplices)
        : table_(std::move(vertex_table)), simplices_(std::move(simplices)) {
        std::optional<std::size_t> dim;
        for (const auto& [label, coords] : table_) {
            if (!dim) dim = coords.dim();
            if (coords.dim() != *dim)
                throw DimensionMismatchError("vertex table has mixed ambient dimensions");
        }
        for (const auto& s : simplices_)
            for (const auto& label : s.labels())
                if (!table_.count(label)) throw UnknownVertexError(label);
    }

    const std::map<std::string, Vector>& vertex_table() const { return table_; }
    const SimplexSet& simplices() const { return simplices_; }
    bool empty() const { return simplices_.empty(); }
    bool contains(const AbstractSimplex& s) const { return simplices_.count(s) > 0; }

    const Vector& coords_of(const std::string& label) const {
        auto it = table_.find(label);
        if (it == table_.end()) throw UnknownVertexError(label);
        return it->second;
    }

    /// Geometric simplex realizing an abstract one.
    GeometricSimplex realize(const AbstractSimplex& s) const {
        std::vector<Vector> pts;
        pts.reserve(s.size());
        for (const auto& label : s.labels()) pts.push_back(coords_of(label));
        return GeometricSimplex(PointSet(std::move(pts)));
    }

    /// Labels that actually occur in some simplex.
    std::set<std::string> used_labels() const {
        std::set<std::string> out;
        for (const auto& s : simplices_)
            for (const auto& label : s.labels()) out.insert(label);
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.table_ == b.table_ && a.simplices_ == b.simplices_;
    }

private:
    std::map<std::string, Vector> table_;
    SimplexSet simplices_;
};

/// Smallest face-closed superset of the given simplices.
inline SimplexSet face_closure(const SimplexSet& simplices) {
    SimplexSet out;
    for (const auto& s : simplices) {
        out.insert(s);
        for (const auto& f : s.proper_faces()) out.insert(f);
    }
    return out;
}

struct MissingFace {
    AbstractSimplex simplex;
    AbstractSimplex face;
};

struct BadIntersection {
    AbstractSimplex a;
    AbstractSimplex b;
    std::optional<Vector> witness;                   // point interior to both
    std::optional<AbstractSimplex> missing_shared_face;  // shared vertices not in K
};

struct ValidationReport {
    bool ok = true;
    std::vector<MissingFace> missing_faces;
    std::vector<AbstractSimplex> dependent_simplices;
    std::vector<BadIntersection> bad_intersections;
};

namespace detail {

inline bool boxes_overlap(const GeometricSimplex& a, const GeometricSimplex& b) {
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
        Rational amin = a.vertex(0)[c], amax = amin, bmin = b.vertex(0)[c], bmax = bmin;
        for (std::size_t i = 1; i <= a.dim(); ++i) {
            amin = std::min(amin, a.vertex(i)[c]);
            amax = std::max(amax, a.vertex(i)[c]);
        }
        for (std::size_t i = 1; i <= b.dim(); ++i) {
            bmin = std::min(bmin, b.vertex(i)[c]);
            bmax = std::max(bmax, b.vertex(i)[c]);
        }
        if (amax < bmin || bmax < amin) return false;
    }
    return true;
}

/// Decides Int(a) cap Int(b) != {} exactly: a point shared by both open
/// simplices is a solution of a linear system with strict positivity, handed
/// to Fourier-Motzkin. Returns a witness point when the interiors meet.
inline std::optional<Vector> interior_intersection_witness(const GeometricSimplex& a,
                                                           const GeometricSimplex& b) {
    if (!boxes_overlap(a, b)) return std::nullopt;
    const std::size_t na = a.dim() + 1, nb = b.dim() + 1, n = na + nb;
    const std::size_t N = a.ambient_dim();

    std::vector<fm::Equation> eqs;
    for (std::size_t c = 0; c < N; ++c) {
        fm::Equation e;
        e.coeffs.assign(n, Rational(0));
        for (std::size_t i = 0; i < na; ++i) e.coeffs[i] = a.vertex(i)[c];
        for (std::size_t j = 0; j < nb; ++j) e.coeffs[na + j] = -b.vertex(j)[c];
        e.constant = Rational(0);
        eqs.push_back(std::move(e));
    }
    for (int which = 0; which < 2; ++which) {
        fm::Equation e;
        e.coeffs.assign(n, Rational(0));
        for (std::size_t i = 0; i < (which == 0 ? na : nb); ++i)
            e.coeffs[(which == 0 ? 0 : na) + i] = Rational(1);
        e.constant = Rational(-1);
        eqs.push_back(std::move(e));
    }
    std::vector<fm::Inequality> ineqs;
    for (std::size_t v = 0; v < n; ++v) {
        fm::Inequality q;
        q.coeffs.assign(n, Rational(0));
        q.coeffs[v] = Rational(1);
        q.constant = Rational(0);
        q.strict = true;
        ineqs.push_back(std::move(q));
    }
    fm::Feasibility f = fm::feasible_point(n, eqs, ineqs);
    if (!f.feasible) return std::nullopt;
    Vector x = Vector::zero(N);
    for (std::size_t i = 0; i < na; ++i) x = x + f.point[i] * a.vertex(i);
    return x;
}

enum class ValidationStyle { Definitional, DisjointInteriors };

inline ValidationReport validate_impl(const SimplicialComplex& k, ValidationStyle style) {
    if (k.empty()) throw EmptyComplexError();
    ValidationReport report;

    for (const auto& s : k.simplices())
        for (const auto& f : s.proper_faces())
            if (!k.contains(f)) report.missing_faces.push_back({s, f});

    std::map<AbstractSimplex, std::optional<GeometricSimplex>> realized;
    for (const auto& s : k.simplices()) {
        std::vector<Vector> pts;
        for (const auto& label : s.labels()) pts.push_back(k.coords_of(label));
        PointSet ps(std::move(pts));
        if (is_geometrically_independent(ps)) {
            realized.emplace(s, GeometricSimplex(std::move(ps)));
        } else {
            realized.emplace(s, std::nullopt);
            report.dependent_simplices.push_back(s);
        }
    }

    for (auto ia = k.simplices().begin(); ia != k.simplices().end(); ++ia) {
        for (auto ib = std::next(ia); ib != k.simplices().end(); ++ib) {
            const auto& ga = realized.at(*ia);
            const auto& gb = realized.at(*ib);
            if (!ga || !gb) continue;  // already reported as dependent

            if (style == ValidationStyle::Definitional) {
                std::vector<std::string> shared = ia->shared_labels(*ib);
                if (!shared.empty()) {
                    AbstractSimplex face(shared);
                    if (!k.contains(face))
                        report.bad_intersections.push_back({*ia, *ib, std::nullopt, face});
                }
            }
            // A simplex that is a face of the other meets it exactly in
            // itself; interiors cannot overlap.
            if (ia->is_face_of(*ib) || ib->is_face_of(*ia)) continue;
            if (auto w = interior_intersection_witness(*ga, *gb))
                report.bad_intersections.push_back({*ia, *ib, std::move(w), std::nullopt});
        }
    }

    report.ok = report.missing_faces.empty() && report.dependent_simplices.empty() &&
                report.bad_intersections.empty();
    return report;
}

}  // namespace detail

/// Validation straight from the definition: face closure, geometric
/// independence of every simplex, and for each pair the requirement that the
/// geometric intersection is the common face spanned by the shared vertices
/// and that this face belongs to the complex.
inline ValidationReport validate_definitional(const SimplicialComplex& k) {
    return detail::validate_impl(k, detail::ValidationStyle::Definitional);
}

/// Equivalent criterion: face closure plus pairwise disjoint open interiors,
/// decided exactly by Fourier-Motzkin feasibility.
inline ValidationReport validate_disjoint_interiors(const SimplicialComplex& k) {
    return detail::validate_impl(k, detail::ValidationStyle::DisjointInteriors);
}

/// Largest simplex dimension.
inline std::size_t dimension(const SimplicialComplex& k) {
    if (k.empty()) throw EmptyComplexError();
    std::size_t d = 0;
    for (const auto& s : k.simplices()) d = std::max(d, s.dim());
    return d;
}

/// l is a subcomplex of k: simplices contained, coordinates agree, l valid.
inline bool is_subcomplex(const SimplicialComplex& l, const SimplicialComplex& k) {
    for (const auto& s : l.simplices()) {
        if (!k.contains(s)) return false;
        for (const auto& label : s.labels())
            if (l.coords_of(label) != k.coords_of(label)) return false;
    }
    try {
        return validate_disjoint_interiors(l).ok;
    } catch (const EmptyComplexError&) {
        return false;
    }
}

namespace detail {
inline std::map<std::string, Vector> restrict_table(const SimplicialComplex& k,
                                                    const SimplexSet& simplices) {
    std::map<std::string, Vector> table;
    for (const auto& s : simplices)
        for (const auto& label : s.labels()) table.emplace(label, k.coords_of(label));
    return table;
}
}  // namespace detail

/// Simplices of dimension at most p (the Def keeps the 0-simplices in every
/// skeleton, even though the paper's worked K^(1) lists only edges).
inline SimplicialComplex skeleton(const SimplicialComplex& k, std::size_t p) {
    SimplexSet kept;
    for (const auto& s : k.simplices())
        if (s.dim() <= p) kept.insert(s);
    auto table = detail::restrict_table(k, kept);
    return SimplicialComplex(std::move(table), std::move(kept));
}

/// Sorted labels of the 0-simplices.
inline std::vector<std::string> vertices(const SimplicialComplex& k) {
    std::vector<std::string> out;
    for (const auto& s : k.simplices())
        if (s.dim() == 0) out.push_back(s.labels().front());
    return out;
}

namespace detail {
inline void require_vertex(const SimplicialComplex& k, const std::string& v) {
    for (const auto& s : k.simplices())
        if (s.contains(v)) return;
    throw UnknownVertexError(v);
}
}  // namespace detail

/// St(v, K): every simplex of K containing v. Includes the 0-simplex {v}
/// itself when present (the paper's worked list omits it; the definition
/// does not).
inline SimplexSet star(const SimplicialComplex& k, const std::string& v) {
    detail::require_vertex(k, v);
    SimplexSet out;
    for (const auto& s : k.simplices())
        if (s.contains(v)) out.insert(s);
    return out;
}

/// Cl(St(v, K)): the star plus all faces of its simplices, as a complex
/// over the restricted vertex table. Face closure is computed in full, also
/// where the paper's worked listing leaves faces out.
inline SimplicialComplex closed_star(const SimplicialComplex& k, const std::string& v) {
    SimplexSet st = star(k, v);
    SimplexSet closure;
    for (const auto& s : st) {
        closure.insert(s);
        for (const auto& f : s.proper_faces()) closure.insert(f);
    }
    auto table = detail::restrict_table(k, closure);
    return SimplicialComplex(std::move(table), std::move(closure));
}

/// Lk(v, K): simplices of the closed star that do not contain v.
inline SimplexSet link(const SimplicialComplex& k, const std::string& v) {
    SimplicialComplex cl = closed_star(k, v);
    SimplexSet out;
    for (const auto& s : cl.simplices())
        if (!s.contains(v)) out.insert(s);
    return out;
}

struct LocalFiniteness {
    bool locally_finite;                        // always true for finite complexes
    std::map<std::string, std::size_t> star_sizes;  // per-vertex certificate
};

inline LocalFiniteness is_locally_finite(const SimplicialComplex& k) {
    LocalFiniteness out;
    out.locally_finite = true;
    for (const auto& label : k.used_labels()) out.star_sizes[label] = star(k, label).size();
    return out;
}

/// Maximal elements under the face order; the projection the paper's worked
/// star/link lists are checked against.
inline SimplexSet maximal_faces(const SimplexSet& simplices) {
    SimplexSet out;
    for (const auto& s : simplices) {
        bool maximal = true;
        for (const auto& t : simplices)
            if (!(s == t) && s.is_face_of(t)) {
                maximal = false;
                break;
            }
        if (maximal) out.insert(s);
    }
    return out;
}

}  // namespace scx
