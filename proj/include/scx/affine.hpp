#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "scx/linalg.hpp"

namespace scx {

/// Ordered finite point set, all points in the same ambient dimension.
class PointSet {
public:
    explicit PointSet(std::vector<Vector> points) : points_(std::move(points)) {
        if (points_.empty()) throw ValueError("point set must be nonempty");
        for (const auto& p : points_)
            if (p.dim() != points_.front().dim())
                throw DimensionMismatchError("points with mixed ambient dimensions");
    }

    std::size_t size() const { return points_.size(); }
    std::size_t ambient_dim() const { return points_.front().dim(); }
    const Vector& operator[](std::size_t i) const { return points_.at(i); }
    const std::vector<Vector>& points() const { return points_; }

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

private:
    std::vector<Vector> points_;
};

/// v_i = a_i - a_0 for i = 1..n; empty for a singleton.
inline std::vector<Vector> relative_vectors(const PointSet& a) {
    std::vector<Vector> out;
    out.reserve(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] - a[0]);
    return out;
}

/// Matrix M_V whose columns are the relative vectors of the set.
inline Matrix relative_matrix(const PointSet& a) {
    return Matrix::from_columns(relative_vectors(a), a.ambient_dim());
}

/// Verdict of the rank test for geometric independence, with its witness.
struct IndependenceCheck {
    bool independent;
    std::size_t rank;        // rank of the relative-vector matrix
    Matrix relative_matrix;  // the matrix the rank was taken of
};

/// A set of n+1 points is geometrically independent iff the matrix of its n
/// relative vectors has rank n. A singleton is always independent.
inline IndependenceCheck check_geometric_independence(const PointSet& a) {
    Matrix mv = relative_matrix(a);
    std::size_t r = rank(mv);
    return {r == a.size() - 1, r, std::move(mv)};
}

inline bool is_geometrically_independent(const PointSet& a) {
    return check_geometric_independence(a).independent;
}

/// Affine coefficients (t_0,...,t_n) with sum exactly 1. Entries may be
/// negative; convexity is a separate question.
class BarycentricCoords {
public:
    explicit BarycentricCoords(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw ValueError("no coefficients");
        Rational sum(0);
        for (const auto& c : coeffs_) sum += c;
        if (sum != Rational(1)) throw ValueError("affine coefficients must sum to 1");
    }
    BarycentricCoords(std::initializer_list<Rational> coeffs)
        : BarycentricCoords(std::vector<Rational>(coeffs)) {}

    std::size_t size() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend bool operator==(const BarycentricCoords& a, const BarycentricCoords& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

/// n-plane through `base`, parallel to the (linearly independent) direction
/// vectors. A 0-plane has no directions and is a single point.
class AffinePlane {
public:
    AffinePlane(Vector base, std::vector<Vector> directions)
        : base_(std::move(base)), directions_(std::move(directions)) {
        for (const auto& d : directions_)
            if (d.dim() != base_.dim())
                throw DimensionMismatchError("plane directions vs base point");
        Matrix m = Matrix::from_columns(directions_, base_.dim());
        if (rank(m) != directions_.size())
            throw ValueError("plane directions are linearly dependent");
    }

    /// Plane spanned by a geometrically independent set: base a_0,
    /// directions a_i - a_0.
    static AffinePlane spanned_by(const PointSet& a) {
        if (!is_geometrically_independent(a))
            throw DependentVerticesError(check_geometric_independence(a).rank, a.size() - 1);
        return AffinePlane(a[0], relative_vectors(a));
    }

    const Vector& base() const { return base_; }
    const std::vector<Vector>& directions() const { return directions_; }
    std::size_t dim() const { return directions_.size(); }
    std::size_t ambient_dim() const { return base_.dim(); }

private:
    Vector base_;
    std::vector<Vector> directions_;
};

struct OnPlane {
    BarycentricCoords coeffs;  // w = sum t_i a_i with sum t_i = 1
};
struct OffPlane {};
using PlaneMembership = std::variant<OnPlane, OffPlane>;

/// Decides whether w lies on the plane and, if so, returns the affine
/// coefficients relative to the spanning set {base, base+v_1, ...}. The
/// t_0 = 1 - sum(s) coefficient is recomputed and the affine condition
/// re-verified; a failure there would be a library defect.
inline PlaneMembership plane_membership(const AffinePlane& p, const Vector& w) {
    if (w.dim() != p.ambient_dim()) throw DimensionMismatchError("plane membership point dim");
    if (p.dim() == 0) {
        if (w == p.base()) return OnPlane{BarycentricCoords{Rational(1)}};
        return OffPlane{};
    }
    Matrix mv = Matrix::from_columns(p.directions(), p.ambient_dim());
    Solution sol = solve(mv, w - p.base());
    if (std::holds_alternative<Inconsistent>(sol)) return OffPlane{};
    // Directions are linearly independent, so a consistent system is Unique.
    const Vector& s = std::get<Unique>(sol).x;
    std::vector<Rational> t(p.dim() + 1);
    Rational sum_s(0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        t[i + 1] = s[i];
        sum_s += s[i];
    }
    t[0] = Rational(1) - sum_s;
    Rational total(0);
    for (const auto& ti : t) total += ti;
    assert(total == Rational(1));
    return OnPlane{BarycentricCoords(std::move(t))};
}

struct Extended {
    std::size_t rank_before;
    std::size_t rank_after;
};
struct NotExtendable {};
using ExtensionResult = std::variant<Extended, NotExtendable>;

/// Rank test for adjoining w to a geometrically independent set: extended
/// iff rank(M_{V_w}) = rank(M_V) + 1.
inline ExtensionResult extend_independent(const PointSet& a, const Vector& w) {
    if (w.dim() != a.ambient_dim()) throw DimensionMismatchError("extend point dim");
    IndependenceCheck chk = check_geometric_independence(a);
    if (!chk.independent) throw DependentVerticesError(chk.rank, a.size() - 1);
    std::vector<Vector> cols = relative_vectors(a);
    std::size_t rank_before = rank(Matrix::from_columns(cols, a.ambient_dim()));
    cols.push_back(w - a[0]);
    std::size_t rank_after = rank(Matrix::from_columns(cols, a.ambient_dim()));
    if (rank_after == rank_before + 1) return Extended{rank_before, rank_after};
    return NotExtendable{};
}

/// T(x) = A x + b.
class AffineMap {
public:
    AffineMap(Matrix linear, Vector translation)
        : linear_(std::move(linear)), translation_(std::move(translation)) {
        if (linear_.rows() != linear_.cols()) throw DimensionMismatchError("affine matrix not square");
        if (translation_.dim() != linear_.rows())
            throw DimensionMismatchError("affine translation dim");
    }

    const Matrix& linear() const { return linear_; }
    const Vector& translation() const { return translation_; }
    bool invertible() const { return rank(linear_) == linear_.cols(); }

private:
    Matrix linear_;
    Vector translation_;
};

inline Vector apply_affine(const AffineMap& t, const Vector& x) {
    if (x.dim() != t.linear().cols()) throw DimensionMismatchError("affine apply dim");
    return t.linear() * x + t.translation();
}

inline PointSet apply_affine_to_set(const AffineMap& t, const PointSet& a) {
    std::vector<Vector> out;
    out.reserve(a.size());
    for (const auto& p : a.points()) out.push_back(apply_affine(t, p));
    return PointSet(std::move(out));
}

}  // namespace scx
