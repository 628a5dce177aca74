#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "scx/affine.hpp"

namespace scx {

/// Geometric n-simplex: the convex hull of n+1 geometrically independent
/// vertices. Construction rejects dependent vertex sets. A simplex is a
/// closed subset of its ambient space, so closure is the identity on this
/// type and no separate operation exists for it.
class GeometricSimplex {
public:
    explicit GeometricSimplex(PointSet vertices) : vertices_(std::move(vertices)) {
        IndependenceCheck chk = check_geometric_independence(vertices_);
        if (!chk.independent) throw DependentVerticesError(chk.rank, vertices_.size() - 1);
    }

    std::size_t dim() const { return vertices_.size() - 1; }
    std::size_t ambient_dim() const { return vertices_.ambient_dim(); }
    const PointSet& vertices() const { return vertices_; }
    const Vector& vertex(std::size_t i) const { return vertices_[i]; }

    AffinePlane plane() const { return AffinePlane::spanned_by(vertices_); }

    /// c = (1/(n+1)) * sum a_i.
    Vector barycenter() const {
        Vector acc = vertices_[0];
        for (std::size_t i = 1; i < vertices_.size(); ++i) acc = acc + vertices_[i];
        return Rational(1, static_cast<long>(vertices_.size())) * acc;
    }

    friend bool operator==(const GeometricSimplex& a, const GeometricSimplex& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    PointSet vertices_;
};

inline GeometricSimplex make_simplex(PointSet vertices) {
    return GeometricSimplex(std::move(vertices));
}

struct InPlane {
    BarycentricCoords coords;
};
using BarycentricResult = std::variant<InPlane, OffPlane>;

/// Barycentric coordinates of x with respect to the simplex's vertices; the
/// point may lie outside the simplex (negative coordinates) as long as it is
/// in the simplex's plane.
inline BarycentricResult barycentric(const GeometricSimplex& s, const Vector& x) {
    PlaneMembership m = plane_membership(s.plane(), x);
    if (std::holds_alternative<OffPlane>(m)) return OffPlane{};
    return InPlane{std::get<OnPlane>(m).coeffs};
}

enum class Region { Interior, Boundary, Outside };

struct PointClassification {
    Region region;
    /// Present whenever x lies in the simplex's plane.
    std::optional<BarycentricCoords> coords;
    /// Indices of strictly positive coordinates; the carrier face for
    /// Interior/Boundary points, empty for Outside.
    std::vector<std::size_t> carrier;
};

/// Interior: all coordinates strictly positive. Boundary: all nonnegative
/// with at least one zero. Outside: a negative coordinate or off-plane.
/// A 0-simplex has Int = {a_0} and empty boundary.
inline PointClassification classify_point(const GeometricSimplex& s, const Vector& x) {
    BarycentricResult r = barycentric(s, x);
    if (std::holds_alternative<OffPlane>(r)) return {Region::Outside, std::nullopt, {}};
    BarycentricCoords coords = std::get<InPlane>(r).coords;
    bool has_zero = false;
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        int sgn = coords[i].sign();
        if (sgn < 0) return {Region::Outside, std::move(coords), {}};
        if (sgn == 0)
            has_zero = true;
        else
            positive.push_back(i);
    }
    Region region = has_zero ? Region::Boundary : Region::Interior;
    return {region, std::move(coords), std::move(positive)};
}

namespace detail {
inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}
}  // namespace detail

/// All k-faces in lexicographic vertex-index order.
inline std::vector<GeometricSimplex> faces(const GeometricSimplex& s, std::size_t k) {
    if (k > s.dim()) throw ValueError("face dimension out of range");
    std::vector<GeometricSimplex> out;
    detail::combinations(s.dim() + 1, k + 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vector> pts;
        pts.reserve(idx.size());
        for (std::size_t i : idx) pts.push_back(s.vertex(i));
        out.emplace_back(PointSet(std::move(pts)));
    });
    return out;
}

/// All faces of dimension < n, ascending dimension, lexicographic within.
/// Count is 2^(n+1) - 2.
inline std::vector<GeometricSimplex> proper_faces(const GeometricSimplex& s) {
    std::vector<GeometricSimplex> out;
    for (std::size_t k = 0; k < s.dim(); ++k)
        for (auto& f : faces(s, k)) out.push_back(std::move(f));
    return out;
}

/// The (n-1)-face spanned by every vertex except vertex i.
inline GeometricSimplex face_opposite(const GeometricSimplex& s, std::size_t i) {
    if (s.dim() == 0) throw ValueError("a 0-simplex has no opposite face");
    if (i > s.dim()) throw ValueError("vertex index out of range");
    std::vector<Vector> pts;
    pts.reserve(s.dim());
    for (std::size_t j = 0; j <= s.dim(); ++j)
        if (j != i) pts.push_back(s.vertex(j));
    return GeometricSimplex(PointSet(std::move(pts)));
}

struct ConeCoords {
    Rational apex_weight;                       // t_0
    std::optional<Vector> base_point;           // absent exactly when t_0 = 1
    std::optional<BarycentricCoords> base_coords;
};
struct NotInSimplex {};
using ConeResult = std::variant<ConeCoords, NotInSimplex>;

/// Writes x = t_0 a_0 + (1 - t_0) y with y in the face opposite a_0; the
/// line-segment decomposition behind the cone construction.
inline ConeResult cone_decompose(const GeometricSimplex& s, const Vector& x) {
    if (s.dim() < 1) throw ValueError("cone decomposition needs dim >= 1");
    PointClassification c = classify_point(s, x);
    if (c.region == Region::Outside) return NotInSimplex{};
    const BarycentricCoords& t = *c.coords;
    Rational t0 = t[0];
    if (t0 == Rational(1)) return ConeCoords{t0, std::nullopt, std::nullopt};
    Rational scale = Rational(1) / (Rational(1) - t0);
    std::vector<Rational> base(t.size() - 1);
    Vector y = Vector::zero(s.ambient_dim());
    for (std::size_t i = 1; i < t.size(); ++i) {
        base[i - 1] = scale * t[i];
        y = y + base[i - 1] * s.vertex(i);
    }
    return ConeCoords{t0, std::move(y), BarycentricCoords(std::move(base))};
}

/// Ray w + t p, t >= 0, with a fixed nonzero direction p.
class Ray {
public:
    Ray(Vector origin, Vector direction)
        : origin_(std::move(origin)), direction_(std::move(direction)) {
        if (direction_.dim() != origin_.dim()) throw DimensionMismatchError("ray dims");
        if (direction_.is_zero()) throw ValueError("ray direction must be nonzero");
    }

    const Vector& origin() const { return origin_; }
    const Vector& direction() const { return direction_; }
    Vector at(const Rational& t) const { return origin_ + t * direction_; }

private:
    Vector origin_;
    Vector direction_;
};

struct BoundaryHit {
    Rational t_star;                 // unique t > 0 with the point on Bd(s)
    Vector point;
    std::vector<std::size_t> face;   // coordinates still positive at t_star
};
struct LeavesPlane {};
using RayHitResult = std::variant<BoundaryHit, LeavesPlane>;

/// Casts a ray from a strictly interior origin to the boundary. Along the
/// ray each barycentric coordinate varies affinely; the first one to reach
/// zero determines the exit point.
inline RayHitResult ray_boundary_hit(const GeometricSimplex& s, const Ray& r) {
    PointClassification origin_class = classify_point(s, r.origin());
    if (origin_class.region != Region::Interior)
        throw ValueError("ray origin must be strictly interior to the simplex");
    const BarycentricCoords& t0 = *origin_class.coords;

    Matrix mv = Matrix::from_columns(relative_vectors(s.vertices()), s.ambient_dim());
    Solution sol = solve(mv, r.direction());
    if (std::holds_alternative<Inconsistent>(sol)) return LeavesPlane{};
    const Vector& q = std::get<Unique>(sol).x;

    // Barycentric velocity: delta_0 = -sum q_i, delta_i = q_i. They sum to
    // zero, so some coordinate decreases.
    std::vector<Rational> delta(s.dim() + 1, Rational(0));
    Rational qsum(0);
    for (std::size_t i = 0; i < q.dim(); ++i) {
        delta[i + 1] = q[i];
        qsum += q[i];
    }
    delta[0] = -qsum;

    std::optional<Rational> t_star;
    for (std::size_t i = 0; i <= s.dim(); ++i) {
        if (delta[i].sign() >= 0) continue;
        Rational hit = t0[i] / -delta[i];
        if (!t_star || hit < *t_star) t_star = hit;
    }
    // A nonzero in-plane direction always decreases some coordinate.
    Vector point = r.at(*t_star);
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i <= s.dim(); ++i)
        if (!(t0[i] + *t_star * delta[i]).is_zero()) face.push_back(i);
    return BoundaryHit{*t_star, std::move(point), std::move(face)};
}

/// Point of the unit n-ball in exact form: the vector `coeffs * sqrt(radicand)`.
/// The radicand collapses to 1 whenever it is a perfect rational square, so
/// representable points (vertices of a segment, the barycenter, ...) come out
/// as plain rational vectors. Only norm^2 is ever needed, and it is exact.
class BallVector {
public:
    BallVector(Vector coeffs, Rational radicand)
        : coeffs_(std::move(coeffs)), radicand_(std::move(radicand)) {
        if (radicand_.sign() < 0) throw ValueError("negative radicand");
        if (coeffs_.is_zero()) radicand_ = Rational(1);
        if (radicand_.is_perfect_square()) {
            coeffs_ = radicand_.sqrt() * coeffs_;
            radicand_ = Rational(1);
        }
    }
    explicit BallVector(Vector coeffs) : BallVector(std::move(coeffs), Rational(1)) {}

    const Vector& coeffs() const { return coeffs_; }
    const Rational& radicand() const { return radicand_; }

    std::size_t dim() const { return coeffs_.dim(); }
    Rational norm_squared() const { return dot(coeffs_, coeffs_) * radicand_; }
    bool is_rational() const { return radicand_ == Rational(1); }

    /// Plain rational coordinates; only when the radicand collapsed.
    const Vector& to_vector() const {
        if (!is_rational()) throw ValueError("ball point has irrational coordinates");
        return coeffs_;
    }

    /// Semantic equality of coeffs*sqrt(radicand), decided without factoring.
    friend bool operator==(const BallVector& a, const BallVector& b) {
        if (a.dim() != b.dim()) return false;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (a.coeffs_[i].sign() != b.coeffs_[i].sign()) return false;
            if (sq(a.coeffs_[i]) * a.radicand_ != sq(b.coeffs_[i]) * b.radicand_) return false;
        }
        return true;
    }

private:
    Vector coeffs_;
    Rational radicand_;
};

namespace detail {
/// Gauge of the direction d (given in plane coordinates y, d = sum y_i v_i)
/// relative to the simplex recentred at its barycenter: 1/t* where t* is the
/// boundary-hit parameter of the ray from the barycenter along d.
inline Rational barycenter_gauge(const GeometricSimplex& s, const Vector& y) {
    Vector c = s.barycenter();
    Vector d = Vector::zero(s.ambient_dim());
    std::vector<Vector> dirs = relative_vectors(s.vertices());
    for (std::size_t i = 0; i < y.dim(); ++i) d = d + y[i] * dirs[i];
    RayHitResult hit = ray_boundary_hit(s, Ray(c, d));
    return Rational(1) / std::get<BoundaryHit>(hit).t_star;
}
}  // namespace detail

/// Radial homeomorphism of the simplex with the unit n-ball, centred at the
/// barycenter. Boundary points land exactly on norm^2 = 1, the barycenter on
/// 0, interior points strictly inside. Coordinates are taken in the basis of
/// relative vectors of the simplex's plane.
inline BallVector ball_map(const GeometricSimplex& s, const Vector& x) {
    if (s.dim() == 0)
        throw ValueError("ball map of a 0-simplex is the single point of a 0-ball");
    PointClassification cls = classify_point(s, x);
    if (cls.region == Region::Outside) throw ValueError("ball map needs a point of the simplex");

    Vector c = s.barycenter();
    if (x == c) return BallVector(Vector::zero(s.dim()));

    Matrix mv = Matrix::from_columns(relative_vectors(s.vertices()), s.ambient_dim());
    const Vector y = std::get<Unique>(solve(mv, x - c)).x;  // in-plane, so consistent

    Rational rho = detail::barycenter_gauge(s, y);  // radial scale, in (0, 1]
    Rational ssq = dot(y, y);
    return BallVector((rho / ssq) * y, ssq);
}

/// Inverse of ball_map. Exact whenever the input's norm is rational — which
/// holds for every value ball_map produces.
inline Vector ball_map_inverse(const GeometricSimplex& s, const BallVector& u) {
    if (s.dim() == 0)
        throw ValueError("ball map of a 0-simplex is the single point of a 0-ball");
    if (u.dim() != s.dim()) throw DimensionMismatchError("ball point dim vs simplex dim");
    Rational nsq = u.norm_squared();
    if (nsq > Rational(1)) throw ValueError("point lies outside the unit ball");
    Vector c = s.barycenter();
    if (nsq.is_zero()) return c;
    if (!nsq.is_perfect_square())
        throw ValueError("ball point has irrational radius; not in the image representation");
    Rational rho = nsq.sqrt();

    // Any positive multiple of the stored coefficient vector fixes the
    // direction; rescale it to gauge rho.
    Rational g = detail::barycenter_gauge(s, u.coeffs());
    Rational scale = rho / g;
    std::vector<Vector> dirs = relative_vectors(s.vertices());
    Vector x = c;
    for (std::size_t i = 0; i < u.dim(); ++i) x = x + (scale * u.coeffs()[i]) * dirs[i];
    return x;
}

}  // namespace scx
