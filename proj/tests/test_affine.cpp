#include <catch2/catch.hpp>

#include <random>
#include <variant>

#include "scx/affine.hpp"

using namespace scx;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

PointSet pts(std::vector<Vector> v) { return PointSet(std::move(v)); }

/// Independent check of the affine-dependence definition: is there a nonzero
/// t with sum t_i = 0 and sum t_i a_i = 0? Solves the homogeneous system
/// [points; ones] t = 0 directly and inspects its nullspace — a different
/// route than the relative-vector rank test used by the library.
bool has_affine_dependence(const PointSet& a) {
    std::size_t n = a.size();
    Matrix m(a.ambient_dim() + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < a.ambient_dim(); ++i) m.at(i, j) = a[j][i];
        m.at(a.ambient_dim(), j) = R(1);
    }
    Solution s = solve(m, Vector::zero(a.ambient_dim() + 1));
    if (std::holds_alternative<Unique>(s)) return false;
    const auto& inf = std::get<Infinite>(s);
    REQUIRE_FALSE(inf.nullspace.empty());
    // confirm the dependence by direct evaluation
    const Vector& t = inf.nullspace.front();
    Rational tsum(0);
    Vector combo = Vector::zero(a.ambient_dim());
    for (std::size_t j = 0; j < n; ++j) {
        tsum += t[j];
        combo = combo + t[j] * a[j];
    }
    REQUIRE(tsum == R(0));
    REQUIRE(combo.is_zero());
    REQUIRE_FALSE(t.is_zero());
    return true;
}

/// Exhaustive search over a small integer grid for a nonzero affine
/// dependence; only usable for tiny point sets.
bool grid_has_affine_dependence(const PointSet& a, long radius) {
    std::size_t n = a.size();
    std::vector<long> t(n, -radius);
    while (true) {
        long sum = 0;
        bool nonzero = false;
        for (long ti : t) {
            sum += ti;
            nonzero = nonzero || ti != 0;
        }
        if (nonzero && sum == 0) {
            Vector combo = Vector::zero(a.ambient_dim());
            for (std::size_t j = 0; j < n; ++j) combo = combo + R(t[j]) * a[j];
            if (combo.is_zero()) return true;
        }
        std::size_t i = 0;
        while (i < n && ++t[i] > radius) t[i++] = -radius;
        if (i == n) return false;
    }
}

Vector random_point(std::mt19937& rng, std::size_t dim, long radius = 4) {
    std::uniform_int_distribution<long> coord(-radius, radius);
    std::vector<Rational> e(dim);
    for (auto& x : e) x = R(coord(rng));
    return Vector(std::move(e));
}

}  // namespace

TEST_CASE("relative vectors", "[affine]") {
    CHECK(relative_vectors(pts({Vector{R(0), R(0)}})).empty());

    auto rv = relative_vectors(
        pts({Vector{R(2), R(3), R(1)}, Vector{R(3), R(5), R(2)}, Vector{R(4), R(4), R(3)}}));
    REQUIRE(rv.size() == 2);
    CHECK(rv[0] == Vector{R(1), R(2), R(1)});
    CHECK(rv[1] == Vector{R(2), R(1), R(2)});

    auto rv4 =
        relative_vectors(pts({Vector{R(1), R(1), R(1), R(1)}, Vector{R(2), R(3), R(1), R(4)}}));
    REQUIRE(rv4.size() == 1);
    CHECK(rv4[0] == Vector{R(1), R(2), R(0), R(3)});
}

TEST_CASE("geometric independence worked examples", "[affine]") {
    CHECK_FALSE(is_geometrically_independent(
        pts({Vector{R(0), R(0)}, Vector{R(1), R(0)}, Vector{R(2), R(0)}})));
    CHECK(is_geometrically_independent(
        pts({Vector{R(0), R(0)}, Vector{R(1), R(0)}, Vector{R(0), R(1)}})));

    // R^3 pair from the worked examples
    CHECK(is_geometrically_independent(
        pts({Vector{R(0), R(0), R(0)}, Vector{R(1), R(0), R(0)}, Vector{R(0), R(1), R(0)}})));
    CHECK_FALSE(is_geometrically_independent(
        pts({Vector{R(0), R(0), R(0)}, Vector{R(1), R(0), R(0)}, Vector{R(2), R(0), R(0)}})));

    // five points of R^4, rank 4
    PointSet r4 = pts({Vector{R(1), R(1), R(1), R(1)}, Vector{R(2), R(3), R(1), R(4)},
                       Vector{R(3), R(5), R(2), R(1)}, Vector{R(4), R(6), R(3), R(7)},
                       Vector{R(5), R(9), R(6), R(3)}});
    IndependenceCheck chk = check_geometric_independence(r4);
    CHECK(chk.independent);
    CHECK(chk.rank == 4);

    // singletons and duplicates
    CHECK(is_geometrically_independent(pts({Vector{R(7)}})));
    CHECK_FALSE(is_geometrically_independent(pts({Vector{R(1), R(2)}, Vector{R(1), R(2)}})));

    CHECK_THROWS_AS(pts({Vector{R(0)}, Vector{R(0), R(0)}}), DimensionMismatchError);
}

TEST_CASE("plane spanned by a set", "[affine]") {
    AffinePlane p = AffinePlane::spanned_by(
        pts({Vector{R(1), R(0), R(0)}, Vector{R(0), R(1), R(0)}, Vector{R(0), R(0), R(1)}}));
    CHECK(p.base() == Vector{R(1), R(0), R(0)});
    REQUIRE(p.dim() == 2);
    CHECK(p.directions()[0] == Vector{R(-1), R(1), R(0)});
    CHECK(p.directions()[1] == Vector{R(-1), R(0), R(1)});

    AffinePlane p0 = AffinePlane::spanned_by(pts({Vector{R(5), R(5)}}));
    CHECK(p0.dim() == 0);

    AffinePlane line = AffinePlane::spanned_by(pts({Vector{R(0), R(0)}, Vector{R(1), R(1)}}));
    CHECK(line.base() == Vector{R(0), R(0)});
    CHECK(line.directions() == std::vector<Vector>{Vector{R(1), R(1)}});

    CHECK_THROWS_AS(
        AffinePlane::spanned_by(pts({Vector{R(0), R(0)}, Vector{R(1), R(0)}, Vector{R(2), R(0)}})),
        DependentVerticesError);
}

TEST_CASE("plane membership worked example", "[affine]") {
    AffinePlane p = AffinePlane::spanned_by(
        pts({Vector{R(1), R(0), R(0)}, Vector{R(0), R(1), R(0)}, Vector{R(0), R(0), R(1)}}));

    PlaneMembership on = plane_membership(p, Vector{R(1, 2), R(1, 2), R(0)});
    REQUIRE(std::holds_alternative<OnPlane>(on));
    CHECK(std::get<OnPlane>(on).coeffs == BarycentricCoords{R(1, 2), R(1, 2), R(0)});

    // (1,1,1) violates the plane equation x+y+z=1
    CHECK(std::holds_alternative<OffPlane>(plane_membership(p, Vector{R(1), R(1), R(1)})));

    // the base point itself
    PlaneMembership base = plane_membership(p, Vector{R(1), R(0), R(0)});
    REQUIRE(std::holds_alternative<OnPlane>(base));
    CHECK(std::get<OnPlane>(base).coeffs == BarycentricCoords{R(1), R(0), R(0)});

    CHECK_THROWS_AS(plane_membership(p, Vector{R(0), R(0)}), DimensionMismatchError);
}

TEST_CASE("membership on a 0-plane is point equality", "[affine]") {
    AffinePlane p0 = AffinePlane::spanned_by(pts({Vector{R(5), R(5)}}));
    PlaneMembership on = plane_membership(p0, Vector{R(5), R(5)});
    REQUIRE(std::holds_alternative<OnPlane>(on));
    CHECK(std::get<OnPlane>(on).coeffs == BarycentricCoords{R(1)});
    CHECK(std::holds_alternative<OffPlane>(plane_membership(p0, Vector{R(5), R(6)})));
}

TEST_CASE("extending an independent set", "[affine]") {
    PointSet a =
        pts({Vector{R(2), R(3), R(1)}, Vector{R(3), R(5), R(2)}, Vector{R(4), R(4), R(3)}});
    ExtensionResult r = extend_independent(a, Vector{R(5), R(6), R(7)});
    REQUIRE(std::holds_alternative<Extended>(r));
    CHECK(std::get<Extended>(r).rank_before == 2);
    CHECK(std::get<Extended>(r).rank_after == 3);

    CHECK(std::holds_alternative<NotExtendable>(
        extend_independent(pts({Vector{R(0), R(0)}, Vector{R(1), R(0)}}), Vector{R(2), R(0)})));

    ExtensionResult single =
        extend_independent(pts({Vector{R(0), R(0), R(0)}}), Vector{R(1), R(0), R(0)});
    REQUIRE(std::holds_alternative<Extended>(single));
    CHECK(std::get<Extended>(single).rank_before == 0);
    CHECK(std::get<Extended>(single).rank_after == 1);
}

TEST_CASE("affine transformation worked example", "[affine]") {
    AffineMap t(Matrix(2, 2, {R(2), R(1), R(1), R(3)}), Vector{R(1), R(-2)});
    CHECK(apply_affine(t, Vector{R(0), R(0)}) == Vector{R(1), R(-2)});
    CHECK(apply_affine(t, Vector{R(1), R(0)}) == Vector{R(3), R(-1)});
    CHECK(apply_affine(t, Vector{R(0), R(1)}) == Vector{R(2), R(1)});

    PointSet tri = pts({Vector{R(0), R(0)}, Vector{R(1), R(0)}, Vector{R(0), R(1)}});
    PointSet image = apply_affine_to_set(t, tri);
    CHECK(image == pts({Vector{R(1), R(-2)}, Vector{R(3), R(-1)}, Vector{R(2), R(1)}}));
    CHECK(is_geometrically_independent(image));

    AffineMap identity(Matrix::identity(2), Vector{R(0), R(0)});
    CHECK(apply_affine_to_set(identity, tri) == tri);

    AffineMap doubling(Matrix(2, 2, {R(2), R(0), R(0), R(2)}), Vector{R(0), R(0)});
    CHECK(apply_affine_to_set(doubling, tri) ==
          pts({Vector{R(0), R(0)}, Vector{R(2), R(0)}, Vector{R(0), R(2)}}));
}

TEST_CASE("independence agrees with the affine-dependence oracle", "[affine][oracle]") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<std::size_t> npts(1, 5), adim(1, 4);
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        std::size_t dim = adim(rng);
        std::size_t n = npts(rng);
        std::vector<Vector> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_point(rng, dim, 3));
        PointSet a = pts(std::move(v));
        bool lib = is_geometrically_independent(a);
        CHECK(lib == !has_affine_dependence(a));
        if (a.size() <= 4) {
            if (lib) CHECK_FALSE(grid_has_affine_dependence(a, 2));
            if (grid_has_affine_dependence(a, 2)) CHECK_FALSE(lib);
        }
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("vertices of a spanned plane have indicator coefficients", "[affine][property]") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t dim = 2 + trial % 3;
        std::vector<Vector> v;
        for (std::size_t i = 0; i < dim; ++i) v.push_back(random_point(rng, dim));
        PointSet a = pts(std::move(v));
        if (!is_geometrically_independent(a)) continue;
        AffinePlane p = AffinePlane::spanned_by(a);
        for (std::size_t i = 0; i < a.size(); ++i) {
            PlaneMembership m = plane_membership(p, a[i]);
            REQUIRE(std::holds_alternative<OnPlane>(m));
            const auto& c = std::get<OnPlane>(m).coeffs;
            for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? R(1) : R(0)));
        }
    }
}

TEST_CASE("extension succeeds exactly off the plane", "[affine][property]") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t dim = 2 + trial % 2;
        std::vector<Vector> v;
        std::size_t n = 1 + trial % dim;
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_point(rng, dim));
        PointSet a = pts(std::move(v));
        if (!is_geometrically_independent(a)) continue;
        Vector w = random_point(rng, dim);
        bool extended = std::holds_alternative<Extended>(extend_independent(a, w));
        bool off =
            std::holds_alternative<OffPlane>(plane_membership(AffinePlane::spanned_by(a), w));
        CHECK(extended == off);
    }
}

TEST_CASE("invertible maps preserve independence and planes", "[affine][property]") {
    std::mt19937 rng(24);
    std::uniform_int_distribution<long> coef(-3, 3);
    int used = 0;
    for (int trial = 0; trial < 400 && used < 200; ++trial) {
        std::size_t dim = 2 + trial % 2;
        Matrix linear(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) linear.at(i, j) = R(coef(rng));
        if (rank(linear) != dim) continue;
        AffineMap t(linear, random_point(rng, dim));
        CHECK(t.invertible());

        std::vector<Vector> v;
        std::size_t n = 1 + trial % (dim + 1);
        for (std::size_t i = 0; i < n; ++i) v.push_back(random_point(rng, dim));
        PointSet a = pts(std::move(v));
        PointSet image = apply_affine_to_set(t, a);
        CHECK(is_geometrically_independent(a) == is_geometrically_independent(image));

        if (is_geometrically_independent(a)) {
            ++used;
            // image of the spanned plane is the plane spanned by the images,
            // checked by membership sampling
            AffinePlane p = AffinePlane::spanned_by(a);
            AffinePlane q = AffinePlane::spanned_by(image);
            std::uniform_int_distribution<long> w(-2, 2);
            for (int s = 0; s < 4; ++s) {
                Vector x = p.base();
                for (const auto& d : p.directions()) x = x + R(w(rng), 2) * d;
                CHECK(std::holds_alternative<OnPlane>(plane_membership(q, apply_affine(t, x))));
            }
            Vector other = random_point(rng, dim);
            bool on_p = std::holds_alternative<OnPlane>(plane_membership(p, other));
            bool img_on_q =
                std::holds_alternative<OnPlane>(plane_membership(q, apply_affine(t, other)));
            CHECK(on_p == img_on_q);
        }
    }
    CHECK(used >= 200);
}
