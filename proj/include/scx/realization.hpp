#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

/// The unique simplex whose open interior contains a located point, with the
/// strictly positive coordinates that certify it.
struct Carrier {
    AbstractSimplex simplex;
    BarycentricCoords coords;
};
struct NotInRealization {};
using LocateResult = std::variant<Carrier, NotInRealization>;

/// Point location in |K| by linear scan in decreasing dimension with exact
/// barycentric solves. Disjoint interiors of a validated complex make the
/// carrier unique.
inline LocateResult locate(const SimplicialComplex& k, const Vector& x) {
    std::vector<const AbstractSimplex*> order;
    order.reserve(k.simplices().size());
    for (const auto& s : k.simplices()) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(),
                     [](const AbstractSimplex* a, const AbstractSimplex* b) {
                         return a->dim() > b->dim();
                     });
    for (const AbstractSimplex* s : order) {
        GeometricSimplex g = k.realize(*s);
        if (g.ambient_dim() != x.dim()) throw DimensionMismatchError("locate point dim");
        PointClassification c = classify_point(g, x);
        if (c.region == Region::Interior) return Carrier{*s, *c.coords};
    }
    return NotInRealization{};
}

/// Barycentric coordinate function lambda_j: coefficient of vertex j in the
/// carrier expansion of x; zero when j is not a carrier vertex. Defined only
/// on |K|.
inline Rational lambda(const SimplicialComplex& k, const std::string& j, const Vector& x) {
    if (!k.used_labels().count(j)) throw UnknownVertexError(j);
    LocateResult loc = locate(k, x);
    if (std::holds_alternative<NotInRealization>(loc)) throw NotInRealizationError();
    const Carrier& c = std::get<Carrier>(loc);
    const auto& labels = c.simplex.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == j) return c.coords[i];
    return Rational(0);
}

/// Map defined by values on vertices and extended affinely over each
/// simplex. Values are vectors of a uniform dimension; scalars are the
/// one-dimensional case.
class PLMap {
public:
    explicit PLMap(std::map<std::string, Vector> values) : values_(std::move(values)) {
        if (values_.empty()) throw ValueError("PL map needs at least one vertex value");
        for (const auto& [label, v] : values_)
            if (v.dim() != values_.begin()->second.dim())
                throw DimensionMismatchError("PL map values with mixed dimensions");
    }

    std::size_t value_dim() const { return values_.begin()->second.dim(); }
    const std::map<std::string, Vector>& values() const { return values_; }

    const Vector& at(const std::string& label) const {
        auto it = values_.find(label);
        if (it == values_.end()) throw ValueError("PL map has no value for vertex " + label);
        return it->second;
    }

private:
    std::map<std::string, Vector> values_;
};

/// f(x) = sum over carrier vertices of coord_i * f(vertex_i). Well-defined
/// independently of which containing closed simplex is used.
inline Vector eval_pl(const SimplicialComplex& k, const PLMap& f, const Vector& x) {
    for (const auto& label : k.used_labels()) f.at(label);  // full coverage up front
    LocateResult loc = locate(k, x);
    if (std::holds_alternative<NotInRealization>(loc)) throw NotInRealizationError();
    const Carrier& c = std::get<Carrier>(loc);
    Vector acc = Vector::zero(f.value_dim());
    const auto& labels = c.simplex.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) acc = acc + c.coords[i] * f.at(labels[i]);
    return acc;
}

struct RealizationSummary {
    Vector box_min;
    Vector box_max;
    std::map<std::size_t, std::size_t> counts;  // dimension -> simplex count
    bool compact;                               // finite complexes always are
};

inline RealizationSummary realization_summary(const SimplicialComplex& k) {
    if (k.empty()) throw EmptyComplexError();
    std::optional<Vector> lo, hi;
    std::map<std::size_t, std::size_t> counts;
    for (const auto& s : k.simplices()) ++counts[s.dim()];
    for (const auto& label : k.used_labels()) {
        const Vector& p = k.coords_of(label);
        if (!lo) {
            lo = p;
            hi = p;
            continue;
        }
        for (std::size_t c = 0; c < p.dim(); ++c) {
            (*lo)[c] = std::min((*lo)[c], p[c]);
            (*hi)[c] = std::max((*hi)[c], p[c]);
        }
    }
    return {std::move(*lo), std::move(*hi), std::move(counts), true};
}

}  // namespace scx
