#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "scx/complex.hpp"
#include "scx/detail/json.hpp"
#include "scx/realization.hpp"

namespace scx {

/// In-memory form of a .scx document: ambient dimension, vertex coordinate
/// table, simplex list and an optional block of vertex values for
/// piecewise-linear maps.
struct ComplexDocument {
    std::size_t ambient_dim = 0;
    std::map<std::string, Vector> vertices;
    std::vector<AbstractSimplex> simplices;  // canonical order: dimension, then labels
    std::optional<std::map<std::string, Vector>> values;

    SimplicialComplex to_complex() const {
        SimplexSet set(simplices.begin(), simplices.end());
        return SimplicialComplex(vertices, std::move(set));
    }

    std::optional<PLMap> pl_map() const {
        if (!values) return std::nullopt;
        return PLMap(*values);
    }

    friend bool operator==(const ComplexDocument& a, const ComplexDocument& b) {
        return a.ambient_dim == b.ambient_dim && a.vertices == b.vertices &&
               a.simplices == b.simplices && a.values == b.values;
    }
};

namespace detail {

[[noreturn]] inline void doc_fail(const json::Value& at, const std::string& msg) {
    throw ScxParseError(at.line, at.column, msg);
}

inline Rational parse_rational_node(const json::Value& node) {
    if (node.kind != json::Value::Kind::String && node.kind != json::Value::Kind::Integer)
        doc_fail(node, "expected a rational literal (integer or \"p/q\" string)");
    try {
        return Rational::parse(node.text);
    } catch (const ValueError& e) {
        doc_fail(node, e.what());
    }
}

inline Vector parse_coord_list(const json::Value& node, std::size_t expected_dim,
                               const char* what) {
    if (node.kind != json::Value::Kind::Array)
        doc_fail(node, std::string("expected a coordinate list for ") + what);
    if (node.elements.size() != expected_dim)
        doc_fail(node, std::string(what) + " has " + std::to_string(node.elements.size()) +
                           " coordinates, expected " + std::to_string(expected_dim));
    std::vector<Rational> coords;
    coords.reserve(node.elements.size());
    for (const auto& e : node.elements) coords.push_back(parse_rational_node(e));
    return Vector(std::move(coords));
}

}  // namespace detail

/// Strict parse of the .scx document format. Rejects unknown keys, duplicate
/// labels, ragged coordinate lists, malformed rationals and empty simplex
/// collections, each with the line/column of the offending token.
inline ComplexDocument parse_document(std::string_view text) {
    json::Value root = json::parse(text);
    if (root.kind != json::Value::Kind::Object)
        detail::doc_fail(root, "document must be an object");
    for (const auto& [key, v] : root.members)
        if (key != "ambient_dim" && key != "vertices" && key != "simplices" && key != "values")
            detail::doc_fail(v, "unknown key '" + key + "'");

    ComplexDocument doc;

    const json::Value* dim_node = root.find("ambient_dim");
    if (!dim_node) detail::doc_fail(root, "missing 'ambient_dim'");
    if (dim_node->kind != json::Value::Kind::Integer)
        detail::doc_fail(*dim_node, "'ambient_dim' must be an integer");
    Rational dim = detail::parse_rational_node(*dim_node);
    if (dim.sign() <= 0 || dim > Rational(64))
        detail::doc_fail(*dim_node, "'ambient_dim' must be between 1 and 64");
    doc.ambient_dim = static_cast<std::size_t>(dim.numerator().get_ui());

    const json::Value* verts = root.find("vertices");
    if (!verts) detail::doc_fail(root, "missing 'vertices'");
    if (verts->kind != json::Value::Kind::Object || verts->members.empty())
        detail::doc_fail(*verts, "'vertices' must be a nonempty object");
    for (const auto& [label, coords] : verts->members) {
        if (label.empty()) detail::doc_fail(coords, "empty vertex label");
        doc.vertices.emplace(
            label, detail::parse_coord_list(coords, doc.ambient_dim, ("vertex '" + label + "'").c_str()));
    }

    const json::Value* simplices = root.find("simplices");
    if (!simplices) detail::doc_fail(root, "missing 'simplices'");
    if (simplices->kind != json::Value::Kind::Array)
        detail::doc_fail(*simplices, "'simplices' must be an array");
    if (simplices->elements.empty())
        detail::doc_fail(*simplices, "a complex must contain at least one simplex");
    std::set<AbstractSimplex> seen;
    for (const auto& item : simplices->elements) {
        if (item.kind != json::Value::Kind::Array || item.elements.empty())
            detail::doc_fail(item, "a simplex must be a nonempty array of labels");
        std::vector<std::string> labels;
        for (const auto& l : item.elements) {
            if (l.kind != json::Value::Kind::String)
                detail::doc_fail(l, "simplex entries must be vertex labels");
            if (!doc.vertices.count(l.text))
                detail::doc_fail(l, "unknown vertex label '" + l.text + "'");
            labels.push_back(l.text);
        }
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            detail::doc_fail(item, "simplex repeats a vertex label");
        AbstractSimplex s(std::move(labels));
        if (!seen.insert(s).second) detail::doc_fail(item, "duplicate simplex " + s.to_string());
    }
    doc.simplices.assign(seen.begin(), seen.end());

    if (const json::Value* values = root.find("values")) {
        if (values->kind != json::Value::Kind::Object || values->members.empty())
            detail::doc_fail(*values, "'values' must be a nonempty object");
        std::map<std::string, Vector> parsed;
        std::optional<std::size_t> value_dim;
        for (const auto& [label, v] : values->members) {
            if (!doc.vertices.count(label))
                detail::doc_fail(v, "value for unknown vertex '" + label + "'");
            if (v.kind == json::Value::Kind::Array && v.elements.empty())
                detail::doc_fail(v, "value of '" + label + "' is empty");
            Vector val = v.kind == json::Value::Kind::Array
                             ? detail::parse_coord_list(v, value_dim.value_or(v.elements.size()),
                                                        ("value of '" + label + "'").c_str())
                             : Vector{detail::parse_rational_node(v)};
            if (value_dim && val.dim() != *value_dim)
                detail::doc_fail(v, "values must all have the same dimension");
            value_dim = val.dim();
            parsed.emplace(label, std::move(val));
        }
        doc.values = std::move(parsed);
    }
    return doc;
}

/// Canonical serialization: sorted keys, simplices in (dimension, labels)
/// order, rationals as strings, two-space indent, trailing newline.
/// parse(serialize(doc)) == doc, and serialize is a fixed point on its own
/// output.
inline std::string serialize_document(const ComplexDocument& doc) {
    std::ostringstream os;
    auto rational_str = [](const Rational& r) { return "\"" + r.to_string() + "\""; };
    auto vector_str = [&](const Vector& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (i) out += ", ";
            out += rational_str(v[i]);
        }
        return out + "]";
    };

    os << "{\n";
    os << "  \"ambient_dim\": " << doc.ambient_dim << ",\n";

    os << "  \"simplices\": [\n";
    std::vector<AbstractSimplex> sorted = doc.simplices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        os << "    [";
        const auto& labels = sorted[i].labels();
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (j) os << ", ";
            os << '"' << json::escape(labels[j]) << '"';
        }
        os << (i + 1 < sorted.size() ? "],\n" : "]\n");
    }
    os << "  ],\n";

    if (doc.values) {
        os << "  \"values\": {\n";
        std::size_t i = 0;
        bool scalar = !doc.values->empty() && doc.values->begin()->second.dim() == 1;
        for (const auto& [label, v] : *doc.values) {
            os << "    \"" << json::escape(label) << "\": "
               << (scalar ? rational_str(v[0]) : vector_str(v));
            os << (++i < doc.values->size() ? ",\n" : "\n");
        }
        os << "  },\n";
    }

    os << "  \"vertices\": {\n";
    std::size_t i = 0;
    for (const auto& [label, coords] : doc.vertices) {
        os << "    \"" << json::escape(label) << "\": " << vector_str(coords);
        os << (++i < doc.vertices.size() ? ",\n" : "\n");
    }
    os << "  }\n";
    os << "}\n";
    return os.str();
}

}  // namespace scx
