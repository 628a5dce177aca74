#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "scx/document.hpp"

namespace scx {
namespace cli {

/// Bad command-line arguments (malformed point literals, unreadable files);
/// reported with exit code 2 like other usage errors.
struct UsageError : Error {
    using Error::Error;
};

namespace detail {

inline Vector parse_point(const std::string& text) {
    try {
        std::vector<Rational> coords;
        std::string part;
        std::istringstream in(text);
        while (std::getline(in, part, ',')) coords.push_back(Rational::parse(part));
        if (coords.empty()) throw ValueError("empty point literal");
        return Vector(std::move(coords));
    } catch (const ValueError& e) {
        throw UsageError("bad point '" + text + "': " + e.what());
    }
}

inline PointSet parse_points(const std::vector<std::string>& args) {
    std::vector<Vector> pts;
    pts.reserve(args.size());
    for (const auto& a : args) pts.push_back(parse_point(a));
    return PointSet(std::move(pts));
}

inline ComplexDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

inline std::string coords_line(const BarycentricCoords& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += c[i].to_string();
    }
    return out;
}

inline std::string labels_json(const AbstractSimplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.labels().size(); ++i) {
        if (i) out += ", ";
        out += '"' + json::escape(s.labels()[i]) + '"';
    }
    return out + "]";
}

inline std::string coords_json(const BarycentricCoords& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += '"' + c[i].to_string() + '"';
    }
    return out + "]";
}

inline std::string vector_json(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ", ";
        out += '"' + v[i].to_string() + '"';
    }
    return out + "]";
}

inline std::string simplices_json(const SimplexSet& set) {
    std::string out = "[";
    std::size_t i = 0;
    for (const auto& s : set) {
        if (i++) out += ", ";
        out += labels_json(s);
    }
    return out + "]";
}

inline void print_simplex_listing(std::ostream& out, const SimplexSet& set) {
    for (const auto& s : set) out << s.to_string() << "\n";
}

struct Options {
    bool structured = false;
    std::vector<std::string> points;
    std::string point;
    std::string file;
    std::string vertex;
    std::string method = "both";
    std::size_t p = 0;
};

inline int report_validation(std::ostream& out, const Options& opt,
                             const std::vector<std::pair<std::string, ValidationReport>>& reports) {
    bool ok = true;
    for (const auto& [name, rep] : reports) ok = ok && rep.ok;
    if (opt.structured) {
        out << "{\n";
        out << "  \"command\": \"validate\",\n";
        out << "  \"ok\": \"" << yesno(ok) << "\",\n";
        out << "  \"methods\": [\n";
        for (std::size_t m = 0; m < reports.size(); ++m) {
            const auto& [name, rep] = reports[m];
            out << "    {\n";
            out << "      \"method\": \"" << name << "\",\n";
            out << "      \"ok\": \"" << yesno(rep.ok) << "\",\n";
            out << "      \"missing_faces\": [";
            for (std::size_t i = 0; i < rep.missing_faces.size(); ++i) {
                if (i) out << ", ";
                out << "{\"simplex\": " << labels_json(rep.missing_faces[i].simplex)
                    << ", \"face\": " << labels_json(rep.missing_faces[i].face) << "}";
            }
            out << "],\n";
            out << "      \"dependent_simplices\": [";
            for (std::size_t i = 0; i < rep.dependent_simplices.size(); ++i) {
                if (i) out << ", ";
                out << labels_json(rep.dependent_simplices[i]);
            }
            out << "],\n";
            out << "      \"bad_intersections\": [";
            for (std::size_t i = 0; i < rep.bad_intersections.size(); ++i) {
                const auto& bi = rep.bad_intersections[i];
                if (i) out << ", ";
                out << "{\"first\": " << labels_json(bi.a) << ", \"second\": " << labels_json(bi.b);
                if (bi.witness) out << ", \"witness\": " << vector_json(*bi.witness);
                if (bi.missing_shared_face)
                    out << ", \"missing_shared_face\": " << labels_json(*bi.missing_shared_face);
                out << "}";
            }
            out << "]\n";
            out << "    }" << (m + 1 < reports.size() ? "," : "") << "\n";
        }
        out << "  ]\n";
        out << "}\n";
        return ok ? 0 : 1;
    }

    for (const auto& [name, rep] : reports) {
        out << "method: " << name << "\n";
        out << "result: " << (rep.ok ? "valid" : "invalid") << "\n";
        if (!rep.missing_faces.empty()) {
            out << "missing faces:\n";
            for (const auto& mf : rep.missing_faces)
                out << "  " << mf.simplex.to_string() << " lacks " << mf.face.to_string() << "\n";
        }
        if (!rep.dependent_simplices.empty()) {
            out << "dependent simplices:\n";
            for (const auto& s : rep.dependent_simplices) out << "  " << s.to_string() << "\n";
        }
        if (!rep.bad_intersections.empty()) {
            out << "bad intersections:\n";
            for (const auto& bi : rep.bad_intersections) {
                out << "  " << bi.a.to_string() << " x " << bi.b.to_string() << ":";
                if (bi.missing_shared_face)
                    out << " shared face " << bi.missing_shared_face->to_string()
                        << " not in complex";
                if (bi.witness) out << " interiors meet at " << bi.witness->to_string();
                out << "\n";
            }
        }
    }
    if (reports.size() == 2) out << "methods agree: " << yesno(reports[0].second.ok == reports[1].second.ok) << "\n";
    return ok ? 0 : 1;
}

}  // namespace detail

/// Runs one CLI invocation. Exit codes: 0 success / affirmative verdict,
/// 1 domain-negative verdict or domain error, 2 usage or parse error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Options;
    Options opt;

    CLI::App app{"exact simplicial-complex toolkit"};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "output format: human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    auto* independent = app.add_subcommand("independent", "test geometric independence of points");
    independent->add_option("points", opt.points, "points as comma-separated rationals")
        ->required()
        ->expected(-1);

    auto* plane_member =
        app.add_subcommand("plane-member", "test membership of a point in the spanned plane");
    plane_member->add_option("points", opt.points, "spanning points")->required()->expected(-1);
    plane_member->add_option("--point", opt.point, "query point")->required();

    auto* extend = app.add_subcommand("extend", "try to extend an independent set by a point");
    extend->add_option("points", opt.points, "independent points")->required()->expected(-1);
    extend->add_option("--point", opt.point, "candidate point")->required();

    auto* bary = app.add_subcommand("barycentric", "barycentric coordinates in a simplex");
    bary->add_option("points", opt.points, "simplex vertices")->required()->expected(-1);
    bary->add_option("--point", opt.point, "query point")->required();

    auto* classify = app.add_subcommand("classify", "classify a point against a simplex");
    classify->add_option("points", opt.points, "simplex vertices")->required()->expected(-1);
    classify->add_option("--point", opt.point, "query point")->required();

    auto* validate = app.add_subcommand("validate", "validate a complex document");
    validate->add_option("file", opt.file, ".scx document")->required();
    validate->add_option("--method", opt.method, "definitional, disjoint-interiors or both")
        ->check(CLI::IsMember({"definitional", "disjoint-interiors", "both"}));

    auto* skeleton_cmd = app.add_subcommand("skeleton", "p-skeleton of a complex");
    skeleton_cmd->add_option("file", opt.file, ".scx document")->required();
    skeleton_cmd->add_option("-p,--dim", opt.p, "maximum dimension to keep")->required();

    auto* star_cmd = app.add_subcommand("star", "star of a vertex");
    star_cmd->add_option("file", opt.file, ".scx document")->required();
    star_cmd->add_option("-v,--vertex", opt.vertex, "vertex label")->required();

    auto* closed_star_cmd = app.add_subcommand("closed-star", "closed star of a vertex");
    closed_star_cmd->add_option("file", opt.file, ".scx document")->required();
    closed_star_cmd->add_option("-v,--vertex", opt.vertex, "vertex label")->required();

    auto* link_cmd = app.add_subcommand("link", "link of a vertex");
    link_cmd->add_option("file", opt.file, ".scx document")->required();
    link_cmd->add_option("-v,--vertex", opt.vertex, "vertex label")->required();

    auto* locate_cmd = app.add_subcommand("locate", "carrier simplex of a point of |K|");
    locate_cmd->add_option("file", opt.file, ".scx document")->required();
    locate_cmd->add_option("--point", opt.point, "query point")->required();

    auto* lambda_cmd = app.add_subcommand("lambda", "barycentric coordinate function of a vertex");
    lambda_cmd->add_option("file", opt.file, ".scx document")->required();
    lambda_cmd->add_option("-v,--vertex", opt.vertex, "vertex label")->required();
    lambda_cmd->add_option("--point", opt.point, "query point")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate the document's PL map at a point");
    eval_cmd->add_option("file", opt.file, ".scx document")->required();
    eval_cmd->add_option("--point", opt.point, "query point")->required();

    auto* summary_cmd = app.add_subcommand("summary", "bounding box, counts and compactness");
    summary_cmd->add_option("file", opt.file, ".scx document")->required();

    std::vector<const char*> argv;
    argv.push_back("scx");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    opt.structured = format == "structured";

    try {
        if (independent->parsed()) {
            PointSet a = detail::parse_points(opt.points);
            IndependenceCheck chk = check_geometric_independence(a);
            if (opt.structured) {
                out << "{\n  \"command\": \"independent\",\n";
                out << "  \"independent\": \"" << detail::yesno(chk.independent) << "\",\n";
                out << "  \"points\": " << a.size() << ",\n";
                out << "  \"rank\": " << chk.rank << ",\n";
                out << "  \"required_rank\": " << a.size() - 1 << "\n}\n";
            } else {
                out << "points: " << a.size() << " in R^" << a.ambient_dim() << "\n";
                out << "rank: " << chk.rank << " (independent needs " << a.size() - 1 << ")\n";
                out << "geometrically independent: " << detail::yesno(chk.independent) << "\n";
            }
            return chk.independent ? 0 : 1;
        }

        if (plane_member->parsed()) {
            PointSet a = detail::parse_points(opt.points);
            Vector w = detail::parse_point(opt.point);
            PlaneMembership m = plane_membership(AffinePlane::spanned_by(a), w);
            bool on = std::holds_alternative<OnPlane>(m);
            if (opt.structured) {
                out << "{\n  \"command\": \"plane-member\",\n";
                out << "  \"on_plane\": \"" << detail::yesno(on) << "\"";
                if (on) out << ",\n  \"coefficients\": " << detail::coords_json(std::get<OnPlane>(m).coeffs);
                out << "\n}\n";
            } else {
                out << "on plane: " << detail::yesno(on) << "\n";
                if (on) out << "coefficients: " << detail::coords_line(std::get<OnPlane>(m).coeffs) << "\n";
            }
            return on ? 0 : 1;
        }

        if (extend->parsed()) {
            PointSet a = detail::parse_points(opt.points);
            Vector w = detail::parse_point(opt.point);
            ExtensionResult r = extend_independent(a, w);
            bool extended = std::holds_alternative<Extended>(r);
            std::size_t before = extended ? std::get<Extended>(r).rank_before
                                          : check_geometric_independence(a).rank;
            std::size_t after = extended ? std::get<Extended>(r).rank_after : before;
            if (opt.structured) {
                out << "{\n  \"command\": \"extend\",\n";
                out << "  \"extended\": \"" << detail::yesno(extended) << "\",\n";
                out << "  \"rank_before\": " << before << ",\n";
                out << "  \"rank_after\": " << after << "\n}\n";
            } else {
                out << "rank before: " << before << "\n";
                out << "rank after: " << after << "\n";
                out << "extended: " << detail::yesno(extended) << "\n";
            }
            return extended ? 0 : 1;
        }

        if (bary->parsed()) {
            GeometricSimplex s = make_simplex(detail::parse_points(opt.points));
            Vector x = detail::parse_point(opt.point);
            BarycentricResult r = barycentric(s, x);
            bool in_plane = std::holds_alternative<InPlane>(r);
            if (opt.structured) {
                out << "{\n  \"command\": \"barycentric\",\n";
                out << "  \"in_plane\": \"" << detail::yesno(in_plane) << "\"";
                if (in_plane)
                    out << ",\n  \"coordinates\": " << detail::coords_json(std::get<InPlane>(r).coords);
                out << "\n}\n";
            } else {
                if (in_plane)
                    out << "coordinates: " << detail::coords_line(std::get<InPlane>(r).coords) << "\n";
                else
                    out << "off plane\n";
            }
            return in_plane ? 0 : 1;
        }

        if (classify->parsed()) {
            GeometricSimplex s = make_simplex(detail::parse_points(opt.points));
            Vector x = detail::parse_point(opt.point);
            PointClassification c = classify_point(s, x);
            const char* region = c.region == Region::Interior   ? "interior"
                                 : c.region == Region::Boundary ? "boundary"
                                                                : "outside";
            if (opt.structured) {
                out << "{\n  \"command\": \"classify\",\n";
                out << "  \"region\": \"" << region << "\"";
                if (c.coords) out << ",\n  \"coordinates\": " << detail::coords_json(*c.coords);
                if (c.region != Region::Outside) {
                    out << ",\n  \"carrier\": [";
                    for (std::size_t i = 0; i < c.carrier.size(); ++i)
                        out << (i ? ", " : "") << c.carrier[i];
                    out << "]";
                }
                out << "\n}\n";
            } else {
                out << "region: " << region << "\n";
                if (c.coords) out << "coordinates: " << detail::coords_line(*c.coords) << "\n";
                if (c.region != Region::Outside) {
                    out << "carrier: {";
                    for (std::size_t i = 0; i < c.carrier.size(); ++i)
                        out << (i ? "," : "") << c.carrier[i];
                    out << "}\n";
                }
            }
            return c.region == Region::Outside ? 1 : 0;
        }

        if (validate->parsed()) {
            SimplicialComplex k = detail::load_document(opt.file).to_complex();
            std::vector<std::pair<std::string, ValidationReport>> reports;
            if (opt.method == "definitional" || opt.method == "both")
                reports.emplace_back("definitional", validate_definitional(k));
            if (opt.method == "disjoint-interiors" || opt.method == "both")
                reports.emplace_back("disjoint-interiors", validate_disjoint_interiors(k));
            return detail::report_validation(out, opt, reports);
        }

        if (skeleton_cmd->parsed()) {
            ComplexDocument doc = detail::load_document(opt.file);
            SimplicialComplex sk = skeleton(doc.to_complex(), opt.p);
            if (opt.structured) {
                ComplexDocument result;
                result.ambient_dim = doc.ambient_dim;
                result.vertices = sk.vertex_table();
                result.simplices.assign(sk.simplices().begin(), sk.simplices().end());
                out << serialize_document(result);
            } else {
                detail::print_simplex_listing(out, sk.simplices());
            }
            return 0;
        }

        if (star_cmd->parsed() || link_cmd->parsed()) {
            SimplicialComplex k = detail::load_document(opt.file).to_complex();
            SimplexSet set = star_cmd->parsed() ? star(k, opt.vertex) : link(k, opt.vertex);
            if (opt.structured) {
                out << "{\n  \"command\": \"" << (star_cmd->parsed() ? "star" : "link") << "\",\n";
                out << "  \"vertex\": \"" << json::escape(opt.vertex) << "\",\n";
                out << "  \"simplices\": " << detail::simplices_json(set) << "\n}\n";
            } else {
                detail::print_simplex_listing(out, set);
            }
            return 0;
        }

        if (closed_star_cmd->parsed()) {
            ComplexDocument doc = detail::load_document(opt.file);
            SimplicialComplex cl = closed_star(doc.to_complex(), opt.vertex);
            if (opt.structured) {
                ComplexDocument result;
                result.ambient_dim = doc.ambient_dim;
                result.vertices = cl.vertex_table();
                result.simplices.assign(cl.simplices().begin(), cl.simplices().end());
                out << serialize_document(result);
            } else {
                detail::print_simplex_listing(out, cl.simplices());
            }
            return 0;
        }

        if (locate_cmd->parsed()) {
            SimplicialComplex k = detail::load_document(opt.file).to_complex();
            Vector x = detail::parse_point(opt.point);
            LocateResult r = locate(k, x);
            bool found = std::holds_alternative<Carrier>(r);
            if (opt.structured) {
                out << "{\n  \"command\": \"locate\",\n";
                out << "  \"in_realization\": \"" << detail::yesno(found) << "\"";
                if (found) {
                    out << ",\n  \"carrier\": " << detail::labels_json(std::get<Carrier>(r).simplex);
                    out << ",\n  \"coordinates\": "
                        << detail::coords_json(std::get<Carrier>(r).coords);
                }
                out << "\n}\n";
            } else {
                if (found) {
                    out << "carrier: " << std::get<Carrier>(r).simplex.to_string() << "\n";
                    out << "coordinates: " << detail::coords_line(std::get<Carrier>(r).coords)
                        << "\n";
                } else {
                    out << "not in realization\n";
                }
            }
            return found ? 0 : 1;
        }

        if (lambda_cmd->parsed()) {
            SimplicialComplex k = detail::load_document(opt.file).to_complex();
            Rational value = lambda(k, opt.vertex, detail::parse_point(opt.point));
            if (opt.structured) {
                out << "{\n  \"command\": \"lambda\",\n";
                out << "  \"vertex\": \"" << json::escape(opt.vertex) << "\",\n";
                out << "  \"value\": \"" << value.to_string() << "\"\n}\n";
            } else {
                out << value.to_string() << "\n";
            }
            return 0;
        }

        if (eval_cmd->parsed()) {
            ComplexDocument doc = detail::load_document(opt.file);
            std::optional<PLMap> f = doc.pl_map();
            if (!f) throw ValueError("document has no 'values' block");
            Vector v = eval_pl(doc.to_complex(), *f, detail::parse_point(opt.point));
            if (opt.structured) {
                out << "{\n  \"command\": \"eval\",\n";
                out << "  \"value\": " << detail::vector_json(v) << "\n}\n";
            } else {
                out << (v.dim() == 1 ? v[0].to_string() : v.to_string()) << "\n";
            }
            return 0;
        }

        if (summary_cmd->parsed()) {
            SimplicialComplex k = detail::load_document(opt.file).to_complex();
            RealizationSummary s = realization_summary(k);
            if (opt.structured) {
                out << "{\n  \"command\": \"summary\",\n";
                out << "  \"box_min\": " << detail::vector_json(s.box_min) << ",\n";
                out << "  \"box_max\": " << detail::vector_json(s.box_max) << ",\n";
                out << "  \"counts\": {";
                std::size_t i = 0;
                for (const auto& [d, n] : s.counts)
                    out << (i++ ? ", " : "") << "\"" << d << "\": " << n;
                out << "},\n";
                out << "  \"compact\": \"" << detail::yesno(s.compact) << "\"\n}\n";
            } else {
                out << "bounding box:";
                for (std::size_t c = 0; c < s.box_min.dim(); ++c)
                    out << (c ? " x [" : " [") << s.box_min[c] << ", " << s.box_max[c] << "]";
                out << "\n";
                out << "simplices by dimension:";
                for (const auto& [d, n] : s.counts) out << " " << d << ":" << n;
                out << "\n";
                out << "compact: " << detail::yesno(s.compact) << "\n";
            }
            return 0;
        }
    } catch (const ScxParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DependentVerticesError& e) {
        err << "error: DependentVertices: " << e.what() << "\n";
        return 1;
    } catch (const UnknownVertexError& e) {
        err << "error: UnknownVertex: " << e.what() << "\n";
        return 1;
    } catch (const NotInRealizationError& e) {
        err << "error: NotInRealization: " << e.what() << "\n";
        return 1;
    } catch (const EmptyComplexError& e) {
        err << "error: EmptyComplex: " << e.what() << "\n";
        return 1;
    } catch (const DimensionMismatchError& e) {
        err << "error: DimensionMismatch: " << e.what() << "\n";
        return 1;
    } catch (const ValueError& e) {
        err << "error: Value: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace cli
}  // namespace scx
