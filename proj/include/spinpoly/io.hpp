#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "spinpoly/bell.hpp"
#include "spinpoly/correlation.hpp"
#include "spinpoly/distribution.hpp"
#include "spinpoly/errors.hpp"
#include "spinpoly/feasibility.hpp"
#include "spinpoly/geometry.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/sampling.hpp"
#include "spinpoly/tetrahedron.hpp"

namespace spinpoly::io {

using nlohmann::json;

/// Input schema for a correlation matrix:
///   { "n": 3, "upper": ["1/2", "0/1", "-1/3"], "label": "...", "seed": 7 }
/// "upper" holds the n(n-1)/2 upper-triangle rationals in (i,j) order; every
/// entry must parse to a rational in [-1,1]. "label" and "seed" are optional.
struct MatrixDocument {
    int n = 0;
    RationalVector upper;
    std::optional<std::string> label;
    std::optional<std::uint64_t> seed;

    CorrelationMatrix matrix() const { return CorrelationMatrix(n, upper); }

    friend bool operator==(const MatrixDocument& a, const MatrixDocument& b) {
        return a.n == b.n && a.upper == b.upper && a.label == b.label && a.seed == b.seed;
    }
};

inline json to_json(const MatrixDocument& doc) {
    json out{{"n", doc.n}, {"upper", rational_strings(doc.upper)}};
    if (doc.label) out["label"] = *doc.label;
    if (doc.seed) out["seed"] = *doc.seed;
    return out;
}

inline MatrixDocument matrix_document_from_json(const json& j) {
    MatrixDocument doc;
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("upper")) {
            throw ParseError("matrix document needs \"n\" and \"upper\"");
        }
        doc.n = j.at("n").get<int>();
        if (doc.n < 1) throw ParseError("matrix document needs n >= 1");
        for (const auto& entry : j.at("upper")) {
            doc.upper.push_back(parse_rational(entry.get<std::string>()));
        }
        if (j.contains("label")) doc.label = j.at("label").get<std::string>();
        if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix document: ") + e.what());
    }
    if (doc.upper.size() != pair_count(doc.n)) {
        throw ParseError("matrix document needs " + std::to_string(pair_count(doc.n)) +
                         " upper entries for n=" + std::to_string(doc.n) + ", got " +
                         std::to_string(doc.upper.size()));
    }
    for (const Rational& s : doc.upper) {
        if (s < -1 || s > 1) {
            throw ParseError("matrix entry " + rational_string(s) + " outside [-1,1]");
        }
    }
    return doc;
}

inline MatrixDocument read_matrix_document(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_document_from_json(j);
}

inline MatrixDocument read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    return read_matrix_document(in);
}

inline MatrixDocument to_document(const CorrelationMatrix& sigma) {
    MatrixDocument doc;
    doc.n = sigma.size();
    doc.upper = sigma.upper();
    return doc;
}

/// Envelope for every CLI invocation: the echoed command line, the
/// command-specific result payload, and wall-clock timing.
struct ReportDocument {
    std::string command;
    json result;
    double elapsed_seconds = 0.0;

    friend bool operator==(const ReportDocument& a, const ReportDocument& b) {
        return a.command == b.command && a.result == b.result &&
               a.elapsed_seconds == b.elapsed_seconds;
    }
};

inline json to_json(const ReportDocument& report) {
    return json{{"command", report.command},
                {"result", report.result},
                {"elapsed_seconds", report.elapsed_seconds}};
}

inline ReportDocument report_from_json(const json& j) {
    ReportDocument report;
    try {
        report.command = j.at("command").get<std::string>();
        report.result = j.at("result");
        report.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report document: ") + e.what());
    }
    return report;
}

// --- payload helpers shared by the CLI and the integration tests ---

/// Triples and signs are serialized 1-based, the convention of the math.
inline json to_json(const BellInequality& ineq) {
    return json{{"triple", {ineq.triple()[0] + 1, ineq.triple()[1] + 1, ineq.triple()[2] + 1}},
                {"signs", {ineq.signs()[0], ineq.signs()[1], ineq.signs()[2]}}};
}

inline json to_json(const JointSpinDistribution& dist) {
    json atoms = json::array();
    for (const auto& [atom, weight] : dist.weights()) {
        atoms.push_back(json{{"atom", atom.to_string()}, {"weight", rational_string(weight)}});
    }
    return json{{"n", dist.size()}, {"atoms", atoms}};
}

inline json to_json(const geometry::HalfSpace& hs) {
    return json{{"normal", rational_strings(hs.normal)}, {"offset", rational_string(hs.offset)}};
}

inline json to_json(const geometry::AffineEquality& eq) {
    return json{{"normal", rational_strings(eq.normal)}, {"offset", rational_string(eq.offset)}};
}

inline json to_json(const geometry::HRepresentation& h) {
    json halfspaces = json::array();
    for (const auto& hs : h.halfspaces) halfspaces.push_back(to_json(hs));
    json equalities = json::array();
    for (const auto& eq : h.equalities) equalities.push_back(to_json(eq));
    return json{{"dim", h.dim}, {"halfspaces", halfspaces}, {"equalities", equalities}};
}

inline json to_json(const SampleSummary& summary) {
    return json{{"n", summary.n},
                {"count", summary.count},
                {"seed", summary.seed},
                {"generator", summary.generator},
                {"sigma_hat", rational_strings(summary.sigma_hat)},
                {"standard_error", summary.standard_error}};
}

} // namespace spinpoly::io
