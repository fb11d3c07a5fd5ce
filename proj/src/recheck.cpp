#include "gz/recheck.hpp"

namespace gz {

namespace {

bool fail(std::string* why, const std::string& what) {
    if (why) *why = what;
    return false;
}

}  // namespace

bool recheck_certificate(const nlohmann::json& cert, const HPolytope& p, std::string* why) {
    FieldVector vertex;
    std::vector<std::vector<long long>> directions;
    FieldElement l;
    try {
        for (const auto& s : cert.at("vertex"))
            vertex.push_back(parse_field_element(s.get<std::string>()));
        directions = cert.at("directions").get<std::vector<std::vector<long long>>>();
        l = parse_field_element(cert.at("l").get<std::string>());
    } catch (const std::exception& e) {
        return fail(why, std::string("malformed certificate: ") + e.what());
    }

    if (vertex.size() != 5 || directions.size() != 5)
        return fail(why, "certificate does not describe a 5-simplex embedding");
    for (const auto& d : directions)
        if (d.size() != 5) return fail(why, "direction of wrong dimension");
    if (l.sign() <= 0) return fail(why, "simplex size is not positive");

    // Z-basis test: |det| of the direction matrix in lattice coordinates.
    FieldMatrix dm(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) dm.at(i, j) = FieldElement(Rational(directions[i][j]));
    FieldElement det = exact_det(dm);
    if (!(det == FieldElement(1) || det == FieldElement(-1)))
        return fail(why, "directions are not a Z-basis of the lattice");

    // Ambient directions and generator points.
    std::vector<FieldVector> generators;
    for (const auto& d : directions) {
        FieldVector c(5);
        for (int j = 0; j < 5; ++j) c[j] = FieldElement(Rational(d[j]));
        FieldVector g = vertex + l * p.lattice.from_coords(c);
        generators.push_back(std::move(g));
    }

    // The vertex satisfies every halfspace; strictly wherever it has slack.
    for (const auto& h : p.halfspaces)
        if (h.slack(vertex).sign() < 0)
            return fail(why, "vertex violates a halfspace");

    // Every generator satisfies every halfspace (closed containment).
    for (const auto& g : generators)
        for (const auto& h : p.halfspaces)
            if (h.slack(g).sign() < 0)
                return fail(why, "generator point leaves the polytope");

    // The vertex is strictly inside the chamber; generators weakly so.
    for (const auto& h : p.chamber_strict)
        if (h.slack(vertex).sign() <= 0)
            return fail(why, "vertex is not strictly inside the chamber");
    for (const auto& g : generators)
        for (const auto& h : p.chamber_strict)
            if (h.slack(g).sign() < 0)
                return fail(why, "generator point leaves the chamber closure");

    return true;
}

bool recheck_report(const nlohmann::json& report, std::string* why) {
    FieldElement lambda;
    try {
        lambda = parse_field_element(report.at("lambda").get<std::string>());
        if (lambda.sign() <= 0) return fail(why, "lambda must be positive");
        return recheck_certificate(report.at("certificate"), gz_halfspaces(lambda), why);
    } catch (const std::exception& e) {
        return fail(why, std::string("malformed report: ") + e.what());
    }
}

}  // namespace gz
