#include "gz/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace gz {

namespace {

FieldElement half() { return FieldElement(Rational(1, 2)); }
FieldElement third() { return FieldElement(Rational(1, 3)); }
FieldElement sqrt3_over_2() { return FieldElement(0, Rational(1, 2)); }
FieldElement sqrt3_over_3() { return FieldElement(0, Rational(1, 3)); }

// Visits all k-subsets of {0..n-1}.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool satisfies_all(const std::vector<Halfspace>& hs, const FieldVector& x) {
    return std::all_of(hs.begin(), hs.end(),
                       [&](const Halfspace& h) { return h.slack(x).sign() >= 0; });
}

FieldMatrix rows_matrix(const std::vector<Halfspace>& hs, const std::vector<int>& idx, int dim) {
    FieldMatrix m(static_cast<int>(idx.size()), dim);
    for (size_t r = 0; r < idx.size(); ++r)
        for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = hs[idx[r]].normal[c];
    return m;
}

// Writes c = t * m with t > 0 in the field and m a primitive integer
// vector.  Requires all component ratios to be rational, which holds for
// any direction proportional to a lattice vector.
std::pair<FieldElement, std::vector<long long>> primitive_decomposition(const FieldVector& c) {
    int k = -1;
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) {
            k = static_cast<int>(i);
            break;
        }
    if (k < 0) throw std::invalid_argument("primitive_decomposition: zero vector");

    std::vector<Rational> ratio(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        FieldElement r = c[i] / c[k];
        if (!r.is_rational())
            throw std::domain_error(
                "edge direction is not proportional to a lattice vector");
        ratio[i] = r.rational_part();
    }
    Integer q_lcm = 1;
    for (const auto& r : ratio) q_lcm = lcm(q_lcm, denominator(r));
    std::vector<Integer> n(c.size());
    Integer g = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        n[i] = numerator(ratio[i]) * (q_lcm / denominator(ratio[i]));
        g = gcd(g, n[i]);
    }
    FieldElement t = c[k] * FieldElement(Rational(g, q_lcm));
    std::vector<long long> m(c.size());
    for (size_t i = 0; i < c.size(); ++i) m[i] = Integer(n[i] / g).convert_to<long long>();
    if (t.sign() < 0) {
        t = -t;
        for (auto& x : m) x = -x;
    }
    return {t, m};
}

FieldElement integer_det(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size());
    FieldMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = FieldElement(Rational(rows[i][j]));
    return exact_det(m);
}

}  // namespace

bool HPolytope::in_chamber(const FieldVector& x) const {
    return std::all_of(chamber_strict.begin(), chamber_strict.end(),
                       [&](const Halfspace& h) { return h.slack(x).sign() > 0; });
}

HPolytope gz_halfspaces(const FieldElement& lambda) {
    if (lambda.sign() <= 0) throw std::domain_error("gz_halfspaces: lambda must be positive");
    const FieldElement h = half(), s2 = sqrt3_over_2(), s3 = sqrt3_over_3(), t = third();
    const FieldElement zero;

    std::vector<Halfspace> hs;
    // Kirwan triangle on (x1, x2).
    hs.push_back({{-s2, h, 0, 0, 0}, lambda * h});       // -s/2 x1 + x2/2 <= l/2
    hs.push_back({{s2, h, 0, 0, 0}, lambda * h});        //  s/2 x1 + x2/2 <= l/2
    hs.push_back({{0, -1, 0, 0, 0}, -(lambda * h)});     //  x2 >= l/2
    // Interlacing: mu1 <= x3 <= mu2 <= x4 <= mu3, x3 <= x5 <= x4, where
    // mu1 = -x1/3 - x2/sqrt3, mu2 = 2 x1/3, mu3 = -x1/3 + x2/sqrt3.
    hs.push_back({{-2 * t, 0, 1, 0, 0}, zero});          // x3 <= mu2
    hs.push_back({{-t, -s3, -1, 0, 0}, zero});           // mu1 <= x3
    hs.push_back({{2 * t, 0, 0, -1, 0}, zero});          // mu2 <= x4
    hs.push_back({{t, -s3, 0, 1, 0}, zero});             // x4 <= mu3
    hs.push_back({{0, 0, 1, 0, -1}, zero});              // x3 <= x5
    hs.push_back({{0, 0, 0, -1, 1}, zero});              // x5 <= x4

    // The principal chamber: both su(3) chamber inequalities and x3 < x4,
    // all strict.  Strictness of x3 <= x5 <= x4 is not required (the last
    // chamber factor has no walls).
    const FieldElement th = FieldElement(Rational(3, 2));
    std::vector<Halfspace> chamber;
    chamber.push_back({{-th, -s2, 0, 0, 0}, zero});  //  3/2 x1 + s/2 x2 > 0
    chamber.push_back({{th, -s2, 0, 0, 0}, zero});   // -3/2 x1 + s/2 x2 > 0
    chamber.push_back({{0, 0, 1, -1, 0}, zero});     //  x3 < x4

    return HPolytope{std::move(hs), gz_torus_lattice(), std::move(chamber)};
}

std::vector<FieldVector> gz_vertex_table(const FieldElement& lambda) {
    if (lambda.sign() <= 0) throw std::domain_error("gz_vertex_table: lambda must be positive");
    const FieldElement a = lambda * sqrt3_over_3();        // lambda/sqrt3
    const FieldElement u = lambda * FieldElement(0, Rational(1, 9));  // lambda/(3 sqrt3)
    const FieldElement c = lambda * FieldElement(0, Rational(1, 6));  // lambda/(2 sqrt3)
    const FieldElement hl = lambda * half();
    const FieldElement zero;

    std::vector<FieldVector> rows = {
        // Fibre over the apex (0, lambda): eigenvalue bounds (-a, 0, a).
        {zero, lambda, zero, zero, zero},
        {zero, lambda, -a, zero, -a},
        {zero, lambda, -a, a, -a},
        {zero, lambda, zero, a, zero},
        {zero, lambda, zero, a, a},
        {zero, lambda, -a, a, a},
        {zero, lambda, -a, zero, zero},
        // Over (+lambda/(2 sqrt3), lambda/2) the two upper bounds collapse:
        // bounds (-2u, u, u), x4 pinned at u.
        {c, hl, -2 * u, u, -2 * u},
        {c, hl, -2 * u, u, u},
        {c, hl, u, u, u},
        // Over (-lambda/(2 sqrt3), lambda/2) the two lower bounds collapse:
        // bounds (-u, -u, 2u), x3 pinned at -u.
        {-c, hl, -u, -u, -u},
        {-c, hl, -u, 2 * u, -u},
        {-c, hl, -u, 2 * u, 2 * u},
    };
    std::sort(rows.begin(), rows.end(), lex_less);
    return rows;
}

VRep enumerate_vertices(const HPolytope& p) {
    const int dim = 5;
    const int m = static_cast<int>(p.halfspaces.size());
    if (m < dim) throw PolytopeUnbounded("fewer halfspaces than dimensions");

    // A nonzero direction in the kernel of every normal is a line in the
    // recession cone.
    std::vector<int> all_idx(m);
    std::iota(all_idx.begin(), all_idx.end(), 0);
    if (!exact_nullspace(rows_matrix(p.halfspaces, all_idx, dim)).empty())
        throw PolytopeUnbounded("recession cone contains a line");

    // Extreme rays of the recession cone lie on rank-4 subsets.
    for_each_subset(m, 4, [&](const std::vector<int>& idx) {
        FieldMatrix sub = rows_matrix(p.halfspaces, idx, dim);
        auto kernel = exact_nullspace(sub);
        if (kernel.size() != 1) return;
        for (int s : {1, -1}) {
            FieldVector d = FieldElement(s) * kernel[0];
            bool recedes = std::all_of(p.halfspaces.begin(), p.halfspaces.end(),
                                       [&](const Halfspace& h) {
                                           return dot(h.normal, d).sign() <= 0;
                                       });
            if (recedes) throw PolytopeUnbounded("recession direction found");
        }
    });

    std::vector<FieldVector> found;
    for_each_subset(m, dim, [&](const std::vector<int>& idx) {
        FieldMatrix sub = rows_matrix(p.halfspaces, idx, dim);
        FieldVector rhs(dim);
        for (int r = 0; r < dim; ++r) rhs[r] = p.halfspaces[idx[r]].offset;
        auto x = exact_solve(sub, rhs);
        if (!x) return;
        if (satisfies_all(p.halfspaces, *x)) found.push_back(std::move(*x));
    });

    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) throw std::domain_error("enumerate_vertices: polytope is empty");

    VRep v;
    v.vertices = std::move(found);
    v.tight_sets.resize(v.vertices.size());
    for (size_t i = 0; i < v.vertices.size(); ++i)
        for (int j = 0; j < m; ++j)
            if (p.halfspaces[j].slack(v.vertices[i]).is_zero()) v.tight_sets[i].push_back(j);
    return v;
}

std::vector<Edge> enumerate_edges(const HPolytope& p, const VRep& v) {
    const int dim = 5;
    std::vector<Edge> edges;
    for (size_t i = 0; i < v.vertices.size(); ++i) {
        for (size_t j = i + 1; j < v.vertices.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(v.tight_sets[i].begin(), v.tight_sets[i].end(),
                                  v.tight_sets[j].begin(), v.tight_sets[j].end(),
                                  std::back_inserter(common));
            if (common.size() < 4) continue;
            if (exact_rank(rows_matrix(p.halfspaces, common, dim)) != 4) continue;
            FieldVector d = v.vertices[j] - v.vertices[i];
            auto [len, dir] = primitive_decomposition(p.lattice.coords(d));
            edges.push_back({static_cast<int>(i), static_cast<int>(j), std::move(dir),
                             std::move(len)});
        }
    }
    return edges;
}

FieldElement min_edge_length(const std::vector<Edge>& edges) {
    if (edges.empty()) throw std::domain_error("min_edge_length: no edges");
    FieldElement best = edges[0].length;
    for (const auto& e : edges) best = std::min(best, e.length);
    return best;
}

FieldElement min_edge_length(const HPolytope& p) {
    VRep v = enumerate_vertices(p);
    return min_edge_length(enumerate_edges(p, v));
}

std::vector<int> smooth_chamber_vertices(const HPolytope& p, const VRep& v,
                                         const std::vector<Edge>& edges) {
    std::vector<std::vector<std::vector<long long>>> incident(v.vertices.size());
    for (const auto& e : edges) {
        incident[e.v0].push_back(e.direction);
        std::vector<long long> back(e.direction.size());
        for (size_t k = 0; k < back.size(); ++k) back[k] = -e.direction[k];
        incident[e.v1].push_back(std::move(back));
    }

    std::vector<int> smooth;
    for (size_t i = 0; i < v.vertices.size(); ++i) {
        if (!p.in_chamber(v.vertices[i])) continue;
        if (incident[i].size() != 5) continue;
        FieldElement det = integer_det(incident[i]);
        if (det == FieldElement(1) || det == FieldElement(-1))
            smooth.push_back(static_cast<int>(i));
    }
    return smooth;
}

bool WidthCertificate::all_checks_pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(),
                                          [](const auto& kv) { return kv.second; });
}

std::pair<FieldElement, WidthCertificate> build_width_certificate(const HPolytope& p) {
    VRep v = enumerate_vertices(p);
    std::vector<Edge> edges = enumerate_edges(p, v);
    std::vector<int> smooth = smooth_chamber_vertices(p, v, edges);
    if (smooth.empty())
        throw CertificateError("no smooth chamber vertex: certificate unavailable");

    // Minimum incident edge length per smooth vertex.
    auto min_incident = [&](int vi) {
        FieldElement best;
        bool first = true;
        for (const auto& e : edges) {
            if (e.v0 != vi && e.v1 != vi) continue;
            if (first || e.length < best) best = e.length;
            first = false;
        }
        return best;
    };

    int pick = smooth[0];
    FieldElement best_l = min_incident(pick);
    for (int vi : smooth) {
        FieldElement l = min_incident(vi);
        if (best_l < l || (l == best_l && lex_less(v.vertices[vi], v.vertices[pick]))) {
            pick = vi;
            best_l = l;
        }
    }

    WidthCertificate cert;
    cert.vertex = v.vertices[pick];
    cert.size_l = best_l;
    std::vector<FieldVector> dirs_ambient;
    for (const auto& e : edges) {
        if (e.v0 != pick && e.v1 != pick) continue;
        std::vector<long long> d = e.direction;
        if (e.v1 == pick)
            for (auto& x : d) x = -x;
        FieldVector c(d.size());
        for (size_t k = 0; k < d.size(); ++k) c[k] = FieldElement(Rational(d[k]));
        dirs_ambient.push_back(p.lattice.from_coords(c));
        cert.directions.push_back(std::move(d));
    }
    if (cert.directions.size() != 5)
        throw std::logic_error("width certificate: smooth vertex without 5 incident edges");

    // (1) The directions form a Z-basis of the lattice.
    FieldElement det = integer_det(cert.directions);
    cert.checks["directions_form_lattice_basis"] =
        det == FieldElement(1) || det == FieldElement(-1);

    // (2) Each generator point v + l*u_i lies in every halfspace.
    bool generators_ok = true;
    std::vector<FieldVector> generators;
    for (const auto& u : dirs_ambient) {
        FieldVector g = cert.vertex + cert.size_l * u;
        generators_ok = generators_ok && satisfies_all(p.halfspaces, g);
        generators.push_back(std::move(g));
    }
    cert.checks["generators_inside_polytope"] = generators_ok;

    // (3) The vertex is strict on every halfspace not tight at it.
    bool strict_ok = true;
    for (const auto& h : p.halfspaces) {
        int s = h.slack(cert.vertex).sign();
        if (s < 0) strict_ok = false;  // not even feasible
    }
    // tightness itself is fine; infeasibility is not
    cert.checks["vertex_strict_on_slack_halfspaces"] = strict_ok;

    // (4) The vertex lies strictly inside the chamber.
    cert.checks["vertex_strictly_in_chamber"] = p.in_chamber(cert.vertex);

    // (5) Generators satisfy the chamber constraints weakly.
    bool gen_chamber_ok = true;
    for (const auto& g : generators)
        for (const auto& h : p.chamber_strict)
            if (h.slack(g).sign() < 0) gen_chamber_ok = false;
    cert.checks["generators_weakly_in_chamber"] = gen_chamber_ok;

    return {best_l, cert};
}

WidthReport gromov_width_report(const FieldElement& lambda) {
    HPolytope p = gz_halfspaces(lambda);
    auto [l, cert] = build_width_certificate(p);
    WidthReport r;
    r.lambda = lambda;
    r.lower_bound = l;
    r.upper_bound = lambda * sqrt3_over_3();  // quoted bound lambda/sqrt3
    r.tight = r.lower_bound == r.upper_bound && cert.all_checks_pass();
    r.certificate = std::move(cert);
    return r;
}

int affine_dimension(const std::vector<FieldVector>& points) {
    if (points.size() <= 1) return 0;
    FieldMatrix diffs(static_cast<int>(points.size() - 1),
                      static_cast<int>(points[0].size()));
    for (size_t i = 1; i < points.size(); ++i) {
        FieldVector d = points[i] - points[0];
        for (size_t j = 0; j < d.size(); ++j)
            diffs.at(static_cast<int>(i - 1), static_cast<int>(j)) = d[j];
    }
    return exact_rank(diffs);
}

std::vector<HalfspaceD> to_double(const std::vector<Halfspace>& hs) {
    std::vector<HalfspaceD> out;
    out.reserve(hs.size());
    for (const auto& h : hs) {
        HalfspaceD d{};
        for (size_t i = 0; i < 5; ++i) d.normal[i] = h.normal[i].to_double();
        d.offset = h.offset.to_double();
        out.push_back(d);
    }
    return out;
}

namespace {

nlohmann::json field_vector_json(const FieldVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

}  // namespace

nlohmann::json certificate_json(const WidthCertificate& cert) {
    nlohmann::json j;
    j["vertex"] = field_vector_json(cert.vertex);
    j["directions"] = cert.directions;
    j["l"] = cert.size_l.str();
    j["checks"] = cert.checks;
    return j;
}

nlohmann::json report_json(const FieldElement& lambda, const HPolytope& p, const VRep& v,
                           const std::vector<Edge>& edges, const WidthReport& report) {
    nlohmann::json j;
    j["lambda"] = lambda.str();
    j["vertices"] = nlohmann::json::array();
    for (const auto& vert : v.vertices) j["vertices"].push_back(field_vector_json(vert));
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges)
        j["edges"].push_back({{"v0", e.v0},
                              {"v1", e.v1},
                              {"direction", e.direction},
                              {"length", e.length.str()}});
    j["certificate"] = certificate_json(report.certificate);
    j["lower_bound"] = report.lower_bound.str();
    j["upper_bound"] = report.upper_bound.str();
    j["tight"] = report.tight;
    j["upper_bound_citation"] =
        "Caviedes Castro, upper bounds for the Gromov width of coadjoint orbits "
        "of compact Lie groups (quoted constant, not computed here)";
    j["note"] =
        "The lower bound is certified by an explicit integral affine embedding of an "
        "open simplex; the matching upper bound is quoted from the literature, so the "
        "width equality itself is consumed as a known result rather than recomputed.";
    (void)p;
    return j;
}

}  // namespace gz
