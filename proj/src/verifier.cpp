#include "polyred/verifier.hpp"

#include "polyred/errors.hpp"
#include "polyred/lp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

namespace polyred {

const char* status_name(Status s)
{
    switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::Flagged: return "flagged";
    }
    return "?";
}

const Check* VerificationReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

namespace {

std::string show(const Point01& x, const std::vector<CoordLabel>& labels)
{
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        if (!first)
            s += ",";
        s += i < labels.size() ? labels[i].str() : std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::string show(const RatVector& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (i ? "," : "") + to_string(x[i]);
    return s + ")";
}

std::optional<Point01> as_point01(const RatVector& x)
{
    Point01 p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            p[i] = 0;
        else if (x[i] == 1)
            p[i] = 1;
        else
            return std::nullopt;
    }
    return p;
}

bool tight_everywhere(const std::vector<FaceConstraint>& cs, const Point01& v, int below_level)
{
    return std::all_of(cs.begin(), cs.end(), [&](const FaceConstraint& c) {
        return c.level >= below_level || c.constraint.tight_at(v);
    });
}

bool respects(const Fixing& fix, const Point01& v)
{
    for (std::size_t i = 0; i < fix.size(); ++i)
        if (fix[i] >= 0 && v[i] != static_cast<std::uint8_t>(fix[i]))
            return false;
    return true;
}

class CheckRunner {
public:
    CheckRunner(const ReductionCertificate& cert, const Guard& guard, TargetPath path)
        : cert_(cert), guard_(guard), path_(path)
    {
        rep_.id = cert.id;
        rep_.flags = cert.flags;
        rep_.dims = cert.dims;
    }

    VerificationReport run()
    {
        auto start = std::chrono::steady_clock::now();
        try {
            checks();
        } catch (const ResourceError& e) {
            limited_ = true;
            add("resource", false, e.what());
        }
        if (failed_hard_)
            rep_.status = Status::Failed;
        else if (limited_)
            rep_.status = Status::Flagged;
        else
            rep_.status = Status::Verified;
        rep_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return std::move(rep_);
    }

private:
    void add(std::string name, bool passed, std::string detail)
    {
        if (!passed && name != "resource" && name != "face_validity_unestablished")
            failed_hard_ = true;
        rep_.checks.push_back({std::move(name), passed, std::move(detail)});
    }

    void checks()
    {
        const auto& map = cert_.map;
        std::size_t sdim = cert_.source.dim(), tdim = cert_.target.dim();
        if (map.in_dim() != sdim || map.out_dim() != tdim || map.offset().size() != tdim) {
            add("map_shape", false,
                "map is " + std::to_string(map.out_dim()) + "x" + std::to_string(map.in_dim()) + ", expected " +
                    std::to_string(tdim) + "x" + std::to_string(sdim));
            return;
        }
        for (const auto& c : cert_.face.constraints)
            if (c.constraint.coeffs.size() != tdim || c.level < 0) {
                add("map_shape", false, "face constraint has wrong length or negative level");
                return;
            }
        add("map_shape", true, std::to_string(tdim) + "x" + std::to_string(sdim));

        VertexSet source = enumerate(cert_.source, guard_);
        auto labels = cert_.target.labels();
        Fixing fix = cert_.face.fixing(labels);

        std::optional<VertexSet> full;
        if (path_ != TargetPath::Restricted) {
            try {
                full = enumerate(cert_.target, guard_);
            } catch (const ResourceError&) {
                if (path_ == TargetPath::Full)
                    throw;
            }
        }
        std::vector<Point01> restricted;
        if (full) {
            for (const auto& v : full->vertices())
                if (respects(fix, v))
                    restricted.push_back(v);
        } else {
            restricted = face_restricted_enumerate(cert_.target, fix, guard_).vertices();
        }

        check_validity(full ? &*full : nullptr, restricted, labels);

        std::vector<Point01> face_points;
        for (const auto& v : restricted)
            if (tight_everywhere(cert_.face.constraints, v, 1 << 30))
                face_points.push_back(v);
        VertexSet face(cert_.target, labels, std::move(face_points));
        add("face_vertices", !face.empty(),
            std::to_string(face.size()) + " face vertices" + (full ? " (full target enumeration)" : " (face-restricted)"));
        if (face.empty())
            return;

        check_bijection(source, face, labels);

        std::size_t rs = affine_rank(std::span<const Point01>(source.vertices()));
        std::size_t rf = affine_rank(std::span<const Point01>(face.vertices()));
        add("affine_rank", rs == rf, "source " + std::to_string(rs) + ", face " + std::to_string(rf));

        add("target_dim", cert_.claimed_target_dim == static_cast<long long>(tdim),
            "claimed " + std::to_string(cert_.claimed_target_dim) + ", actual " + std::to_string(tdim));
        if (!rep_.dims.empty()) {
            std::string detail;
            bool ok = true;
            for (const auto& d : rep_.dims) {
                if (!d.holds()) {
                    ok = false;
                    detail += (detail.empty() ? "" : "; ") + d.name + ": " + std::to_string(d.actual) + " vs " +
                              relation_symbol(d.relation) + " " + std::to_string(d.claimed);
                }
            }
            add("dims", ok, ok ? std::to_string(rep_.dims.size()) + " assertions hold" : detail);
        }
    }

    void check_validity(const VertexSet* full, const std::vector<Point01>& restricted,
                        const std::vector<CoordLabel>& labels)
    {
        std::size_t checked = 0;
        bool unestablished = false;
        for (std::size_t ci = 0; ci < cert_.face.constraints.size(); ++ci) {
            const auto& fc = cert_.face.constraints[ci];
            const std::vector<Point01>* domain = nullptr;
            std::vector<Point01> lower;
            if (fc.level == 0) {
                if (!full) {
                    unestablished = true;
                    continue;
                }
                domain = &full->vertices();
            } else {
                for (const auto& v : restricted)
                    if (tight_everywhere(cert_.face.constraints, v, fc.level))
                        lower.push_back(v);
                domain = &lower;
            }
            for (const auto& v : *domain) {
                if (!fc.constraint.satisfied_by(v)) {
                    add("face_validity", false,
                        "constraint " + std::to_string(ci) + " (level " + std::to_string(fc.level) +
                            ") violated at " + show(v, labels) + ": lhs " + to_string(fc.constraint.lhs(v)) + " " +
                            relation_symbol(fc.constraint.relation) + " " + to_string(fc.constraint.rhs) + " fails");
                    return;
                }
            }
            ++checked;
        }
        std::size_t fixings = cert_.face.zero_fixed.size() + cert_.face.one_fixed.size();
        if (unestablished) {
            limited_ = true;
            add("face_validity_unestablished", false,
                "level-0 constraints need the full target, which exceeds the guard");
        }
        add("face_validity", true,
            std::to_string(checked) + " constraints valid, " + std::to_string(fixings) + " coordinate fixings");
    }

    void check_bijection(const VertexSet& source, const VertexSet& face, const std::vector<CoordLabel>& labels)
    {
        std::set<Point01> images;
        for (const auto& s : source.vertices()) {
            RatVector img = cert_.map.apply(s);
            auto p = as_point01(img);
            if (!p) {
                add("bijection", false,
                    "source vertex " + show(s, source.labels()) + " maps to non-0/1 point " +
                        (img.size() <= 64 ? show(img) : std::string("(dimension ") + std::to_string(img.size()) + ")"));
                return;
            }
            if (!face.contains(*p)) {
                add("bijection", false,
                    "source vertex " + show(s, source.labels()) + " maps to " + show(*p, labels) +
                        ", which is not a face vertex");
                return;
            }
            if (!images.insert(*p).second) {
                add("bijection", false,
                    "source vertex " + show(s, source.labels()) + " collides with an earlier image " +
                        show(*p, labels));
                return;
            }
        }
        if (images.size() != face.size()) {
            for (const auto& f : face.vertices())
                if (!images.count(f)) {
                    add("bijection", false,
                        std::to_string(face.size() - images.size()) + " face vertices unreached, e.g. " +
                            show(f, labels));
                    return;
                }
        }
        add("bijection", true, std::to_string(source.size()) + " <-> " + std::to_string(face.size()));
    }

    const ReductionCertificate& cert_;
    Guard guard_;
    TargetPath path_;
    VerificationReport rep_;
    bool limited_ = false;
    bool failed_hard_ = false;
};

LinConstraint make(RatVector coeffs, Relation rel, Rational rhs)
{
    return LinConstraint{std::move(coeffs), rel, std::move(rhs)};
}

} // namespace

VerificationReport check_certificate(const ReductionCertificate& cert, const Guard& guard, TargetPath path)
{
    return CheckRunner(cert, guard, path).run();
}

bool convex_membership(const RatVector& x, std::span<const RatVector> points)
{
    std::size_t n = points.size();
    if (n == 0)
        return false;
    std::vector<LinConstraint> cs;
    for (const auto& p : points)
        if (p.size() != x.size())
            throw UsageError("convex_membership: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        RatVector row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = points[j][i];
        cs.push_back(make(std::move(row), Relation::Eq, x[i]));
    }
    cs.push_back(make(RatVector(n, Rational(1)), Relation::Eq, 1));
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n);
        e[j] = 1;
        cs.push_back(make(std::move(e), Relation::Ge, 0));
    }
    return lp_feasible(cs, n).has_value();
}

bool is_face_subset(const VertexSet& p, std::span<const Point01> subset)
{
    if (subset.empty())
        throw UsageError("is_face_subset: empty subset");
    std::set<Point01> in(subset.begin(), subset.end());
    for (const auto& s : in)
        if (!p.contains(s))
            throw UsageError("is_face_subset: subset point is not a vertex");
    // variables: a_1..a_d, b
    std::size_t d = p.dim();
    std::vector<LinConstraint> cs;
    for (const auto& v : p.vertices()) {
        RatVector row(d + 1);
        for (std::size_t i = 0; i < d; ++i)
            row[i] = v[i];
        row[d] = -1;
        bool on = in.count(v) > 0;
        cs.push_back(make(std::move(row), on ? Relation::Eq : Relation::Le, on ? 0 : -1));
    }
    return lp_feasible(cs, d + 1).has_value();
}

bool are_adjacent(const VertexSet& p, const Point01& u, const Point01& v)
{
    if (u == v || !p.contains(u) || !p.contains(v))
        throw UsageError("are_adjacent: need two distinct vertices");
    // Homogenized: sum_w l_w w = t (u+v)/2, sum_w l_w = t, sum_{w != u,v} l_w >= 1, l >= 0.
    const auto& verts = p.vertices();
    std::size_t n = verts.size(), d = p.dim();
    std::vector<LinConstraint> cs;
    for (std::size_t i = 0; i < d; ++i) {
        RatVector row(n + 1);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = verts[j][i];
        row[n] = -make_rational(u[i] + v[i], 2);
        cs.push_back(make(std::move(row), Relation::Eq, 0));
    }
    RatVector total(n + 1, Rational(1));
    total[n] = -1;
    cs.push_back(make(std::move(total), Relation::Eq, 0));
    RatVector others(n + 1);
    for (std::size_t j = 0; j < n; ++j)
        if (verts[j] != u && verts[j] != v)
            others[j] = 1;
    cs.push_back(make(std::move(others), Relation::Ge, 1));
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n + 1);
        e[j] = 1;
        cs.push_back(make(std::move(e), Relation::Ge, 0));
    }
    return !lp_feasible(cs, n + 1).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> find_nonadjacent_pair(const VertexSet& p)
{
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!are_adjacent(p, v[i], v[j]))
                return std::make_pair(i, j);
    return std::nullopt;
}

namespace {

bool stable_in(const Graph& g, const Point01& y)
{
    if (y.size() != static_cast<std::size_t>(g.node_count()))
        return false;
    for (auto [a, b] : g.edges())
        if (y[a] && y[b])
            return false;
    return std::all_of(y.begin(), y.end(), [](std::uint8_t b) { return b <= 1; });
}

Point01 sum(const Point01& a, const Point01& b)
{
    Point01 s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        s[i] = a[i] + b[i];
    return s;
}

} // namespace

std::pair<Point01, Point01> witness_pair(const Graph& g, const std::array<Point01, 6>& ys)
{
    for (std::size_t a = 0; a < 6; ++a) {
        if (!stable_in(g, ys[a]))
            throw ValidationError("witness_pair: input " + std::to_string(a + 1) + " is not a stable set");
        for (std::size_t b = a + 1; b < 6; ++b)
            if (ys[a] == ys[b])
                throw ValidationError("witness_pair: inputs " + std::to_string(a + 1) + " and " +
                                      std::to_string(b + 1) + " coincide");
    }
    Point01 mid = sum(ys[0], ys[1]);
    if (sum(ys[2], ys[3]) != mid || sum(ys[4], ys[5]) != mid)
        throw ValidationError("witness_pair: inputs are not three pairs with a common sum");

    std::size_t k = mid.size();
    Point01 y7(k), y8(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (mid[i] != 1) { // i in I
            y7[i] = y8[i] = ys[0][i];
            continue;
        }
        bool u = ys[0][i], v = ys[2][i], w = ys[4][i];
        // S: coordinates lying in an odd number of U, V, W
        bool in_s = (u && v && w) || (u && !v && !w) || (!u && v && !w) || (!u && !v && w);
        y7[i] = in_s ? 1 : 0;
        y8[i] = in_s ? 0 : 1;
    }
    if (!stable_in(g, y7) || !stable_in(g, y8))
        throw ConsistencyError("witness_pair: constructed point is not a stable set");
    for (const auto& y : ys)
        if (y == y7 || y == y8)
            throw ConsistencyError("witness_pair: constructed point repeats an input");
    return {y7, y8};
}

NonfaceScanResult octahedron_nonface_scan(int max_nodes, const Guard& guard)
{
    if (max_nodes < 1)
        throw UsageError("octahedron_nonface_scan: max_nodes must be positive");
    double estimate = 0;
    for (int k = 1; k <= max_nodes; ++k)
        estimate += std::ldexp(1.0, k * (k - 1) / 2 + 2 * k);
    if (estimate > static_cast<double>(guard.max_states))
        throw ResourceError("octahedron_nonface_scan: " + std::to_string(max_nodes) +
                            " nodes exceeds the guard");

    NonfaceScanResult res;
    res.max_nodes = max_nodes;
    res.graphs_per_size.assign(static_cast<std::size_t>(max_nodes) + 1, 0);
    for (int k = 1; k <= max_nodes; ++k) {
        std::vector<Graph::Edge> all;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                all.emplace_back(i, j);
        std::vector<std::string> names;
        for (int i = 1; i <= k; ++i)
            names.push_back(std::to_string(i));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
            std::vector<Graph::Edge> edges;
            for (std::size_t e = 0; e < all.size(); ++e)
                if (mask >> e & 1)
                    edges.push_back(all[e]);
            Graph g(names, edges);
            ++res.graphs_scanned;
            ++res.graphs_per_size[static_cast<std::size_t>(k)];
            VertexSet ssp = enumerate_ssp(g, guard);
            const auto& vs = ssp.vertices();

            std::map<Point01, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = a + 1; b < vs.size(); ++b)
                    by_sum[sum(vs[a], vs[b])].emplace_back(a, b);

            for (const auto& [s, pairs] : by_sum) {
                for (std::size_t p = 0; p < pairs.size(); ++p)
                    for (std::size_t q = p + 1; q < pairs.size(); ++q)
                        for (std::size_t r = q + 1; r < pairs.size(); ++r) {
                            const std::array<std::pair<std::size_t, std::size_t>, 3> trio{pairs[p], pairs[q],
                                                                                          pairs[r]};
                            std::vector<Point01> six;
                            for (const auto& [a, b] : trio) {
                                six.push_back(vs[a]);
                                six.push_back(vs[b]);
                            }
                            if (affine_rank(std::span<const Point01>(six)) != 3)
                                continue;
                            ++res.candidates;
                            auto report = [&](std::string reason) {
                                ScanCounterexample cx{g, {}, std::move(reason)};
                                std::copy(six.begin(), six.end(), cx.vertices.begin());
                                res.counterexamples.push_back(std::move(cx));
                            };
                            ++res.lp_checks;
                            if (is_face_subset(ssp, six)) {
                                report("six-vertex subset is a face");
                                continue;
                            }
                            for (std::size_t lead = 0; lead < 3; ++lead) {
                                std::array<Point01, 6> ys;
                                for (std::size_t t = 0; t < 3; ++t) {
                                    ys[2 * t] = six[2 * ((lead + t) % 3)];
                                    ys[2 * t + 1] = six[2 * ((lead + t) % 3) + 1];
                                }
                                try {
                                    auto [y7, y8] = witness_pair(g, ys);
                                    if (!ssp.contains(y7) || !ssp.contains(y8) || sum(y7, y8) != sum(ys[0], ys[1]))
                                        report("witness pair outside the polytope or off the midpoint");
                                } catch (const std::exception& e) {
                                    report(e.what());
                                }
                            }
                        }
            }
        }
    }
    return res;
}

VerificationReport to_report(const NonfaceScanResult& scan)
{
    VerificationReport rep;
    rep.id = "octahedron-nonface-scan:max_nodes=" + std::to_string(scan.max_nodes);
    std::string sizes;
    for (std::size_t k = 1; k < scan.graphs_per_size.size(); ++k)
        sizes += (k > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(scan.graphs_per_size[k]);
    rep.checks.push_back({"graphs", scan.graphs_scanned > 0,
                          std::to_string(scan.graphs_scanned) + " labeled graphs (" + sizes + ")"});
    rep.checks.push_back({"candidates", true,
                          std::to_string(scan.candidates) + " paired rank-3 subsets, " +
                              std::to_string(scan.lp_checks) + " face LPs"});
    std::string detail = std::to_string(scan.counterexamples.size()) + " counterexamples";
    if (!scan.counterexamples.empty())
        detail += "; first: " + scan.counterexamples.front().reason;
    rep.checks.push_back({"counterexamples", scan.counterexamples.empty(), detail});
    rep.status = scan.counterexamples.empty() ? Status::Verified : Status::Failed;
    return rep;
}

} // namespace polyred
