#include "oracles.hpp"

#include "polyred/errors.hpp"
#include "polyred/reductions.hpp"

#include <doctest.h>

#include <set>

using namespace polyred;

namespace {

void require_verified(const ReductionCertificate& c, const Guard& g = {}, TargetPath path = TargetPath::Auto)
{
    auto r = check_certificate(c, g, path);
    const auto* f = r.first_failure();
    std::string why = c.id + (f ? " " + f->name + ": " + f->detail : std::string());
    CAPTURE(why);
    CHECK(status_name(r.status) == std::string("verified"));
}

/// Image of each point under the certificate map, as a sorted 0/1 list.
std::vector<Point01> images(const ReductionCertificate& c, const std::vector<Point01>& pts)
{
    std::vector<Point01> out;
    for (const auto& p : pts) {
        auto img = c.map.apply(p);
        Point01 q;
        for (const auto& v : img) {
            REQUIRE((v == 0 || v == 1));
            q.push_back(v == 1 ? 1 : 0);
        }
        out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long dim_named(const ReductionCertificate& c, const std::string& prefix)
{
    for (const auto& d : c.dims)
        if (d.name.rfind(prefix, 0) == 0)
            return d.actual;
    FAIL("no dimension assertion " << prefix);
    return -1;
}

Graph p3() { return Graph::path(3); }

} // namespace

TEST_CASE("covariant map sends cut vectors onto BQP")
{
    for (int n = 1; n <= 4; ++n) {
        auto c = cert_covariant_cut(n);
        CHECK(images(c, oracle::cut(n + 1)) == oracle::bqp(n));
        require_verified(c);
    }
}

TEST_CASE("BQP into SSP")
{
    for (int n = 1; n <= 3; ++n) {
        auto g = bqp_ssp_graph(n);
        CHECK(g.node_count() == n * (n + 1));
        CHECK(static_cast<int>(g.edge_count()) == n * (2 * n - 1));
        auto c = cert_bqp_to_ssp(n);
        auto face = materialize_face(c.target, c.face);
        CHECK(face.size() == oracle::bqp(n).size());
        CHECK(images(c, oracle::bqp(n)) == face.vertices());
        require_verified(c);
    }
    auto g1 = bqp_ssp_graph(1);
    CHECK(g1.edge_count() == 1);
}

TEST_CASE("SSP into PART and DCP")
{
    auto k2 = cert_ssp_to_part(Graph::complete(2));
    CHECK(k2.target.dim() == 3);
    CHECK(k2.target.matrix->rows() == 1);
    require_verified(k2);

    auto path = cert_ssp_to_part(p3());
    CHECK(path.target.dim() == 5);
    CHECK(images(path, oracle::ssp(p3())).size() == 5);
    require_verified(path);
    CHECK(cert_ssp_to_part(Graph::complete(3)).target.dim() == 6);

    for (const auto& g : {Graph::complete(2), p3(), Graph::complete(3), Graph::cycle(5)}) {
        auto c = cert_ssp_to_dcp(g);
        CHECK(c.target.dim() == static_cast<std::size_t>(g.node_count()) + g.edge_count() + 1);
        for (std::size_t r = 0; r < c.target.matrix->rows(); ++r)
            CHECK(c.target.matrix->row(r).size() == 4);
        require_verified(c);
    }
    auto dk2 = cert_ssp_to_dcp(Graph::complete(2));
    CHECK(materialize_face(dk2.target, dk2.face).size() == 3);
    CHECK_THROWS_AS(cert_ssp_to_dcp(Graph::edgeless(3)), ValidationError);
}

TEST_CASE("SSP into TAP")
{
    auto k2 = cert_ssp_to_tap(Graph::complete(2));
    CHECK(k2.target.m == 3);
    std::size_t allowed = k2.target.dim() - k2.face.zero_fixed.size();
    CHECK(allowed == 7);
    // filter the 36 brute-force vertices by the fixings
    auto fx = k2.face.fixing(k2.target.labels());
    std::vector<Point01> face;
    for (const auto& v : oracle::tap_by_permutations(3)) {
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            ok = ok && (fx[i] < 0 || v[i] == fx[i]);
        if (ok)
            face.push_back(v);
    }
    CHECK(face.size() == 3);
    CHECK(images(k2, oracle::ssp(Graph::complete(2))) == face);
    require_verified(k2, {}, TargetPath::Full);
    require_verified(k2, {}, TargetPath::Restricted);

    Graph lone({"a", "b", "c"}, std::vector<Graph::Edge>{{0, 1}});
    CHECK(cert_ssp_to_tap(lone).target.m == 5);
    auto path = cert_ssp_to_tap(p3());
    CHECK(path.target.m == 6);
    CHECK(materialize_face(path.target, path.face).size() == 5);
}

TEST_CASE("BQP and QLOP")
{
    require_verified(cert_bqp_to_qlop(1));
    auto q2 = cert_bqp_to_qlop(2);
    CHECK(q2.target.m == 4);
    CHECK(q2.target.dim() == 21);
    CHECK(materialize_face(q2.target, q2.face).size() == 4);
    require_verified(q2);

    for (int m = 2; m <= 4; ++m) {
        auto c = cert_qlop_to_bqp(m);
        CHECK(c.target.n == m * (m - 1) / 2);
        // every face constraint holds on all brute-force BQP vertices
        auto bqp = oracle::bqp(c.target.n);
        for (const auto& fc : c.face.constraints)
            for (const auto& v : bqp)
                CHECK(fc.constraint.satisfied_by(v));
        std::vector<Point01> face;
        for (const auto& v : bqp)
            if (std::all_of(c.face.constraints.begin(), c.face.constraints.end(),
                            [&](const FaceConstraint& fc) { return fc.constraint.tight_at(v); }))
                face.push_back(v);
        CHECK(face.size() == oracle::qlop(m).size());
        CHECK(images(c, oracle::qlop(m)) == face);
        require_verified(c);
    }
}

TEST_CASE("BQP and QAP")
{
    for (int n = 1; n <= 2; ++n) {
        auto c = cert_bqp_to_qap(n);
        CHECK(c.target.m == 2 * n);
        require_verified(c);
    }
    auto [qap_qsap, qsap_bqp] = cert_qap_to_bqp_chain(2);
    CHECK(qsap_bqp.target.n == 4);
    CHECK(materialize_face(qsap_bqp.target, qsap_bqp.face).size() == 4);
    CHECK(materialize_face(qap_qsap.target, qap_qsap.face).size() == 2);
    CHECK(images(qsap_bqp, oracle::quadratic_assignment(2, false)).size() == 4);
    require_verified(qap_qsap);
    require_verified(qsap_bqp);
}

TEST_CASE("direct BQP builders")
{
    for (int n = 1; n <= 3; ++n) {
        auto part = cert_bqp_to_part_direct(n);
        CHECK(part.target.dim() == static_cast<std::size_t>(2 * n * n));
        require_verified(part);
        auto dcp = cert_bqp_to_dcp_direct(n);
        CHECK(dcp.target.dim() == static_cast<std::size_t>(2 * n * n + 2));
        CHECK_FALSE(dcp.flags.empty());
        require_verified(dcp);
    }
}

TEST_CASE("elementary reductions")
{
    ElementaryParams p;
    p.n = 2;
    auto chain = cert_elementary(ElementaryKind::BqpChain, p);
    CHECK(chain.target.n == 3);
    require_verified(chain);

    p.graph = Graph::complete(2);
    auto comp = cert_elementary(ElementaryKind::SspVcp, p);
    CHECK(comp.map.matrix().at(0, 0) == -1);
    CHECK(comp.map.offset()[0] == 1);
    require_verified(comp);
    require_verified(cert_elementary(ElementaryKind::SspAsPack, p));

    ElementaryParams mp;
    mp.matrix = IncidenceMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    require_verified(cert_elementary(ElementaryKind::PartInPack, mp));
    require_verified(cert_elementary(ElementaryKind::PackAsSsp, mp));

    ElementaryParams ap;
    ap.m = 2;
    ap.p = 4;
    auto step = cert_elementary(ElementaryKind::PapStep, ap);
    CHECK(materialize_face(step.target, step.face).size() == 4);
    require_verified(step);
    ap.m = 3;
    require_verified(cert_elementary(ElementaryKind::TapAsPart, ap));

    CHECK_THROWS_AS(cert_elementary(ElementaryKind::SspVcp, ElementaryParams{}), ValidationError);
    CHECK(parse_elementary(elementary_name(ElementaryKind::PapStep)) == ElementaryKind::PapStep);
    CHECK_THROWS_AS(parse_elementary("thm99"), ValidationError);
}

TEST_CASE("composition")
{
    auto ab = cert_bqp_to_ssp(1);
    auto bc = cert_ssp_to_part(ab.target.graph.value());
    auto ac = compose_certs(ab, bc);
    CHECK(ac.source.same_instance(FamilySpec::bqp(1)));
    CHECK(ac.target.dim() == 3);
    require_verified(ac);

    auto c = cert_bqp_to_ssp(2);
    auto left = compose_certs(identity_cert(c.source), c);
    CHECK(left.map == c.map);
    CHECK(left.face.zero_fixed == c.face.zero_fixed);
    CHECK(left.face.one_fixed == c.face.one_fixed);
    CHECK(left.face.constraints == c.face.constraints);
    auto right = compose_certs(c, identity_cert(c.target));
    CHECK(right.map == c.map);
    CHECK(right.face.constraints == c.face.constraints);
    CHECK(right.target.same_instance(c.target));

    CHECK_THROWS_AS(compose_certs(cert_bqp_to_ssp(1), cert_covariant_cut(2)), ValidationError);
}

TEST_CASE("resume suite n=2")
{
    auto items = resume_suite(2);
    REQUIRE(items.size() == 6);
    std::set<std::string> seen;
    for (const auto& it : items) {
        CAPTURE(it.certificate.id);
        CHECK(it.report.status == Status::Verified);
        seen.insert(it.certificate.id);
    }
    CHECK(seen.size() == 6);
    CHECK(dim_named(items[0].certificate, "SSP") == 6);
    CHECK(dim_named(items[1].certificate, "PART") <= 8);
    CHECK_FALSE(items[2].report.flags.empty());
    CHECK(dim_named(items[3].certificate, "TAP") <= 30);
    CHECK(dim_named(items[4].certificate, "QLOP") == 4);
    CHECK(dim_named(items[5].certificate, "QAP") == 4);
}
