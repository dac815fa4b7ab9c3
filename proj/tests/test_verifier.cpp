#include "oracles.hpp"

#include "polyred/errors.hpp"
#include "polyred/reductions.hpp"
#include "polyred/verifier.hpp"

#include <doctest.h>

#include <random>

using namespace polyred;

namespace {

const std::vector<Point01> kOcta{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0},
                                 {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};

VertexSet explicit_set(std::vector<Point01> pts)
{
    std::vector<CoordLabel> labels;
    for (std::size_t j = 1; j <= pts.at(0).size(); ++j)
        labels.push_back(CoordLabel{Column{static_cast<int>(j)}});
    return VertexSet(FamilySpec{}, std::move(labels), std::move(pts));
}

std::vector<RatVector> rational(const std::vector<Point01>& pts)
{
    std::vector<RatVector> out;
    for (const auto& p : pts)
        out.push_back(to_rational(p));
    return out;
}

Point01 bits(const std::string& s)
{
    Point01 p;
    for (char c : s)
        p.push_back(c == '1');
    return p;
}

} // namespace

TEST_CASE("certificate checks pass and fail as expected")
{
    auto c = cert_bqp_to_ssp(2);
    auto ok = check_certificate(c);
    CHECK(ok.verified());
    CHECK(ok.first_failure() == nullptr);

    auto bad = c;
    bad.map.matrix().at(0, 0) += 1;
    auto r = check_certificate(bad);
    CHECK(r.status == Status::Failed);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->name == "bijection");
    CHECK(r.first_failure()->detail.find("source vertex") != std::string::npos);

    auto wrong_dim = c;
    wrong_dim.claimed_target_dim += 1;
    CHECK(check_certificate(wrong_dim).first_failure()->name == "target_dim");

    // a constraint that is not valid on the target
    auto invalid = cert_ssp_to_part(Graph::complete(2));
    RatVector coeffs(invalid.target.dim());
    coeffs[0] = 1;
    invalid.face.constraints.push_back({LinConstraint{coeffs, Relation::Le, 0}, 0});
    auto ri = check_certificate(invalid);
    CHECK(ri.status == Status::Failed);
    CHECK(ri.first_failure()->name == "face_validity");
}

TEST_CASE("guard exhaustion is flagged, not failed")
{
    auto c = cert_ssp_to_tap(Graph::complete(2));
    for (auto path : {TargetPath::Full, TargetPath::Auto, TargetPath::Restricted}) {
        auto r = check_certificate(c, Guard{5}, path);
        CHECK(r.status == Status::Flagged);
        REQUIRE(r.first_failure() != nullptr);
        CHECK(r.first_failure()->name == "resource");
    }
    // enough budget for the face search but not for all 36 vertices
    auto r = check_certificate(c, Guard{30}, TargetPath::Auto);
    CHECK(r.status == Status::Verified);
}

TEST_CASE("convex membership")
{
    auto pts = rational({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}});
    RatVector half(4, Rational(1, 2));
    CHECK(convex_membership(half, pts));
    auto all = rational(kOcta);
    CHECK_FALSE(convex_membership(RatVector(4, 1), all));
    CHECK(convex_membership(all[2], all));
}

TEST_CASE("face test")
{
    auto sq = explicit_set({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    std::vector<Point01> facet{{0, 0}, {0, 1}};
    CHECK(is_face_subset(sq, facet));
    std::vector<Point01> diag{{0, 0}, {1, 1}};
    CHECK_FALSE(is_face_subset(sq, diag));
    CHECK(is_face_subset(sq, sq.vertices()));
    for (const auto& v : sq.vertices())
        CHECK(is_face_subset(sq, std::vector<Point01>{v}));
    CHECK_THROWS_AS(is_face_subset(sq, std::vector<Point01>{}), UsageError);
    CHECK_THROWS_AS(is_face_subset(sq, std::vector<Point01>{{1, 2}}), UsageError);

    auto cube4 = enumerate(FamilySpec::ssp(Graph::edgeless(4)));
    CHECK_FALSE(is_face_subset(cube4, kOcta));

    auto a = IncidenceMatrix::from_dense({{1, 1, 0, 0}, {0, 1, 1, 1}});
    auto pack = enumerate_pack_part(a, PackMode::Pack);
    auto part = enumerate_pack_part(a, PackMode::Part);
    CHECK(is_face_subset(pack, part.vertices()));
}

TEST_CASE("adjacency")
{
    auto b2 = enumerate_bqp(2);
    CHECK(is_two_neighborly(b2));
    CHECK(is_two_neighborly(enumerate_bqp(3)));
    auto sq = explicit_set({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_FALSE(are_adjacent(sq, {0, 0}, {1, 1}));
    CHECK(are_adjacent(sq, {0, 0}, {0, 1}));
    auto pair = find_nonadjacent_pair(sq);
    REQUIRE(pair);
    CHECK(sq.vertices()[pair->first] == Point01{0, 0});
    CHECK(sq.vertices()[pair->second] == Point01{1, 1});
}

TEST_CASE("adjacency is symmetric and matches the two-vertex face test")
{
    std::mt19937 rng(11);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Point01> pts;
        for (const auto& p : oracle::filter_cube(4, [](const Point01&) { return true; }))
            if (coin(rng))
                pts.push_back(p);
        if (pts.size() < 2)
            continue;
        auto vs = explicit_set(pts);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const auto& u = vs.vertices()[i];
                const auto& v = vs.vertices()[j];
                bool uv = are_adjacent(vs, u, v);
                CHECK(uv == are_adjacent(vs, v, u));
                CHECK(uv == is_face_subset(vs, std::vector<Point01>{u, v}));
            }
    }
}

TEST_CASE("witness pair")
{
    std::array<Point01, 6> ys{bits("000"), bits("111"), bits("100"), bits("011"), bits("010"), bits("101")};
    auto [y7, y8] = witness_pair(Graph::edgeless(3), ys);
    CHECK(y7 == bits("110"));
    CHECK(y8 == bits("001"));

    auto broken = ys;
    broken[5] = bits("100");
    CHECK_THROWS_AS(witness_pair(Graph::edgeless(3), broken), ValidationError);
    auto unpaired = ys;
    unpaired[3] = bits("001");
    CHECK_THROWS_AS(witness_pair(Graph::edgeless(3), unpaired), ValidationError);
    // 111 is not stable on a triangle
    CHECK_THROWS_AS(witness_pair(Graph::complete(3), ys), ValidationError);
}

TEST_CASE("witness pair on random paired inputs")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto in = oracle::random_paired_input(rng, 8);
        auto [y7, y8] = witness_pair(in.graph, in.ys);
        auto stable = oracle::ssp(in.graph);
        CHECK(std::binary_search(stable.begin(), stable.end(), y7));
        CHECK(std::binary_search(stable.begin(), stable.end(), y8));
        for (std::size_t i = 0; i < y7.size(); ++i)
            CHECK(y7[i] + y8[i] == in.ys[0][i] + in.ys[1][i]);
    }
}

TEST_CASE("nonface scan on small graphs")
{
    auto scan = octahedron_nonface_scan(3);
    CHECK(scan.counterexamples.empty());
    CHECK(scan.graphs_per_size.at(3) == 8);
    auto rep = to_report(scan);
    CHECK(rep.verified());
    bool named = false;
    for (const auto& c : rep.checks)
        named = named || c.detail == "0 counterexamples";
    CHECK(named);
    CHECK_THROWS_AS(octahedron_nonface_scan(9, Guard{1000}), ResourceError);
}
