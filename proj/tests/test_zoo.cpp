#include "oracles.hpp"

#include "polyred/enumerate.hpp"
#include "polyred/errors.hpp"
#include "polyred/family.hpp"

#include <doctest.h>

#include <random>

using namespace polyred;

namespace {

std::vector<CoordLabel> pick(const std::vector<CoordLabel>& labels, const std::vector<std::string>& names)
{
    std::vector<CoordLabel> out;
    for (const auto& n : names) {
        auto l = CoordLabel::parse(n);
        REQUIRE(std::find(labels.begin(), labels.end(), l) != labels.end());
        out.push_back(l);
    }
    return out;
}

} // namespace

TEST_CASE("labels render and parse")
{
    for (const char* text : {"x(1,1)", "x(2,3)", "cut(1,4)", "node(ubar_2)", "col(7)", "slack(e:1,2)",
                             "t(1,2,3)", "a(1,2,1,2)", "y(1,3)", "cell(2,1)", "z(y(1,2);y(1,3))",
                             "z(cell(1,1);cell(2,2))"}) {
        CAPTURE(text);
        CHECK(CoordLabel::parse(text).str() == text);
    }
    CHECK_THROWS_AS(CoordLabel::parse("x(1"), ValidationError);
    CHECK_THROWS_AS(CoordLabel::parse("q(1)"), ValidationError);
    CHECK_THROWS_AS(CoordLabel::parse("z(y(1,2))"), ValidationError);
}

TEST_CASE("BQP vertices")
{
    auto b1 = enumerate_bqp(1);
    CHECK(b1.dim() == 1);
    CHECK(b1.vertices() == std::vector<Point01>{{0}, {1}});

    auto b2 = enumerate_bqp(2);
    CHECK(b2.labels()[2].str() == "x(1,2)");
    CHECK(b2.vertices() == std::vector<Point01>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});

    auto b3 = enumerate_bqp(3);
    CHECK(b3.size() == 8);
    CHECK(b3.vertices() == oracle::bqp(3));
}

TEST_CASE("CUT vertices")
{
    CHECK(enumerate_cut(2).vertices() == std::vector<Point01>{{0}, {1}});
    CHECK(enumerate_cut(3).vertices() == std::vector<Point01>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(enumerate_cut(4).size() == 8);
    CHECK(enumerate_cut(5).vertices() == oracle::cut(5));
}

TEST_CASE("SSP and VCP vertices")
{
    CHECK(enumerate_ssp(Graph::complete(3)).size() == 4);
    CHECK(enumerate_ssp(Graph::edgeless(3)).size() == 8);
    Graph p3({"a", "b", "c"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
    auto s = enumerate_ssp(p3);
    CHECK(s.vertices() == std::vector<Point01>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}});
    auto v = enumerate(FamilySpec::vcp(Graph::cycle(5)));
    CHECK(v.vertices() == oracle::ssp(Graph::cycle(5), true));
}

TEST_CASE("PACK and PART vertices")
{
    auto row = IncidenceMatrix::from_dense({{1, 1, 1, 1}});
    CHECK(enumerate_pack_part(row, PackMode::Part).size() == 4);
    CHECK(enumerate_pack_part(row, PackMode::Pack).size() == 5);
    auto a = IncidenceMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    CHECK(enumerate_pack_part(a, PackMode::Part).vertices() == std::vector<Point01>{{0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("DCP vertices")
{
    auto single = IncidenceMatrix::from_dense({{1, 1, 1, 1}});
    auto d = enumerate_dcp(single);
    std::vector<Point01> six{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
    std::sort(six.begin(), six.end());
    CHECK(d.vertices() == six);

    IncidenceMatrix two(6, {{0, 1, 2, 3}, {2, 3, 4, 5}});
    CHECK(enumerate_dcp(two).vertices() == oracle::rows(two, true, 2));
    IncidenceMatrix dup(4, {{0, 1, 2, 3}, {0, 1, 2, 3}});
    CHECK(enumerate_dcp(dup).vertices() == six);

    CHECK_THROWS_AS(enumerate_dcp(IncidenceMatrix(3, {{0, 1, 2}})), ValidationError);
    CHECK_THROWS_AS(FamilySpec::dcp(IncidenceMatrix(5, {{0, 1, 2, 3, 4}})), ValidationError);
}

TEST_CASE("assignment vertices")
{
    CHECK(enumerate_assignment(3, 2).size() == 6);
    auto t2 = enumerate_assignment(2, 3);
    CHECK(t2.dim() == 8);
    CHECK(t2.vertices() == oracle::assignment(2, 3));
    auto a4 = enumerate_assignment(2, 4);
    CHECK(a4.dim() == 16);
    CHECK(a4.size() == 8);
    CHECK(a4.vertices() == oracle::assignment(2, 4));
    CHECK(enumerate_assignment(3, 3).vertices() == oracle::tap_by_permutations(3));
    CHECK(oracle::tap_by_permutations(2) == oracle::assignment(2, 3));
}

TEST_CASE("LOP vertices")
{
    CHECK(enumerate_lop(2).vertices() == std::vector<Point01>{{0}, {1}});
    CHECK(enumerate_lop(3).vertices() == oracle::lop(3));
    CHECK(enumerate_lop(3).size() == 6);
    CHECK(enumerate_lop(4).size() == 24);
}

TEST_CASE("quadratic lifts")
{
    auto cube = enumerate(FamilySpec::cube(2));
    auto pairs = all_pairs(cube.labels());
    REQUIRE(pairs.size() == 1);
    auto lifted = quadratic_lift(cube, pairs);
    CHECK(lifted.vertices() == enumerate_bqp(2).vertices());

    auto q3 = enumerate(FamilySpec::qlop(3));
    CHECK(q3.dim() == 6);
    CHECK(q3.size() == 6);
    CHECK(q3.vertices() == oracle::qlop(3));

    auto qap2 = enumerate(FamilySpec::qap(2));
    CHECK(qap2.dim() == 10);
    CHECK(qap2.size() == 2);
    CHECK(qap2.vertices() == oracle::quadratic_assignment(2, true));
    CHECK(enumerate(FamilySpec::qsap(2)).vertices() == oracle::quadratic_assignment(2, false));

    std::vector<QuadPair> bad{QuadPair{{CoordLabel::parse("col(2)"), CoordLabel::parse("col(1)")}}};
    CHECK_THROWS_AS(quadratic_lift(cube, bad), ValidationError);
}

TEST_CASE("face-restricted enumeration examples")
{
    auto b3 = FamilySpec::bqp(3);
    auto face = face_restricted_enumerate(b3, pick(b3.labels(), {"x(3,3)"}), {});
    CHECK(face.size() == 4);

    // DAP_4 with the off-block cells fixed to zero is a 2-cube
    auto dap4 = FamilySpec::assignment(4, 2);
    std::vector<CoordLabel> zeros;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if ((i <= 2) != (j <= 2))
                zeros.push_back(CoordLabel{Tuple{{i, j}}});
    CHECK(face_restricted_enumerate(dap4, zeros, {}).size() == 4);

    // contradictory fixings
    auto lbl = pick(b3.labels(), {"x(1,1)"});
    CHECK(face_restricted_enumerate(b3, lbl, lbl).empty());
}

TEST_CASE("face-restricted enumeration matches filtered full enumeration")
{
    std::mt19937 rng(99);
    std::vector<FamilySpec> specs{FamilySpec::bqp(4),          FamilySpec::cut(5),
                                  FamilySpec::ssp(Graph::cycle(6)), FamilySpec::assignment(3, 3),
                                  FamilySpec::lop(4),          FamilySpec::qsap(2),
                                  FamilySpec::dcp(IncidenceMatrix(6, {{0, 1, 2, 3}, {2, 3, 4, 5}}))};
    for (const auto& spec : specs) {
        auto full = enumerate(spec);
        for (int trial = 0; trial < 20; ++trial) {
            Fixing fx(full.dim(), -1);
            std::uniform_int_distribution<int> pick3(0, 5);
            for (auto& f : fx) {
                int r = pick3(rng);
                f = r == 0 ? 0 : r == 1 ? 1 : -1;
            }
            std::vector<Point01> expected;
            for (const auto& v : full.vertices()) {
                bool ok = true;
                for (std::size_t i = 0; i < fx.size(); ++i)
                    ok = ok && (fx[i] < 0 || v[i] == fx[i]);
                if (ok)
                    expected.push_back(v);
            }
            CAPTURE(spec.describe());
            CHECK(face_restricted_enumerate(spec, fx).vertices() == expected);
        }
    }
}

TEST_CASE("guard and definitions")
{
    Guard tiny{10};
    CHECK_THROWS_AS(enumerate_bqp(6, tiny), ResourceError);
    auto b = enumerate_bqp(3);
    for (const auto& v : b.vertices())
        CHECK(satisfies_definition(FamilySpec::bqp(3), v));
    CHECK_FALSE(satisfies_definition(FamilySpec::bqp(2), Point01{1, 1, 0}));
    CHECK(parse_family(family_name(Family::Qsap)) == Family::Qsap);
    CHECK_THROWS_AS(parse_family("nope"), ValidationError);
    CHECK_THROWS_AS(Graph({"a", "a"}, std::vector<Graph::Edge>{}), ValidationError);
    CHECK_THROWS_AS(Graph({"a", "b"}, std::vector<Graph::Edge>{{0, 0}}), ValidationError);
}
