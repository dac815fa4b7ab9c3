#include "polyred/errors.hpp"
#include "polyred/linalg.hpp"
#include "polyred/lp.hpp"
#include "polyred/rational.hpp"

#include <doctest.h>

#include <random>

using namespace polyred;

namespace {

std::vector<Point01> cube_points(std::size_t n)
{
    std::vector<Point01> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Point01 p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = (mask >> i) & 1;
        out.push_back(p);
    }
    return out;
}

LinConstraint con(RatVector coeffs, Relation rel, Rational rhs)
{
    return LinConstraint{std::move(coeffs), rel, std::move(rhs)};
}

} // namespace

TEST_CASE("rational text round trip")
{
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-5)) == "-5/1");
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("rank and affine rank")
{
    RatMatrix m(3, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(2, 2) = Rational(1, 3);
    CHECK(rank(m) == 2);
    CHECK(rank(RatMatrix::identity(5)) == 5);

    std::vector<Point01> one{{1, 0, 1}};
    CHECK(affine_rank(std::span<const Point01>(one)) == 0);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto pts = cube_points(n);
        CHECK(affine_rank(std::span<const Point01>(pts)) == n);
    }
    std::vector<Point01> octa{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0},
                              {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
    CHECK(affine_rank(std::span<const Point01>(octa)) == 3);

    std::vector<Point01> empty;
    CHECK_THROWS_AS(affine_rank(std::span<const Point01>(empty)), UsageError);
    std::vector<Point01> ragged{{1, 0}, {1}};
    CHECK_THROWS_AS(affine_rank(std::span<const Point01>(ragged)), UsageError);
}

TEST_CASE("find_affine_map on small data")
{
    auto cube = cube_points(3);
    auto id = find_affine_map(std::span<const Point01>(cube), std::span<const Point01>(cube));
    REQUIRE(id);
    CHECK(*id == AffineMap::identity(3));

    std::vector<Point01> src{{0}, {1}};
    std::vector<Point01> tgt{{0, 1}, {1, 0}}; // x -> (x, 1-x)
    auto f = find_affine_map(std::span<const Point01>(src), std::span<const Point01>(tgt));
    REQUIRE(f);
    CHECK(f->matrix().at(0, 0) == 1);
    CHECK(f->matrix().at(1, 0) == -1);
    CHECK(f->offset() == RatVector{0, 1});

    std::vector<RatVector> col{{0}, {1}, {2}};
    std::vector<RatVector> bent{{0, 0}, {1, 0}, {1, 1}};
    CHECK_FALSE(find_affine_map(std::span<const RatVector>(col), std::span<const RatVector>(bent)));
}

TEST_CASE("find_affine_map recovers random affine maps")
{
    std::mt19937 rng(20241);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(dim(rng));
        std::size_t k = static_cast<std::size_t>(dim(rng));
        RatMatrix a(k, n);
        RatVector b(k);
        for (std::size_t r = 0; r < k; ++r) {
            b[r] = make_rational(coef(rng), 2);
            for (std::size_t c = 0; c < n; ++c)
                a.at(r, c) = coef(rng);
        }
        AffineMap g(a, b);
        auto src = cube_points(n);
        std::vector<RatVector> img;
        for (const auto& p : src)
            img.push_back(g.apply(p));
        std::vector<RatVector> srcq;
        for (const auto& p : src)
            srcq.push_back(to_rational(p));
        auto h = find_affine_map(std::span<const RatVector>(srcq), std::span<const RatVector>(img));
        REQUIRE(h);
        CHECK(*h == g); // the cube is affinely spanning, so the map is unique

        // rank is preserved under an injective map and never grows otherwise
        auto r_src = affine_rank(std::span<const RatVector>(srcq));
        auto r_img = affine_rank(std::span<const RatVector>(img));
        CHECK(r_img == rank(a));
        CHECK(r_img <= r_src);
    }
}

TEST_CASE("affine rank invariant under invertible affine maps")
{
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4;
        RatMatrix a;
        do {
            a = RatMatrix(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    a.at(r, c) = coef(rng);
        } while (rank(a) != n);
        AffineMap g(a, RatVector{1, -1, Rational(1, 2), 0});
        std::vector<RatVector> pts, img;
        for (const auto& p : cube_points(n))
            if (coin(rng)) {
                pts.push_back(to_rational(p));
                img.push_back(g.apply(p));
            }
        if (pts.empty())
            continue;
        CHECK(affine_rank(std::span<const RatVector>(pts)) == affine_rank(std::span<const RatVector>(img)));
    }
}

TEST_CASE("affine map composition")
{
    RatMatrix a(2, 1);
    a.at(0, 0) = 2;
    a.at(1, 0) = -1;
    AffineMap f(a, RatVector{1, 0});
    RatMatrix b(1, 2);
    b.at(0, 0) = 1;
    b.at(0, 1) = 3;
    AffineMap g(b, RatVector{Rational(1, 2)});
    auto h = f.then(g);
    for (int x = -2; x <= 2; ++x) {
        RatVector v{x};
        CHECK(h.apply(v) == g.apply(f.apply(v)));
    }
}

TEST_CASE("lp feasibility")
{
    std::vector<LinConstraint> box{con({1}, Relation::Ge, 0), con({1}, Relation::Le, 1)};
    auto x = lp_feasible(box, 1);
    REQUIRE(x);
    CHECK((*x)[0] >= 0);
    CHECK((*x)[0] <= 1);

    std::vector<LinConstraint> empty_box{con({1}, Relation::Ge, 1), con({1}, Relation::Le, 0)};
    CHECK_FALSE(lp_feasible(empty_box, 1));

    // (1/2,1/2,1/2,1/2) as a convex combination of x3..x6 of the middle layer
    std::vector<Point01> pts{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
    std::vector<LinConstraint> sys;
    for (std::size_t c = 0; c < 4; ++c) {
        RatVector row(4);
        for (std::size_t i = 0; i < 4; ++i)
            row[i] = pts[i][c];
        sys.push_back(con(row, Relation::Eq, Rational(1, 2)));
    }
    sys.push_back(con(RatVector(4, 1), Relation::Eq, 1));
    for (std::size_t i = 0; i < 4; ++i) {
        RatVector e(4);
        e[i] = 1;
        sys.push_back(con(e, Relation::Ge, 0));
    }
    auto lam = lp_feasible(sys, 4);
    REQUIRE(lam);
    for (const auto& c : sys)
        CHECK(c.satisfied_by(*lam));
}

TEST_CASE("lp solutions satisfy random feasible systems exactly")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3;
        RatVector anchor{make_rational(coef(rng), 3), make_rational(coef(rng), 2), Rational(coef(rng))};
        std::vector<LinConstraint> sys;
        for (int r = 0; r < 5; ++r) {
            RatVector a(n);
            for (auto& v : a)
                v = coef(rng);
            Rational lhs = 0;
            for (std::size_t i = 0; i < n; ++i)
                lhs += a[i] * anchor[i];
            int kind = r % 3;
            sys.push_back(con(a, kind == 0 ? Relation::Le : kind == 1 ? Relation::Ge : Relation::Eq,
                              kind == 0 ? lhs + 1 : kind == 1 ? lhs - 1 : lhs));
        }
        auto x = lp_feasible(sys, n);
        REQUIRE(x);
        for (const auto& c : sys)
            CHECK(c.satisfied_by(*x));
    }
}
