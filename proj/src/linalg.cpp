#include "polyred/linalg.hpp"

#include "polyred/errors.hpp"

#include <string>
#include <utility>

namespace polyred {

RatVector to_rational(const Point01& p)
{
    RatVector out;
    out.reserve(p.size());
    for (auto b : p)
        out.emplace_back(b);
    return out;
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatVector RatMatrix::row(std::size_t r) const
{
    assert(r < rows_);
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::operator*(const RatVector& x) const
{
    assert(x.size() == cols_);
    RatVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = at(r, c);
            if (sgn(a) != 0 && sgn(x[c]) != 0)
                y[r] += a * x[c];
        }
    return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const
{
    assert(cols_ == other.rows_);
    RatMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                const Rational& b = other.at(k, c);
                if (sgn(b) != 0)
                    out.at(r, c) += a * b;
            }
        }
    return out;
}

namespace {

/// Row-reduces m in place to echelon form. Returns (pivot row origin,
/// pivot column) pairs, where the origin is the row's index before any swap.
std::vector<std::pair<std::size_t, std::size_t>> echelon(RatMatrix& m)
{
    std::vector<std::size_t> origin(m.rows());
    for (std::size_t i = 0; i < origin.size(); ++i)
        origin[i] = i;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m.at(p, c)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r) {
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m.at(p, k), m.at(r, k));
            std::swap(origin[p], origin[r]);
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (sgn(m.at(i, c)) == 0)
                continue;
            Rational f = m.at(i, c) / m.at(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (sgn(m.at(r, k)) != 0)
                    m.at(i, k) -= f * m.at(r, k);
        }
        pivots.emplace_back(origin[r], c);
        ++r;
    }
    return pivots;
}

const Rational& value_at(const RatVector& p, std::size_t j) { return p[j]; }
Rational value_at(const Point01& p, std::size_t j) { return Rational(p[j]); }

bool same_at(const RatVector& a, const RatVector& b, std::size_t j) { return a[j] == b[j]; }
bool same_at(const Point01& a, const Point01& b, std::size_t j) { return a[j] == b[j]; }

template <class P>
std::size_t common_length(std::span<const P> points, const char* what)
{
    if (points.empty())
        throw UsageError(std::string(what) + ": empty point list");
    std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d)
            throw UsageError(std::string(what) + ": points of different lengths");
    return d;
}

template <class P>
std::vector<std::size_t> varying_columns(std::span<const P> points, std::size_t d)
{
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 1; i < points.size(); ++i)
            if (!same_at(points[i], points[0], j)) {
                cols.push_back(j);
                break;
            }
    return cols;
}

template <class P>
std::size_t affine_rank_impl(std::span<const P> points)
{
    std::size_t d = common_length(points, "affine_rank");
    auto cols = varying_columns(points, d);
    if (cols.empty())
        return 0;
    RatMatrix diff(points.size() - 1, cols.size());
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t c = 0; c < cols.size(); ++c)
            diff.at(i - 1, c) = value_at(points[i], cols[c]) - value_at(points[0], cols[c]);
    return rank(std::move(diff));
}

/// Inverts a square nonsingular matrix by Gauss-Jordan elimination.
RatMatrix invert(RatMatrix m)
{
    std::size_t n = m.rows();
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (sgn(m.at(p, c)) == 0)
            ++p;
        if (p != c)
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(m.at(p, k), m.at(c, k));
                std::swap(inv.at(p, k), inv.at(c, k));
            }
        Rational piv = m.at(c, c);
        for (std::size_t k = 0; k < n; ++k) {
            m.at(c, k) /= piv;
            inv.at(c, k) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(m.at(i, c)) == 0)
                continue;
            Rational f = m.at(i, c);
            for (std::size_t k = 0; k < n; ++k) {
                m.at(i, k) -= f * m.at(c, k);
                inv.at(i, k) -= f * inv.at(c, k);
            }
        }
    }
    return inv;
}

template <class P, class Q>
std::optional<AffineMap> find_affine_map_impl(std::span<const P> src, std::span<const Q> tgt)
{
    if (src.size() != tgt.size())
        throw UsageError("find_affine_map: source and target lists differ in length");
    std::size_t d_in = common_length(src, "find_affine_map");
    std::size_t d_out = common_length(tgt, "find_affine_map");
    std::size_t n = src.size();

    // Design matrix over the varying source coordinates plus a constant column.
    auto vcols = varying_columns(src, d_in);
    std::size_t w = vcols.size() + 1;
    RatMatrix design(n, w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < vcols.size(); ++c)
            design.at(i, c) = value_at(src[i], vcols[c]);
        design.at(i, w - 1) = 1;
    }
    RatMatrix reduced = design;
    auto pivots = echelon(reduced);
    std::size_t r = pivots.size();

    RatMatrix square(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            square.at(a, b) = design.at(pivots[a].first, pivots[b].second);
    RatMatrix inv = invert(std::move(square));

    AffineMap map(RatMatrix(d_out, d_in), RatVector(d_out));
    auto tcols = varying_columns(tgt, d_out);
    std::vector<bool> varying(d_out, false);
    for (auto k : tcols)
        varying[k] = true;
    for (std::size_t k = 0; k < d_out; ++k)
        if (!varying[k])
            map.offset()[k] = value_at(tgt[0], k);

    RatVector coef(r);
    for (auto k : tcols) {
        for (std::size_t a = 0; a < r; ++a) {
            coef[a] = 0;
            for (std::size_t b = 0; b < r; ++b)
                if (sgn(inv.at(a, b)) != 0)
                    coef[a] += inv.at(a, b) * value_at(tgt[pivots[b].first], k);
        }
        for (std::size_t i = 0; i < n; ++i) {
            Rational v;
            for (std::size_t a = 0; a < r; ++a)
                if (sgn(coef[a]) != 0)
                    v += coef[a] * design.at(i, pivots[a].second);
            if (v != value_at(tgt[i], k))
                return std::nullopt;
        }
        for (std::size_t a = 0; a < r; ++a) {
            std::size_t col = pivots[a].second;
            if (col == w - 1)
                map.offset()[k] = coef[a];
            else
                map.matrix().at(k, vcols[col]) = coef[a];
        }
    }
    return map;
}

} // namespace

std::size_t rank(RatMatrix m)
{
    return echelon(m).size();
}

AffineMap::AffineMap(RatMatrix matrix, RatVector offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset))
{
    if (offset_.size() != matrix_.rows())
        throw UsageError("AffineMap: offset length differs from matrix row count");
}

AffineMap AffineMap::identity(std::size_t dim)
{
    return AffineMap(RatMatrix::identity(dim), RatVector(dim));
}

RatVector AffineMap::apply(const RatVector& x) const
{
    if (x.size() != in_dim())
        throw UsageError("AffineMap::apply: dimension mismatch");
    RatVector y = matrix_ * x;
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += offset_[i];
    return y;
}

RatVector AffineMap::apply(const Point01& x) const
{
    if (x.size() != in_dim())
        throw UsageError("AffineMap::apply: dimension mismatch");
    std::vector<std::size_t> ones;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0)
            ones.push_back(j);
    RatVector y = offset_;
    for (std::size_t r = 0; r < out_dim(); ++r)
        for (auto j : ones) {
            const Rational& a = matrix_.at(r, j);
            if (sgn(a) != 0)
                y[r] += a;
        }
    return y;
}

AffineMap AffineMap::then(const AffineMap& next) const
{
    if (next.in_dim() != out_dim())
        throw UsageError("AffineMap::then: dimension mismatch");
    RatVector off = next.matrix_ * offset_;
    for (std::size_t i = 0; i < off.size(); ++i)
        off[i] += next.offset_[i];
    return AffineMap(next.matrix_ * matrix_, std::move(off));
}

const char* relation_symbol(Relation r)
{
    switch (r) {
    case Relation::Le: return "<=";
    case Relation::Eq: return "=";
    case Relation::Ge: return ">=";
    }
    return "?";
}

Rational LinConstraint::lhs(const RatVector& x) const
{
    assert(x.size() == coeffs.size());
    Rational s;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (sgn(coeffs[j]) != 0)
            s += coeffs[j] * x[j];
    return s;
}

Rational LinConstraint::lhs(const Point01& x) const
{
    assert(x.size() == coeffs.size());
    Rational s;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0 && sgn(coeffs[j]) != 0)
            s += coeffs[j];
    return s;
}

namespace {
bool holds(const Rational& v, Relation r, const Rational& rhs)
{
    switch (r) {
    case Relation::Le: return v <= rhs;
    case Relation::Eq: return v == rhs;
    case Relation::Ge: return v >= rhs;
    }
    return false;
}
} // namespace

bool LinConstraint::satisfied_by(const RatVector& x) const { return holds(lhs(x), relation, rhs); }
bool LinConstraint::satisfied_by(const Point01& x) const { return holds(lhs(x), relation, rhs); }

std::size_t affine_rank(std::span<const RatVector> points) { return affine_rank_impl(points); }
std::size_t affine_rank(std::span<const Point01> points) { return affine_rank_impl(points); }

std::optional<AffineMap> find_affine_map(std::span<const RatVector> src,
                                         std::span<const RatVector> tgt)
{
    return find_affine_map_impl(src, tgt);
}

std::optional<AffineMap> find_affine_map(std::span<const Point01> src,
                                         std::span<const Point01> tgt)
{
    return find_affine_map_impl(src, tgt);
}

} // namespace polyred
