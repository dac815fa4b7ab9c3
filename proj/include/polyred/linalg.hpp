#pragma once

#include "polyred/rational.hpp"

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace polyred {

/// A point of {0,1}^d. Vertex sets of 0/1 polytopes are stored this way and
/// widened to rationals only where arithmetic needs it.
using Point01 = std::vector<std::uint8_t>;

RatVector to_rational(const Point01& p);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c)
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const Rational& at(std::size_t r, std::size_t c) const
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    RatVector row(std::size_t r) const;

    RatVector operator*(const RatVector& x) const;
    RatMatrix operator*(const RatMatrix& other) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank over the rationals.
std::size_t rank(RatMatrix m);

/// x |-> matrix * x + offset.
class AffineMap {
public:
    AffineMap() = default;
    AffineMap(RatMatrix matrix, RatVector offset);

    static AffineMap identity(std::size_t dim);

    std::size_t in_dim() const { return matrix_.cols(); }
    std::size_t out_dim() const { return matrix_.rows(); }
    const RatMatrix& matrix() const { return matrix_; }
    const RatVector& offset() const { return offset_; }
    RatMatrix& matrix() { return matrix_; }
    RatVector& offset() { return offset_; }

    RatVector apply(const RatVector& x) const;
    /// Sparse-aware evaluation at a 0/1 point.
    RatVector apply(const Point01& x) const;

    /// The map x |-> next(this(x)).
    AffineMap then(const AffineMap& next) const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

private:
    RatMatrix matrix_;
    RatVector offset_;
};

enum class Relation { Le, Eq, Ge };

const char* relation_symbol(Relation r);

struct LinConstraint {
    RatVector coeffs;
    Relation relation = Relation::Le;
    Rational rhs;

    Rational lhs(const RatVector& x) const;
    Rational lhs(const Point01& x) const;

    bool satisfied_by(const RatVector& x) const;
    bool satisfied_by(const Point01& x) const;
    bool tight_at(const Point01& x) const { return lhs(x) == rhs; }

    friend bool operator==(const LinConstraint&, const LinConstraint&) = default;
};

/// Dimension of the affine hull. Throws UsageError on an empty list or on
/// points of different lengths.
std::size_t affine_rank(std::span<const RatVector> points);
std::size_t affine_rank(std::span<const Point01> points);

/// An affine map sending src[i] to tgt[i] for every i, or nullopt when none
/// exists. Coordinates of src that are constant over the list receive zero
/// coefficients, so the result is canonical when src is affinely spanning.
std::optional<AffineMap> find_affine_map(std::span<const RatVector> src,
                                         std::span<const RatVector> tgt);
std::optional<AffineMap> find_affine_map(std::span<const Point01> src,
                                         std::span<const Point01> tgt);

} // namespace polyred
