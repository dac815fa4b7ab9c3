#include "polyred/lp.hpp"

#include "polyred/errors.hpp"

#include <limits>
#include <vector>

namespace polyred {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

/// Dense phase-one tableau. Columns: split free variables (x+ then x-),
/// one slack or surplus per inequality row, one artificial per row that
/// lacks a slack basis; last column is the right-hand side.
class PhaseOne {
public:
    PhaseOne(std::span<const LinConstraint> constraints, std::size_t dim)
        : dim_(dim), m_(constraints.size())
    {
        std::size_t slacks = 0;
        for (const auto& c : constraints)
            if (c.relation != Relation::Eq)
                ++slacks;

        // Normalize to non-negative right-hand sides first.
        std::vector<Relation> rel(m_);
        std::vector<int> sign(m_, 1);
        std::size_t artificials = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            rel[i] = constraints[i].relation;
            if (sgn(constraints[i].rhs) < 0) {
                sign[i] = -1;
                if (rel[i] == Relation::Le)
                    rel[i] = Relation::Ge;
                else if (rel[i] == Relation::Ge)
                    rel[i] = Relation::Le;
            }
            if (rel[i] != Relation::Le)
                ++artificials;
        }

        first_slack_ = 2 * dim_;
        first_art_ = first_slack_ + slacks;
        cols_ = first_art_ + artificials;
        width_ = cols_ + 1;
        tab_.assign((m_ + 1) * width_, Rational());
        basis_.assign(m_, none);

        std::size_t s = first_slack_, a = first_art_;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& c = constraints[i];
            if (c.coeffs.size() != dim_)
                throw UsageError("lp_feasible: constraint length differs from dim");
            for (std::size_t j = 0; j < dim_; ++j) {
                if (sgn(c.coeffs[j]) == 0)
                    continue;
                Rational v = sign[i] > 0 ? c.coeffs[j] : Rational(-c.coeffs[j]);
                at(i, j) = v;
                at(i, dim_ + j) = -v;
            }
            at(i, cols_) = sign[i] > 0 ? c.rhs : Rational(-c.rhs);
            if (constraints[i].relation != Relation::Eq) {
                at(i, s) = rel[i] == Relation::Le ? 1 : -1;
                if (rel[i] == Relation::Le)
                    basis_[i] = s;
                ++s;
            }
            if (rel[i] != Relation::Le) {
                at(i, a) = 1;
                basis_[i] = a;
                ++a;
            }
        }
        // Objective row: minimize the sum of artificials, expressed in
        // terms of the non-basic columns.
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < first_art_)
                continue;
            for (std::size_t j = 0; j < width_; ++j)
                if (j < first_art_ || j == cols_)
                    if (sgn(at(i, j)) != 0)
                        at(m_, j) -= at(i, j);
        }
    }

    bool solve()
    {
        for (;;) {
            std::size_t enter = none;
            for (std::size_t j = 0; j < first_art_; ++j)
                if (sgn(at(m_, j)) < 0) {
                    enter = j;
                    break;
                }
            if (enter == none)
                break;
            std::size_t leave = none;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(at(i, enter)) <= 0)
                    continue;
                Rational ratio = at(i, cols_) / at(i, enter);
                if (leave == none || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            // Phase one is bounded below by zero, so a pivot row always exists.
            if (leave == none)
                throw ConsistencyError("lp_feasible: unbounded phase-one problem");
            pivot(leave, enter);
        }
        return sgn(at(m_, cols_)) == 0;
    }

    RatVector solution() const
    {
        RatVector x(dim_);
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t b = basis_[i];
            if (b < dim_)
                x[b] += at(i, cols_);
            else if (b < 2 * dim_)
                x[b - dim_] -= at(i, cols_);
        }
        return x;
    }

private:
    Rational& at(std::size_t r, std::size_t c) { return tab_[r * width_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return tab_[r * width_ + c]; }

    void pivot(std::size_t r, std::size_t c)
    {
        Rational p = at(r, c);
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width_; ++j)
            if (sgn(at(r, j)) != 0) {
                at(r, j) /= p;
                nz.push_back(j);
            }
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || sgn(at(i, c)) == 0)
                continue;
            Rational f = at(i, c);
            for (auto j : nz)
                at(i, j) -= f * at(r, j);
        }
        basis_[r] = c;
    }

    std::size_t dim_;
    std::size_t m_;
    std::size_t first_slack_ = 0;
    std::size_t first_art_ = 0;
    std::size_t cols_ = 0;
    std::size_t width_ = 0;
    std::vector<Rational> tab_;
    std::vector<std::size_t> basis_;
};

} // namespace

std::optional<RatVector> lp_feasible(std::span<const LinConstraint> constraints,
                                     std::size_t dim)
{
    PhaseOne lp(constraints, dim);
    if (!lp.solve())
        return std::nullopt;
    RatVector x = lp.solution();
    for (const auto& c : constraints)
        if (!c.satisfied_by(x))
            throw ConsistencyError("lp_feasible: returned point violates a constraint");
    return x;
}

} // namespace polyred
