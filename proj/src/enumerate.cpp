#include "polyred/enumerate.hpp"

#include "polyred/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

namespace polyred {

Guard Guard::from_env()
{
    Guard g;
    if (const char* env = std::getenv("POLYRED_GUARD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            g.max_states = v;
    }
    return g;
}

namespace {

class Budget {
public:
    Budget(const Guard& g, const FamilySpec& spec) : max_(g.max_states), spec_(spec) {}

    void tick()
    {
        if (++used_ > max_)
            throw ResourceError("enumeration of " + spec_.describe() + " exceeds the guard of " +
                                std::to_string(max_) + " states");
    }

    /// Refuses up front when a full enumeration is known to be too large.
    void precheck(double estimated_states) const
    {
        if (estimated_states > static_cast<double>(max_))
            throw ResourceError("full enumeration of " + spec_.describe() + " needs about " +
                                std::to_string(static_cast<unsigned long long>(estimated_states)) +
                                " states, beyond the guard of " + std::to_string(max_) +
                                "; use face_restricted_enumerate");
    }

private:
    std::uint64_t used_ = 0;
    std::uint64_t max_;
    const FamilySpec& spec_;
};

bool allowed(const Fixing& fix, std::size_t k, int val)
{
    return fix[k] < 0 || fix[k] == val;
}

std::size_t pair_pos(int i, int j, int m)
{
    auto a = static_cast<std::size_t>(i - 1);
    return a * static_cast<std::size_t>(m) - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

double factorial(int m)
{
    double f = 1;
    for (int k = 2; k <= m; ++k)
        f *= k;
    return f;
}

std::vector<Point01> search_cube(std::size_t d, const Fixing& fix, Budget& budget)
{
    std::vector<Point01> out;
    Point01 x(d, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        budget.tick();
        if (j == d) {
            out.push_back(x);
            return;
        }
        for (int v = 0; v <= 1; ++v)
            if (allowed(fix, j, v)) {
                x[j] = static_cast<std::uint8_t>(v);
                rec(j + 1);
            }
    };
    rec(0);
    return out;
}

std::vector<Point01> search_bqp(int n, const Fixing& fix, Budget& budget)
{
    std::vector<Point01> out;
    std::vector<std::uint8_t> diag(static_cast<std::size_t>(n), 0);
    auto off = [n](int i, int j) { return static_cast<std::size_t>(n) + pair_pos(i + 1, j + 1, n); };
    std::function<void(int)> rec = [&](int i) {
        budget.tick();
        if (i == n) {
            Point01 x(static_cast<std::size_t>(n * (n + 1) / 2), 0);
            for (int a = 0; a < n; ++a) {
                x[static_cast<std::size_t>(a)] = diag[static_cast<std::size_t>(a)];
                for (int b = a + 1; b < n; ++b)
                    x[off(a, b)] = diag[static_cast<std::size_t>(a)] & diag[static_cast<std::size_t>(b)];
            }
            out.push_back(std::move(x));
            return;
        }
        for (int v = 0; v <= 1; ++v) {
            if (!allowed(fix, static_cast<std::size_t>(i), v))
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = allowed(fix, off(j, i), diag[static_cast<std::size_t>(j)] & v);
            if (!ok)
                continue;
            diag[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Cuts delta(S) over S not containing node n.
std::vector<Point01> search_cut(int n, const Fixing& fix, Budget& budget)
{
    std::vector<Point01> out;
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int v) {
        budget.tick();
        if (v == n - 1) {
            Point01 x(static_cast<std::size_t>(n * (n - 1) / 2), 0);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    x[pair_pos(a + 1, b + 1, n)] = side[static_cast<std::size_t>(a)] ^ side[static_cast<std::size_t>(b)];
            out.push_back(std::move(x));
            return;
        }
        for (int s = 0; s <= 1; ++s) {
            bool ok = allowed(fix, pair_pos(v + 1, n, n), s);
            for (int u = 0; u < v && ok; ++u)
                ok = allowed(fix, pair_pos(u + 1, v + 1, n), side[static_cast<std::size_t>(u)] ^ s);
            if (!ok)
                continue;
            side[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(s);
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Point01> search_stable(const Graph& g, bool cover, const Fixing& fix, Budget& budget)
{
    std::vector<Point01> out;
    auto k = static_cast<std::size_t>(g.node_count());
    Point01 y(k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        budget.tick();
        if (v == k) {
            Point01 x = y;
            if (cover)
                for (auto& b : x)
                    b ^= 1;
            out.push_back(std::move(x));
            return;
        }
        for (int val = 0; val <= 1; ++val) {
            if (!allowed(fix, v, cover ? 1 - val : val))
                continue;
            if (val == 1) {
                bool free = true;
                for (auto e : g.incident(static_cast<int>(v))) {
                    auto [a, b] = g.edges()[e];
                    auto other = static_cast<std::size_t>(a == static_cast<int>(v) ? b : a);
                    if (other < v && y[other]) {
                        free = false;
                        break;
                    }
                }
                if (!free)
                    continue;
            }
            y[v] = static_cast<std::uint8_t>(val);
            rec(v + 1);
            y[v] = 0;
        }
    };
    rec(0);
    return out;
}

/// 0/1 solutions of A x (<= | =) rhs, column by column.
std::vector<Point01> search_rows(const IncidenceMatrix& a, bool equality, int rhs, const Fixing& fix, Budget& budget)
{
    std::vector<Point01> out;
    std::size_t d = a.cols();
    std::vector<std::vector<std::size_t>> col_rows(d);
    std::vector<int> remaining(a.rows(), 0), sum(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (int j : a.row(i)) {
            col_rows[static_cast<std::size_t>(j)].push_back(i);
            ++remaining[i];
        }
    Point01 x(d, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        budget.tick();
        if (j == d) {
            out.push_back(x);
            return;
        }
        for (auto i : col_rows[j])
            --remaining[i];
        for (int v = 0; v <= 1; ++v) {
            if (!allowed(fix, j, v))
                continue;
            bool ok = true;
            for (auto i : col_rows[j]) {
                int s = sum[i] + v;
                if (s > rhs || (equality && s + remaining[i] < rhs)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            x[j] = static_cast<std::uint8_t>(v);
            for (auto i : col_rows[j])
                sum[i] += v;
            rec(j + 1);
            for (auto i : col_rows[j])
                sum[i] -= v;
            x[j] = 0;
        }
        for (auto i : col_rows[j])
            ++remaining[i];
    };
    // Rows with no ones can never reach a positive right-hand side.
    if (equality)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (remaining[i] < rhs)
                return out;
    rec(0);
    return out;
}

/// p-index assignment: vertex = m tuples (i, s2(i), ..., sp(i)) with every
/// position a permutation of [m]. Position-major lexicographic indexing.
std::vector<Point01> search_assignment(int m, int p, const Fixing& fix, Budget& budget)
{
    auto um = static_cast<std::size_t>(m);
    std::size_t block = 1;
    for (int k = 1; k < p; ++k)
        block *= um;
    // Candidate tails (i2..ip) per first index, honoring fixings.
    std::vector<std::vector<std::size_t>> candidates(um);
    for (std::size_t i = 0; i < um; ++i) {
        std::vector<std::size_t> forced;
        for (std::size_t t = 0; t < block; ++t) {
            std::size_t k = i * block + t;
            if (fix[k] == 1)
                forced.push_back(t);
            else if (fix[k] != 0)
                candidates[i].push_back(t);
        }
        if (forced.size() > 1)
            return {};
        if (forced.size() == 1)
            candidates[i] = forced;
    }
    std::vector<Point01> out;
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(p), std::vector<bool>(um, false));
    std::vector<std::size_t> chosen(um);
    std::vector<std::size_t> digits(static_cast<std::size_t>(p));
    auto decode = [&](std::size_t t) {
        for (int pos = p - 1; pos >= 1; --pos) {
            digits[static_cast<std::size_t>(pos)] = t % um;
            t /= um;
        }
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        budget.tick();
        if (i == um) {
            Point01 x(um * block, 0);
            for (std::size_t r = 0; r < um; ++r)
                x[r * block + chosen[r]] = 1;
            out.push_back(std::move(x));
            return;
        }
        for (auto t : candidates[i]) {
            decode(t);
            bool ok = true;
            for (int pos = 1; pos < p && ok; ++pos)
                ok = !used[static_cast<std::size_t>(pos)][digits[static_cast<std::size_t>(pos)]];
            if (!ok)
                continue;
            for (int pos = 1; pos < p; ++pos)
                used[static_cast<std::size_t>(pos)][digits[static_cast<std::size_t>(pos)]] = true;
            chosen[i] = t;
            rec(i + 1);
            decode(t);
            for (int pos = 1; pos < p; ++pos)
                used[static_cast<std::size_t>(pos)][digits[static_cast<std::size_t>(pos)]] = false;
        }
    };
    rec(0);
    return out;
}

/// Rows pick one column each; no column constraint.
std::vector<Point01> search_row_assignment(int m, const Fixing& fix, Budget& budget)
{
    auto um = static_cast<std::size_t>(m);
    std::vector<Point01> out;
    Point01 x(um * um, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        budget.tick();
        if (i == um) {
            out.push_back(x);
            return;
        }
        for (std::size_t j = 0; j < um; ++j) {
            bool ok = true;
            for (std::size_t c = 0; c < um && ok; ++c)
                ok = allowed(fix, i * um + c, c == j ? 1 : 0);
            if (!ok)
                continue;
            x[i * um + j] = 1;
            rec(i + 1);
            x[i * um + j] = 0;
        }
    };
    rec(0);
    return out;
}

/// Linear orderings, built front to back; y_ij = 1 iff i precedes j.
std::vector<Point01> search_lop(int m, const Fixing& fix, Budget& budget)
{
    std::vector<Point01> out;
    std::vector<bool> placed(static_cast<std::size_t>(m + 1), false);
    std::vector<int> order;
    std::function<void()> rec = [&]() {
        budget.tick();
        if (static_cast<int>(order.size()) == m) {
            Point01 y(static_cast<std::size_t>(m * (m - 1) / 2), 0);
            for (std::size_t a = 0; a < order.size(); ++a)
                for (std::size_t b = a + 1; b < order.size(); ++b)
                    if (order[a] < order[b])
                        y[pair_pos(order[a], order[b], m)] = 1;
            out.push_back(std::move(y));
            return;
        }
        for (int e = 1; e <= m; ++e) {
            if (placed[static_cast<std::size_t>(e)])
                continue;
            bool ok = true;
            for (int f = 1; f <= m && ok; ++f) {
                if (f == e || placed[static_cast<std::size_t>(f)])
                    continue;
                ok = e < f ? allowed(fix, pair_pos(e, f, m), 1) : allowed(fix, pair_pos(f, e, m), 0);
            }
            if (!ok)
                continue;
            placed[static_cast<std::size_t>(e)] = true;
            order.push_back(e);
            rec();
            order.pop_back();
            placed[static_cast<std::size_t>(e)] = false;
        }
    };
    rec();
    return out;
}

/// Base-level search for a lifted family followed by product filtering.
template <class BaseSearch>
std::vector<Point01> search_lifted(std::size_t b, const Fixing& fix, BaseSearch&& base_search)
{
    Fixing base_fix(fix.begin(), fix.begin() + static_cast<std::ptrdiff_t>(b));
    std::size_t z = b;
    for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = p + 1; q < b; ++q, ++z)
            if (fix[z] == 1) {
                if (base_fix[p] == 0 || base_fix[q] == 0)
                    return {};
                base_fix[p] = base_fix[q] = 1;
            }
    std::vector<Point01> out;
    for (auto& y : base_search(base_fix)) {
        Point01 x(fix.size(), 0);
        std::copy(y.begin(), y.end(), x.begin());
        std::size_t k = b;
        bool ok = true;
        for (std::size_t p = 0; p < b && ok; ++p)
            for (std::size_t q = p + 1; q < b; ++q, ++k) {
                x[k] = y[p] & y[q];
                if (!allowed(fix, k, x[k])) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            out.push_back(std::move(x));
    }
    return out;
}

std::vector<Point01> dispatch(const FamilySpec& spec, const Fixing& fix, Budget& budget)
{
    switch (spec.family) {
    case Family::Cube: return search_cube(static_cast<std::size_t>(spec.n), fix, budget);
    case Family::Bqp: return search_bqp(spec.n, fix, budget);
    case Family::Cut: return search_cut(spec.n, fix, budget);
    case Family::Ssp: return search_stable(*spec.graph, false, fix, budget);
    case Family::Vcp: return search_stable(*spec.graph, true, fix, budget);
    case Family::Pack: return search_rows(*spec.matrix, false, 1, fix, budget);
    case Family::Part: return search_rows(*spec.matrix, true, 1, fix, budget);
    case Family::Dcp: return search_rows(*spec.matrix, true, 2, fix, budget);
    case Family::Assignment: return search_assignment(spec.m, spec.p, fix, budget);
    case Family::Lop: return search_lop(spec.m, fix, budget);
    case Family::Qlop:
        return search_lifted(static_cast<std::size_t>(spec.m * (spec.m - 1) / 2), fix,
                             [&](const Fixing& f) { return search_lop(spec.m, f, budget); });
    case Family::Qap:
        return search_lifted(static_cast<std::size_t>(spec.m * spec.m), fix,
                             [&](const Fixing& f) { return search_assignment(spec.m, 2, f, budget); });
    case Family::Qsap:
        return search_lifted(static_cast<std::size_t>(spec.m * spec.m), fix,
                             [&](const Fixing& f) { return search_row_assignment(spec.m, f, budget); });
    case Family::Explicit: break;
    }
    throw UsageError("cannot enumerate an explicit point set");
}

double full_estimate(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::Cube:
    case Family::Bqp: return std::ldexp(1.0, spec.n);
    case Family::Cut: return std::ldexp(1.0, spec.n - 1);
    case Family::Assignment: return std::pow(factorial(spec.m), spec.p - 1);
    case Family::Lop:
    case Family::Qlop:
    case Family::Qap: return factorial(spec.m);
    case Family::Qsap: return std::pow(static_cast<double>(spec.m), spec.m);
    default: return 0; // graph and matrix families are bounded by the search budget
    }
}

} // namespace

VertexSet face_restricted_enumerate(const FamilySpec& spec, const Fixing& fixing, const Guard& guard)
{
    if (fixing.size() != spec.dim())
        throw UsageError("face_restricted_enumerate: fixing length differs from dimension");
    Budget budget(guard, spec);
    auto vertices = dispatch(spec, fixing, budget);
    return VertexSet(spec, spec.labels(), std::move(vertices));
}

VertexSet face_restricted_enumerate(const FamilySpec& spec, std::span<const CoordLabel> zero_fixed,
                                    std::span<const CoordLabel> one_fixed, const Guard& guard)
{
    auto labels = spec.labels();
    auto index = label_index(labels);
    Fixing fix(labels.size(), -1);
    bool contradictory = false;
    auto apply = [&](std::span<const CoordLabel> list, std::int8_t v) {
        for (const auto& l : list) {
            auto it = index.find(l.str());
            if (it == index.end())
                throw ValidationError("fixing names unknown label " + l.str() + " of " + spec.describe());
            if (fix[it->second] >= 0 && fix[it->second] != v)
                contradictory = true;
            fix[it->second] = v;
        }
    };
    apply(zero_fixed, 0);
    apply(one_fixed, 1);
    if (contradictory)
        return VertexSet(spec, std::move(labels), {});
    Budget budget(guard, spec);
    auto vertices = dispatch(spec, fix, budget);
    return VertexSet(spec, std::move(labels), std::move(vertices));
}

VertexSet enumerate(const FamilySpec& spec, const Guard& guard)
{
    Budget budget(guard, spec);
    budget.precheck(full_estimate(spec));
    Fixing free(spec.dim(), -1);
    auto vertices = dispatch(spec, free, budget);
    return VertexSet(spec, spec.labels(), std::move(vertices));
}

VertexSet enumerate_bqp(int n, const Guard& guard) { return enumerate(FamilySpec::bqp(n), guard); }
VertexSet enumerate_cut(int n, const Guard& guard) { return enumerate(FamilySpec::cut(n), guard); }
VertexSet enumerate_ssp(const Graph& g, const Guard& guard) { return enumerate(FamilySpec::ssp(g), guard); }

VertexSet enumerate_pack_part(const IncidenceMatrix& a, PackMode mode, const Guard& guard)
{
    return enumerate(mode == PackMode::Pack ? FamilySpec::pack(a) : FamilySpec::part(a), guard);
}

VertexSet enumerate_dcp(const IncidenceMatrix& b, const Guard& guard) { return enumerate(FamilySpec::dcp(b), guard); }
VertexSet enumerate_assignment(int m, int p, const Guard& guard) { return enumerate(FamilySpec::assignment(m, p), guard); }
VertexSet enumerate_lop(int m, const Guard& guard) { return enumerate(FamilySpec::lop(m), guard); }

std::vector<QuadPair> all_pairs(const std::vector<CoordLabel>& base)
{
    std::vector<QuadPair> out;
    for (std::size_t p = 0; p < base.size(); ++p)
        for (std::size_t q = p + 1; q < base.size(); ++q)
            out.push_back(QuadPair{{base[p], base[q]}});
    return out;
}

VertexSet quadratic_lift(const VertexSet& base, std::span<const QuadPair> pairs)
{
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    auto labels = base.labels();
    for (const auto& pr : pairs) {
        if (pr.factors.size() != 2)
            throw ValidationError("quadratic_lift: a pair needs exactly two factors");
        auto a = base.index_of(pr.factors[0]);
        auto b = base.index_of(pr.factors[1]);
        if (!a || !b)
            throw ValidationError("quadratic_lift: pair " + quad(pr.factors[0], pr.factors[1]).str() +
                                  " references an unknown base label");
        if (*a >= *b)
            throw ValidationError("quadratic_lift: pair " + quad(pr.factors[0], pr.factors[1]).str() +
                                  " is not in base order");
        pos.emplace_back(*a, *b);
        labels.push_back(quad(pr.factors[0], pr.factors[1]));
    }
    std::vector<Point01> lifted;
    lifted.reserve(base.size());
    for (const auto& v : base.vertices()) {
        Point01 x = v;
        for (auto [a, b] : pos)
            x.push_back(v[a] & v[b]);
        lifted.push_back(std::move(x));
    }
    FamilySpec spec;
    spec.family = Family::Explicit;
    return VertexSet(spec, std::move(labels), std::move(lifted));
}

} // namespace polyred
