#include "polyred/family.hpp"

#include "polyred/errors.hpp"

#include <algorithm>
#include <array>

namespace polyred {

namespace {

constexpr std::array<std::pair<Family, const char*>, 14> names{{
    {Family::Cube, "cube"},
    {Family::Bqp, "bqp"},
    {Family::Cut, "cut"},
    {Family::Ssp, "ssp"},
    {Family::Vcp, "vcp"},
    {Family::Pack, "pack"},
    {Family::Part, "part"},
    {Family::Dcp, "dcp"},
    {Family::Assignment, "assignment"},
    {Family::Lop, "lop"},
    {Family::Qlop, "qlop"},
    {Family::Qap, "qap"},
    {Family::Qsap, "qsap"},
    {Family::Explicit, "explicit"},
}};

/// 0-based position of the pair (i,j), 1 <= i < j <= m, in lexicographic order.
std::size_t pair_pos(int i, int j, int m)
{
    auto a = static_cast<std::size_t>(i - 1);
    return a * static_cast<std::size_t>(m) - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

std::vector<CoordLabel> with_pairs(std::vector<CoordLabel> base)
{
    std::size_t b = base.size();
    base.reserve(b + choose2(b));
    for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = p + 1; q < b; ++q)
            base.push_back(quad(base[p], base[q]));
    return base;
}

std::vector<CoordLabel> ordpair_labels(int m)
{
    std::vector<CoordLabel> out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            out.push_back(CoordLabel{OrdPair{i, j}});
    return out;
}

std::vector<CoordLabel> cell_labels(int m)
{
    std::vector<CoordLabel> out;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            out.push_back(CoordLabel{Cell{i, j}});
    return out;
}

std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int k = 0; k < e; ++k)
        r *= b;
    return r;
}

/// Products of base coordinates must match the lifted block.
bool lift_consistent(const Point01& x, std::size_t b)
{
    std::size_t z = b;
    for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = p + 1; q < b; ++q, ++z)
            if (x[z] != (x[p] & x[q]))
                return false;
    return true;
}

bool lop_ok(const Point01& y, int m)
{
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) {
                int v = y[pair_pos(i, j, m)] + y[pair_pos(j, k, m)] - y[pair_pos(i, k, m)];
                if (v < 0 || v > 1)
                    return false;
            }
    return true;
}

bool rows_sum_one(const Point01& y, int m)
{
    for (int i = 0; i < m; ++i) {
        int s = 0;
        for (int j = 0; j < m; ++j)
            s += y[static_cast<std::size_t>(i * m + j)];
        if (s != 1)
            return false;
    }
    return true;
}

bool cols_sum_one(const Point01& y, int m)
{
    for (int j = 0; j < m; ++j) {
        int s = 0;
        for (int i = 0; i < m; ++i)
            s += y[static_cast<std::size_t>(i * m + j)];
        if (s != 1)
            return false;
    }
    return true;
}

} // namespace

const char* family_name(Family f)
{
    for (const auto& [fam, name] : names)
        if (fam == f)
            return name;
    return "?";
}

Family parse_family(const std::string& name)
{
    for (const auto& [fam, n] : names)
        if (name == n)
            return fam;
    throw ValidationError("unknown family '" + name + "'");
}

FamilySpec FamilySpec::cube(int n)
{
    if (n < 1)
        throw UsageError("cube: n must be >= 1");
    FamilySpec s;
    s.family = Family::Cube;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::bqp(int n)
{
    if (n < 1)
        throw UsageError("bqp: n must be >= 1");
    FamilySpec s;
    s.family = Family::Bqp;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::cut(int n)
{
    if (n < 2)
        throw UsageError("cut: n must be >= 2");
    FamilySpec s;
    s.family = Family::Cut;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::ssp(Graph g)
{
    if (g.node_count() < 1)
        throw UsageError("ssp: graph needs at least one node");
    FamilySpec s;
    s.family = Family::Ssp;
    s.graph = std::move(g);
    return s;
}

FamilySpec FamilySpec::vcp(Graph g)
{
    FamilySpec s = ssp(std::move(g));
    s.family = Family::Vcp;
    return s;
}

FamilySpec FamilySpec::pack(IncidenceMatrix a)
{
    if (a.cols() == 0)
        throw UsageError("pack: matrix has no columns");
    FamilySpec s;
    s.family = Family::Pack;
    s.matrix = std::move(a);
    return s;
}

FamilySpec FamilySpec::part(IncidenceMatrix a)
{
    FamilySpec s = pack(std::move(a));
    s.family = Family::Part;
    return s;
}

FamilySpec FamilySpec::dcp(IncidenceMatrix b)
{
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (b.row(i).size() != 4)
            throw ValidationError("dcp: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(b.row(i).size()) + " ones, expected exactly four");
    FamilySpec s = pack(std::move(b));
    s.family = Family::Dcp;
    return s;
}

FamilySpec FamilySpec::assignment(int m, int p, std::vector<std::string> ground)
{
    if (m < 1 || p < 2)
        throw UsageError("assignment: need m >= 1 and p >= 2");
    if (!ground.empty() && ground.size() != static_cast<std::size_t>(m))
        throw ValidationError("assignment: ground set size differs from m");
    FamilySpec s;
    s.family = Family::Assignment;
    s.m = m;
    s.p = p;
    s.ground = std::move(ground);
    return s;
}

FamilySpec FamilySpec::lop(int m)
{
    if (m < 2)
        throw UsageError("lop: m must be >= 2");
    FamilySpec s;
    s.family = Family::Lop;
    s.m = m;
    return s;
}

FamilySpec FamilySpec::qlop(int m)
{
    FamilySpec s = lop(m);
    s.family = Family::Qlop;
    return s;
}

FamilySpec FamilySpec::qap(int m)
{
    if (m < 1)
        throw UsageError("qap: m must be >= 1");
    FamilySpec s;
    s.family = Family::Qap;
    s.m = m;
    return s;
}

FamilySpec FamilySpec::qsap(int m)
{
    FamilySpec s = qap(m);
    s.family = Family::Qsap;
    return s;
}

std::vector<CoordLabel> FamilySpec::labels() const
{
    std::vector<CoordLabel> out;
    switch (family) {
    case Family::Cube:
        for (int j = 1; j <= n; ++j)
            out.push_back(CoordLabel{Column{j}});
        break;
    case Family::Bqp:
        for (int i = 1; i <= n; ++i)
            out.push_back(CoordLabel{BqpDiag{i}});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back(CoordLabel{BqpOff{i, j}});
        break;
    case Family::Cut:
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back(CoordLabel{CutEdge{i, j}});
        break;
    case Family::Ssp:
    case Family::Vcp:
        for (const auto& name : graph->nodes())
            out.push_back(CoordLabel{Node{name}});
        break;
    case Family::Pack:
    case Family::Part:
    case Family::Dcp:
        for (std::size_t j = 1; j <= matrix->cols(); ++j)
            out.push_back(CoordLabel{Column{static_cast<int>(j)}});
        break;
    case Family::Assignment: {
        std::size_t total = ipow(static_cast<std::size_t>(m), p);
        out.reserve(total);
        std::vector<int> idx(static_cast<std::size_t>(p), 1);
        for (std::size_t k = 0; k < total; ++k) {
            if (p == 3)
                out.push_back(CoordLabel{Triple{idx[0], idx[1], idx[2]}});
            else
                out.push_back(CoordLabel{Tuple{idx}});
            for (int pos = p - 1; pos >= 0; --pos) {
                auto& v = idx[static_cast<std::size_t>(pos)];
                if (v < m) {
                    ++v;
                    break;
                }
                v = 1;
            }
        }
        break;
    }
    case Family::Lop:
        out = ordpair_labels(m);
        break;
    case Family::Qlop:
        out = with_pairs(ordpair_labels(m));
        break;
    case Family::Qap:
    case Family::Qsap:
        out = with_pairs(cell_labels(m));
        break;
    case Family::Explicit:
        throw UsageError("labels: an explicit point set carries its own labels");
    }
    return out;
}

std::size_t FamilySpec::dim() const
{
    auto un = static_cast<std::size_t>(n);
    auto um = static_cast<std::size_t>(m);
    switch (family) {
    case Family::Cube: return un;
    case Family::Bqp: return un * (un + 1) / 2;
    case Family::Cut: return choose2(un);
    case Family::Ssp:
    case Family::Vcp: return static_cast<std::size_t>(graph->node_count());
    case Family::Pack:
    case Family::Part:
    case Family::Dcp: return matrix->cols();
    case Family::Assignment: return ipow(um, p);
    case Family::Lop: return choose2(um);
    case Family::Qlop: return choose2(um) * (choose2(um) + 1) / 2;
    case Family::Qap:
    case Family::Qsap: return um * um + choose2(um * um);
    case Family::Explicit: break;
    }
    throw UsageError("dim: an explicit point set carries its own dimension");
}

std::string FamilySpec::describe() const
{
    auto sz = [](std::size_t v) { return std::to_string(v); };
    switch (family) {
    case Family::Cube: return "CUBE_" + std::to_string(n);
    case Family::Bqp: return "BQP_" + std::to_string(n);
    case Family::Cut: return "CUT_" + std::to_string(n);
    case Family::Ssp:
    case Family::Vcp:
        return std::string(family == Family::Ssp ? "SSP" : "VCP") + "(k=" + std::to_string(graph->node_count()) +
               ",|E|=" + sz(graph->edge_count()) + ")";
    case Family::Pack:
    case Family::Part:
    case Family::Dcp:
        return std::string(family == Family::Pack ? "PACK" : family == Family::Part ? "PART" : "DCP") + "(" +
               sz(matrix->rows()) + "x" + sz(matrix->cols()) + ")";
    case Family::Assignment:
        return p == 3 ? "TAP_" + std::to_string(m) : std::to_string(p) + "-AP_" + std::to_string(m);
    case Family::Lop: return "LOP_" + std::to_string(m);
    case Family::Qlop: return "QLOP_" + std::to_string(m);
    case Family::Qap: return "QAP_" + std::to_string(m);
    case Family::Qsap: return "QSAP_" + std::to_string(m);
    case Family::Explicit: return "explicit";
    }
    return "?";
}

bool FamilySpec::same_instance(const FamilySpec& other) const
{
    if (family != other.family || n != other.n || m != other.m || p != other.p)
        return false;
    if (graph.has_value() != other.graph.has_value() || (graph && !graph->same_structure(*other.graph)))
        return false;
    return matrix == other.matrix;
}

bool satisfies_definition(const FamilySpec& spec, const Point01& x)
{
    if (spec.family != Family::Explicit && x.size() != spec.dim())
        return false;
    for (auto b : x)
        if (b > 1)
            return false;
    const int n = spec.n, m = spec.m;
    switch (spec.family) {
    case Family::Cube:
    case Family::Explicit:
        return true;
    case Family::Bqp: {
        std::size_t off = static_cast<std::size_t>(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++off)
                if (x[off] != (x[static_cast<std::size_t>(i - 1)] & x[static_cast<std::size_t>(j - 1)]))
                    return false;
        return true;
    }
    case Family::Cut: {
        // Shore indicator with node n on the zero side.
        auto side = [&](int v) { return v == n ? 0 : x[pair_pos(v, n, n)]; };
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (x[pair_pos(i, j, n)] != (side(i) ^ side(j)))
                    return false;
        return true;
    }
    case Family::Ssp:
    case Family::Vcp:
        for (auto [u, v] : spec.graph->edges()) {
            int s = x[static_cast<std::size_t>(u)] + x[static_cast<std::size_t>(v)];
            if (spec.family == Family::Ssp ? s > 1 : s < 1)
                return false;
        }
        return true;
    case Family::Pack:
    case Family::Part:
    case Family::Dcp: {
        int rhs = spec.family == Family::Dcp ? 2 : 1;
        for (std::size_t i = 0; i < spec.matrix->rows(); ++i) {
            int s = 0;
            for (int j : spec.matrix->row(i))
                s += x[static_cast<std::size_t>(j)];
            if (spec.family == Family::Pack ? s > rhs : s != rhs)
                return false;
        }
        return true;
    }
    case Family::Assignment: {
        auto um = static_cast<std::size_t>(m);
        std::size_t total = x.size();
        for (int pos = 0; pos < spec.p; ++pos) {
            std::size_t stride = ipow(um, spec.p - 1 - pos);
            std::vector<int> sums(um, 0);
            for (std::size_t k = 0; k < total; ++k)
                if (x[k])
                    ++sums[(k / stride) % um];
            for (int s : sums)
                if (s != 1)
                    return false;
        }
        return true;
    }
    case Family::Lop:
        return lop_ok(x, m);
    case Family::Qlop: {
        std::size_t b = choose2(static_cast<std::size_t>(m));
        return lop_ok(Point01(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(b)), m) && lift_consistent(x, b);
    }
    case Family::Qap:
    case Family::Qsap: {
        std::size_t b = static_cast<std::size_t>(m * m);
        if (!rows_sum_one(x, m) || !lift_consistent(x, b))
            return false;
        return spec.family == Family::Qsap || cols_sum_one(x, m);
    }
    }
    return false;
}

std::unordered_map<std::string, std::size_t> label_index(const std::vector<CoordLabel>& labels)
{
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (!idx.emplace(labels[k].str(), k).second)
            throw ValidationError("duplicate coordinate label " + labels[k].str());
    return idx;
}

VertexSet::VertexSet(FamilySpec family, std::vector<CoordLabel> labels, std::vector<Point01> vertices)
    : family_(std::move(family)), labels_(std::move(labels)), vertices_(std::move(vertices)),
      index_(label_index(labels_))
{
    for (const auto& v : vertices_)
        if (v.size() != labels_.size())
            throw ValidationError("vertex length differs from label count");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool VertexSet::contains(const Point01& x) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

std::optional<std::size_t> VertexSet::index_of(const CoordLabel& label) const
{
    auto it = index_.find(label.str());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t VertexSet::require_index(const CoordLabel& label) const
{
    auto k = index_of(label);
    if (!k)
        throw ValidationError("unknown coordinate label " + label.str() + " in " + family_.describe());
    return *k;
}

} // namespace polyred
