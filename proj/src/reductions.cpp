#include "polyred/reductions.hpp"

#include "polyred/errors.hpp"

#include <algorithm>
#include <map>

namespace polyred {

namespace {

using Term = std::pair<CoordLabel, Rational>;
using Index = std::unordered_map<std::string, std::size_t>;

std::size_t lookup(const Index& idx, const CoordLabel& l)
{
    auto it = idx.find(l.str());
    if (it == idx.end())
        throw ConsistencyError("builder refers to unknown coordinate " + l.str());
    return it->second;
}

/// Assembles an affine map one target coordinate at a time; coordinates
/// never set stay identically zero.
class MapBuilder {
public:
    MapBuilder(const FamilySpec& src, const FamilySpec& tgt)
        : src_(label_index(src.labels())), tgt_(label_index(tgt.labels())),
          matrix_(tgt.dim(), src.dim()), offset_(tgt.dim())
    {
    }

    void set(const CoordLabel& target, const std::vector<Term>& terms, const Rational& constant = 0)
    {
        std::size_t t = lookup(tgt_, target);
        for (const auto& [l, c] : terms)
            matrix_.at(t, lookup(src_, l)) += c;
        offset_[t] = constant;
    }

    AffineMap take() { return AffineMap(std::move(matrix_), std::move(offset_)); }

private:
    Index src_, tgt_;
    RatMatrix matrix_;
    RatVector offset_;
};

LinConstraint over(const Index& idx, std::size_t dim, const std::vector<Term>& terms, Relation rel,
                   const Rational& rhs)
{
    LinConstraint c{RatVector(dim), rel, rhs};
    for (const auto& [l, coef] : terms)
        c.coeffs[lookup(idx, l)] += coef;
    return c;
}

CoordLabel xd(int i) { return CoordLabel{BqpDiag{i}}; }
CoordLabel xo(int i, int j) { return i < j ? CoordLabel{BqpOff{i, j}} : CoordLabel{BqpOff{j, i}}; }
/// BQP coordinate x(i,j) for any i, j.
CoordLabel xb(int i, int j) { return i == j ? xd(i) : xo(i, j); }
CoordLabel node(const std::string& name) { return CoordLabel{Node{name}}; }
CoordLabel col(int j) { return CoordLabel{Column{j}}; }
CoordLabel ord(int i, int j) { return CoordLabel{OrdPair{i, j}}; }
CoordLabel cell(int i, int j) { return CoordLabel{Cell{i, j}}; }
CoordLabel cut_edge(int i, int j) { return CoordLabel{CutEdge{i, j}}; }

CoordLabel assignment_label(const std::vector<int>& idx)
{
    if (idx.size() == 3)
        return CoordLabel{Triple{idx[0], idx[1], idx[2]}};
    return CoordLabel{Tuple{idx}};
}

DimAssertion dim_eq(std::string name, long long claimed, long long actual)
{
    return DimAssertion{std::move(name), claimed, actual, Relation::Eq};
}

DimAssertion dim_le(std::string name, long long bound, long long actual)
{
    return DimAssertion{std::move(name), bound, actual, Relation::Le};
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

ReductionCertificate start(std::string id, std::string provenance, FamilySpec source, FamilySpec target)
{
    ReductionCertificate c;
    c.id = std::move(id);
    c.provenance = std::move(provenance);
    c.source = std::move(source);
    c.target = std::move(target);
    c.claimed_target_dim = ll(c.target.dim());
    return c;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw ValidationError(what);
}

/// Each constraint must hold on every listed vertex.
void precheck_validity(const std::vector<FaceConstraint>& cs, const VertexSet& target, const std::string& who)
{
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (const auto& v : target.vertices())
            if (!cs[i].constraint.satisfied_by(v))
                throw ConsistencyError(who + ": face equality " + std::to_string(i + 1) +
                                       " is not valid on the target");
}

std::string graph_tag(const Graph& g)
{
    return "k=" + std::to_string(g.node_count()) + ",|E|=" + std::to_string(g.edge_count());
}

/// Conflict graph of the columns of a: adjacent iff they share a row.
Graph conflict_graph(const IncidenceMatrix& a)
{
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= a.cols(); ++j)
        names.push_back(std::to_string(j));
    std::vector<Graph::Edge> edges;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto& row = a.row(r);
        for (std::size_t x = 0; x < row.size(); ++x)
            for (std::size_t y = x + 1; y < row.size(); ++y)
                edges.emplace_back(row[x], row[y]);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(std::move(names), std::move(edges));
}

ReductionCertificate elementary_bqp_chain(int n)
{
    require(n >= 1, "bqp_chain needs n >= 1");
    auto c = start("bqp_chain(n=" + std::to_string(n) + ")", "elementary:bqp_chain", FamilySpec::bqp(n),
                   FamilySpec::bqp(n + 1));
    c.face.zero_fixed.push_back(xd(n + 1));
    MapBuilder mb(c.source, c.target);
    for (const auto& l : c.source.labels())
        mb.set(l, {{l, 1}});
    c.map = mb.take();
    return c;
}

ReductionCertificate elementary_ssp_vcp(const Graph& g)
{
    auto c = start("ssp_vcp(" + graph_tag(g) + ")", "elementary:ssp_vcp", FamilySpec::ssp(g), FamilySpec::vcp(g));
    MapBuilder mb(c.source, c.target);
    for (const auto& l : c.source.labels())
        mb.set(l, {{l, -1}}, 1);
    c.map = mb.take();
    return c;
}

ReductionCertificate elementary_part_in_pack(const IncidenceMatrix& a)
{
    auto c = start("part_in_pack(" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")",
                   "elementary:part_in_pack", FamilySpec::part(a), FamilySpec::pack(a));
    auto idx = label_index(c.target.labels());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<Term> terms;
        for (int j : a.row(r))
            terms.emplace_back(col(j + 1), 1);
        c.face.constraints.push_back({over(idx, c.target.dim(), terms, Relation::Le, 1), 0});
    }
    MapBuilder mb(c.source, c.target);
    for (const auto& l : c.source.labels())
        mb.set(l, {{l, 1}});
    c.map = mb.take();
    return c;
}

ReductionCertificate elementary_pack_as_ssp(const IncidenceMatrix& a)
{
    Graph g = conflict_graph(a);
    auto c = start("pack_as_ssp(" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")",
                   "elementary:pack_as_ssp", FamilySpec::pack(a), FamilySpec::ssp(g));
    MapBuilder mb(c.source, c.target);
    for (int j = 1; j <= static_cast<int>(a.cols()); ++j)
        mb.set(node(std::to_string(j)), {{col(j), 1}});
    c.map = mb.take();
    return c;
}

ReductionCertificate elementary_ssp_as_pack(const Graph& g)
{
    std::vector<std::vector<int>> rows;
    for (auto [u, v] : g.edges())
        rows.push_back({u, v});
    IncidenceMatrix a(static_cast<std::size_t>(g.node_count()), std::move(rows));
    auto c = start("ssp_as_pack(" + graph_tag(g) + ")", "elementary:ssp_as_pack", FamilySpec::ssp(g),
                   FamilySpec::pack(a));
    MapBuilder mb(c.source, c.target);
    for (int v = 0; v < g.node_count(); ++v)
        mb.set(col(v + 1), {{node(g.nodes()[static_cast<std::size_t>(v)]), 1}});
    c.map = mb.take();
    return c;
}

ReductionCertificate elementary_tap_as_part(int m)
{
    require(m >= 1, "tap_as_part needs m >= 1");
    auto column = [m](int s, int t, int u) { return ((s - 1) * m + (t - 1)) * m + (u - 1); };
    std::vector<std::vector<int>> rows;
    // one row per fixed third, second, first index
    for (int pos = 2; pos >= 0; --pos)
        for (int v = 1; v <= m; ++v) {
            std::vector<int> row;
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= m; ++b) {
                    int s = pos == 0 ? v : a;
                    int t = pos == 1 ? v : (pos == 0 ? a : b);
                    int u = pos == 2 ? v : b;
                    row.push_back(column(s, t, u));
                }
            rows.push_back(std::move(row));
        }
    std::size_t cols = static_cast<std::size_t>(m) * m * m;
    auto c = start("tap_as_part(m=" + std::to_string(m) + ")", "elementary:tap_as_part",
                   FamilySpec::assignment(m, 3), FamilySpec::part(IncidenceMatrix(cols, std::move(rows))));
    c.dims.push_back(dim_eq("PART rows = 3m", 3LL * m, ll(c.target.matrix->rows())));
    c.dims.push_back(dim_eq("PART columns = m^3", ll(cols), ll(c.target.dim())));
    MapBuilder mb(c.source, c.target);
    for (int s = 1; s <= m; ++s)
        for (int t = 1; t <= m; ++t)
            for (int u = 1; u <= m; ++u)
                mb.set(col(column(s, t, u) + 1), {{CoordLabel{Triple{s, t, u}}, 1}});
    c.map = mb.take();
    return c;
}

ReductionCertificate elementary_pap_step(int m, int p)
{
    require(m >= 1 && p >= 3, "pap_step needs m >= 1 and p >= 3");
    auto c = start("pap_step(m=" + std::to_string(m) + ",p=" + std::to_string(p) + ")", "elementary:pap_step",
                   FamilySpec::assignment(m, p - 1), FamilySpec::assignment(m, p));
    MapBuilder mb(c.source, c.target);
    for (const auto& l : c.target.labels()) {
        std::vector<int> idx = p == 3 ? std::vector<int>{std::get<Triple>(l.value).s, std::get<Triple>(l.value).t,
                                                         std::get<Triple>(l.value).u}
                                      : std::get<Tuple>(l.value).indices;
        if (idx[idx.size() - 1] != idx[idx.size() - 2]) {
            c.face.zero_fixed.push_back(l);
            continue;
        }
        idx.pop_back();
        mb.set(l, {{assignment_label(idx), 1}});
    }
    c.map = mb.take();
    return c;
}

} // namespace

const char* elementary_name(ElementaryKind k)
{
    switch (k) {
    case ElementaryKind::BqpChain: return "bqp_chain";
    case ElementaryKind::SspVcp: return "ssp_vcp";
    case ElementaryKind::PartInPack: return "part_in_pack";
    case ElementaryKind::PackAsSsp: return "pack_as_ssp";
    case ElementaryKind::SspAsPack: return "ssp_as_pack";
    case ElementaryKind::TapAsPart: return "tap_as_part";
    case ElementaryKind::PapStep: return "pap_step";
    }
    return "?";
}

ElementaryKind parse_elementary(const std::string& name)
{
    for (auto k : {ElementaryKind::BqpChain, ElementaryKind::SspVcp, ElementaryKind::PartInPack,
                   ElementaryKind::PackAsSsp, ElementaryKind::SspAsPack, ElementaryKind::TapAsPart,
                   ElementaryKind::PapStep})
        if (name == elementary_name(k))
            return k;
    throw ValidationError("unknown elementary kind '" + name + "'");
}

ReductionCertificate cert_elementary(ElementaryKind kind, const ElementaryParams& params)
{
    switch (kind) {
    case ElementaryKind::BqpChain:
        return elementary_bqp_chain(params.n);
    case ElementaryKind::SspVcp:
        require(params.graph.has_value(), "ssp_vcp needs a graph");
        return elementary_ssp_vcp(*params.graph);
    case ElementaryKind::PartInPack:
        require(params.matrix.has_value(), "part_in_pack needs a matrix");
        return elementary_part_in_pack(*params.matrix);
    case ElementaryKind::PackAsSsp:
        require(params.matrix.has_value(), "pack_as_ssp needs a matrix");
        return elementary_pack_as_ssp(*params.matrix);
    case ElementaryKind::SspAsPack:
        require(params.graph.has_value(), "ssp_as_pack needs a graph");
        return elementary_ssp_as_pack(*params.graph);
    case ElementaryKind::TapAsPart:
        return elementary_tap_as_part(params.m);
    case ElementaryKind::PapStep:
        return elementary_pap_step(params.m, params.p);
    }
    throw ValidationError("unknown elementary kind");
}

ReductionCertificate cert_covariant_cut(int n)
{
    require(n >= 1, "covariant map needs n >= 1");
    auto c = start("covariant_cut(n=" + std::to_string(n) + ")", "covariant", FamilySpec::cut(n + 1),
                   FamilySpec::bqp(n));
    c.dims.push_back(dim_eq("CUT nodes = n+1", n + 1, c.source.n));
    MapBuilder mb(c.source, c.target);
    const Rational half(1, 2);
    for (int i = 1; i <= n; ++i)
        mb.set(xd(i), {{cut_edge(i, n + 1), 1}});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            mb.set(xo(i, j), {{cut_edge(i, n + 1), half}, {cut_edge(j, n + 1), half}, {cut_edge(i, j), -half}});
    c.map = mb.take();
    return c;
}

namespace {

std::string s_name(int i, int j) { return "s_" + std::to_string(i) + "_" + std::to_string(j); }
std::string t_name(int i, int j) { return "t_" + std::to_string(i) + "_" + std::to_string(j); }
std::string u_name(int i) { return "u_" + std::to_string(i); }
std::string ubar_name(int i) { return "ubar_" + std::to_string(i); }

} // namespace

Graph bqp_ssp_graph(int n)
{
    require(n >= 1, "bqp_to_ssp needs n >= 1");
    std::vector<std::string> nodes;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            nodes.push_back(s_name(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            nodes.push_back(t_name(i, j));
    for (int i = 1; i <= n; ++i)
        nodes.push_back(u_name(i));
    for (int i = 1; i <= n; ++i)
        nodes.push_back(ubar_name(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            edges.emplace_back(s_name(i, j), ubar_name(j));
            edges.emplace_back(t_name(i, j), u_name(j));
            edges.emplace_back(s_name(i, j), ubar_name(i));
            edges.emplace_back(t_name(i, j), ubar_name(i));
        }
    for (int i = 1; i <= n; ++i)
        edges.emplace_back(u_name(i), ubar_name(i));
    return Graph(std::move(nodes), edges);
}

ReductionCertificate cert_bqp_to_ssp(int n)
{
    Graph g = bqp_ssp_graph(n);
    auto c = start("bqp_to_ssp(n=" + std::to_string(n) + ")", "thm1", FamilySpec::bqp(n), FamilySpec::ssp(g));
    c.dims.push_back(dim_eq("SSP nodes = n(n+1)", 1LL * n * (n + 1), g.node_count()));
    c.dims.push_back(dim_eq("SSP edges = n(2n-1)", 1LL * n * (2 * n - 1), ll(g.edge_count())));
    auto idx = label_index(c.target.labels());
    std::size_t d = c.target.dim();
    // u_i + ubar_i <= 1 is valid on the whole polytope; s_ij + t_ij + ubar_i
    // <= 1 only once those are tight.
    for (int i = 1; i <= n; ++i)
        c.face.constraints.push_back(
            {over(idx, d, {{node(u_name(i)), 1}, {node(ubar_name(i)), 1}}, Relation::Le, 1), 0});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            c.face.constraints.push_back(
                {over(idx, d, {{node(s_name(i, j)), 1}, {node(t_name(i, j)), 1}, {node(ubar_name(i)), 1}},
                      Relation::Le, 1),
                 1});
    MapBuilder mb(c.source, c.target);
    for (int i = 1; i <= n; ++i) {
        mb.set(node(u_name(i)), {{xd(i), 1}});
        mb.set(node(ubar_name(i)), {{xd(i), -1}}, 1);
        for (int j = i + 1; j <= n; ++j) {
            mb.set(node(s_name(i, j)), {{xo(i, j), 1}});
            mb.set(node(t_name(i, j)), {{xd(i), 1}, {xo(i, j), -1}});
        }
    }
    c.map = mb.take();
    return c;
}

ReductionCertificate cert_ssp_to_part(const Graph& g)
{
    int k = g.node_count();
    std::vector<std::vector<int>> rows;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        rows.push_back({a, b, k + static_cast<int>(e)});
    }
    std::size_t d = static_cast<std::size_t>(k) + g.edge_count();
    auto c = start("ssp_to_part(" + graph_tag(g) + ")", "thm4", FamilySpec::ssp(g),
                   FamilySpec::part(IncidenceMatrix(d, std::move(rows))));
    c.dims.push_back(dim_eq("PART d = k+|E|", k + ll(g.edge_count()), ll(c.target.dim())));
    c.dims.push_back(dim_le("PART d <= k(k+1)/2", 1LL * k * (k + 1) / 2, ll(c.target.dim())));
    MapBuilder mb(c.source, c.target);
    const auto& names = g.nodes();
    for (int v = 0; v < k; ++v)
        mb.set(col(v + 1), {{node(names[static_cast<std::size_t>(v)]), 1}});
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        mb.set(col(k + static_cast<int>(e) + 1),
               {{node(names[static_cast<std::size_t>(a)]), -1}, {node(names[static_cast<std::size_t>(b)]), -1}}, 1);
    }
    c.map = mb.take();
    return c;
}

ReductionCertificate cert_ssp_to_dcp(const Graph& g)
{
    require(g.edge_count() > 0, "ssp_to_dcp needs at least one edge");
    int k = g.node_count();
    int u0 = k + static_cast<int>(g.edge_count());
    std::vector<std::vector<int>> rows;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        rows.push_back({a, b, k + static_cast<int>(e), u0});
    }
    std::size_t d = static_cast<std::size_t>(u0) + 1;
    auto c = start("ssp_to_dcp(" + graph_tag(g) + ")", "thm6", FamilySpec::ssp(g),
                   FamilySpec::dcp(IncidenceMatrix(d, std::move(rows))));
    c.dims.push_back(dim_eq("DCP d = k+|E|+1", k + ll(g.edge_count()) + 1, ll(c.target.dim())));
    c.face.one_fixed.push_back(col(u0 + 1));
    MapBuilder mb(c.source, c.target);
    const auto& names = g.nodes();
    for (int v = 0; v < k; ++v)
        mb.set(col(v + 1), {{node(names[static_cast<std::size_t>(v)]), 1}});
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        mb.set(col(k + static_cast<int>(e) + 1),
               {{node(names[static_cast<std::size_t>(a)]), -1}, {node(names[static_cast<std::size_t>(b)]), -1}}, 1);
    }
    mb.set(col(u0 + 1), {}, 1);
    c.map = mb.take();
    return c;
}

ReductionCertificate cert_ssp_to_tap(const Graph& g)
{
    const auto& names = g.nodes();
    auto name_of = [&](int v) { return names[static_cast<std::size_t>(v)]; };
    auto edge_name = [&](std::size_t e) {
        return "e(" + name_of(g.edges()[e].first) + "," + name_of(g.edges()[e].second) + ")";
    };

    // ground set, 1-based positions
    std::vector<std::string> ground;
    std::vector<int> pos_v(names.size(), 0), pos_vbar(names.size(), 0);
    std::vector<int> pos_e(g.edge_count(), 0);
    std::map<std::pair<std::size_t, int>, int> pos_ev;
    auto isolated = g.isolated();
    for (int v : isolated) {
        ground.push_back(name_of(v));
        pos_v[static_cast<std::size_t>(v)] = static_cast<int>(ground.size());
        ground.push_back("~" + name_of(v));
        pos_vbar[static_cast<std::size_t>(v)] = static_cast<int>(ground.size());
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        ground.push_back(edge_name(e));
        pos_e[e] = static_cast<int>(ground.size());
        for (int v : {g.edges()[e].first, g.edges()[e].second}) {
            ground.push_back(edge_name(e) + ":" + name_of(v));
            pos_ev[{e, v}] = static_cast<int>(ground.size());
        }
    }
    int m = static_cast<int>(ground.size());
    require(m > 0, "ssp_to_tap needs a nonempty graph");

    auto c = start("ssp_to_tap(" + graph_tag(g) + ")", "thm9", FamilySpec::ssp(g),
                   FamilySpec::assignment(m, 3, ground));
    c.dims.push_back(
        dim_eq("TAP m = 3|E|+2|W|", 3 * ll(g.edge_count()) + 2 * ll(isolated.size()), m));

    // allowed triples with the source expression of each
    struct Allowed {
        Triple triple;
        std::vector<Term> terms;
        Rational constant;
    };
    std::vector<Allowed> q;
    auto y = [&](int v) { return node(name_of(v)); };
    for (int v : isolated) {
        int a = pos_v[static_cast<std::size_t>(v)], b = pos_vbar[static_cast<std::size_t>(v)];
        q.push_back({{a, a, a}, {{y(v), -1}}, 1});
        q.push_back({{b, b, b}, {{y(v), -1}}, 1});
        q.push_back({{a, a, b}, {{y(v), 1}}, 0});
        q.push_back({{b, b, a}, {{y(v), 1}}, 0});
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [v1, v2] = g.edges()[e];
        int pe = pos_e[e];
        q.push_back({{pe, pe, pe}, {{y(v1), -1}, {y(v2), -1}}, 1});
        for (int v : {v1, v2}) {
            int pv = pos_ev[{e, v}];
            q.push_back({{pv, pv, pv}, {{y(v), -1}}, 1});
            q.push_back({{pe, pe, pv}, {{y(v), 1}}, 0});
        }
    }
    for (int v = 0; v < g.node_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t qi = 0; qi < inc.size(); ++qi) {
            std::size_t e = inc[qi], next = inc[(qi + 1) % inc.size()];
            q.push_back({{pos_ev[{e, v}], pos_ev[{next, v}], pos_e[e]}, {{y(v), 1}}, 0});
        }
    }
    c.dims.push_back(dim_eq("allowed triples = 7|E|+4|W|", 7 * ll(g.edge_count()) + 4 * ll(isolated.size()),
                            ll(q.size())));

    std::vector<std::uint8_t> allowed(static_cast<std::size_t>(m) * m * m, 0);
    auto flat = [m](const Triple& t) {
        return (static_cast<std::size_t>(t.s - 1) * m + static_cast<std::size_t>(t.t - 1)) * m +
               static_cast<std::size_t>(t.u - 1);
    };
    for (const auto& a : q)
        allowed[flat(a.triple)] = 1;
    auto labels = c.target.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!allowed[i])
            c.face.zero_fixed.push_back(labels[i]);

    MapBuilder mb(c.source, c.target);
    for (const auto& a : q)
        mb.set(CoordLabel{a.triple}, a.terms, a.constant);
    c.map = mb.take();
    return c;
}

ReductionCertificate cert_bqp_to_qlop(int n)
{
    require(n >= 1, "bqp_to_qlop needs n >= 1");
    int m = 2 * n;
    auto c = start("bqp_to_qlop(n=" + std::to_string(n) + ")", "thm11", FamilySpec::bqp(n), FamilySpec::qlop(m));
    c.dims.push_back(dim_eq("QLOP m = 2n", 2LL * n, c.target.m));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (!(i % 2 == 1 && j == i + 1))
                c.face.zero_fixed.push_back(ord(i, j));
    MapBuilder mb(c.source, c.target);
    for (int i = 1; i <= n; ++i) {
        mb.set(ord(2 * i - 1, 2 * i), {{xd(i), 1}});
        for (int j = i + 1; j <= n; ++j)
            mb.set(quad(ord(2 * i - 1, 2 * i), ord(2 * j - 1, 2 * j)), {{xo(i, j), 1}});
    }
    c.map = mb.take();
    return c;
}

ReductionCertificate cert_qlop_to_bqp(int m, const Guard& guard)
{
    require(m >= 2, "qlop_to_bqp needs m >= 2");
    int n = m * (m - 1) / 2;
    auto c = start("qlop_to_bqp(m=" + std::to_string(m) + ")", "thm10", FamilySpec::qlop(m), FamilySpec::bqp(n));
    c.dims.push_back(dim_eq("BQP n = m(m-1)/2", 1LL * m * (m - 1) / 2, n));
    std::map<std::pair<int, int>, int> pos;
    for (int i = 1, p = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            pos[{i, j}] = p++;
    auto idx = label_index(c.target.labels());
    std::size_t d = c.target.dim();
    // (a + b - c)(a + b - c - 1) >= 0 with a = y_ij, b = y_jk, c = y_ik,
    // expanded on 0/1 points and halved
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) {
                int a = pos[{i, j}], b = pos[{j, k}], cc = pos[{i, k}];
                c.face.constraints.push_back(
                    {over(idx, d, {{xb(a, b), 1}, {xb(a, cc), -1}, {xb(b, cc), -1}, {xd(cc), 1}}, Relation::Ge, 0),
                     0});
            }
    precheck_validity(c.face.constraints, enumerate_bqp(n, guard), "qlop_to_bqp");
    MapBuilder mb(c.source, c.target);
    for (const auto& [ij, p] : pos) {
        mb.set(xd(p), {{ord(ij.first, ij.second), 1}});
        for (const auto& [kl, r] : pos)
            if (p < r)
                mb.set(xo(p, r), {{quad(ord(ij.first, ij.second), ord(kl.first, kl.second)), 1}});
    }
    c.map = mb.take();
    return c;
}

ReductionCertificate cert_bqp_to_qap(int n)
{
    require(n >= 1, "bqp_to_qap needs n >= 1");
    int m = 2 * n;
    auto c = start("bqp_to_qap(n=" + std::to_string(n) + ")", "thm13", FamilySpec::bqp(n), FamilySpec::qap(m));
    c.dims.push_back(dim_eq("QAP m = 2n", 2LL * n, c.target.m));
    auto in_j = [](int i, int j) { return i == j || (i % 2 == 1 && j == i + 1) || (j % 2 == 1 && i == j + 1); };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (!in_j(i, j))
                c.face.zero_fixed.push_back(cell(i, j));
    MapBuilder mb(c.source, c.target);
    for (int i = 1; i <= n; ++i) {
        mb.set(cell(2 * i - 1, 2 * i), {{xd(i), 1}});
        mb.set(cell(2 * i, 2 * i - 1), {{xd(i), 1}});
        mb.set(cell(2 * i - 1, 2 * i - 1), {{xd(i), -1}}, 1);
        mb.set(cell(2 * i, 2 * i), {{xd(i), -1}}, 1);
    }
    // every product of two free cells, in terms of x
    struct Free {
        CoordLabel label;
        int block;
        bool swapped;
    };
    std::vector<Free> cells;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (in_j(i, j))
                cells.push_back({cell(i, j), (i + 1) / 2, i != j});
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            const auto& p = cells[a];
            const auto& r = cells[b];
            auto target = quad(p.label, r.label);
            if (p.block == r.block) {
                // both diagonal or both swapped: equals that factor; mixed: 0
                if (p.swapped == r.swapped)
                    mb.set(target, p.swapped ? std::vector<Term>{{xd(p.block), 1}} : std::vector<Term>{{xd(p.block), -1}},
                           p.swapped ? 0 : 1);
                continue;
            }
            // factors are s or 1 - s with s_i = x_ii and s_i s_j = x_ij
            int i = p.block, j = r.block;
            Rational ci = p.swapped ? 1 : -1, cj = r.swapped ? 1 : -1;
            std::vector<Term> terms{{xo(i, j), ci * cj}};
            if (!p.swapped)
                terms.push_back({xd(j), cj});
            if (!r.swapped)
                terms.push_back({xd(i), ci});
            Rational constant = (!p.swapped && !r.swapped) ? 1 : 0;
            mb.set(target, terms, constant);
        }
    c.map = mb.take();
    return c;
}

std::pair<ReductionCertificate, ReductionCertificate> cert_qap_to_bqp_chain(int m, const Guard& guard)
{
    require(m >= 2, "qap_to_bqp_chain needs m >= 2");
    auto first = start("qap_to_qsap(m=" + std::to_string(m) + ")", "thm12", FamilySpec::qap(m), FamilySpec::qsap(m));
    {
        // column constraints become products of two cells in one column
        for (int j = 1; j <= m; ++j)
            for (int i = 1; i <= m; ++i)
                for (int k = i + 1; k <= m; ++k)
                    first.face.zero_fixed.push_back(quad(cell(i, j), cell(k, j)));
        MapBuilder mb(first.source, first.target);
        for (const auto& l : first.source.labels())
            mb.set(l, {{l, 1}});
        first.map = mb.take();
    }

    int n = m * m;
    auto second = start("qsap_to_bqp(m=" + std::to_string(m) + ")", "thm12", FamilySpec::qsap(m), FamilySpec::bqp(n));
    second.dims.push_back(dim_eq("BQP n = m^2", 1LL * m * m, n));
    auto pos = [m](int i, int j) { return (i - 1) * m + j; };
    auto idx = label_index(second.target.labels());
    std::size_t d = second.target.dim();
    // (sum_j y_ij - 1)^2 >= 0 expanded on 0/1 points
    for (int i = 1; i <= m; ++i) {
        std::vector<Term> terms;
        for (int j = 1; j <= m; ++j) {
            terms.push_back({xd(pos(i, j)), -1});
            for (int l = j + 1; l <= m; ++l)
                terms.push_back({xo(pos(i, j), pos(i, l)), 2});
        }
        second.face.constraints.push_back({over(idx, d, terms, Relation::Ge, -1), 0});
    }
    precheck_validity(second.face.constraints, enumerate_bqp(n, guard), "qsap_to_bqp");
    MapBuilder mb(second.source, second.target);
    std::vector<std::pair<CoordLabel, int>> cells;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            cells.emplace_back(cell(i, j), pos(i, j));
    for (std::size_t a = 0; a < cells.size(); ++a) {
        mb.set(xd(cells[a].second), {{cells[a].first, 1}});
        for (std::size_t b = a + 1; b < cells.size(); ++b)
            mb.set(xo(cells[a].second, cells[b].second), {{quad(cells[a].first, cells[b].first), 1}});
    }
    second.map = mb.take();
    return {std::move(first), std::move(second)};
}

namespace {

/// Column layout shared by the direct PART and DCP builders: s_ij, t_ij,
/// u_i, ubar_i, then one slack for each s_ij + ubar_j <= 1 and each
/// t_ij + u_j <= 1.
struct DirectLayout {
    int n;
    std::vector<std::pair<int, int>> pairs;

    explicit DirectLayout(int n_) : n(n_)
    {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                pairs.emplace_back(i, j);
    }
    int np() const { return static_cast<int>(pairs.size()); }
    int s(int p) const { return p; }
    int t(int p) const { return np() + p; }
    int u(int i) const { return 2 * np() + i - 1; }
    int ubar(int i) const { return 2 * np() + n + i - 1; }
    int sigma(int p) const { return 2 * np() + 2 * n + p; }
    int tau(int p) const { return 3 * np() + 2 * n + p; }
    int columns() const { return 4 * np() + 2 * n; }

    std::vector<std::vector<int>> rows() const
    {
        std::vector<std::vector<int>> out;
        for (int i = 1; i <= n; ++i)
            out.push_back({u(i), ubar(i)});
        for (int p = 0; p < np(); ++p)
            out.push_back({s(p), t(p), ubar(pairs[static_cast<std::size_t>(p)].first)});
        for (int p = 0; p < np(); ++p)
            out.push_back({s(p), ubar(pairs[static_cast<std::size_t>(p)].second), sigma(p)});
        for (int p = 0; p < np(); ++p)
            out.push_back({t(p), u(pairs[static_cast<std::size_t>(p)].second), tau(p)});
        return out;
    }

    void fill(MapBuilder& mb) const
    {
        for (int i = 1; i <= n; ++i) {
            mb.set(col(u(i) + 1), {{xd(i), 1}});
            mb.set(col(ubar(i) + 1), {{xd(i), -1}}, 1);
        }
        for (int p = 0; p < np(); ++p) {
            auto [i, j] = pairs[static_cast<std::size_t>(p)];
            mb.set(col(s(p) + 1), {{xo(i, j), 1}});
            mb.set(col(t(p) + 1), {{xd(i), 1}, {xo(i, j), -1}});
            mb.set(col(sigma(p) + 1), {{xd(j), 1}, {xo(i, j), -1}});
            mb.set(col(tau(p) + 1), {{xd(i), -1}, {xd(j), -1}, {xo(i, j), 1}}, 1);
        }
    }
};

} // namespace

ReductionCertificate cert_bqp_to_part_direct(int n)
{
    require(n >= 1, "bqp_to_part needs n >= 1");
    DirectLayout lay(n);
    auto c = start("bqp_to_part(n=" + std::to_string(n) + ")", "resume:part", FamilySpec::bqp(n),
                   FamilySpec::part(IncidenceMatrix(static_cast<std::size_t>(lay.columns()), lay.rows())));
    c.dims.push_back(dim_le("PART d <= 2n^2", 2LL * n * n, ll(c.target.dim())));
    MapBuilder mb(c.source, c.target);
    lay.fill(mb);
    c.map = mb.take();
    return c;
}

ReductionCertificate cert_bqp_to_dcp_direct(int n)
{
    require(n >= 1, "bqp_to_dcp needs n >= 1");
    DirectLayout lay(n);
    int u0 = lay.columns(), w = u0 + 1;
    auto rows = lay.rows();
    for (auto& r : rows) {
        r.push_back(u0);
        if (r.size() == 3)
            r.push_back(w);
    }
    auto c = start("bqp_to_dcp(n=" + std::to_string(n) + ")", "resume:dcp", FamilySpec::bqp(n),
                   FamilySpec::dcp(IncidenceMatrix(static_cast<std::size_t>(w) + 1, std::move(rows))));
    long long d = ll(c.target.dim());
    c.dims.push_back(dim_le("DCP d <= 2n^2+2", 2LL * n * n + 2, d));
    if (d > 2LL * n * n + 1)
        c.flags.push_back("DCP d = " + std::to_string(d) + " exceeds the stated 2n^2+1 = " +
                          std::to_string(2LL * n * n + 1));
    c.face.one_fixed.push_back(col(u0 + 1));
    c.face.zero_fixed.push_back(col(w + 1));
    MapBuilder mb(c.source, c.target);
    lay.fill(mb);
    mb.set(col(u0 + 1), {}, 1);
    c.map = mb.take();
    return c;
}

namespace {

/// Reads c(x) >= r or c(x) <= r with one nonzero coefficient as a bound
/// x_j >= 0 or x_j <= 1 when it is one; such constraints are fixings.
std::optional<std::pair<std::size_t, int>> as_fixing(const LinConstraint& c)
{
    std::optional<std::size_t> at;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j)
        if (sgn(c.coeffs[j]) != 0) {
            if (at)
                return std::nullopt;
            at = j;
        }
    if (!at || c.relation == Relation::Eq)
        return std::nullopt;
    Rational a = c.coeffs[*at];
    Rational bound = c.rhs / a;
    bool lower = (c.relation == Relation::Ge) == (sgn(a) > 0);
    if (lower && bound == 0)
        return std::make_pair(*at, 0);
    if (!lower && bound == 1)
        return std::make_pair(*at, 1);
    return std::nullopt;
}

} // namespace

ReductionCertificate compose_certs(const ReductionCertificate& ab, const ReductionCertificate& bc, const Guard& guard)
{
    if (!ab.target.same_instance(bc.source))
        throw ValidationError("compose: target " + ab.target.describe() + " differs from source " +
                              bc.source.describe());
    ReductionCertificate c;
    c.id = ab.id + " ; " + bc.id;
    c.provenance = ab.provenance + " ; " + bc.provenance;
    c.source = ab.source;
    c.target = bc.target;
    c.map = ab.map.then(bc.map);
    c.claimed_target_dim = bc.claimed_target_dim;
    c.face = bc.face;
    c.dims = ab.dims;
    c.dims.insert(c.dims.end(), bc.dims.begin(), bc.dims.end());
    c.flags = ab.flags;
    c.flags.insert(c.flags.end(), bc.flags.begin(), bc.flags.end());
    if (ab.face.whole_polytope())
        return c;

    // Left inverse of bc.map on its face, to pull ab's face conditions
    // forward into bc's target coordinates.
    VertexSet mid = enumerate(bc.source, guard);
    std::vector<Point01> images;
    for (const auto& v : mid.vertices()) {
        RatVector img = bc.map.apply(v);
        Point01 p(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (img[i] != 0 && img[i] != 1)
                throw ConsistencyError("compose: " + bc.id + " maps a vertex off the 0/1 points");
            p[i] = img[i] == 1 ? 1 : 0;
        }
        images.push_back(std::move(p));
    }
    auto inverse = find_affine_map(std::span<const Point01>(images), std::span<const Point01>(mid.vertices()));
    if (!inverse)
        throw ConsistencyError("compose: " + bc.id + " is not invertible on its image");

    auto labels = c.target.labels();
    Fixing present = c.face.fixing(labels);
    int shift = bc.face.max_level() + 1;
    auto pull = [&](const RatVector& coeffs, Relation rel, const Rational& rhs, int level) {
        LinConstraint out{RatVector(labels.size()), rel, rhs};
        const auto& m = inverse->matrix();
        for (std::size_t r = 0; r < coeffs.size(); ++r) {
            if (sgn(coeffs[r]) == 0)
                continue;
            out.rhs -= coeffs[r] * inverse->offset()[r];
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (sgn(m.at(r, j)) != 0)
                    out.coeffs[j] += coeffs[r] * m.at(r, j);
        }
        if (auto f = as_fixing(out)) {
            auto [j, value] = *f;
            if (present[j] < 0) {
                present[j] = static_cast<std::int8_t>(value);
                (value == 0 ? c.face.zero_fixed : c.face.one_fixed).push_back(labels[j]);
            } else if (present[j] != value) {
                throw ConsistencyError("compose: contradictory fixing of " + labels[j].str());
            }
            return;
        }
        c.face.constraints.push_back({std::move(out), level + shift});
    };

    auto mid_idx = label_index(mid.labels());
    for (const auto& l : ab.face.zero_fixed) {
        RatVector e(mid.dim());
        e[mid_idx.at(l.str())] = 1;
        pull(e, Relation::Ge, 0, 0);
    }
    for (const auto& l : ab.face.one_fixed) {
        RatVector e(mid.dim());
        e[mid_idx.at(l.str())] = 1;
        pull(e, Relation::Le, 1, 0);
    }
    for (const auto& fc : ab.face.constraints)
        pull(fc.constraint.coeffs, fc.constraint.relation, fc.constraint.rhs, fc.level);
    return c;
}

std::vector<SuiteItem> resume_suite(int n, const Guard& guard)
{
    require(n >= 1, "resume suite needs n >= 1");
    long long nn = n;
    std::vector<ReductionCertificate> certs;

    auto ssp = cert_bqp_to_ssp(n);
    const Graph g = *ssp.target.graph;
    {
        auto pack = compose_certs(ssp, cert_elementary(ElementaryKind::SspAsPack, {0, 0, 0, g, std::nullopt}), guard);
        pack.id = "resume:pack(n=" + std::to_string(n) + ")";
        pack.dims = {dim_eq("SSP k = n(n+1)", nn * (nn + 1), g.node_count()),
                     dim_eq("PACK d = n(n+1)", nn * (nn + 1), ll(pack.target.dim()))};
        certs.push_back(std::move(pack));
    }
    {
        auto part = cert_bqp_to_part_direct(n);
        part.id = "resume:part(n=" + std::to_string(n) + ")";
        certs.push_back(std::move(part));
    }
    {
        auto dcp = cert_bqp_to_dcp_direct(n);
        dcp.id = "resume:dcp(n=" + std::to_string(n) + ")";
        certs.push_back(std::move(dcp));
    }
    {
        auto tap = compose_certs(ssp, cert_ssp_to_tap(g), guard);
        tap.id = "resume:tap(n=" + std::to_string(n) + ")";
        tap.dims = {dim_le("TAP m <= 6n^2+3n", 6 * nn * nn + 3 * nn, tap.target.m)};
        certs.push_back(std::move(tap));
    }
    {
        auto qlop = cert_bqp_to_qlop(n);
        qlop.id = "resume:qlop(n=" + std::to_string(n) + ")";
        certs.push_back(std::move(qlop));
    }
    {
        auto qap = cert_bqp_to_qap(n);
        qap.id = "resume:qap(n=" + std::to_string(n) + ")";
        certs.push_back(std::move(qap));
    }

    std::vector<SuiteItem> out;
    for (auto& c : certs) {
        auto rep = check_certificate(c, guard);
        out.push_back({std::move(c), std::move(rep)});
    }
    return out;
}

} // namespace polyred
