#include "polyred/serialize.hpp"

#include "polyred/errors.hpp"

#include <fstream>
#include <sstream>

namespace polyred {

namespace {

template <class T>
T get(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError(std::string("field '") + key + "' has the wrong type");
    }
}

Relation parse_relation(const std::string& s)
{
    if (s == "<=")
        return Relation::Le;
    if (s == "=")
        return Relation::Eq;
    if (s == ">=")
        return Relation::Ge;
    throw ValidationError("unknown relation '" + s + "'");
}

std::size_t position(const std::unordered_map<std::string, std::size_t>& idx, const std::string& label)
{
    auto it = idx.find(CoordLabel::parse(label).str());
    if (it == idx.end())
        throw ValidationError("label " + label + " is not a target coordinate");
    return it->second;
}

} // namespace

Json instance_to_json(const FamilySpec& spec)
{
    Json params = Json::object();
    switch (spec.family) {
    case Family::Cube:
    case Family::Bqp:
    case Family::Cut:
        params["n"] = spec.n;
        break;
    case Family::Ssp:
    case Family::Vcp: {
        const auto& g = *spec.graph;
        params["nodes"] = g.nodes();
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({g.nodes()[static_cast<std::size_t>(u)], g.nodes()[static_cast<std::size_t>(v)]});
        params["edges"] = std::move(edges);
        break;
    }
    case Family::Pack:
    case Family::Part:
    case Family::Dcp: {
        const auto& a = *spec.matrix;
        params["columns"] = a.cols();
        Json rows = Json::array();
        for (std::size_t r = 0; r < a.rows(); ++r) {
            Json row = Json::array();
            for (int c : a.row(r))
                row.push_back(c + 1);
            rows.push_back(std::move(row));
        }
        params["rows"] = std::move(rows);
        break;
    }
    case Family::Assignment:
        params["m"] = spec.m;
        params["p"] = spec.p;
        if (!spec.ground.empty())
            params["ground"] = spec.ground;
        break;
    case Family::Lop:
    case Family::Qlop:
    case Family::Qap:
    case Family::Qsap:
        params["m"] = spec.m;
        break;
    case Family::Explicit:
        throw UsageError("an explicit point set has no instance form");
    }
    return Json{{"family", family_name(spec.family)}, {"params", std::move(params)}};
}

FamilySpec instance_from_json(const Json& j)
{
    Family f = parse_family(get<std::string>(j, "family"));
    Json params = j.contains("params") ? j.at("params") : Json::object();
    switch (f) {
    case Family::Cube: return FamilySpec::cube(get<int>(params, "n"));
    case Family::Bqp: return FamilySpec::bqp(get<int>(params, "n"));
    case Family::Cut: return FamilySpec::cut(get<int>(params, "n"));
    case Family::Ssp:
    case Family::Vcp: {
        auto nodes = get<std::vector<std::string>>(params, "nodes");
        auto edges = params.contains("edges") ? get<std::vector<std::pair<std::string, std::string>>>(params, "edges")
                                              : std::vector<std::pair<std::string, std::string>>{};
        Graph g(std::move(nodes), edges);
        return f == Family::Ssp ? FamilySpec::ssp(std::move(g)) : FamilySpec::vcp(std::move(g));
    }
    case Family::Pack:
    case Family::Part:
    case Family::Dcp: {
        auto cols = get<std::size_t>(params, "columns");
        auto rows = get<std::vector<std::vector<int>>>(params, "rows");
        for (auto& r : rows)
            for (auto& c : r)
                --c;
        IncidenceMatrix a(cols, std::move(rows));
        if (f == Family::Pack)
            return FamilySpec::pack(std::move(a));
        return f == Family::Part ? FamilySpec::part(std::move(a)) : FamilySpec::dcp(std::move(a));
    }
    case Family::Assignment:
        return FamilySpec::assignment(get<int>(params, "m"), get<int>(params, "p"),
                                      params.contains("ground") ? get<std::vector<std::string>>(params, "ground")
                                                                : std::vector<std::string>{});
    case Family::Lop: return FamilySpec::lop(get<int>(params, "m"));
    case Family::Qlop: return FamilySpec::qlop(get<int>(params, "m"));
    case Family::Qap: return FamilySpec::qap(get<int>(params, "m"));
    case Family::Qsap: return FamilySpec::qsap(get<int>(params, "m"));
    case Family::Explicit: break;
    }
    throw ValidationError("an explicit point set has no instance form");
}

Json certificate_to_json(const ReductionCertificate& cert)
{
    auto labels = cert.target.labels();
    Json face = Json::object();
    Json zero = Json::array(), one = Json::array(), constraints = Json::array();
    for (const auto& l : cert.face.zero_fixed)
        zero.push_back(l.str());
    for (const auto& l : cert.face.one_fixed)
        one.push_back(l.str());
    for (const auto& fc : cert.face.constraints) {
        Json terms = Json::array();
        for (std::size_t i = 0; i < fc.constraint.coeffs.size(); ++i)
            if (sgn(fc.constraint.coeffs[i]) != 0)
                terms.push_back({labels.at(i).str(), to_string(fc.constraint.coeffs[i])});
        constraints.push_back({{"level", fc.level},
                               {"relation", relation_symbol(fc.constraint.relation)},
                               {"rhs", to_string(fc.constraint.rhs)},
                               {"terms", std::move(terms)}});
    }
    face["zero_fixed"] = std::move(zero);
    face["one_fixed"] = std::move(one);
    face["constraints"] = std::move(constraints);

    const auto& m = cert.map.matrix();
    Json entries = Json::array(), offset = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m.at(r, c)) != 0)
                entries.push_back({r, c, to_string(m.at(r, c))});
    for (std::size_t r = 0; r < cert.map.offset().size(); ++r)
        if (sgn(cert.map.offset()[r]) != 0)
            offset.push_back({r, to_string(cert.map.offset()[r])});

    Json dims = Json::array();
    for (const auto& d : cert.dims)
        dims.push_back({{"name", d.name},
                        {"claimed", d.claimed},
                        {"actual", d.actual},
                        {"relation", relation_symbol(d.relation)}});

    return Json{{"id", cert.id},
                {"provenance", cert.provenance},
                {"source", instance_to_json(cert.source)},
                {"target", instance_to_json(cert.target)},
                {"face", std::move(face)},
                {"map",
                 {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}, {"offset", std::move(offset)}}},
                {"claimed_target_dim", cert.claimed_target_dim},
                {"dims", std::move(dims)},
                {"flags", cert.flags}};
}

ReductionCertificate certificate_from_json(const Json& j)
{
    ReductionCertificate c;
    c.id = get<std::string>(j, "id");
    c.provenance = get<std::string>(j, "provenance");
    c.source = instance_from_json(get<Json>(j, "source"));
    c.target = instance_from_json(get<Json>(j, "target"));
    auto labels = c.target.labels();
    auto idx = label_index(labels);

    Json face = get<Json>(j, "face");
    for (const auto& l : get<std::vector<std::string>>(face, "zero_fixed"))
        c.face.zero_fixed.push_back(labels[position(idx, l)]);
    for (const auto& l : get<std::vector<std::string>>(face, "one_fixed"))
        c.face.one_fixed.push_back(labels[position(idx, l)]);
    for (const auto& fj : get<Json>(face, "constraints")) {
        FaceConstraint fc;
        fc.level = get<int>(fj, "level");
        fc.constraint.relation = parse_relation(get<std::string>(fj, "relation"));
        fc.constraint.rhs = parse_rational(get<std::string>(fj, "rhs"));
        fc.constraint.coeffs.assign(labels.size(), Rational(0));
        for (const auto& t : get<Json>(fj, "terms")) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
                throw ValidationError("face term must be [label, \"p/q\"]");
            fc.constraint.coeffs[position(idx, t[0].get<std::string>())] += parse_rational(t[1].get<std::string>());
        }
        c.face.constraints.push_back(std::move(fc));
    }

    Json map = get<Json>(j, "map");
    auto rows = get<std::size_t>(map, "rows"), cols = get<std::size_t>(map, "cols");
    RatMatrix m(rows, cols);
    RatVector off(rows);
    for (const auto& e : get<Json>(map, "entries")) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
            !e[2].is_string())
            throw ValidationError("map entry must be [row, col, \"p/q\"]");
        auto r = e[0].get<std::size_t>(), cc = e[1].get<std::size_t>();
        if (r >= rows || cc >= cols)
            throw ValidationError("map entry out of range");
        m.at(r, cc) = parse_rational(e[2].get<std::string>());
    }
    for (const auto& e : get<Json>(map, "offset")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_string())
            throw ValidationError("map offset must be [row, \"p/q\"]");
        auto r = e[0].get<std::size_t>();
        if (r >= rows)
            throw ValidationError("map offset out of range");
        off[r] = parse_rational(e[1].get<std::string>());
    }
    c.map = AffineMap(std::move(m), std::move(off));

    c.claimed_target_dim = get<long long>(j, "claimed_target_dim");
    for (const auto& d : get<Json>(j, "dims")) {
        Relation rel = parse_relation(get<std::string>(d, "relation"));
        if (rel == Relation::Ge)
            throw ValidationError("dimension assertions use '=' or '<='");
        c.dims.push_back({get<std::string>(d, "name"), get<long long>(d, "claimed"), get<long long>(d, "actual"), rel});
    }
    c.flags = get<std::vector<std::string>>(j, "flags");
    return c;
}

Json report_to_json(const VerificationReport& report)
{
    Json checks = Json::array(), dims = Json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    for (const auto& d : report.dims)
        dims.push_back({{"name", d.name},
                        {"claimed", d.claimed},
                        {"actual", d.actual},
                        {"relation", relation_symbol(d.relation)},
                        {"holds", d.holds()}});
    return Json{{"id", report.id},
                {"status", status_name(report.status)},
                {"checks", std::move(checks)},
                {"dims", std::move(dims)},
                {"flags", report.flags}};
}

Json reports_to_json(const std::vector<VerificationReport>& reports)
{
    if (reports.empty())
        throw UsageError("report list is empty");
    Json list = Json::array();
    std::size_t verified = 0, failed = 0, flagged = 0;
    for (const auto& r : reports) {
        list.push_back(report_to_json(r));
        (r.status == Status::Verified ? verified : r.status == Status::Failed ? failed : flagged)++;
    }
    return Json{{"reports", std::move(list)},
                {"summary", {{"total", reports.size()}, {"verified", verified}, {"failed", failed}, {"flagged", flagged}}}};
}

Json vertices_to_json(const VertexSet& vs)
{
    Json labels = Json::array(), verts = Json::array();
    for (const auto& l : vs.labels())
        labels.push_back(l.str());
    for (const auto& v : vs.vertices()) {
        std::string s;
        for (auto b : v)
            s += b ? '1' : '0';
        verts.push_back(std::move(s));
    }
    return Json{{"instance", instance_to_json(vs.family())},
                {"count", vs.size()},
                {"labels", std::move(labels)},
                {"vertices", std::move(verts)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
        throw IoError("cannot write " + path);
}

} // namespace polyred
