#include "polyred/cli.hpp"

#include "polyred/errors.hpp"
#include "polyred/reductions.hpp"
#include "polyred/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>

namespace polyred {

Graph load_graph(const std::string& spec)
{
    if (spec.size() >= 2 && std::string("KPCE").find(spec[0]) != std::string::npos) {
        int k = 0;
        auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), k);
        if (ec == std::errc() && ptr == spec.data() + spec.size() && k >= 1) {
            switch (spec[0]) {
            case 'K': return Graph::complete(k);
            case 'P': return Graph::path(k);
            case 'C':
                if (k < 3)
                    throw UsageError("cycle needs at least 3 nodes");
                return Graph::cycle(k);
            default: return Graph::edgeless(k);
            }
        }
    }
    FamilySpec inst = instance_from_json(read_json_file(spec));
    if (!inst.graph)
        throw ValidationError(spec + ": instance has no graph");
    return *inst.graph;
}

namespace {

struct Options {
    std::string output;
    std::uint64_t guard = 0;

    // gen
    std::string family;
    bool vertices = false;
    std::string instance;

    // shared sizes
    int n = 0, m = 0, p = 0;
    std::string graph;

    // reduce
    std::string theorem;
    std::string kind;
    int step = 0;

    // verify
    std::string cert;
    std::string path = "auto";

    // scan-nonface
    int max_nodes = 5;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err)
    {
        guard_ = Guard::from_env();
        if (o_.guard > 0)
            guard_.max_states = o_.guard;
    }

    int gen()
    {
        FamilySpec spec = o_.instance.empty() ? family_from_flags() : instance_from_json(read_json_file(o_.instance));
        if (o_.vertices) {
            VertexSet vs = enumerate(spec, guard_);
            emit(vertices_to_json(vs));
            err_ << spec.describe() << ": " << vs.size() << " vertices in dimension " << vs.dim() << "\n";
        } else {
            emit(instance_to_json(spec));
        }
        return ExitVerified;
    }

    int reduce()
    {
        ReductionCertificate c = build();
        emit(certificate_to_json(c));
        err_ << c.id << ": " << c.source.describe() << " -> " << c.target.describe() << "\n";
        return ExitVerified;
    }

    int verify()
    {
        if (o_.cert.empty())
            throw UsageError("verify needs a certificate file");
        auto cert = certificate_from_json(read_json_file(o_.cert));
        TargetPath path = TargetPath::Auto;
        if (o_.path == "full")
            path = TargetPath::Full;
        else if (o_.path == "restricted")
            path = TargetPath::Restricted;
        return finish({check_certificate(cert, guard_, path)});
    }

    int scan()
    {
        auto scan = octahedron_nonface_scan(o_.max_nodes, guard_);
        return finish({to_report(scan)});
    }

    int neighborly()
    {
        FamilySpec spec = family_from_flags();
        VertexSet vs = enumerate(spec, guard_);
        VerificationReport rep;
        rep.id = "neighborly:" + spec.describe();
        std::size_t pairs = vs.size() * (vs.size() - 1) / 2;
        auto bad = find_nonadjacent_pair(vs);
        std::string detail = std::to_string(pairs) + " pairs checked";
        if (bad) {
            std::string a, b;
            for (auto x : vs.vertices()[bad->first])
                a += x ? '1' : '0';
            for (auto x : vs.vertices()[bad->second])
                b += x ? '1' : '0';
            detail = "vertices " + a + " and " + b + " are not adjacent";
        }
        rep.checks.push_back({"two_neighborly", !bad, detail});
        rep.status = bad ? Status::Failed : Status::Verified;
        return finish({rep});
    }

    int suite()
    {
        int n = o_.n > 0 ? o_.n : 2;
        std::vector<VerificationReport> reps;
        for (auto& item : resume_suite(n, guard_))
            reps.push_back(std::move(item.report));
        return finish(reps);
    }

private:
    FamilySpec family_from_flags() const
    {
        if (o_.family.empty())
            throw UsageError("--family is required");
        Family f = parse_family(o_.family);
        switch (f) {
        case Family::Cube: return FamilySpec::cube(o_.n);
        case Family::Bqp: return FamilySpec::bqp(o_.n);
        case Family::Cut: return FamilySpec::cut(o_.n);
        case Family::Ssp: return FamilySpec::ssp(need_graph());
        case Family::Vcp: return FamilySpec::vcp(need_graph());
        case Family::Assignment: return FamilySpec::assignment(o_.m, o_.p > 0 ? o_.p : 3);
        case Family::Lop: return FamilySpec::lop(o_.m);
        case Family::Qlop: return FamilySpec::qlop(o_.m);
        case Family::Qap: return FamilySpec::qap(o_.m);
        case Family::Qsap: return FamilySpec::qsap(o_.m);
        default: break;
        }
        throw UsageError("family " + o_.family + " needs --instance FILE");
    }

    Graph need_graph() const
    {
        if (o_.graph.empty())
            throw UsageError("--graph is required");
        return load_graph(o_.graph);
    }

    ReductionCertificate build() const
    {
        const auto& t = o_.theorem;
        if (t == "thm1")
            return cert_bqp_to_ssp(o_.n);
        if (t == "thm4")
            return cert_ssp_to_part(need_graph());
        if (t == "thm6")
            return cert_ssp_to_dcp(need_graph());
        if (t == "thm9")
            return cert_ssp_to_tap(need_graph());
        if (t == "thm10")
            return cert_qlop_to_bqp(o_.m, guard_);
        if (t == "thm11")
            return cert_bqp_to_qlop(o_.n);
        if (t == "thm12") {
            if (o_.step != 1 && o_.step != 2)
                throw UsageError("thm12 needs --step 1 (QAP into QSAP) or --step 2 (QSAP into BQP)");
            auto chain = cert_qap_to_bqp_chain(o_.m, guard_);
            return o_.step == 1 ? chain.first : chain.second;
        }
        if (t == "thm13")
            return cert_bqp_to_qap(o_.n);
        if (t == "covariant")
            return cert_covariant_cut(o_.n);
        if (t == "elementary") {
            if (o_.kind.empty())
                throw UsageError("elementary needs --kind");
            ElementaryParams params{o_.n, o_.m, o_.p, std::nullopt, std::nullopt};
            if (!o_.graph.empty())
                params.graph = load_graph(o_.graph);
            if (!o_.instance.empty()) {
                auto inst = instance_from_json(read_json_file(o_.instance));
                params.matrix = inst.matrix;
                if (inst.graph)
                    params.graph = inst.graph;
            }
            return cert_elementary(parse_elementary(o_.kind), params);
        }
        throw UsageError("unknown theorem '" + t + "'");
    }

    void emit(const Json& j)
    {
        std::string text = dump(j);
        if (o_.output.empty())
            out_ << text;
        else
            write_text_file(o_.output, text);
    }

    int finish(const std::vector<VerificationReport>& reps)
    {
        emit(reports_to_json(reps));
        bool failed = false, flagged = false;
        for (const auto& r : reps) {
            err_ << r.id << ": " << status_name(r.status);
            if (const Check* c = r.first_failure())
                err_ << " (" << c->name << ": " << c->detail << ")";
            for (const auto& f : r.flags)
                err_ << " [flag: " << f << "]";
            err_ << "\n";
            failed |= r.status == Status::Failed;
            flagged |= r.status == Status::Flagged;
        }
        return failed ? ExitFailed : flagged ? ExitResource : ExitVerified;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
    Guard guard_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Affine reductions between 0/1-polytope families, checked exactly", "polyred"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-o,--output", o.output, "write the JSON document to FILE instead of stdout");
    app.add_option("--guard", o.guard, "enumeration state budget (overrides POLYRED_GUARD)");

    auto* gen = app.add_subcommand("gen", "write an instance file or its vertex dump");
    gen->add_option("--family", o.family, "family name");
    gen->add_option("--n", o.n);
    gen->add_option("--m", o.m);
    gen->add_option("--p", o.p);
    gen->add_option("--graph", o.graph, "K<k>, P<k>, C<k>, E<k> or an instance file");
    gen->add_option("--instance", o.instance, "instance file");
    gen->add_flag("--vertices", o.vertices, "enumerate and dump the vertex set");

    auto* reduce = app.add_subcommand("reduce", "build a reduction certificate");
    reduce->add_option("--theorem", o.theorem, "thm1|thm4|thm6|thm9|thm10|thm11|thm12|thm13|covariant|elementary")
        ->required();
    reduce->add_option("--n", o.n);
    reduce->add_option("--m", o.m);
    reduce->add_option("--p", o.p);
    reduce->add_option("--graph", o.graph, "K<k>, P<k>, C<k>, E<k> or an instance file");
    reduce->add_option("--instance", o.instance, "instance file holding a matrix or graph");
    reduce->add_option("--kind", o.kind, "elementary kind");
    reduce->add_option("--step", o.step, "1 or 2, for thm12");

    auto* verify = app.add_subcommand("verify", "check a certificate file and write a report");
    verify->add_option("cert,--cert", o.cert, "certificate file")->required();
    verify->add_option("--path", o.path, "auto|full|restricted")
        ->check(CLI::IsMember({"auto", "full", "restricted"}));

    auto* scan = app.add_subcommand("scan-nonface", "six-vertex non-face scan over all small graphs");
    scan->add_option("--max-nodes", o.max_nodes);

    auto* neighborly = app.add_subcommand("neighborly", "check that every vertex pair is an edge");
    neighborly->add_option("--family", o.family)->required();
    neighborly->add_option("--n", o.n);
    neighborly->add_option("--m", o.m);
    neighborly->add_option("--p", o.p);
    neighborly->add_option("--graph", o.graph);

    auto* suite = app.add_subcommand("suite", "build and check the BQP_n certificate suite");
    suite->add_option("--n", o.n);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitVerified;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return ExitUsage;
    }

    try {
        Runner r(o, out, err);
        if (*gen)
            return r.gen();
        if (*reduce)
            return r.reduce();
        if (*verify)
            return r.verify();
        if (*scan)
            return r.scan();
        if (*neighborly)
            return r.neighborly();
        return r.suite();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return ExitUsage;
    } catch (const ResourceError& e) {
        err << "resource guard: " << e.what() << "\n";
        return ExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitFailed;
    }
}

} // namespace polyred
