#pragma once

#include "polyred/certificate.hpp"
#include "polyred/enumerate.hpp"
#include "polyred/verifier.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyred {

enum class ElementaryKind {
    BqpChain,   ///< BQP_n as the x(n+1,n+1) = 0 face of BQP_{n+1}
    SspVcp,     ///< SSP(G) onto VCP(G) by complementation
    PartInPack, ///< PART(A) as the face of PACK(A) where every row is tight
    PackAsSsp,  ///< PACK(A) equals SSP of the column conflict graph
    SspAsPack,  ///< SSP(G) equals PACK of the edge-node incidence matrix
    TapAsPart,  ///< TAP_m is PART of its 3m x m^3 constraint matrix
    PapStep,    ///< (p-1)-index assignment as a face of the p-index one
};

const char* elementary_name(ElementaryKind k);
/// Throws ValidationError for an unknown name.
ElementaryKind parse_elementary(const std::string& name);

struct ElementaryParams {
    int n = 0;
    int m = 0;
    int p = 0;
    std::optional<Graph> graph;
    std::optional<IncidenceMatrix> matrix;
};

/// Throws ValidationError when the parameters do not fit the kind.
ReductionCertificate cert_elementary(ElementaryKind kind, const ElementaryParams& params);

/// CUT_{n+1} onto BQP_n, whole polytope.
ReductionCertificate cert_covariant_cut(int n);
/// BQP_n into the stable set polytope of an n(n+1)-node graph.
ReductionCertificate cert_bqp_to_ssp(int n);
/// The graph used by cert_bqp_to_ssp.
Graph bqp_ssp_graph(int n);
/// SSP(G) onto PART with one slack column per edge.
ReductionCertificate cert_ssp_to_part(const Graph& g);
/// SSP(G) into DCP with one slack per edge and a shared column fixed to 1.
/// Throws ValidationError on an edgeless graph.
ReductionCertificate cert_ssp_to_dcp(const Graph& g);
/// SSP(G) into TAP_m, m = 3|E| + 2|W|, on the face of an allowed triple set.
ReductionCertificate cert_ssp_to_tap(const Graph& g);
/// BQP_n into QLOP_{2n}.
ReductionCertificate cert_bqp_to_qlop(int n);
/// QLOP_m as a face of BQP_{m(m-1)/2}. Throws ConsistencyError if a face
/// equality is not valid on the target.
ReductionCertificate cert_qlop_to_bqp(int m, const Guard& guard = {});
/// BQP_n into QAP_{2n}.
ReductionCertificate cert_bqp_to_qap(int n);
/// QAP_m as a face of QSAP_m, and QSAP_m as a face of BQP_{m^2}. Throws
/// ConsistencyError if a face equality is not valid on its target.
std::pair<ReductionCertificate, ReductionCertificate> cert_qap_to_bqp_chain(int m, const Guard& guard = {});
/// BQP_n onto PART with 2n^2 columns.
ReductionCertificate cert_bqp_to_part_direct(int n);
/// BQP_n into DCP with 2n^2 + 2 columns.
ReductionCertificate cert_bqp_to_dcp_direct(int n);

/// Certificate for source(ab) into target(bc). Throws ValidationError when
/// the target of ab and the source of bc are different instances.
ReductionCertificate compose_certs(const ReductionCertificate& ab, const ReductionCertificate& bc,
                                   const Guard& guard = {});

struct SuiteItem {
    ReductionCertificate certificate;
    VerificationReport report;
};

/// Certificates from BQP_n into PACK (through SSP), PART, DCP, TAP (through
/// SSP), QLOP and QAP, each checked, with dimension assertions attached.
std::vector<SuiteItem> resume_suite(int n, const Guard& guard = {});

} // namespace polyred
