#include "polyred/certificate.hpp"

#include "polyred/errors.hpp"

#include <algorithm>

namespace polyred {

int FaceSpec::max_level() const
{
    int level = (zero_fixed.empty() && one_fixed.empty()) ? -1 : 0;
    for (const auto& c : constraints)
        level = std::max(level, c.level);
    return level;
}

Fixing FaceSpec::fixing(const std::vector<CoordLabel>& target_labels) const
{
    auto index = label_index(target_labels);
    Fixing fix(target_labels.size(), -1);
    auto mark = [&](const std::vector<CoordLabel>& list, std::int8_t v) {
        for (const auto& l : list) {
            auto it = index.find(l.str());
            if (it == index.end())
                throw ValidationError("face fixes unknown coordinate " + l.str());
            if (fix[it->second] >= 0 && fix[it->second] != v)
                throw ValidationError("coordinate " + l.str() + " fixed to both 0 and 1");
            fix[it->second] = v;
        }
    };
    mark(zero_fixed, 0);
    mark(one_fixed, 1);
    return fix;
}

VertexSet materialize_face(const FamilySpec& target, const FaceSpec& face, const Guard& guard)
{
    auto base = face_restricted_enumerate(target, face.fixing(target.labels()), guard);
    std::vector<Point01> kept;
    for (const auto& v : base.vertices())
        if (std::all_of(face.constraints.begin(), face.constraints.end(),
                        [&](const FaceConstraint& c) { return c.constraint.tight_at(v); }))
            kept.push_back(v);
    return VertexSet(target, base.labels(), std::move(kept));
}

ReductionCertificate identity_cert(const FamilySpec& spec)
{
    ReductionCertificate c;
    c.id = "identity:" + spec.describe();
    c.provenance = "identity";
    c.source = spec;
    c.target = spec;
    c.map = AffineMap::identity(spec.dim());
    c.claimed_target_dim = static_cast<long long>(spec.dim());
    return c;
}

} // namespace polyred
