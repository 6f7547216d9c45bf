#include "k3smooth/report.hpp"

#include <sstream>

#include "json.hpp"

namespace k3smooth {

namespace {

using ojson = nlohmann::ordered_json;

std::string finish(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson gens_array(const GradedIdeal& I) {
    ojson a = ojson::array();
    for (const Polynomial& g : I.gens()) a.push_back(g.str());
    return a;
}

ojson betti_array(const BettiTable& b) {
    ojson a = ojson::array();
    for (const auto& level : b.twists) a.push_back(level);
    return a;
}

ojson cohomology_object(const CohomologyTable& t) {
    ojson o = ojson::object();
    for (const CohomRow& r : t.rows) {
        ojson h;
        h["h0"] = r.h.h0;
        h["h1"] = r.h.h1;
        h["h2"] = r.h.h2;
        h["h3"] = r.h.h3;
        o[std::to_string(r.d)] = h;
    }
    return o;
}

ojson scheme_object(const SingularScheme& s) {
    ojson o;
    o["empty"] = s.empty;
    if (!s.empty) {
        o["dimension"] = s.dimension;
        o["degree"] = to_long(s.degree);
    }
    return o;
}

ojson invariants_object(const ModuliInvariants& m) {
    ojson o;
    o["r"] = m.r;
    o["lsq"] = m.Lsq;
    o["c2"] = m.c2;
    return o;
}

}  // namespace

namespace {

ojson report_object(const QuarticReport& rep) {
    ojson o;
    o["input"] = rep.input.str();
    o["jacobian"] = gens_array(rep.jacobian);
    o["saturation"] = gens_array(rep.saturation);
    o["singular_scheme"] = scheme_object(rep.scheme);
    o["betti"] = betti_array(rep.betti);
    o["cohomology"] = cohomology_object(rep.cohomology);
    o["h1_J4"] = rep.h1_J4;
    o["verdict"] = verdict_name(rep.verdict);
    o["notes"] = rep.notes;
    return o;
}

}  // namespace

std::string quartic_report_json(const QuarticReport& rep) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    ojson body = report_object(rep);
    o.update(body);
    return finish(o);
}

std::string quartic_batch_json(const std::vector<QuarticReport>& reps) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    ojson a = ojson::array();
    for (const QuarticReport& r : reps) a.push_back(report_object(r));
    o["reports"] = a;
    return finish(o);
}

std::string quartic_report_text(const QuarticReport& rep) {
    std::ostringstream os;
    os << "input: " << rep.input.str() << "\n";
    os << "jacobian ideal: " << ideal_text(rep.jacobian) << "\n";
    os << "saturated ideal: " << ideal_text(rep.saturation) << "\n";
    if (rep.scheme.empty)
        os << "singular scheme: empty\n";
    else
        os << "singular scheme: dimension " << rep.scheme.dimension << ", degree "
           << rep.scheme.degree.get_str() << "\n";
    os << "minimal free resolution of the saturated ideal:\n" << rep.betti.str() << "\n";
    os << "cohomology of the twisted ideal sheaf (method: " << rep.cohomology.method << "):\n"
       << rep.cohomology.str() << "\n";
    os << "h1(J(4)) = " << rep.h1_J4 << "\n";
    os << "verdict: " << verdict_name(rep.verdict) << "\n";
    os << "notes:\n";
    for (const std::string& n : rep.notes) os << "- " << n << "\n";
    return os.str();
}

std::string betti_json(const BettiTable& b) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    o["betti"] = betti_array(b);
    return finish(o);
}

std::string betti_json(const BettiTable& b, int verified_through) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    o["betti"] = betti_array(b);
    o["exactness_verified_through"] = verified_through;
    return finish(o);
}

std::string cohomology_json(const CohomologyTable& t) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    o["method"] = t.method;
    o["cohomology"] = cohomology_object(t);
    return finish(o);
}

std::string ideal_json(const GradedIdeal& I) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    o["generators"] = gens_array(I);
    return finish(o);
}

std::string ideal_text(const GradedIdeal& I) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < I.gens().size(); ++i) {
        if (i) os << ", ";
        os << I.gens()[i].str();
    }
    os << ")";
    return os.str();
}

std::string moduli_dim_json(const ModuliInvariants& m) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    o["input"] = invariants_object(m);
    o["pspl_dimension"] = pspl_dimension(m);
    o["chi_sheaf"] = chi_sheaf(m);
    o["chi_FF"] = chi_FF(m);
    return finish(o);
}

std::string invariants_json(const ModuliInvariants& m) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    o["r"] = m.r;
    o["lsq"] = m.Lsq;
    o["c2"] = m.c2;
    return finish(o);
}

std::string invariants_text(const ModuliInvariants& m) {
    std::ostringstream os;
    os << "r = " << m.r << ", Lsq = " << m.Lsq << ", c2 = " << m.c2 << "\n";
    return os.str();
}

std::string identities_json(const LagrangianIdentityReport& r) {
    ojson o;
    o["schema_version"] = kSchemaVersion;
    o["input"] = invariants_object(r.m);
    o["w"] = r.w;
    o["v"] = r.v;
    o["u"] = r.u;
    o["h0"] = r.h0;
    o["syzygy"] = invariants_object(r.syzygy);
    o["extension"] = invariants_object(r.extension);
    o["syzygy_identity"] = {{"lhs", r.lhs_syzygy}, {"rhs", r.rhs_syzygy}};
    o["extension_identity"] = {{"lhs", r.lhs_extension}, {"rhs", r.rhs_extension}};
    o["note"] = r.note;
    return finish(o);
}

std::string identities_text(const LagrangianIdentityReport& r) {
    std::ostringstream os;
    os << "source: " << invariants_text(r.m);
    os << "u = " << r.u << " (minus the Euler characteristic of the dual sheaf)\n";
    os << "h0 = " << r.h0 << " (Euler characteristic of the sheaf)\n";
    os << "syzygy target (w = " << r.w << "): " << invariants_text(r.syzygy);
    os << "syzygy identity: pspl(target) - pspl(source) = " << r.lhs_syzygy
       << ", 2*w*(h0 - w) = " << r.rhs_syzygy << "\n";
    os << "extension target (v = " << r.v << "): " << invariants_text(r.extension);
    os << "extension identity: pspl(target) - pspl(source) = " << r.lhs_extension
       << ", 2*v*(u - v) = " << r.rhs_extension << "\n";
    os << "note: " << r.note << "\n";
    return os.str();
}

}  // namespace k3smooth
