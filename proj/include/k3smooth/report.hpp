#pragma once

#include <string>

#include "k3smooth/moduli.hpp"
#include "k3smooth/pipeline.hpp"

namespace k3smooth {

// Version of every JSON document the tool emits.
inline constexpr int kSchemaVersion = 1;

// JSON documents (2-space indent, keys in fixed order, newline-terminated)
// and the matching plain-text renderings. Text and JSON carry the same
// numeric content; both are byte-deterministic for a fixed input.

std::string quartic_report_json(const QuarticReport& rep);
std::string quartic_report_text(const QuarticReport& rep);
std::string quartic_batch_json(const std::vector<QuarticReport>& reps);

std::string betti_json(const BettiTable& b);
std::string betti_json(const BettiTable& b, int verified_through);

std::string cohomology_json(const CohomologyTable& t);

std::string ideal_json(const GradedIdeal& I);
std::string ideal_text(const GradedIdeal& I);

std::string moduli_dim_json(const ModuliInvariants& m);

std::string invariants_json(const ModuliInvariants& m);
std::string invariants_text(const ModuliInvariants& m);

std::string identities_json(const LagrangianIdentityReport& r);
std::string identities_text(const LagrangianIdentityReport& r);

}  // namespace k3smooth
