#ifndef DLAPPROX_VERIFY_HPP
#define DLAPPROX_VERIFY_HPP

#include <string>
#include <vector>

#include "dlapprox/enumerate.hpp"
#include "dlapprox/ontology.hpp"
#include "dlapprox/reasoner.hpp"

namespace dla {

struct VerifyConfig {
    int depth = 2;
    long long sizeCap = 9;
    std::size_t maxConcepts = 20000;
    int jobs = 1;
    // Restrict right-hand probes to this set (corrminus-style checks);
    // empty = full universe.
    std::vector<ConceptPtr> rhsRestriction;
    ReasonerCaps reasonerCaps;
};

struct Violation {
    ConceptPtr lhs;
    ConceptPtr rhs;
    bool sourceHolds;
    bool targetHolds;
};

struct VerificationReport {
    int depth = 0;
    long long sizeCap = 0;
    std::size_t conceptCount = 0;
    std::size_t checkedPairs = 0;
    std::vector<Violation> soundness;    // target proves, source does not
    std::vector<Violation> completeness; // source proves, target does not
    std::vector<std::string> truncation;
    double wallSeconds = 0;
    bool pass() const { return soundness.empty() && completeness.empty(); }
};

// Brute-force oracle: enumerates all reduced canonical target-fragment
// concepts over sig(source) within caps and compares, for every ordered
// pair, source-side subsumption (type elimination) against target-side
// subsumption (EL completion).
VerificationReport verifyApproximation(const Ontology& source, const Ontology& target,
                                       const VerifyConfig& cfg = {});

std::string reportJson(const VerificationReport& r);
std::string reportText(const VerificationReport& r);

} // namespace dla

#endif
