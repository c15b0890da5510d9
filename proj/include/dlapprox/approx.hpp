#ifndef DLAPPROX_APPROX_HPP
#define DLAPPROX_APPROX_HPP

#include <optional>
#include <string>
#include <vector>

#include "dlapprox/enumerate.hpp"
#include "dlapprox/normalize.hpp"
#include "dlapprox/ontology.hpp"
#include "dlapprox/reasoner.hpp"
#include "dlapprox/registry.hpp"

namespace dla {

enum class Scheme { Fig1, Fig2, Fig3, Fig4, Minus, Acyclic, Cnf };

const char* schemeName(Scheme s);
std::optional<Scheme> schemeFromName(const std::string& s);

struct ApproxConfig {
    Scheme scheme = Scheme::Fig2;
    std::optional<int> depth;        // nullopt = omega
    int fallbackDepth = 2;           // omega degrade when not finitely generating
    std::size_t disCap = 512;        // named disjunctions materialized
    std::size_t ctxBits = 10;        // context conjunctions: full powerset up to 2^ctxBits
    std::size_t candidateCap = 8000000; // (F,G,r) side-condition checks
    long long fSizeCap = 16;
    long long gSizeCap = 7;
    std::size_t universeCap = 30000; // F/G enumeration counts
    int decorPerLeafCap = 16;
    ReasonerCaps reasonerCaps;
};

struct ApproxResult {
    Ontology ontology;
    std::vector<std::string> provenance; // parallel to ontology.axioms()
    std::map<std::string, std::string> nameTable;
    std::vector<std::string> truncation;
    std::optional<int> effectiveDepth;   // set when an omega run degraded
    bool complete() const { return truncation.empty(); }
};

// Construct the approximation of `o` under the given scheme. The registry
// carries every fresh name minted along the way (callers keep it for
// soundness checks and round trips). Inputs may use disjunctions on the
// left-hand side; they are eliminated up front (a conservative extension).
ApproxResult approximate(const Ontology& o, const ApproxConfig& cfg, FreshNameRegistry& reg);

// O_S-generatable test: some exists r.D in sub(o) on a right-hand side with
// o |= D [= c.
bool isGeneratable(const Ontology& o, const ConceptPtr& c, ReasonerCaps caps = {});

struct GeneratableCensus {
    std::vector<ConceptPtr> representatives; // up to empty-ontology equivalence
    bool truncated = false;
};

GeneratableCensus enumerateGeneratable(const Ontology& o, int depthCap,
                                       const UniverseCaps& caps, ReasonerCaps rcaps = {});

// Serialization: canonical axiom text plus "# name-table" and "# provenance"
// comment blocks (bit-stable).
std::string renderApproxResult(const ApproxResult& r);
std::string approxSidecarJson(const ApproxResult& r);

} // namespace dla

#endif
