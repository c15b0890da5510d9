#include "dlapprox/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "dlapprox/elreasoner.hpp"
#include "dlapprox/errors.hpp"

#include "json.hpp"

namespace dla {

VerificationReport verifyApproximation(const Ontology& source, const Ontology& target,
                                       const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (!fragmentLeq(target.fragment(), Fragment::ELbot))
        throw ContractError("verification target must be EL or ELbot, got " +
                            std::string(fragmentName(target.fragment())));

    VerificationReport rep;
    rep.depth = cfg.depth;
    rep.sizeCap = cfg.sizeCap;

    auto sig = source.signature();
    UniverseCaps uc;
    uc.maxDepth = cfg.depth;
    uc.maxSize = cfg.sizeCap;
    uc.maxCount = cfg.maxConcepts;
    uc.includeBot = target.fragment() == Fragment::ELbot ||
                    !fragmentLeq(source.fragment(), Fragment::ELU);
    Universe u = enumerateConcepts({sig.conceptNames.begin(), sig.conceptNames.end()},
                                   {sig.roleNames.begin(), sig.roleNames.end()}, uc,
                                   /*throwOnCap=*/true);
    const auto& lhsList = u.concepts;
    std::vector<ConceptPtr> rhsList =
        cfg.rhsRestriction.empty() ? u.concepts : cfg.rhsRestriction;
    rep.conceptCount = lhsList.size();

    const std::size_t nl = lhsList.size();
    const std::size_t nr = rhsList.size();

    // Target side, one completion for the whole matrix.
    std::vector<std::vector<char>> tgt(nl, std::vector<char>(nr, 0));
    {
        ElCompletion comp(target);
        std::vector<int> lid(nl), rid(nr);
        for (std::size_t i = 0; i < nl; ++i) lid[i] = comp.probe(lhsList[i]);
        for (std::size_t j = 0; j < nr; ++j) rid[j] = comp.probe(rhsList[j]);
        comp.saturate();
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nr; ++j)
                tgt[i][j] = comp.subsumesIds(lid[i], rid[j]);
    }

    // Source side: satTypesAvoiding per pair, memoized inside the engine.
    std::vector<std::vector<char>> src(nl, std::vector<char>(nr, 0));
    auto worker = [&](std::size_t lo, std::size_t hi) {
        auto engine = sharedReasoner(source, cfg.reasonerCaps);
        for (std::size_t j = lo; j < hi; ++j) {
            for (std::size_t i = 0; i < nl; ++i) {
                bool holds;
                try {
                    holds = engine->satTypesAvoiding(lhsList[i], {rhsList[j]}).none();
                } catch (const Reasoner::FastPathMiss&) {
                    holds = alcSubsumes(source, lhsList[i], rhsList[j], cfg.reasonerCaps);
                }
                src[i][j] = holds;
            }
        }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || nr < 2) {
        worker(0, nr);
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (nr + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            std::size_t lo = t * chunk, hi = std::min(nr, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(worker, lo, hi);
        }
        for (auto& th : threads) th.join();
    }

    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nr; ++j) {
            ++rep.checkedPairs;
            if (src[i][j] == tgt[i][j]) continue;
            Violation v{lhsList[i], rhsList[j], static_cast<bool>(src[i][j]),
                        static_cast<bool>(tgt[i][j])};
            if (v.targetHolds)
                rep.soundness.push_back(v);
            else
                rep.completeness.push_back(v);
        }

    rep.wallSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

nlohmann::ordered_json violationJson(const Violation& v) {
    return {{"lhs", render(v.lhs)},
            {"rhs", render(v.rhs)},
            {"source", v.sourceHolds},
            {"target", v.targetHolds}};
}

} // namespace

std::string reportJson(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["universe"] = {{"depth", r.depth},
                     {"size_cap", r.sizeCap},
                     {"concepts", r.conceptCount}};
    j["checked_pairs"] = r.checkedPairs;
    j["soundness_violations"] = nlohmann::ordered_json::array();
    for (auto& v : r.soundness) j["soundness_violations"].push_back(violationJson(v));
    j["completeness_violations"] = nlohmann::ordered_json::array();
    for (auto& v : r.completeness) j["completeness_violations"].push_back(violationJson(v));
    j["truncation"] = r.truncation;
    j["pass"] = r.pass();
    j["wall_seconds"] = r.wallSeconds;
    return j.dump(2);
}

std::string reportText(const VerificationReport& r) {
    std::string out;
    out += "universe: depth " + std::to_string(r.depth) + ", size cap " +
           std::to_string(r.sizeCap) + ", " + std::to_string(r.conceptCount) +
           " concepts\n";
    out += "checked pairs: " + std::to_string(r.checkedPairs) + "\n";
    out += "soundness violations: " + std::to_string(r.soundness.size()) + "\n";
    for (std::size_t i = 0; i < r.soundness.size() && i < 10; ++i)
        out += "  target proves, source refutes: " + render(r.soundness[i].lhs) +
               " SubClassOf " + render(r.soundness[i].rhs) + "\n";
    out += "completeness violations: " + std::to_string(r.completeness.size()) + "\n";
    for (std::size_t i = 0; i < r.completeness.size() && i < 10; ++i)
        out += "  source proves, target misses: " + render(r.completeness[i].lhs) +
               " SubClassOf " + render(r.completeness[i].rhs) + "\n";
    out += r.pass() ? "PASS\n" : "FAIL\n";
    return out;
}

} // namespace dla
