#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dlapprox/analysis.hpp"
#include "dlapprox/approx.hpp"
#include "dlapprox/chase.hpp"
#include "dlapprox/elreasoner.hpp"
#include "dlapprox/errors.hpp"
#include "dlapprox/normalize.hpp"
#include "dlapprox/omq.hpp"
#include "dlapprox/parse.hpp"
#include "dlapprox/verify.hpp"

namespace {

// Exit codes: 0 pass, 1 verification failures, 2 usage/contract, 3
// truncated-but-sound.
constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;
constexpr int kTruncated = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dla::ContractError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw dla::ContractError("cannot write file: " + path);
    out << content;
}

dla::Signature parseSigma(const std::string& csv, const dla::Ontology& o,
                          const dla::ConceptPtr& query) {
    dla::Signature sigma;
    if (csv.empty()) {
        sigma = o.signature();
        auto qs = conceptSignature(query);
        sigma.merge(qs);
        return sigma;
    }
    auto onames = o.signature();
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (onames.roleNames.count(item))
            sigma.roleNames.insert(item);
        else
            sigma.conceptNames.insert(item);
    }
    return sigma;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Horn approximation toolkit for description logic ontologies"};
    app.require_subcommand(1);

    bool jsonOut = false;
    int jobs = 1;
    app.add_flag("--json", jsonOut, "machine-readable output");
    app.add_option("--jobs", jobs, "worker threads for verification");

    // approximate
    auto* cmdApprox = app.add_subcommand("approximate", "compile an approximation");
    std::string inPath, outPath, sidecarPath, schemeName = "fig2", depthArg = "omega";
    std::size_t disCap = 512, candidateCap = 2000000;
    long long fSize = 12, gSize = 9;
    cmdApprox->add_option("--in", inPath, "source ontology")->required();
    cmdApprox->add_option("--out", outPath, "output ontology file");
    cmdApprox->add_option("--sidecar", sidecarPath, "JSON sidecar file");
    cmdApprox->add_option("--scheme", schemeName, "fig1|fig2|fig3|fig4|minus|acyclic|cnf");
    cmdApprox->add_option("--depth", depthArg, "target depth (natural or 'omega')");
    cmdApprox->add_option("--max-dis", disCap, "named-disjunction cap");
    cmdApprox->add_option("--max-candidates", candidateCap, "F/G candidate cap");
    cmdApprox->add_option("--max-f-size", fSize, "F universe size cap");
    cmdApprox->add_option("--max-g-size", gSize, "G universe size cap");

    // analyze
    auto* cmdAnalyze = app.add_subcommand("analyze", "structure and generatability report");
    std::string anPath;
    cmdAnalyze->add_option("--in", anPath, "ontology")->required();

    // entail
    auto* cmdEntail = app.add_subcommand("entail", "decide a subsumption");
    std::string enPath, subText, supText, engine = "auto";
    cmdEntail->add_option("--in", enPath, "ontology")->required();
    cmdEntail->add_option("--sub", subText, "subsumee concept")->required();
    cmdEntail->add_option("--sup", supText, "subsumer concept")->required();
    cmdEntail->add_option("--engine", engine, "auto|alc|el|both");

    // verify
    auto* cmdVerify = app.add_subcommand("verify", "brute-force approximation oracle");
    std::string vSource, vTarget;
    int vDepth = 2;
    long long vSize = 9;
    std::size_t vMax = 20000;
    cmdVerify->add_option("--source", vSource, "source ontology")->required();
    cmdVerify->add_option("--target", vTarget, "target (EL/ELbot) ontology")->required();
    cmdVerify->add_option("--depth", vDepth, "probe depth cap");
    cmdVerify->add_option("--size", vSize, "probe size cap");
    cmdVerify->add_option("--max-concepts", vMax, "universe cap (preflight guard)");

    // chase
    auto* cmdChase = app.add_subcommand("chase", "run the EL chase or the special chase");
    std::string chPath, chConcept, chAbox;
    bool chSpecial = false;
    std::size_t chCap = 10000;
    cmdChase->add_option("--in", chPath, "ontology")->required();
    cmdChase->add_option("--concept", chConcept, "start concept (ditree ABox)");
    cmdChase->add_option("--abox", chAbox, "start ABox file (EL chase only)");
    cmdChase->add_flag("--special", chSpecial, "use the special chase (rules 1-7)");
    cmdChase->add_option("--cap", chCap, "step cap");

    // query
    auto* cmdQuery = app.add_subcommand("query", "certain answers over an ABox");
    std::string qOnto, qAbox, qText, qSigma;
    cmdQuery->add_option("--ontology", qOnto, "ontology")->required();
    cmdQuery->add_option("--abox", qAbox, "ABox file")->required();
    cmdQuery->add_option("--query", qText, "query concept (AQ name or EL concept)")
        ->required();
    cmdQuery->add_option("--sigma", qSigma, "ABox signature, comma separated");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmdApprox) {
            dla::Ontology o = dla::parseOntology(readFile(inPath));
            auto scheme = dla::schemeFromName(schemeName);
            if (!scheme) throw dla::ContractError("unknown scheme: " + schemeName);
            dla::ApproxConfig cfg;
            cfg.scheme = *scheme;
            if (depthArg != "omega" && depthArg != "w") cfg.depth = std::stoi(depthArg);
            cfg.disCap = disCap;
            cfg.candidateCap = candidateCap;
            cfg.fSizeCap = fSize;
            cfg.gSizeCap = gSize;

            dla::FreshNameRegistry reg;
            dla::Ontology src = o;
            // ALC sources reduce to ELUbot for the bottom schemes.
            if ((cfg.scheme == dla::Scheme::Fig3 || cfg.scheme == dla::Scheme::Fig4 ||
                 cfg.scheme == dla::Scheme::Minus) &&
                !dla::fragmentLeq(o.fragment(), dla::Fragment::ELUbot))
                src = dla::alcToEluBot(o, reg);

            dla::ApproxResult res = dla::approximate(src, cfg, reg);
            std::string text = dla::renderApproxResult(res);
            if (!outPath.empty())
                writeFile(outPath, text);
            else
                std::cout << text;
            if (!sidecarPath.empty()) writeFile(sidecarPath, dla::approxSidecarJson(res));
            if (jsonOut) std::cout << dla::approxSidecarJson(res) << "\n";
            return res.complete() ? kOk : kTruncated;
        }

        if (*cmdAnalyze) {
            dla::Ontology o = dla::parseOntology(readFile(anPath));
            std::cout << dla::analyzeReportJson(o) << "\n";
            return kOk;
        }

        if (*cmdEntail) {
            dla::Ontology o = dla::parseOntology(readFile(enPath));
            auto sub = dla::parseConcept(subText);
            auto sup = dla::parseConcept(supText);
            bool viaAlc = false, viaEl = false, haveEl = false;
            if (engine == "alc" || engine == "auto" || engine == "both")
                viaAlc = dla::alcSubsumes(o, sub, sup);
            if (engine == "el" || engine == "both" ||
                (engine == "auto" && dla::fragmentLeq(o.fragment(), dla::Fragment::ELbot) &&
                 dla::fragmentLeq(dla::conceptFragment(sub), dla::Fragment::ELbot) &&
                 dla::fragmentLeq(dla::conceptFragment(sup), dla::Fragment::ELbot))) {
                viaEl = dla::elSubsumes(o, sub, sup);
                haveEl = true;
            }
            bool verdict = engine == "el" ? viaEl : viaAlc;
            if (engine == "both" && viaAlc != viaEl)
                throw dla::ContractError("engine disagreement (alc vs el)");
            if (jsonOut) {
                nlohmann::ordered_json j;
                j["entailed"] = verdict;
                j["engine"] = engine;
                if (haveEl) j["el"] = viaEl;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (verdict ? "true" : "false") << "\n";
            }
            return kOk;
        }

        if (*cmdVerify) {
            dla::Ontology src = dla::parseOntology(readFile(vSource));
            dla::Ontology tgt = dla::parseOntology(readFile(vTarget));
            dla::VerifyConfig cfg;
            cfg.depth = vDepth;
            cfg.sizeCap = vSize;
            cfg.maxConcepts = vMax;
            cfg.jobs = jobs;
            auto rep = dla::verifyApproximation(src, tgt, cfg);
            std::cout << (jsonOut ? dla::reportJson(rep) : dla::reportText(rep)) << "\n";
            return rep.pass() ? kOk : kViolations;
        }

        if (*cmdChase) {
            dla::Ontology o = dla::parseOntology(readFile(chPath));
            dla::ChaseResult res;
            if (chSpecial) {
                if (chConcept.empty())
                    throw dla::ContractError("--special requires --concept");
                res = dla::specialChase(o, dla::parseConcept(chConcept), {chCap, false, {}});
            } else {
                dla::ExtendedABox start;
                if (!chConcept.empty())
                    start = dla::ExtendedABox::fromConcept(dla::parseConcept(chConcept));
                else if (!chAbox.empty())
                    start = dla::parseABoxText(readFile(chAbox));
                else
                    throw dla::ContractError("chase needs --concept or --abox");
                res = dla::elChase(o, start, chCap);
            }
            if (jsonOut) {
                nlohmann::ordered_json j;
                j["truncated"] = res.trace.truncated;
                j["steps"] = res.trace.steps.size();
                j["abox"] = res.abox.renderLines();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << res.trace.renderText();
                std::cout << "# final ABox\n";
                for (auto& l : res.abox.renderLines()) std::cout << l << "\n";
            }
            return res.trace.truncated ? kTruncated : kOk;
        }

        if (*cmdQuery) {
            dla::Ontology o = dla::parseOntology(readFile(qOnto));
            dla::ABox a = dla::parsePlainABox(readFile(qAbox));
            auto q = dla::parseConcept(qText);
            dla::OMQ omq{o, parseSigma(qSigma, o, q), q};
            auto ans = dla::certainAnswers(omq, a);
            if (jsonOut) {
                nlohmann::ordered_json j;
                j["answers"] = ans;
                std::cout << j.dump(2) << "\n";
            } else {
                for (auto& x : ans) std::cout << x << "\n";
            }
            return kOk;
        }
    } catch (const dla::ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what()
                  << "\n";
        return kUsage;
    } catch (const dla::UnsupportedModeError& e) {
        std::cerr << "unsupported mode: " << e.what() << "\n";
        return kTruncated;
    } catch (const dla::ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const dla::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
