#include "dlapprox/enumerate.hpp"

#include <algorithm>
#include <map>

#include "dlapprox/errors.hpp"

namespace dla {

namespace {

struct Gen {
    const UniverseCaps& caps;
    std::vector<ConceptPtr> names;
    std::vector<std::string> roles;
    bool capped = false;

    // Reduced concepts of depth <= d, grouped once computed.
    std::map<int, std::vector<ConceptPtr>> byDepth;

    const std::vector<ConceptPtr>& upTo(int d) {
        auto it = byDepth.find(d);
        if (it != byDepth.end()) return it->second;
        std::vector<ConceptPtr> out;
        // existential atoms: role x (reduced concept of depth <= d-1)
        std::vector<ConceptPtr> exAtoms;
        if (d > 0) {
            const auto& inner = upTo(d - 1);
            for (auto& r : roles)
                for (auto& c : inner) {
                    auto e = Concept::exists(r, c);
                    if (conceptSize(e) <= caps.maxSize) exAtoms.push_back(e);
                }
            std::sort(exAtoms.begin(), exAtoms.end(), ConceptLess{});
        }

        // choose name subset then an antichain of existential atoms
        std::vector<ConceptPtr> nameSel, exSel;
        std::function<void(std::size_t, long long)> pickEx =
            [&](std::size_t i, long long sizeLeft) {
                if (capped) return;
                {
                    std::vector<ConceptPtr> all = nameSel;
                    all.insert(all.end(), exSel.begin(), exSel.end());
                    auto c = Concept::conj(std::move(all));
                    if (conceptSize(c) <= caps.maxSize) {
                        out.push_back(c);
                        if (out.size() > caps.maxCount) capped = true;
                    }
                }
                if (static_cast<int>(exSel.size()) >= caps.maxConjExists) return;
                for (std::size_t j = i; j < exAtoms.size() && !capped; ++j) {
                    long long s = conceptSize(exAtoms[j]);
                    long long cost = s + (nameSel.empty() && exSel.empty() ? 0 : 1);
                    if (cost > sizeLeft) continue;
                    // antichain per role: no mutual structural subsumption
                    bool ok = true;
                    for (auto& e : exSel) {
                        if (e->name != exAtoms[j]->name) continue;
                        if (structuralSubsumes(e->kids[0], exAtoms[j]->kids[0]) ||
                            structuralSubsumes(exAtoms[j]->kids[0], e->kids[0])) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    exSel.push_back(exAtoms[j]);
                    pickEx(j + 1, sizeLeft - cost);
                    exSel.pop_back();
                }
            };
        std::function<void(std::size_t, long long)> pickNames =
            [&](std::size_t i, long long sizeLeft) {
                if (capped) return;
                pickEx(0, sizeLeft);
                if (static_cast<int>(nameSel.size()) >= caps.maxConjNames) return;
                long long cost = nameSel.empty() ? 1 : 2;
                for (std::size_t j = i; j < names.size() && !capped; ++j) {
                    if (sizeLeft < cost) break;
                    nameSel.push_back(names[j]);
                    pickNames(j + 1, sizeLeft - cost);
                    nameSel.pop_back();
                }
            };
        pickNames(0, caps.maxSize);

        // dedupe canonical forms (reduced conj of Top-only etc.)
        std::sort(out.begin(), out.end(), ConceptLess{});
        out.erase(std::unique(out.begin(), out.end(), ConceptEq{}), out.end());
        return byDepth.emplace(d, std::move(out)).first->second;
    }
};

} // namespace

Universe enumerateConcepts(const std::vector<std::string>& names,
                           const std::vector<std::string>& roles, const UniverseCaps& caps,
                           bool throwOnCap) {
    // The universe stays complete up to a uniform size bound: when the cap
    // is hit, retry with a smaller size budget instead of keeping an
    // arbitrary prefix.
    Universe u;
    for (long long sz = caps.maxSize; sz >= 1; --sz) {
        UniverseCaps inner = caps;
        inner.maxSize = sz;
        Gen g{inner, {}, roles, false, {}};
        for (auto& n : names) g.names.push_back(Concept::named(n));
        std::sort(g.names.begin(), g.names.end(), ConceptLess{});
        std::sort(g.roles.begin(), g.roles.end());
        auto out = g.upTo(caps.maxDepth);
        if (g.capped) continue;
        u.concepts = out;
        u.truncated = sz < caps.maxSize;
        break;
    }
    if (u.concepts.empty() && caps.maxSize >= 1) u.truncated = true;
    if (u.truncated && throwOnCap)
        throw ResourceError("concept universe exceeds cap of " +
                            std::to_string(caps.maxCount));
    if (caps.includeBot) u.concepts.push_back(Concept::bot());
    // length-lex order of the canonical rendering
    std::vector<std::pair<std::string, ConceptPtr>> keyed;
    keyed.reserve(u.concepts.size());
    for (auto& c : u.concepts) keyed.push_back({render(c), c});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    u.concepts.clear();
    for (auto& [k, c] : keyed) u.concepts.push_back(c);
    u.concepts.erase(std::unique(u.concepts.begin(), u.concepts.end(), ConceptEq{}),
                     u.concepts.end());
    return u;
}

} // namespace dla
