#include "dlapprox/registry.hpp"

#include <cstdio>

namespace dla {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) { h ^= c; h *= 1099511628211ull; }
    return h;
}

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

void FreshNameRegistry::reserve(const std::set<std::string>& names) {
    std::lock_guard<std::mutex> lk(mu_);
    reserved_.insert(names.begin(), names.end());
}

std::string FreshNameRegistry::mint(char ns, const ConceptPtr& definition) {
    const std::string key = std::string(1, ns) + "|" + render(definition);
    std::lock_guard<std::mutex> lk(mu_);
    auto it = byKey_.find(key);
    if (it != byKey_.end()) return it->second;
    std::string salt;
    for (;;) {
        std::string name = std::string(1, ns) + "_" + hex(fnv1a(key + salt));
        if (!reserved_.count(name) && !byName_.count(name)) {
            byKey_.emplace(key, name);
            byName_.emplace(name, definition);
            return name;
        }
        salt += '#';
    }
}

bool FreshNameRegistry::isRegistered(const std::string& name) const {
    std::lock_guard<std::mutex> lk(mu_);
    return byName_.count(name) != 0;
}

ConceptPtr FreshNameRegistry::definitionOf(const std::string& name) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = byName_.find(name);
    return it == byName_.end() ? nullptr : it->second;
}

std::string FreshNameRegistry::nameFor(char ns, const ConceptPtr& definition) const {
    const std::string key = std::string(1, ns) + "|" + render(definition);
    std::lock_guard<std::mutex> lk(mu_);
    auto it = byKey_.find(key);
    return it == byKey_.end() ? std::string() : it->second;
}

std::map<std::string, std::string> FreshNameRegistry::table() const {
    std::lock_guard<std::mutex> lk(mu_);
    std::map<std::string, std::string> out;
    for (auto& [name, def] : byName_) out.emplace(name, render(def));
    return out;
}

std::size_t FreshNameRegistry::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return byName_.size();
}

std::size_t FreshNameRegistry::countNamespace(char ns) const {
    std::lock_guard<std::mutex> lk(mu_);
    std::size_t n = 0;
    for (auto& [name, def] : byName_)
        if (!name.empty() && name[0] == ns) ++n;
    return n;
}

} // namespace dla
