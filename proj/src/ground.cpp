#include "plott/ground.hpp"

#include <algorithm>
#include <unordered_set>

namespace plott {

GroundSet::GroundSet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() > static_cast<std::size_t>(kMaxSize)) {
        throw capacity_error("ground set exceeds the maximum size of " + std::to_string(kMaxSize));
    }
    std::unordered_set<std::string_view> seen;
    for (const std::string& s : symbols_) {
        if (s.empty()) {
            throw validation_error("ground-set symbols must be non-empty");
        }
        if (!seen.insert(s).second) {
            throw validation_error("duplicate ground-set symbol: " + s);
        }
    }
}

int GroundSet::find(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == symbol) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int GroundSet::index_of(std::string_view symbol) const {
    const int i = find(symbol);
    if (i < 0) {
        throw validation_error("symbol not in ground set: " + std::string(symbol));
    }
    return i;
}

Subset Subset::of(const GroundSet& ground, const std::vector<std::string>& symbols) {
    mask_t bits = 0;
    for (const std::string& s : symbols) {
        bits |= mask_t{1} << ground.index_of(s);
    }
    return Subset(bits);
}

std::vector<int> elements(Subset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s.count()));
    for (mask_t m = s.bits(); m != 0; m &= m - 1) {
        out.push_back(std::countr_zero(m));
    }
    return out;
}

std::string subset_key(const GroundSet& ground, Subset s) {
    std::string out;
    bool first = true;
    for (int i : elements(s)) {
        if (!first) {
            out += ',';
        }
        out += ground.symbol(i);
        first = false;
    }
    return out;
}

Subset parse_subset_key(const GroundSet& ground, std::string_view key) {
    mask_t bits = 0;
    std::size_t pos = 0;
    if (key.empty()) {
        return Subset(0);
    }
    while (true) {
        const std::size_t comma = key.find(',', pos);
        const std::string_view part = key.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        bits |= mask_t{1} << ground.index_of(part);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Subset(bits);
}

void require_within(const GroundSet& ground, Subset s, const char* what) {
    if ((s.bits() & ~ground.full_mask()) != 0) {
        throw validation_error(std::string(what) + ": subset mask exceeds the ground width");
    }
}

}  // namespace plott
