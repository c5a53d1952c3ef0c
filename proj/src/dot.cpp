#include "plott/dot.hpp"

#include <functional>
#include <sstream>

#include "plott/core.hpp"

namespace plott {
namespace {

constexpr std::size_t kMaxNodes = 2000;

std::string escape_label(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string render(const std::vector<std::string>& labels,
                   const std::function<bool(std::size_t, std::size_t)>& strictly_below) {
    if (labels.size() > kMaxNodes) {
        throw capacity_error("dot export is capped at 2000 nodes");
    }
    std::ostringstream out;
    out << "digraph {\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << "  n" << i << " [label=\"" << escape_label(labels[i]) << "\"];\n";
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (!strictly_below(j, i)) {
                continue;
            }
            bool covering = true;
            for (std::size_t k = 0; k < labels.size() && covering; ++k) {
                if (strictly_below(j, k) && strictly_below(k, i)) {
                    covering = false;
                }
            }
            if (covering) {
                out << "  n" << i << " -> n" << j << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string export_dot(const PartialOrder& order) {
    std::vector<std::string> labels = order.ground().symbols();
    return render(labels, [&](std::size_t below, std::size_t above) {
        return below != above && order.leq(static_cast<int>(below), static_cast<int>(above));
    });
}

std::string export_dot(const ConvexFamily& family) {
    std::vector<std::string> labels;
    labels.reserve(family.members().size());
    for (mask_t m : family.members()) {
        labels.push_back(m == 0 ? "∅" : subset_key(family.ground(), Subset(m)));
    }
    const std::vector<mask_t>& members = family.members();
    return render(labels, [&](std::size_t below, std::size_t above) {
        return members[below] != members[above] && (members[below] & ~members[above]) == 0;
    });
}

std::string export_dot(const WordSet& words) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(words.size()));
    for (const SimpleWord& w : words.words()) {
        labels.push_back(w.str());
    }
    return render(labels, [&](std::size_t below, std::size_t above) {
        const SimpleWord& v = words.word(static_cast<int>(below));
        const SimpleWord& w = words.word(static_cast<int>(above));
        return v.length() < w.length() && word_prefix_order(v, w);
    });
}

}  // namespace plott
