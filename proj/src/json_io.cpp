#include "plott/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace plott::io {
namespace {

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw validation_error("input is not valid JSON");
    }
    return j;
}

const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw validation_error(std::string("document is missing the \"") + name + "\" field");
    }
    return *it;
}

std::string string_value(const json& j, const char* what) {
    if (!j.is_string()) {
        throw validation_error(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

ChoiceFunction choice_from_json(const json& j) {
    const GroundSet ground = ground_from_json(field(j, "ground"));
    const json& entries = field(j, "choice");
    if (!entries.is_object()) {
        throw validation_error("\"choice\" must be an object keyed by subsets");
    }
    const mask_t subsets = mask_t{1} << ground.size();
    std::vector<mask_t> table(subsets, 0);
    std::vector<bool> present(subsets, false);
    for (const auto& [key, value] : entries.items()) {
        const Subset arg = parse_subset_key(ground, key);
        const Subset chosen = parse_subset_key(ground, string_value(value, "choice value"));
        if (present[arg.bits()]) {
            throw validation_error("duplicate choice entry for subset \"" + key + "\"");
        }
        present[arg.bits()] = true;
        table[arg.bits()] = chosen.bits();
    }
    for (mask_t a = 1; a < subsets; ++a) {
        if (!present[a]) {
            throw validation_error("choice document is missing the entry for subset \"" +
                                   subset_key(ground, Subset(a)) + "\"");
        }
    }
    if (present[0] && table[0] != 0) {
        throw validation_error("the empty set must choose the empty set");
    }
    return ChoiceFunction(ground, std::move(table));
}

SetMap map_from_json(const json& j) {
    const GroundSet source = ground_from_json(field(j, "source"));
    const GroundSet target = ground_from_json(field(j, "target"));
    const json& entries = field(j, "map");
    if (!entries.is_object()) {
        throw validation_error("\"map\" must be an object of symbol pairs");
    }
    std::vector<int> images(static_cast<std::size_t>(source.size()), -1);
    for (const auto& [key, value] : entries.items()) {
        const int from = source.index_of(key);
        if (images[static_cast<std::size_t>(from)] >= 0) {
            throw validation_error("duplicate map entry for symbol " + key);
        }
        images[static_cast<std::size_t>(from)] = target.index_of(string_value(value, "map value"));
    }
    for (int i = 0; i < source.size(); ++i) {
        if (images[static_cast<std::size_t>(i)] < 0) {
            throw validation_error("map is missing an image for symbol " + source.symbol(i));
        }
    }
    return SetMap(source, target, std::move(images));
}

WordSet words_from_json(const json& j) {
    const GroundSet ground = ground_from_json(field(j, "ground"));
    const json& entries = field(j, "words");
    if (!entries.is_array()) {
        throw validation_error("\"words\" must be an array of symbol arrays");
    }
    std::vector<SimpleWord> words;
    for (const json& word : entries) {
        if (!word.is_array()) {
            throw validation_error("each word must be an array of symbols");
        }
        std::vector<std::string> symbols;
        for (const json& s : word) {
            symbols.push_back(string_value(s, "word letter"));
        }
        words.push_back(SimpleWord::from_symbols(ground, symbols));
    }
    return WordSet(ground, std::move(words));
}

PartialOrder order_from_json(const json& j) {
    const GroundSet ground = ground_from_json(field(j, "ground"));
    const json& entries = field(j, "covers");
    if (!entries.is_array()) {
        throw validation_error("\"covers\" must be an array of [greater, lesser] pairs");
    }
    std::vector<std::pair<int, int>> covers;
    for (const json& pair : entries) {
        if (!pair.is_array() || pair.size() != 2) {
            throw validation_error("each cover must be a [greater, lesser] pair");
        }
        covers.emplace_back(ground.index_of(string_value(pair[0], "cover")),
                            ground.index_of(string_value(pair[1], "cover")));
    }
    return PartialOrder::from_covers(ground, covers);
}

ConvexFamily family_from_json(const json& j) {
    const GroundSet ground = ground_from_json(field(j, "ground"));
    const json& entries = field(j, "members");
    if (!entries.is_array()) {
        throw validation_error("\"members\" must be an array of subset keys");
    }
    std::vector<mask_t> members;
    for (const json& key : entries) {
        members.push_back(parse_subset_key(ground, string_value(key, "family member")).bits());
    }
    return ConvexFamily(ground, std::move(members));
}

}  // namespace

GroundSet ground_from_json(const json& j) {
    if (!j.is_array()) {
        throw validation_error("ground must be an array of symbols");
    }
    std::vector<std::string> symbols;
    for (const json& s : j) {
        std::string symbol = string_value(s, "ground symbol");
        if (symbol.find(',') != std::string::npos || symbol.find('"') != std::string::npos) {
            throw validation_error("ground symbols may not contain commas or quotes: " + symbol);
        }
        symbols.push_back(std::move(symbol));
    }
    return GroundSet(std::move(symbols));
}

Document load_document(const json& j) {
    if (!j.is_object()) {
        throw validation_error("document must be a JSON object");
    }
    Document doc{};
    if (j.contains("choice")) {
        doc.kind = DocKind::choice;
        doc.choice = choice_from_json(j);
    } else if (j.contains("map")) {
        doc.kind = DocKind::map;
        doc.map = map_from_json(j);
    } else if (j.contains("words")) {
        doc.kind = DocKind::words;
        doc.words = words_from_json(j);
    } else if (j.contains("covers")) {
        doc.kind = DocKind::order;
        doc.order = order_from_json(j);
    } else if (j.contains("members")) {
        doc.kind = DocKind::family;
        doc.family = family_from_json(j);
    } else if (j.contains("ground")) {
        doc.kind = DocKind::ground;
        doc.ground = ground_from_json(field(j, "ground"));
    } else {
        throw validation_error("unrecognized document: expected choice, map, words, covers, members or ground");
    }
    return doc;
}

Document load_document_text(const std::string& text) {
    return load_document(parse_text(text));
}

Document load_document_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return load_document_text(buffer.str());
    }
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_document_text(buffer.str());
}

json to_json(const GroundSet& ground) {
    return json(ground.symbols());
}

json to_json(const ChoiceFunction& f) {
    json entries = json::object();
    for (mask_t a = 1; a < f.subset_count(); ++a) {
        entries[subset_key(f.ground(), Subset(a))] = subset_key(f.ground(), Subset(f.at(a)));
    }
    return json{{"ground", to_json(f.ground())}, {"choice", std::move(entries)}};
}

json to_json(const SetMap& m) {
    json entries = json::object();
    for (int i = 0; i < m.source().size(); ++i) {
        entries[m.source().symbol(i)] = m.target().symbol(m.apply(i));
    }
    return json{{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"map", std::move(entries)}};
}

json to_json(const WordSet& ws) {
    json words = json::array();
    for (const SimpleWord& w : ws.words()) {
        json word = json::array();
        for (int x : w.letters()) {
            word.push_back(ws.ground().symbol(x));
        }
        words.push_back(std::move(word));
    }
    return json{{"ground", to_json(ws.ground())}, {"words", std::move(words)}};
}

json to_json(const PartialOrder& order) {
    json covers = json::array();
    for (auto [greater, lesser] : order.covers()) {
        covers.push_back(json::array({order.ground().symbol(greater), order.ground().symbol(lesser)}));
    }
    return json{{"ground", to_json(order.ground())}, {"covers", std::move(covers)}};
}

json to_json(const ConvexFamily& family) {
    json members = json::array();
    for (mask_t m : family.members()) {
        members.push_back(subset_key(family.ground(), Subset(m)));
    }
    return json{{"ground", to_json(family.ground())}, {"members", std::move(members)}};
}

std::string serialize(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace plott::io
