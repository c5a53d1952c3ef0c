#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "plott/choice.hpp"
#include "plott/family.hpp"
#include "plott/order.hpp"
#include "plott/setmap.hpp"
#include "plott/wordset.hpp"

namespace plott::io {

using json = nlohmann::ordered_json;

enum class DocKind { choice, map, words, order, family, ground };

/// A parsed interchange document. Exactly the member matching `kind` is set.
struct Document {
    DocKind kind;
    std::optional<ChoiceFunction> choice;
    std::optional<SetMap> map;
    std::optional<WordSet> words;
    std::optional<PartialOrder> order;
    std::optional<ConvexFamily> family;
    std::optional<GroundSet> ground;
};

/// Parses a ground-symbol array. Symbols containing commas or quotes are
/// rejected to keep subset keys unambiguous.
GroundSet ground_from_json(const json& j);

Document load_document(const json& j);
Document load_document_text(const std::string& text);
/// Reads a file, or standard input when path is "-".
Document load_document_file(const std::string& path);

json to_json(const GroundSet& ground);
json to_json(const ChoiceFunction& f);
json to_json(const SetMap& m);
json to_json(const WordSet& ws);
json to_json(const PartialOrder& order);
json to_json(const ConvexFamily& family);

/// Canonical text form: two-space indent plus trailing newline. Loading the
/// result reproduces the value bit-exactly.
std::string serialize(const json& j);

}  // namespace plott::io
