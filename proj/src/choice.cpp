#include "plott/choice.hpp"

namespace plott {

ChoiceFunction::ChoiceFunction(GroundSet ground, std::vector<mask_t> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
    const std::size_t expected = std::size_t{1} << ground_.size();
    if (table_.size() != expected) {
        throw validation_error("choice table must have exactly 2^n entries");
    }
    for (mask_t a = 0; a < table_.size(); ++a) {
        if ((table_[a] & ~a) != 0) {
            throw validation_error("choice table violates contraction at subset " +
                                   subset_key(ground_, Subset(a)));
        }
    }
}

ChoiceFunction ChoiceFunction::zero(const GroundSet& ground) {
    return ChoiceFunction(ground, std::vector<mask_t>(std::size_t{1} << ground.size(), 0));
}

Subset ChoiceFunction::evaluate(Subset argument) const {
    require_within(ground_, argument, "evaluate");
    return Subset(table_[argument.bits()]);
}

}  // namespace plott
