#include "plott/family.hpp"

#include <algorithm>

namespace plott {

ConvexFamily::ConvexFamily(GroundSet ground, std::vector<mask_t> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

    const mask_t full = ground_.full_mask();
    for (mask_t m : members_) {
        if ((m & ~full) != 0) {
            throw validation_error("family member exceeds the ground width");
        }
    }
    if (members_.empty() || members_.back() != full) {
        throw validation_error("family must contain the full ground set");
    }
    std::vector<bool> present(std::size_t{1} << ground_.size(), false);
    for (mask_t m : members_) {
        present[m] = true;
    }
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = i + 1; j < members_.size(); ++j) {
            if (!present[members_[i] & members_[j]]) {
                throw validation_error("family is not closed under intersection");
            }
        }
    }
}

bool ConvexFamily::contains(mask_t member) const {
    return std::binary_search(members_.begin(), members_.end(), member);
}

mask_t ConvexFamily::closure_of(mask_t b) const {
    mask_t out = ground_.full_mask();
    for (mask_t m : members_) {
        if ((b & ~m) == 0) {
            out &= m;
        }
    }
    return out;
}

}  // namespace plott
