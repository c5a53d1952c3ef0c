#include "plott/setmap.hpp"

namespace plott {

SetMap::SetMap(GroundSet source, GroundSet target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(source_.size())) {
        throw validation_error("set map must assign exactly one image per source symbol");
    }
    for (int y : images_) {
        if (y < 0 || y >= target_.size()) {
            throw validation_error("set map image index out of range");
        }
    }
}

SetMap SetMap::identity(const GroundSet& ground) {
    std::vector<int> images(static_cast<std::size_t>(ground.size()));
    for (int i = 0; i < ground.size(); ++i) {
        images[static_cast<std::size_t>(i)] = i;
    }
    return SetMap(ground, ground, std::move(images));
}

bool SetMap::is_injective() const {
    mask_t seen = 0;
    for (int y : images_) {
        const mask_t bit = mask_t{1} << y;
        if ((seen & bit) != 0) {
            return false;
        }
        seen |= bit;
    }
    return true;
}

Subset SetMap::image(Subset a) const {
    mask_t out = 0;
    for (mask_t m = a.bits(); m != 0; m &= m - 1) {
        out |= mask_t{1} << images_[static_cast<std::size_t>(std::countr_zero(m))];
    }
    return Subset(out);
}

Subset SetMap::preimage(Subset b) const {
    mask_t out = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (b.contains(images_[i])) {
            out |= mask_t{1} << i;
        }
    }
    return Subset(out);
}

Subset SetMap::fiber(int target_index) const {
    return preimage(Subset(mask_t{1} << target_index));
}

SetMap compose(const SetMap& outer, const SetMap& inner) {
    if (inner.target() != outer.source()) {
        throw validation_error("compose: inner target does not match outer source");
    }
    std::vector<int> images;
    images.reserve(inner.images().size());
    for (int mid : inner.images()) {
        images.push_back(outer.apply(mid));
    }
    return SetMap(inner.source(), outer.target(), std::move(images));
}

}  // namespace plott
