#pragma once

#include <cstdint>

#include "plott/ground.hpp"

namespace plott {

/// Execution policy for the exhaustive-scan kernels. Both policies produce
/// bit-identical results; the serial path doubles as the reference the
/// parallel path is tested against.
enum class Exec { serial, parallel };

namespace detail {

/// Evaluates pred on every mask in [0, count). Order of evaluation is
/// unspecified under Exec::parallel; the conjunction is the same either way.
template <class Pred>
bool all_of_masks(mask_t count, Exec exec, Pred&& pred) {
#if defined(_OPENMP)
    if (exec == Exec::parallel) {
        bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(count); ++a) {
            if (ok) {
                ok = pred(static_cast<mask_t>(a));
            }
        }
        return ok;
    }
#else
    (void)exec;
#endif
    for (mask_t a = 0; a < count; ++a) {
        if (!pred(a)) {
            return false;
        }
    }
    return true;
}

/// Runs fn(mask) for every mask in [0, count). fn must write only to slots
/// owned by its mask.
template <class Fn>
void for_each_mask(mask_t count, Exec exec, Fn&& fn) {
#if defined(_OPENMP)
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(count); ++a) {
            fn(static_cast<mask_t>(a));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (mask_t a = 0; a < count; ++a) {
        fn(a);
    }
}

/// Runs fn(i) for every index in [0, count); same contract as for_each_mask.
template <class Fn>
void for_each_index(std::size_t count, Exec exec, Fn&& fn) {
#if defined(_OPENMP)
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) {
        fn(i);
    }
}

}  // namespace detail
}  // namespace plott
