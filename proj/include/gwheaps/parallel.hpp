#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gwheaps {

/// Threads used when a caller passes jobs = 0.
inline int default_jobs() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs body(i) for i in [0, count). jobs = 1 is the serial reference loop;
/// jobs > 1 (or 0 for the OpenMP default) spreads indices over threads.
/// Bodies must write only to their own index slot, so results do not depend
/// on jobs. The exception from the lowest failing index is rethrown.
template <class Body>
void for_each_replica(std::size_t count, int jobs, Body&& body) {
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::size_t error_index = count;
    std::mutex error_mutex;
    const int threads = jobs > 0 ? jobs : default_jobs();
    (void)threads;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (static_cast<std::size_t>(i) < error_index) {
                error_index = static_cast<std::size_t>(i);
                error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace gwheaps
