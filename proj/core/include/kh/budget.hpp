#pragma once

#include <atomic>
#include <cstddef>
#include <string>

#include "kh/errors.hpp"

namespace kh {

// Shared memory accounting for one job. Workers on different bigradings
// reserve through the same instance; the counter is the synchronization
// point. Accounting is coarse (generator and matrix-entry estimates), not
// an allocator.
class MemoryBudget {
public:
    explicit MemoryBudget(std::size_t limit_bytes) : limit_(limit_bytes) {}

    std::size_t limit() const { return limit_; }
    std::size_t used() const { return used_.load(std::memory_order_relaxed); }

    // Throws budget_error when the reservation would exceed the limit.
    void reserve(std::size_t bytes, const std::string& what) {
        std::size_t prev = used_.fetch_add(bytes, std::memory_order_relaxed);
        if (prev + bytes > limit_) {
            used_.fetch_sub(bytes, std::memory_order_relaxed);
            throw budget_error("memory budget exceeded(" + std::to_string(limit_) +
                               " bytes) while allocating " + what);
        }
    }

    void reserve(std::size_t bytes, int a, int b, std::size_t count) {
        std::size_t prev = used_.fetch_add(bytes, std::memory_order_relaxed);
        if (prev + bytes > limit_) {
            used_.fetch_sub(bytes, std::memory_order_relaxed);
            throw budget_error("memory budget exceeded (" + std::to_string(limit_) +
                                   " bytes) at bigrading (" + std::to_string(a) + "," +
                                   std::to_string(b) + ") holding " + std::to_string(count) +
                                   " generators",
                               a, b, true);
        }
    }

    void release(std::size_t bytes) { used_.fetch_sub(bytes, std::memory_order_relaxed); }

private:
    std::size_t limit_;
    std::atomic<std::size_t> used_{0};
};

} // namespace kh
