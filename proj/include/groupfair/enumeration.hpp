#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "groupfair/model.hpp"

namespace groupfair {

inline constexpr std::uint64_t kDefaultMaxAllocations = 10'000'000;

// Shared knobs for every exhaustive scan. Results never depend on `threads`.
struct ScanOptions {
    std::uint64_t max_allocations = kDefaultMaxAllocations;
    int threads = 1;
};

// The space of all agent_count^item_count allocations in ascending base-n
// encoding order, item 0 being the lowest digit. Index 0 assigns every item
// to agent 0. Construction refuses spaces larger than the guard.
class AllocationSpace {
public:
    AllocationSpace(int agent_count, int item_count, std::uint64_t max_allocations);

    static AllocationSpace for_instance(const Instance& instance, const ScanOptions& options) {
        return AllocationSpace(instance.agent_count(), instance.item_count(),
                               options.max_allocations);
    }

    std::uint64_t size() const { return size_; }
    int agent_count() const { return agent_count_; }
    int item_count() const { return item_count_; }

    Allocation at(std::uint64_t index) const;
    void write_at(std::uint64_t index, Allocation& out) const;
    std::uint64_t index_of(const Allocation& allocation) const;

private:
    int agent_count_;
    int item_count_;
    std::uint64_t size_;
};

// Visits all k-subsets of {0,...,n-1} in lexicographic order of their member
// lists. The callback receives a reused ascending index vector.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> members(k);
    for (int i = 0; i < k; ++i) members[i] = i;
    while (true) {
        visit(const_cast<const std::vector<int>&>(members));
        int i = k - 1;
        while (i >= 0 && members[i] == n - k + i) --i;
        if (i < 0) return;
        ++members[i];
        for (int j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
    }
}

// Splits [0, count) into contiguous blocks, runs `block(begin, end)` on each,
// and folds the partial results in ascending block order. With any thread
// count the fold order is identical, so any associative first-in-order or
// min/max merge yields the same result as a sequential scan.
template <typename Result, typename BlockFn, typename MergeFn>
Result parallel_scan(std::uint64_t count, int threads, Result init, BlockFn block, MergeFn merge) {
    if (threads < 1) threads = 1;
    const std::uint64_t block_count =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), std::max<std::uint64_t>(count, 1));
    if (block_count <= 1) {
        return count == 0 ? init : merge(std::move(init), block(0, count));
    }
    std::vector<Result> partial(block_count, init);
    std::vector<std::thread> workers;
    workers.reserve(block_count);
    const std::uint64_t chunk = count / block_count;
    const std::uint64_t rest = count % block_count;
    std::uint64_t begin = 0;
    for (std::uint64_t b = 0; b < block_count; ++b) {
        const std::uint64_t end = begin + chunk + (b < rest ? 1 : 0);
        workers.emplace_back([&partial, &block, b, begin, end] { partial[b] = block(begin, end); });
        begin = end;
    }
    for (auto& w : workers) w.join();
    Result result = std::move(init);
    for (auto& p : partial) result = merge(std::move(result), std::move(p));
    return result;
}

}  // namespace groupfair
