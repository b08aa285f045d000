#include "groupfair/enumeration.hpp"

#include <gmpxx.h>

#include "groupfair/errors.hpp"

namespace groupfair {

AllocationSpace::AllocationSpace(int agent_count, int item_count, std::uint64_t max_allocations)
    : agent_count_(agent_count), item_count_(item_count) {
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(agent_count),
                  static_cast<unsigned long>(item_count));
    // Cap at 2^62 so indices stay representable even with a raised guard.
    const mpz_class hard_cap = mpz_class(1) << 62;
    const mpz_class limit(std::to_string(max_allocations));
    if (total > hard_cap || total > limit) {
        throw SizeLimitError(total.get_str(), max_allocations);
    }
    size_ = mpz_get_ui(total.get_mpz_t());
}

Allocation AllocationSpace::at(std::uint64_t index) const {
    Allocation out;
    out.assignment.resize(item_count_);
    write_at(index, out);
    return out;
}

void AllocationSpace::write_at(std::uint64_t index, Allocation& out) const {
    out.assignment.resize(item_count_);
    for (int i = 0; i < item_count_; ++i) {
        out.assignment[i] = static_cast<int>(index % agent_count_);
        index /= agent_count_;
    }
}

std::uint64_t AllocationSpace::index_of(const Allocation& allocation) const {
    std::uint64_t index = 0;
    for (int i = item_count_ - 1; i >= 0; --i) {
        index = index * agent_count_ + static_cast<std::uint64_t>(allocation.assignment[i]);
    }
    return index;
}

}  // namespace groupfair
