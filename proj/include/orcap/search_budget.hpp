#ifndef ORCAP_SEARCH_BUDGET_HPP
#define ORCAP_SEARCH_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <limits>

namespace orcap {

/// Node and wall-clock limits for the exact solvers. Exceeding either
/// turns the result inconclusive; it never silently degrades a bound.
struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();

    static SearchBudget unlimited() { return {}; }
    static SearchBudget of(std::uint64_t nodes, double seconds) { return {nodes, seconds}; }
};

enum class Feasibility { Satisfiable, Unsatisfiable, Inconclusive };

namespace detail {

class BudgetClock {
  public:
    explicit BudgetClock(const SearchBudget& b)
        : max_nodes_(b.max_nodes),
          deadline_(std::chrono::steady_clock::now() +
                    (b.max_seconds == std::numeric_limits<double>::infinity()
                         ? std::chrono::steady_clock::duration::max() / 2
                         : std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(b.max_seconds)))) {}

    /// Call once per search node; true once the budget ran out.
    bool tick() {
        ++nodes_;
        if (nodes_ > max_nodes_) exhausted_ = true;
        if (!exhausted_ && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline_)
            exhausted_ = true;
        return exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_;
    std::chrono::steady_clock::time_point deadline_;
    bool exhausted_ = false;
};

}  // namespace detail
}  // namespace orcap

#endif  // ORCAP_SEARCH_BUDGET_HPP
