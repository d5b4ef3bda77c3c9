#ifndef ROBUSTPD_SEARCH_HPP
#define ROBUSTPD_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "robustpd/error.hpp"
#include "robustpd/vertex_set.hpp"

namespace robustpd {

/// Knobs shared by every exhaustive search.
struct SearchControl {
    using Clock = std::chrono::steady_clock;

    unsigned jobs = 1;
    std::optional<Clock::time_point> deadline;

    static SearchControl with_timeout(double seconds, unsigned jobs = 1) {
        SearchControl c;
        c.jobs = jobs;
        c.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
        return c;
    }
    [[nodiscard]] bool expired() const { return deadline && Clock::now() >= *deadline; }
};

namespace detail {

/// Calls f(subset) for every `size`-subset of `pool` in lexicographic order
/// of positions. Stops early and returns true once f returns true.
template <typename F>
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t size, F&& f) {
    if (size > pool.size()) return false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (auto i : idx) s.insert(pool[i]);
        if (f(s)) return true;
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == pool.size() - size + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Cheap deadline polling for tight loops: reads the clock on the first call
/// and every 1024th call after it.
class DeadlineTicker {
public:
    explicit DeadlineTicker(const SearchControl& control) : control_(control) {}
    [[nodiscard]] bool expired() {
        if (!control_.deadline) return false;
        if (ticks_++ % 1024 != 0) return false;
        return control_.expired();
    }

private:
    const SearchControl& control_;
    std::size_t ticks_ = 0;
};

struct DeadlineHit {};

/// Evaluates branches 0..branches-1 and returns the result of the lowest
/// branch index that produced one. Branch order must match the order in which
/// a sequential search would visit them, so the answer does not depend on
/// `jobs`. Each worker owns one State created by make_state().
///
/// eval(state, branch, abandon) returns std::optional<Result>; abandon() turns
/// true once a lower branch has a result, and eval may then give up early.
/// eval may throw DeadlineHit to signal expiry.
template <typename Result, typename MakeState, typename Eval>
std::optional<Result> first_hit(std::size_t branches, unsigned jobs, MakeState make_state, Eval eval) {
    if (jobs <= 1 || branches <= 1) {
        auto state = make_state();
        for (std::size_t b = 0; b < branches; ++b) {
            auto r = eval(state, b, [] { return false; });
            if (r) return r;
        }
        return std::nullopt;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{branches};
    std::mutex mu;
    std::optional<Result> best_result;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            auto state = make_state();
            while (true) {
                std::size_t b = next.fetch_add(1);
                if (b >= branches || b > best.load()) return;
                auto abandon = [&] { return best.load() < b; };
                auto r = eval(state, b, abandon);
                if (!r) continue;
                std::lock_guard lock(mu);
                if (b < best.load()) {
                    best.store(b);
                    best_result = std::move(r);
                }
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            best.store(0);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return best_result;
}

} // namespace detail
} // namespace robustpd

#endif
