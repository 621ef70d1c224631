#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "bbi/bitvec.hpp"

namespace bbi {

/// Opaque map F: GF(2)^in_width -> GF(2)^out_width.
///
/// The wrapped function must be deterministic and safe to call concurrently;
/// every target in this library satisfies both.
class BlackBoxMap {
public:
    using EvalFn = std::function<BitVec(const BitVec&)>;

    BlackBoxMap(std::size_t in_width, std::size_t out_width, std::string label, EvalFn fn);

    /// Checks the input width and the produced output width.
    BitVec operator()(const BitVec& x) const;

    std::size_t in_width() const noexcept { return in_width_; }
    std::size_t out_width() const noexcept { return out_width_; }
    const std::string& label() const noexcept { return label_; }
    bool is_regular() const noexcept { return in_width_ == out_width_; }
    bool is_embedding() const noexcept { return out_width_ > in_width_; }

private:
    std::size_t in_width_;
    std::size_t out_width_;
    std::string label_;
    EvalFn fn_;
};

struct EvalBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Same map, incrementing `counter` on every evaluation.
BlackBoxMap counted(const BlackBoxMap& f, std::shared_ptr<std::atomic<std::uint64_t>> counter);

/// Same map, throwing EvalBudgetExceeded once more than `max_evals`
/// evaluations have been made through the returned object (and its copies).
BlackBoxMap with_eval_budget(const BlackBoxMap& f, std::uint64_t max_evals);

}  // namespace bbi
