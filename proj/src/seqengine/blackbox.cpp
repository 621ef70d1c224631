#include "bbi/blackbox.hpp"

#include <utility>

namespace bbi {

BlackBoxMap::BlackBoxMap(std::size_t in_width, std::size_t out_width, std::string label, EvalFn fn)
    : in_width_(in_width), out_width_(out_width), label_(std::move(label)), fn_(std::move(fn)) {
    if (in_width == 0 || out_width == 0) throw std::invalid_argument("BlackBoxMap: widths must be >= 1");
    if (!fn_) throw std::invalid_argument("BlackBoxMap: empty evaluation function");
}

BitVec BlackBoxMap::operator()(const BitVec& x) const {
    if (x.width() != in_width_)
        throw std::invalid_argument("BlackBoxMap '" + label_ + "': input width " + std::to_string(x.width()) +
                                    ", expected " + std::to_string(in_width_));
    BitVec y = fn_(x);
    if (y.width() != out_width_)
        throw std::logic_error("BlackBoxMap '" + label_ + "': produced width " + std::to_string(y.width()) +
                               ", declared " + std::to_string(out_width_));
    return y;
}

BlackBoxMap counted(const BlackBoxMap& f, std::shared_ptr<std::atomic<std::uint64_t>> counter) {
    return BlackBoxMap(f.in_width(), f.out_width(), f.label(), [f, counter = std::move(counter)](const BitVec& x) {
        counter->fetch_add(1, std::memory_order_relaxed);
        return f(x);
    });
}

BlackBoxMap with_eval_budget(const BlackBoxMap& f, std::uint64_t max_evals) {
    auto used = std::make_shared<std::atomic<std::uint64_t>>(0);
    return BlackBoxMap(f.in_width(), f.out_width(), f.label(), [f, used, max_evals](const BitVec& x) {
        if (used->fetch_add(1, std::memory_order_relaxed) >= max_evals)
            throw EvalBudgetExceeded("map '" + f.label() + "' exceeded the evaluation budget of " +
                                     std::to_string(max_evals));
        return f(x);
    });
}

}  // namespace bbi
