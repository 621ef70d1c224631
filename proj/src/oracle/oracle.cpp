#include "bbi/oracle.hpp"

#include <string>

namespace bbi::oracle {

namespace {

void require_exhaustive(const BlackBoxMap& f, const char* what) {
    if (f.in_width() > kMaxExhaustiveWidth)
        throw std::invalid_argument(std::string(what) + ": input width " + std::to_string(f.in_width()) +
                                    " exceeds the exhaustive limit of 24");
}

}  // namespace

std::vector<BitVec> brute_force_invert(const BlackBoxMap& f, const BitVec& y) {
    require_exhaustive(f, "brute_force_invert");
    if (y.width() != f.out_width()) throw std::invalid_argument("brute_force_invert: y width does not match the map");
    std::vector<BitVec> out;
    const std::uint64_t size = std::uint64_t{1} << f.in_width();
    for (std::uint64_t v = 0; v < size; ++v) {
        BitVec x = BitVec::from_uint(v, f.in_width());
        if (f(x) == y) out.push_back(std::move(x));
    }
    return out;
}

OrbitProfile orbit_profile(const BlackBoxMap& f, const BitVec& y, std::uint64_t budget, bool store_terms) {
    if (!f.is_regular()) throw std::invalid_argument("orbit_profile: map is not regular");
    std::uint64_t used = 0;
    auto step = [&](const BitVec& v) {
        if (++used > budget) throw BudgetExhausted("orbit_profile: evaluation budget exhausted");
        return f(v);
    };

    // Brent: find the period.
    std::uint64_t power = 1;
    std::uint64_t lam = 1;
    BitVec tortoise = y;
    BitVec hare = step(y);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(hare);
        ++lam;
    }

    // Exact pre-period: hare leads by lam steps.
    OrbitProfile prof;
    prof.period = lam;
    tortoise = y;
    hare = y;
    for (std::uint64_t i = 0; i < lam; ++i) hare = step(hare);
    std::uint64_t mu = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++mu;
    }
    prof.preperiod = mu;

    if (store_terms) {
        std::vector<BitVec> terms;
        terms.reserve(mu + lam);
        terms.push_back(y);
        while (terms.size() < mu + lam) terms.push_back(step(terms.back()));
        prof.orbit_terms = std::move(terms);
    }
    return prof;
}

Gf2Poly full_period_minpoly(const BlackBoxMap& f, const BitVec& y) {
    const OrbitProfile prof = orbit_profile(f, y);
    if (!prof.periodic()) throw std::domain_error("full_period_minpoly: seed is pre-periodic");
    if (prof.period > (std::uint64_t{1} << 16)) throw std::domain_error("full_period_minpoly: period exceeds 2^16");
    const std::size_t n_period = prof.period;

    // Two periods, checked against each other.
    std::vector<BitVec> terms{y};
    while (terms.size() < 2 * n_period) terms.push_back(f(terms.back()));
    for (std::size_t k = 0; k < n_period; ++k)
        if (terms[k] != terms[k + n_period]) throw std::logic_error("full_period_minpoly: window is not periodic");

    const Gf2Poly xn1 = Gf2Poly::from_exponents({n_period, 0});
    Gf2Poly acc = Gf2Poly::one();
    for (std::size_t b = 0; b < y.width(); ++b) {
        Gf2Poly s;
        for (std::size_t k = 0; k < n_period; ++k)
            if (terms[k].get(b)) s.set_coeff((n_period - k) % n_period, true);
        if (s.is_zero()) continue;  // zero component: annihilated by everything
        const Gf2Poly comp = poly_divmod(xn1, poly_gcd(xn1, s)).first;
        acc = poly_lcm(acc, comp);
    }
    if (acc.degree() == 0) return Gf2Poly::from_exponents({1, 0});  // zero fixed point
    return acc;
}

FunctionalGraph functional_graph(const BlackBoxMap& f) {
    require_exhaustive(f, "functional_graph");
    if (!f.is_regular()) throw std::invalid_argument("functional_graph: map is not regular");
    const std::uint32_t size = std::uint32_t{1} << f.in_width();
    std::vector<std::uint32_t> succ(size);
    for (std::uint32_t v = 0; v < size; ++v)
        succ[v] = static_cast<std::uint32_t>(f(BitVec::from_uint(v, f.in_width())).to_uint());

    FunctionalGraph g;
    g.preperiod.assign(size, 0);
    g.period.assign(size, 0);
    // 0 = unvisited, 1 = on the current path, 2 = resolved
    std::vector<std::uint8_t> state(size, 0);
    std::vector<std::uint32_t> path;
    for (std::uint32_t start = 0; start < size; ++start) {
        if (state[start] != 0) continue;
        path.clear();
        std::uint32_t v = start;
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = succ[v];
        }
        std::size_t tail_end = path.size();
        std::uint32_t base_pre = 0;
        std::uint32_t period = 0;
        if (state[v] == 1) {
            // new cycle starting at v
            std::size_t pos = 0;
            while (path[pos] != v) ++pos;
            period = static_cast<std::uint32_t>(path.size() - pos);
            for (std::size_t i = pos; i < path.size(); ++i) {
                g.preperiod[path[i]] = 0;
                g.period[path[i]] = period;
                state[path[i]] = 2;
            }
            tail_end = pos;
        } else {
            base_pre = g.preperiod[v];
            period = g.period[v];
        }
        for (std::size_t i = tail_end; i-- > 0;) {
            g.preperiod[path[i]] = base_pre + static_cast<std::uint32_t>(tail_end - i);
            g.period[path[i]] = period;
            state[path[i]] = 2;
        }
    }
    return g;
}

}  // namespace bbi::oracle
