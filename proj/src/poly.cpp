#include "berge/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace berge {

uint64_t monomial_count(uint32_t nvars, uint32_t degree) {
    if (nvars < 1) throw std::invalid_argument("monomial_count requires nvars >= 1");
    return binomial(static_cast<uint64_t>(nvars) + degree, degree);
}

MonomialBasis::MonomialBasis(uint32_t nvars, uint32_t degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw std::invalid_argument("monomial basis requires nvars >= 1");
    if (degree > 255) throw std::invalid_argument("monomial basis supports degree <= 255");
    uint64_t count = monomial_count(nvars, degree);
    flat_.reserve(count * nvars);

    std::vector<uint8_t> exps(nvars, 0);
    // Ascending total degree; within one degree, ascending lex on the tuple.
    for (uint32_t g = 0; g <= degree; ++g) {
        auto emit = [&](auto&& self, uint32_t pos, uint32_t remaining) -> void {
            if (pos + 1 == nvars) {
                exps[pos] = static_cast<uint8_t>(remaining);
                flat_.insert(flat_.end(), exps.begin(), exps.end());
                return;
            }
            for (uint32_t a = 0; a <= remaining; ++a) {
                exps[pos] = static_cast<uint8_t>(a);
                self(self, pos + 1, remaining - a);
            }
        };
        emit(emit, 0, g);
    }
}

MultiPoly zero_poly(uint64_t p, uint32_t nvars, uint32_t degree) {
    require_prime_modulus(p);
    auto basis = std::make_shared<const MonomialBasis>(nvars, degree);
    std::vector<uint64_t> coeffs(basis->size(), 0);
    return MultiPoly{std::move(basis), p, std::move(coeffs)};
}

MultiPoly sample_uniform(std::shared_ptr<const MonomialBasis> basis, uint64_t p, Rng& rng) {
    require_prime_modulus(p);
    std::vector<uint64_t> coeffs(basis->size());
    for (auto& c : coeffs) c = rng.below(p);
    return MultiPoly{std::move(basis), p, std::move(coeffs)};
}

MultiPoly sample_uniform(uint64_t p, uint32_t nvars, uint32_t degree, Rng& rng) {
    return sample_uniform(std::make_shared<const MonomialBasis>(nvars, degree), p, rng);
}

namespace {

// Fills powers[v*(degree+1) + e] = x_v^e for the given point.
void fill_power_table(std::span<const uint64_t> point, uint64_t p, uint32_t degree,
                      std::vector<uint64_t>& powers) {
    uint32_t cols = degree + 1;
    for (size_t v = 0; v < point.size(); ++v) {
        uint64_t x = point[v] % p;
        uint64_t* row = powers.data() + v * cols;
        row[0] = 1 % p;
        for (uint32_t e = 1; e <= degree; ++e) row[e] = gf::mul(row[e - 1], x, p);
    }
}

uint64_t eval_with_table(const MultiPoly& f, const std::vector<uint64_t>& powers) {
    const auto& basis = *f.basis;
    uint64_t p = f.modulus;
    uint32_t cols = f.degree() + 1;
    uint64_t acc = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        uint64_t c = f.coeffs[i];
        if (c == 0) continue;
        auto exps = basis.exponents(i);
        uint64_t term = c;
        for (size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] != 0) term = gf::mul(term, powers[v * cols + exps[v]], p);
        }
        acc = gf::add(acc, term, p);
    }
    return acc;
}

}  // namespace

FieldElement evaluate(const MultiPoly& f, std::span<const uint64_t> point) {
    if (point.size() != f.nvars()) {
        throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) +
                                    " coordinates, polynomial has " + std::to_string(f.nvars()));
    }
    std::vector<uint64_t> powers(static_cast<size_t>(f.nvars()) * (f.degree() + 1));
    fill_power_table(point, f.modulus, f.degree(), powers);
    return FieldElement{eval_with_table(f, powers), f.modulus};
}

std::vector<FieldElement> evaluate_batch(const MultiPoly& f,
                                         const std::vector<std::vector<uint64_t>>& points) {
    std::vector<FieldElement> out;
    out.reserve(points.size());
    std::vector<uint64_t> powers(static_cast<size_t>(f.nvars()) * (f.degree() + 1));
    for (const auto& point : points) {
        if (point.size() != f.nvars()) {
            throw std::invalid_argument("evaluate_batch: point dimension mismatch");
        }
        fill_power_table(point, f.modulus, f.degree(), powers);
        out.push_back(FieldElement{eval_with_table(f, powers), f.modulus});
    }
    return out;
}

void evaluate_batch_flat(const MultiPoly& f, std::span<const uint64_t> points,
                         std::span<uint64_t> out, unsigned workers) {
    uint32_t nvars = f.nvars();
    if (points.size() != out.size() * nvars) {
        throw std::invalid_argument("evaluate_batch_flat: flat point array size mismatch");
    }
    size_t npoints = out.size();
    auto run = [&](size_t lo, size_t hi) {
        std::vector<uint64_t> powers(static_cast<size_t>(nvars) * (f.degree() + 1));
        for (size_t i = lo; i < hi; ++i) {
            fill_power_table(points.subspan(i * nvars, nvars), f.modulus, f.degree(), powers);
            out[i] = eval_with_table(f, powers);
        }
    };
    if (workers <= 1 || npoints < 1024) {
        run(0, npoints);
        return;
    }
    std::vector<std::thread> pool;
    size_t per = (npoints + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = std::min(npoints, w * per);
        size_t hi = std::min(npoints, lo + per);
        if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
}

namespace {

// Per-level substitution plan: folding the top variable of a v-variable
// polynomial maps monomial i to plan[i].first in the (v-1)-variable basis,
// scaled by a^{plan[i].second}.
struct FoldPlans {
    std::vector<MonomialBasis> bases;                               // bases[v-1]: v variables
    std::vector<std::vector<std::pair<uint32_t, uint8_t>>> plans;   // plans[v-1], valid for v >= 2

    FoldPlans(uint32_t nvars, uint32_t degree) {
        bases.reserve(nvars);
        for (uint32_t v = 1; v <= nvars; ++v) bases.emplace_back(v, degree);
        plans.resize(nvars);
        for (uint32_t v = 2; v <= nvars; ++v) {
            const auto& big = bases[v - 1];
            const auto& small = bases[v - 2];
            std::unordered_map<std::string, uint32_t> index;
            index.reserve(small.size());
            for (size_t i = 0; i < small.size(); ++i) {
                auto e = small.exponents(i);
                index.emplace(std::string(reinterpret_cast<const char*>(e.data()), e.size()),
                              static_cast<uint32_t>(i));
            }
            auto& plan = plans[v - 1];
            plan.resize(big.size());
            for (size_t i = 0; i < big.size(); ++i) {
                auto e = big.exponents(i);
                std::string prefix(reinterpret_cast<const char*>(e.data()), e.size() - 1);
                plan[i] = {index.at(prefix), e[e.size() - 1]};
            }
        }
    }
};

class GridEvaluator {
public:
    GridEvaluator(const MultiPoly& f) : f_(f), p_(f.modulus), plans_(f.nvars(), f.degree()) {
        uint32_t cols = f.degree() + 1;
        pow_table_.resize(p_ * cols);
        for (uint64_t a = 0; a < p_; ++a) {
            uint64_t* row = pow_table_.data() + a * cols;
            row[0] = 1 % p_;
            for (uint32_t e = 1; e < cols; ++e) row[e] = gf::mul(row[e - 1], a, p_);
        }
        strides_.resize(f.nvars() + 1);
        strides_[0] = 1;
        for (uint32_t v = 1; v <= f.nvars(); ++v) strides_[v] = strides_[v - 1] * p_;
    }

    void run(std::span<uint64_t> out, unsigned workers) {
        uint32_t nvars = f_.nvars();
        // Task granularity: fix the top `levels` variables so every worker
        // gets several independent subgrids.
        uint32_t levels = 0;
        if (workers > 1) {
            while (levels < nvars - 1 && strides_[levels] < 4ull * workers) ++levels;
        }
        uint64_t tasks = strides_[levels];
        uint64_t stride = strides_[nvars - levels];

        auto run_range = [&](uint64_t lo, uint64_t hi) {
            Scratch scratch(plans_);
            for (uint64_t task = lo; task < hi; ++task) {
                // Fold the top `levels` variables one by one for this prefix.
                const std::vector<uint64_t>* current = &f_.coeffs;
                for (uint32_t j = 0; j < levels; ++j) {
                    uint32_t v = nvars - j;  // variables remaining before this fold
                    uint64_t digit = (task / strides_[levels - 1 - j]) % p_;
                    fold_once(v, *current, digit, scratch.levels[v - 2]);
                    current = &scratch.levels[v - 2];
                }
                descend(nvars - levels, *current, out.subspan(task * stride, stride), scratch);
            }
        };

        if (workers <= 1 || tasks == 1) {
            run_range(0, tasks);
            return;
        }
        std::vector<std::thread> pool;
        uint64_t per = (tasks + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            uint64_t lo = std::min<uint64_t>(tasks, w * per);
            uint64_t hi = std::min<uint64_t>(tasks, lo + per);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

private:
    struct Scratch {
        // levels[v-1] holds a coefficient buffer for a v-variable polynomial.
        std::vector<std::vector<uint64_t>> levels;
        explicit Scratch(const FoldPlans& plans) {
            levels.resize(plans.bases.size());
            for (size_t v = 1; v <= plans.bases.size(); ++v) levels[v - 1].resize(plans.bases[v - 1].size());
        }
    };

    // Substitute x_{v-1} = a in a v-variable coefficient vector.
    void fold_once(uint32_t v, const std::vector<uint64_t>& coeffs, uint64_t a,
                   std::vector<uint64_t>& out) const {
        const auto& plan = plans_.plans[v - 1];
        const uint64_t* pow_row = pow_table_.data() + a * (f_.degree() + 1);
        std::fill(out.begin(), out.end(), 0);
        for (size_t i = 0; i < plan.size(); ++i) {
            uint64_t c = coeffs[i];
            if (c == 0) continue;
            auto [target, exp] = plan[i];
            out[target] = gf::add(out[target], gf::mul(c, pow_row[exp], p_), p_);
        }
    }

    void descend(uint32_t v, const std::vector<uint64_t>& coeffs, std::span<uint64_t> out,
                 Scratch& scratch) const {
        if (v == 1) {
            // Univariate: basis index equals the exponent.
            for (uint64_t a = 0; a < p_; ++a) {
                const uint64_t* pow_row = pow_table_.data() + a * (f_.degree() + 1);
                uint64_t acc = 0;
                for (size_t e = 0; e < coeffs.size(); ++e) {
                    if (coeffs[e] != 0) acc = gf::add(acc, gf::mul(coeffs[e], pow_row[e], p_), p_);
                }
                out[a] = acc;
            }
            return;
        }
        uint64_t stride = strides_[v - 1];
        for (uint64_t a = 0; a < p_; ++a) {
            // Deeper levels only write buffers below v-2, so the child buffer
            // stays intact for the whole subtree.
            auto& child = scratch.levels[v - 2];
            fold_once(v, coeffs, a, child);
            descend(v - 1, child, out.subspan(a * stride, stride), scratch);
        }
    }

    const MultiPoly& f_;
    uint64_t p_;
    FoldPlans plans_;
    std::vector<uint64_t> pow_table_;
    std::vector<uint64_t> strides_;
};

}  // namespace

void evaluate_grid(const MultiPoly& f, std::span<uint64_t> out, unsigned workers) {
    uint64_t expected = checked_pow(f.modulus, f.nvars());
    if (out.size() != expected) {
        throw std::invalid_argument("evaluate_grid: output span must have p^nvars entries");
    }
    GridEvaluator(f).run(out, workers);
}

}  // namespace berge
