#include "betasat/backdoor.hpp"

#include "betasat/errors.hpp"
#include "betasat/structure.hpp"
#include "combinations.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace betasat {

const char* to_string(BackdoorKind k) {
    return k == BackdoorKind::strong ? "strong" : "deletion";
}

namespace {

std::vector<Var> checked_set(const Formula& f, std::span<const Var> b) {
    std::vector<Var> out(b.begin(), b.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InvalidInputError("backdoor variables must be distinct");
    for (Var v : out)
        if (!f.mentions(v)) throw InvalidInputError("backdoor variable " + f.table().display_name(v) + " is not in var(F)");
    if (out.size() > kMaxBackdoorSize)
        throw TooLargeError("backdoor sets are limited to " + std::to_string(kMaxBackdoorSize) + " variables");
    return out;
}

Assignment assignment_from_bits(std::span<const Var> b, std::uint64_t bits) {
    Assignment tau;
    for (std::size_t i = 0; i < b.size(); ++i) tau.set(b[i], ((bits >> i) & 1u) != 0);
    return tau;
}

double search_work(std::size_t n, std::size_t max_k, bool strong) {
    double work = 0;
    for (std::size_t k = 0; k <= std::min(n, max_k); ++k)
        work += detail::binomial(n, k) * (strong ? std::ldexp(1.0, static_cast<int>(k)) : 1.0);
    return work;
}

template <typename Check>
std::optional<std::vector<Var>> search(const Formula& f, std::size_t max_k, const BackdoorSearchOptions& options,
                                       bool strong, Check&& check) {
    if (options.shard.count == 0 || options.shard.index >= options.shard.count)
        throw InvalidInputError("shard index must be below the shard count");
    const auto vars = f.variables();
    max_k = std::min(max_k, vars.size());
    if (strong && max_k > kMaxBackdoorSize) max_k = kMaxBackdoorSize;
    if (search_work(vars.size(), max_k, strong) > options.work_limit)
        throw TooLargeError("backdoor search space exceeds the work limit");

    for (std::size_t k = 0; k <= max_k; ++k) {
        std::optional<std::vector<Var>> hit;
        std::size_t rank = 0;
        detail::for_each_combination(vars.size(), k, [&](const std::vector<std::size_t>& idx) {
            if (rank++ % options.shard.count != options.shard.index) return false;
            std::vector<Var> b;
            b.reserve(k);
            for (auto i : idx) b.push_back(vars[i]);
            if (!check(b)) return false;
            hit = std::move(b);
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

} // namespace

BackdoorReport check_strong_backdoor(const Formula& f, std::span<const Var> b) {
    BackdoorReport report;
    report.kind = BackdoorKind::strong;
    report.variables = checked_set(f, b);
    const std::uint64_t total = std::uint64_t{1} << report.variables.size();
    report.verified = true;
    for (std::uint64_t t = 0; t < total; ++t) {
        ++report.reducts_checked;
        if (!is_beta_acyclic(apply_assignment(f, assignment_from_bits(report.variables, t)))) {
            report.verified = false;
            break;
        }
    }
    return report;
}

bool is_strong_backdoor(const Formula& f, std::span<const Var> b) {
    return check_strong_backdoor(f, b).verified;
}

bool is_deletion_backdoor(const Formula& f, std::span<const Var> b) {
    const auto set = checked_set(f, b);
    return is_beta_acyclic(remove_variables(f, set));
}

std::optional<std::vector<Var>> find_strong_backdoor(const Formula& f, std::size_t max_k,
                                                     const BackdoorSearchOptions& options) {
    return search(f, max_k, options, true, [&](const std::vector<Var>& b) { return is_strong_backdoor(f, b); });
}

std::optional<std::vector<Var>> find_deletion_backdoor(const Formula& f, std::size_t max_k,
                                                       const BackdoorSearchOptions& options) {
    return search(f, max_k, options, false, [&](const std::vector<Var>& b) { return is_deletion_backdoor(f, b); });
}

std::optional<std::vector<Var>> merge_shard_results(std::span<const std::optional<std::vector<Var>>> results) {
    std::optional<std::vector<Var>> best;
    for (const auto& r : results) {
        if (!r) continue;
        if (!best || r->size() < best->size() || (r->size() == best->size() && *r < *best)) best = r;
    }
    return best;
}

std::optional<std::vector<Var>> find_backdoor_parallel(const Formula& f, BackdoorKind kind, std::size_t max_k,
                                                       std::size_t jobs, double work_limit) {
    jobs = std::max<std::size_t>(jobs, 1);
    std::vector<std::optional<std::vector<Var>>> results(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto run = [&](std::size_t i) {
        try {
            BackdoorSearchOptions opts{SearchShard{i, jobs}, work_limit};
            results[i] = kind == BackdoorKind::strong ? find_strong_backdoor(f, max_k, opts)
                                                      : find_deletion_backdoor(f, max_k, opts);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t i = 0; i < jobs; ++i) threads.emplace_back(run, i);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return merge_shard_results(results);
}

Verdict solve_via_backdoor(const Formula& f, std::span<const Var> b, const BackdoorSolveOptions& options) {
    const auto set = checked_set(f, b);
    const std::uint64_t total = std::uint64_t{1} << set.size();
    const std::uint64_t mask = options.flip_mask & (total - 1);

    std::vector<Formula> reducts;
    reducts.reserve(total);
    for (std::uint64_t t = 0; t < total; ++t) {
        reducts.push_back(apply_assignment(f, assignment_from_bits(set, t)));
        if (!is_beta_acyclic(reducts.back())) throw NotABackdoorError();
    }

    for (std::uint64_t step = 0; step < total; ++step) {
        const std::uint64_t t = (options.reverse ? total - 1 - step : step) ^ mask;
        Verdict sub = solve_bac(reducts[t]);
        if (sub.status != Status::sat) continue;
        Assignment model = assignment_from_bits(set, t);
        for (Var v : f.variables()) {
            if (model.contains(v)) continue;
            model.set(v, sub.model->get(v).value_or(false));
        }
        Verdict v;
        v.status = Status::sat;
        v.model = std::move(model);
        v.ordering = std::move(sub.ordering);
        return v;
    }
    Verdict v;
    v.status = Status::unsat;
    return v;
}

} // namespace betasat
