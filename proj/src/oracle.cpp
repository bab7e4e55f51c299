#include "betasat/oracle.hpp"

#include "betasat/backdoor.hpp"
#include "betasat/errors.hpp"
#include "combinations.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

namespace betasat {

Verdict oracle_sat(const Formula& f, std::size_t max_vars) {
    const auto vars = f.variables();
    const std::size_t n = vars.size();
    if (n > max_vars)
        throw TooLargeError("truth-table oracle limited to " + std::to_string(max_vars) + " variables, got " +
                            std::to_string(n));

    // occurrences[i] = (clause, literal is negative) for vars[i]
    std::vector<std::vector<std::pair<std::size_t, bool>>> occurrences(n);
    const auto clauses = f.clauses();
    auto index_of = [&](Var v) {
        return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    };
    for (std::size_t ci = 0; ci < clauses.size(); ++ci)
        for (Lit l : clauses[ci]) occurrences[index_of(l.var())].emplace_back(ci, l.negated());

    // Start from all-false: negative literals are true.
    std::vector<bool> value(n, false);
    std::vector<std::size_t> true_count(clauses.size(), 0);
    std::size_t unsatisfied = 0;
    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
        for (Lit l : clauses[ci])
            if (l.negated()) ++true_count[ci];
        if (true_count[ci] == 0) ++unsatisfied;
    }

    auto make_model = [&] {
        Verdict v;
        v.status = Status::sat;
        Assignment tau;
        for (std::size_t i = 0; i < n; ++i) tau.set(vars[i], value[i]);
        v.model = tau;
        return v;
    };

    if (unsatisfied == 0) return make_model();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const auto i = static_cast<std::size_t>(std::countr_zero(k));
        value[i] = !value[i];
        for (auto [ci, negative] : occurrences[i]) {
            const bool now_true = value[i] != negative;
            if (now_true) {
                if (true_count[ci]++ == 0) --unsatisfied;
            } else {
                if (--true_count[ci] == 0) ++unsatisfied;
            }
        }
        if (unsatisfied == 0) return make_model();
    }
    Verdict v;
    v.status = Status::unsat;
    return v;
}

const char* to_string(Membership m) {
    switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non-member";
    case Membership::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::string encode(const Formula& f) {
    std::string key;
    for (const auto& c : f.clauses()) {
        for (Lit l : c) {
            const auto code = l.code();
            key.append(reinterpret_cast<const char*>(&code), sizeof code);
        }
        key.push_back('\xff');
        key.push_back('\xff');
        key.push_back('\xff');
        key.push_back('\xff');
    }
    return key;
}

class DpsSearch {
public:
    DpsSearch(std::uint64_t budget, bool memoize) : budget_(budget), memoize_(memoize) {}

    bool run(const Formula& f) {
        if (f.variables().empty()) return true;
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        std::string key;
        if (memoize_) {
            key = encode(f);
            if (failed_.count(key)) return false;
        }
        for (Var x : dp_simplicial_variables(f)) {
            path_.push_back(x);
            if (run(dp_eliminate(f, x))) return true;
            path_.pop_back();
            if (exhausted_) return false;
        }
        if (memoize_) failed_.insert(std::move(key));
        return false;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }
    const std::vector<Var>& path() const { return path_; }

private:
    std::uint64_t budget_;
    bool memoize_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Var> path_;
    std::unordered_set<std::string> failed_;
};

} // namespace

DpsMembership oracle_dps(const Formula& f, std::uint64_t node_budget, bool memoize) {
    DpsSearch search(node_budget, memoize);
    DpsMembership out;
    const bool found = search.run(f);
    out.nodes_explored = search.nodes();
    if (found) {
        out.status = Membership::member;
        EliminationOrdering w = search.path();
        for (Var v : f.variables())
            if (std::find(w.begin(), w.end(), v) == w.end()) w.push_back(v);
        out.witness = std::move(w);
    } else {
        out.status = search.exhausted() ? Membership::unknown : Membership::non_member;
    }
    return out;
}

HittingSet oracle_min_hitting_set(const SetFamily& s) {
    for (const auto& set : s.sets)
        if (set.empty()) throw NoHittingSetError();
    const auto& ground = s.universe;
    if (ground.size() > kHittingSetMaxUniverse)
        throw TooLargeError("hitting-set oracle limited to " + std::to_string(kHittingSetMaxUniverse) + " elements");

    HittingSet best;
    for (std::size_t k = 0; k <= ground.size(); ++k) {
        const bool found = detail::for_each_combination(ground.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<Element> pick;
            for (auto i : idx) pick.push_back(ground[i]);
            for (const auto& set : s.sets) {
                std::vector<Element> common;
                std::set_intersection(set.begin(), set.end(), pick.begin(), pick.end(), std::back_inserter(common));
                if (common.empty()) return false;
            }
            best = HittingSet{k, std::move(pick)};
            return true;
        });
        if (found) return best;
    }
    // Unreachable: the whole ground set hits every non-empty member.
    throw NoHittingSetError();
}

std::optional<std::vector<Var>> oracle_min_strong_backdoor(const Formula& f, std::size_t max_k) {
    const auto vars = f.variables();
    if (vars.size() > 32) throw TooLargeError("backdoor oracle limited to 32 variables");
    double work = 0;
    for (std::size_t k = 0; k <= std::min(max_k, vars.size()); ++k) work += detail::binomial(vars.size(), k) * std::ldexp(1.0, static_cast<int>(k));
    if (work > 5e7) throw TooLargeError("backdoor oracle search space too large");

    for (std::size_t k = 0; k <= std::min(max_k, vars.size()); ++k) {
        std::optional<std::vector<Var>> hit;
        detail::for_each_combination(vars.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<Var> b;
            for (auto i : idx) b.push_back(vars[i]);
            if (!is_strong_backdoor(f, b)) return false;
            hit = std::move(b);
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

} // namespace betasat
