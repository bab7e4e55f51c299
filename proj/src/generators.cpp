#include "betasat/generators.hpp"

#include "betasat/errors.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace betasat {

std::optional<Family> family_from_string(std::string_view name) {
    if (name == "fa") return Family::fa;
    if (name == "fs") return Family::fs;
    if (name == "fc") return Family::fc;
    if (name == "fac") return Family::fac;
    return std::nullopt;
}

const char* to_string(Family f) {
    switch (f) {
    case Family::fa: return "fa";
    case Family::fs: return "fs";
    case Family::fc: return "fc";
    case Family::fac: return "fac";
    }
    return "?";
}

namespace {

std::vector<std::string> numbered(std::string_view prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

/// Full clause number j (0-based) over variables first..first+n-1.
std::vector<Lit> full_clause(std::size_t j, std::size_t n, Var first = 0) {
    std::vector<Lit> lits;
    for (std::size_t i = 0; i < n; ++i) lits.emplace_back(static_cast<Var>(first + i), ((j >> i) & 1u) != 0);
    return lits;
}

Formula from_table(const std::vector<std::string>& names, std::vector<std::vector<Lit>> clauses) {
    std::vector<Clause> out;
    out.reserve(clauses.size());
    for (auto& c : clauses) out.push_back(Clause::make(std::move(c)));
    return Formula(VariableTable::named(names), std::move(out));
}

void append_selection_block(std::vector<std::vector<Lit>>& out, Var z, Var x1, Var x2) {
    out.push_back({Lit::pos(z), Lit::pos(x1), Lit::neg(x2)});
    out.push_back({Lit::pos(z), Lit::neg(x1), Lit::pos(x2)});
    out.push_back({Lit::pos(z), Lit::neg(x1), Lit::neg(x2)});
    out.push_back({Lit::neg(z), Lit::pos(x1), Lit::pos(x2)});
    out.push_back({Lit::neg(z), Lit::neg(x1), Lit::neg(x2)});
}

/// F^{=1}(xs; zs) with |zs| = |xs| - 1.
void append_exactly_one(std::vector<std::vector<Lit>>& out, const std::vector<Var>& xs, const std::vector<Var>& zs) {
    const std::size_t m = xs.size();
    if (m == 1) {
        out.push_back({Lit::pos(xs[0])});
        return;
    }
    append_selection_block(out, zs[0], xs[0], xs[1]);
    for (std::size_t i = 1; i + 1 < m; ++i) append_selection_block(out, zs[i], zs[i - 1], xs[i + 1]);
    out.push_back({Lit::pos(zs[m - 2])});
}

/// Uniform value in [0, bound) by rejection from raw 64-bit outputs.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        const std::uint64_t r = rng();
        if (r < limit) return r % bound;
    }
}

} // namespace

Formula gen_family(Family family, std::size_t n) {
    const bool exponential = family == Family::fa || family == Family::fac;
    const std::size_t min_n = (family == Family::fc || family == Family::fac) ? 3 : 1;
    if (n < min_n)
        throw OutOfRangeError(std::string(to_string(family)) + " needs n >= " + std::to_string(min_n));
    if (exponential && n > kMaxExponentialFamilyN)
        throw OutOfRangeError(std::string(to_string(family)) + " is limited to n <= " +
                              std::to_string(kMaxExponentialFamilyN));

    std::vector<std::vector<Lit>> clauses;
    switch (family) {
    case Family::fa:
        for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) clauses.push_back(full_clause(j, n));
        return from_table(numbered("x", n), std::move(clauses));
    case Family::fs: {
        const std::size_t h = (n + 1) / 2;
        std::vector<Lit> first, second;
        for (std::size_t i = 0; i < h; ++i) first.push_back(Lit::pos(static_cast<Var>(i)));
        for (std::size_t i = h - 1; i < n; ++i) second.push_back(Lit::pos(static_cast<Var>(i)));
        clauses.push_back(std::move(first));
        clauses.push_back(std::move(second));
        return from_table(numbered("x", n), std::move(clauses));
    }
    case Family::fc:
        for (std::size_t i = 0; i < n; ++i)
            clauses.push_back({Lit::pos(static_cast<Var>(i)), Lit::neg(static_cast<Var>((i + 1) % n))});
        return from_table(numbered("x", n), std::move(clauses));
    case Family::fac: {
        const std::size_t count = std::size_t{1} << n;
        auto names = numbered("x", n);
        auto ys = numbered("y", count);
        names.insert(names.end(), ys.begin(), ys.end());
        auto y = [&](std::size_t j) { return static_cast<Var>(n + (j % count)); }; // 0-based j
        for (std::size_t j = 0; j < count; ++j) {
            auto a = full_clause(j, n);
            a.push_back(Lit::pos(y(j + count - 1)));
            a.push_back(Lit::neg(y(j)));
            clauses.push_back(std::move(a));
            auto b = full_clause(j, n);
            b.push_back(Lit::pos(y(j)));
            b.push_back(Lit::pos(y(j + 1)));
            clauses.push_back(std::move(b));
        }
        return from_table(names, std::move(clauses));
    }
    }
    throw OutOfRangeError("unknown family");
}

Formula fixture_example() {
    enum : Var { y, b, bp, bs, c, z };
    const std::vector<std::string> names{"y", "b", "b'", "b*", "c", "z"};
    auto P = Lit::pos;
    auto N = Lit::neg;
    return from_table(names, {
                                 {P(y), P(b), P(bs), P(c)},
                                 {P(y), N(b)},
                                 {P(y), N(b), P(bp), P(z)},
                                 {N(y), P(b), P(bp), N(c)},
                                 {N(y), N(b)},
                                 {N(y), N(b), P(bs), N(z)},
                                 {N(b), P(bp)},
                                 {N(b), P(z)},
                                 {N(b), N(z)},
                                 {P(bp), P(bs), P(c)},
                                 {P(bp), P(bs), N(c)},
                                 {P(bp), N(bs)},
                                 {N(bp), P(bs)},
                             });
}

Formula gen_dps_gadget(const Formula& f) {
    if (f.empty()) throw InvalidInputError("the gadget needs at least one clause");
    if (f.contains_empty_clause()) throw InvalidInputError("the gadget is undefined for the empty clause");
    const auto xs = f.variables();
    const std::size_t n = xs.size();
    const std::size_t m = f.size();

    auto names = numbered("y", n);
    for (auto& s : numbered("z", n)) names.push_back(s);
    for (auto& s : numbered("c", m)) names.push_back(s);
    names.insert(names.end(), {"b", "b'", "b*"});
    auto y = [](std::size_t i) { return static_cast<Var>(i); };
    auto z = [n](std::size_t i) { return static_cast<Var>(n + i); };
    auto c = [n](std::size_t j) { return static_cast<Var>(2 * n + j); };
    const Var b = static_cast<Var>(2 * n + m), bp = b + 1, bs = b + 2;
    auto index_of = [&](Var x) {
        return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    };

    std::vector<std::vector<Lit>> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({Lit::pos(y(i)), Lit::neg(b)});
        out.push_back({Lit::neg(y(i)), Lit::neg(b)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({Lit::pos(z(i)), Lit::neg(b)});
        out.push_back({Lit::neg(z(i)), Lit::neg(b)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({Lit::pos(y(i)), Lit::pos(z(i)), Lit::neg(b), Lit::pos(bp)});
        out.push_back({Lit::neg(y(i)), Lit::neg(z(i)), Lit::neg(b), Lit::pos(bs)});
    }
    for (std::size_t j = 0; j < m; ++j) {
        out.push_back({Lit::pos(c(j)), Lit::pos(bp), Lit::pos(bs)});
        out.push_back({Lit::neg(c(j)), Lit::pos(bp), Lit::pos(bs)});
    }
    const auto clauses = f.clauses();
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Lit> d;
        for (Lit l : clauses[j]) {
            const auto i = index_of(l.var());
            d.push_back(Lit::pos(l.negated() ? z(i) : y(i)));
        }
        std::vector<Lit> rest{Lit::pos(c(j))};
        for (std::size_t k = 0; k < m; ++k)
            if (k != j) rest.push_back(Lit::neg(c(k)));
        rest.push_back(Lit::pos(b));

        auto first = d;
        first.insert(first.end(), rest.begin(), rest.end());
        first.push_back(Lit::pos(bs));
        out.push_back(std::move(first));

        std::vector<Lit> second;
        for (Lit l : d) second.push_back(~l);
        second.insert(second.end(), rest.begin(), rest.end());
        second.push_back(Lit::pos(bp));
        out.push_back(std::move(second));
    }
    out.push_back({Lit::neg(b), Lit::pos(bp)});
    out.push_back({Lit::neg(bp), Lit::pos(bs)});
    out.push_back({Lit::pos(bp), Lit::neg(bs)});
    return from_table(names, std::move(out));
}

EliminationOrdering dps_gadget_ordering(const Formula& f, const Assignment& tau, const Formula& gadget) {
    const auto& table = gadget.table();
    auto lookup = [&](const std::string& name) {
        auto v = table.find(name);
        if (!v) throw InvalidInputError("gadget has no variable " + name);
        return *v;
    };
    const std::size_t n = f.variables().size();
    EliminationOrdering first, last;
    for (std::size_t i = 0; i < n; ++i) {
        const bool value = tau.get(f.variables()[i]).value_or(false);
        const auto yi = lookup("y" + std::to_string(i + 1));
        const auto zi = lookup("z" + std::to_string(i + 1));
        first.push_back(value ? yi : zi);
        last.push_back(value ? zi : yi);
    }
    first.push_back(lookup("b"));
    for (std::size_t j = 0; j < f.size(); ++j) first.push_back(lookup("c" + std::to_string(j + 1)));
    first.push_back(lookup("b'"));
    first.push_back(lookup("b*"));
    first.insert(first.end(), last.begin(), last.end());
    return first;
}

Formula gen_backdoor_gadget(const SetFamily& s) {
    for (const auto& set : s.sets)
        if (set.empty()) throw InvalidInputError("set family members must be non-empty");
    const auto& ground = s.universe;
    std::vector<std::string> names;
    for (Element e : ground) names.push_back("x" + std::to_string(e));
    const Var base = static_cast<Var>(ground.size());
    for (std::size_t i = 1; i <= s.sets.size(); ++i) {
        names.push_back("h" + std::to_string(i) + "^1");
        names.push_back("h" + std::to_string(i) + "^2");
    }
    auto x = [&](Element e) {
        auto it = std::lower_bound(ground.begin(), ground.end(), e);
        if (it == ground.end() || *it != e) throw InvalidInputError("set member outside the ground set");
        return static_cast<Var>(it - ground.begin());
    };

    std::vector<std::vector<Lit>> out;
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        const Var h1 = base + static_cast<Var>(2 * i), h2 = h1 + 1;
        out.push_back({Lit::pos(h1), Lit::pos(h2)});
        std::vector<Lit> c1{Lit::pos(h1)};
        std::vector<Lit> c2{Lit::pos(h2)};
        for (Element e : ground) {
            const bool in = std::binary_search(s.sets[i].begin(), s.sets[i].end(), e);
            c1.push_back(in ? Lit::pos(x(e)) : Lit::neg(x(e)));
            c2.push_back(Lit::neg(x(e)));
        }
        for (Element e : s.sets[i]) x(e);
        out.push_back(std::move(c1));
        out.push_back(std::move(c2));
    }
    return from_table(names, std::move(out));
}

Formula gen_clique_gadget(const KPartiteGraph& g) {
    const std::size_t k = g.k();
    if (k < 2) throw BadKError("the clique gadget needs k >= 2");
    const std::size_t n = g.class_sizes.front();
    if (n == 0 || std::any_of(g.class_sizes.begin(), g.class_sizes.end(), [n](std::size_t s) { return s != n; }))
        throw NotBalancedError("all partition classes must have the same non-zero size");

    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= n; ++j) names.push_back("v" + std::to_string(j) + "^" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j < n; ++j) names.push_back("z" + std::to_string(j) + "^" + std::to_string(i));
    auto v = [n](KVertex u) { return static_cast<Var>(u.cls * n + u.index); };
    auto z = [n, k](std::size_t cls, std::size_t j) { return static_cast<Var>(k * n + cls * (n - 1) + j); };

    std::vector<std::vector<Lit>> out;
    for (std::size_t ci = 0; ci < k; ++ci) {
        for (std::size_t cj = ci + 1; cj < k; ++cj) {
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    const KVertex u{ci, a}, w{cj, b};
                    if (g.adjacent(u, w)) continue;
                    std::vector<Lit> c{Lit::neg(v(u)), Lit::neg(v(w))};
                    for (std::size_t t = 0; t < n; ++t) {
                        if (t != a) c.push_back(Lit::pos(v({ci, t})));
                        if (t != b) c.push_back(Lit::pos(v({cj, t})));
                    }
                    out.push_back(std::move(c));
                }
            }
        }
    }
    for (std::size_t ci = 0; ci < k; ++ci) {
        std::vector<Var> xs, zs;
        for (std::size_t t = 0; t < n; ++t) xs.push_back(v({ci, t}));
        for (std::size_t t = 0; t + 1 < n; ++t) zs.push_back(z(ci, t));
        append_exactly_one(out, xs, zs);
    }
    return from_table(names, std::move(out));
}

Formula gen_selection_block() {
    std::vector<std::vector<Lit>> out;
    append_selection_block(out, 0, 1, 2);
    return from_table({"z", "x1", "x2"}, std::move(out));
}

Formula gen_exactly_one(std::size_t m) {
    if (m == 0) throw OutOfRangeError("F^{=1} needs at least one variable");
    auto names = numbered("x", m);
    for (auto& s : numbered("z", m - 1)) names.push_back(s);
    std::vector<Var> xs, zs;
    for (std::size_t i = 0; i < m; ++i) xs.push_back(static_cast<Var>(i));
    for (std::size_t i = 0; i + 1 < m; ++i) zs.push_back(static_cast<Var>(m + i));
    std::vector<std::vector<Lit>> out;
    append_exactly_one(out, xs, zs);
    return from_table(names, std::move(out));
}

Formula gen_backdoor_gap(std::size_t p) {
    if (p == 0) throw OutOfRangeError("the gap family needs p >= 1");
    auto names = numbered("x", p);
    for (auto& s : numbered("y", p)) names.push_back(s);
    for (auto& s : numbered("z", p)) names.push_back(s);
    std::vector<Lit> c1, c2, c3;
    for (std::size_t i = 0; i < p; ++i) {
        const auto x = static_cast<Var>(i), y = static_cast<Var>(p + i), z = static_cast<Var>(2 * p + i);
        c1.insert(c1.end(), {Lit::pos(x), Lit::pos(y)});
        c2.insert(c2.end(), {Lit::neg(y), Lit::pos(z)});
        c3.insert(c3.end(), {Lit::pos(x), Lit::pos(z)});
    }
    return from_table(names, {std::move(c1), std::move(c2), std::move(c3)});
}

Formula gen_random(const RandomProfile& profile) {
    VariableTable table(profile.vars);
    std::vector<Clause> clauses;
    const std::size_t width = std::min(profile.width, profile.vars);
    if (width > 0) {
        std::mt19937_64 rng(profile.seed);
        std::vector<Var> pool(profile.vars);
        for (std::size_t c = 0; c < profile.clauses; ++c) {
            const std::size_t len = 1 + bounded(rng, width);
            for (std::size_t i = 0; i < profile.vars; ++i) pool[i] = static_cast<Var>(i);
            std::vector<Lit> lits;
            // Partial Fisher-Yates for distinct variables.
            for (std::size_t i = 0; i < len; ++i) {
                const std::size_t j = i + bounded(rng, profile.vars - i);
                std::swap(pool[i], pool[j]);
                lits.emplace_back(pool[i], (rng() & 1u) != 0);
            }
            clauses.push_back(Clause::make(std::move(lits)));
        }
    }
    return Formula(std::move(table), std::move(clauses));
}

} // namespace betasat
