#pragma once

#include "betasat/formula.hpp"
#include "betasat/instances.hpp"
#include "betasat/structure.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace betasat {

enum class Family { fa, fs, fc, fac };

std::optional<Family> family_from_string(std::string_view name);
const char* to_string(Family f);

/// Largest n accepted for fa and fac (2^n clauses).
inline constexpr std::size_t kMaxExponentialFamilyN = 12;

/// fa: all 2^n full clauses on x1..xn; fs: {x1..x_ceil(n/2)}, {x_ceil(n/2)..xn};
/// fc: the cycle {xi, ~x(i+1)}, {xn, ~x1}; fac: the y-cycle combined with
/// the fa clauses. Clause C_j of fa/fac is j-1 written in binary with x1 as
/// the low bit, a set bit meaning a negative literal.
/// Throws OutOfRangeError unless n >= 1 (fa, fs) or n >= 3 (fc, fac), and
/// n <= kMaxExponentialFamilyN for fa and fac.
Formula gen_family(Family family, std::size_t n);

/// Six variables y, b, b', b*, c, z (ids in that order) and 13 clauses.
Formula fixture_example();

/// Gadget F' over y1..yn, z1..zn, c1..cm, b, b', b* (ids in that order).
/// x_i is the i-th variable of var(F) and C_j the j-th clause of F.
/// Throws InvalidInputError for an empty formula or an empty clause.
Formula gen_dps_gadget(const Formula& f);

/// f(x1)..f(xn), b, c1..cm, b', b*, g(x1)..g(xn) for a model tau of F, where
/// f picks y_i when tau(x_i) = 1 and z_i otherwise, and g picks the other one.
EliminationOrdering dps_gadget_ordering(const Formula& f, const Assignment& tau, const Formula& gadget);

/// Variables x<s> for s in V(S) and h<i>^1, h<i>^2 per member; 3m clauses.
/// Throws InvalidInputError on an empty member.
Formula gen_backdoor_gadget(const SetFamily& s);

/// Variables v<j>^<i> (vertex j of class i) and z<j>^<i>, both 1-based.
/// Throws BadKError for k < 2, NotBalancedError for unequal or empty classes.
Formula gen_clique_gadget(const KPartiteGraph& g);

/// F(z, x1, x2) on variables named z, x1, x2.
Formula gen_selection_block();

/// F^{=1}(x1..xm; z1..z(m-1)); {x1} when m = 1. Throws OutOfRangeError for m = 0.
Formula gen_exactly_one(std::size_t m);

/// {x1..xp, y1..yp}, {~y1..~yp, z1..zp}, {x1..xp, z1..zp}: strong backdoor
/// {y1} but no deletion backdoor below p variables. Throws OutOfRangeError for p = 0.
Formula gen_backdoor_gap(std::size_t p);

struct RandomProfile {
    std::size_t vars = 0;
    std::size_t clauses = 0;
    std::size_t width = 3;
    std::uint64_t seed = 0;
};

inline constexpr std::string_view kRandomStream = "mt19937_64/v1";

/// Each clause takes between 1 and min(width, vars) distinct variables with
/// random signs. Duplicate clauses collapse, so the result may hold fewer
/// than `clauses` clauses. The table always has `vars` variables.
Formula gen_random(const RandomProfile& profile);

} // namespace betasat
