#pragma once

#include "betasat/dp.hpp"
#include "betasat/formula.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace betasat {

enum class BackdoorKind { strong, deletion };

const char* to_string(BackdoorKind k);

struct BackdoorReport {
    BackdoorKind kind = BackdoorKind::strong;
    std::vector<Var> variables;
    bool verified = false;
    std::uint64_t reducts_checked = 0; // strong only
};

/// Largest |B| for which the 2^|B| reducts are enumerated.
inline constexpr std::size_t kMaxBackdoorSize = 24;

/// F[tau] is beta-acyclic for every tau over B. Throws InvalidInputError
/// unless B is a subset of var(F), TooLargeError above kMaxBackdoorSize.
bool is_strong_backdoor(const Formula& f, std::span<const Var> b);
/// Same, with the number of reducts inspected before the answer was known.
BackdoorReport check_strong_backdoor(const Formula& f, std::span<const Var> b);

/// F - B is beta-acyclic. Throws InvalidInputError unless B is a subset of var(F).
bool is_deletion_backdoor(const Formula& f, std::span<const Var> b);

/// Slice of the subset enumeration: candidate number r (counted within each
/// size, lexicographic order) belongs to the shard with r % count == index.
struct SearchShard {
    std::size_t index = 0;
    std::size_t count = 1;
};

struct BackdoorSearchOptions {
    SearchShard shard;
    /// Upper bound on the number of formulas the search may have to check
    /// (C(n,k) * 2^k summed over k <= max_k for strong backdoors).
    double work_limit = 5e7;
};

/// Smallest backdoor of size <= max_k, lexicographically smallest among
/// equal sizes (within the shard). Throws TooLargeError past the work limit.
std::optional<std::vector<Var>> find_strong_backdoor(const Formula& f, std::size_t max_k,
                                                     const BackdoorSearchOptions& options = {});
std::optional<std::vector<Var>> find_deletion_backdoor(const Formula& f, std::size_t max_k,
                                                       const BackdoorSearchOptions& options = {});

/// Picks the smallest result by (size, lexicographic order).
std::optional<std::vector<Var>> merge_shard_results(std::span<const std::optional<std::vector<Var>>> results);

/// Runs `jobs` shards on separate threads and merges them.
std::optional<std::vector<Var>> find_backdoor_parallel(const Formula& f, BackdoorKind kind, std::size_t max_k,
                                                       std::size_t jobs, double work_limit = 5e7);

struct BackdoorSolveOptions {
    /// Assignments over B are tried as t = 0..2^|B|-1 (bit i gives B[i]);
    /// `reverse` walks t downwards and `flip_mask` is xor-ed into every t.
    bool reverse = false;
    std::uint64_t flip_mask = 0;
};

/// Decides F through the reducts over B. Every reduct is checked for beta-acyclicity
/// first; throws NotABackdoorError if one fails.
Verdict solve_via_backdoor(const Formula& f, std::span<const Var> b, const BackdoorSolveOptions& options = {});

} // namespace betasat
