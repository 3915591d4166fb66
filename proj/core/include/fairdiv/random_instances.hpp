#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "fairdiv/model.hpp"
#include "fairdiv/triangulation.hpp"

namespace fairdiv {

// All randomness flows through mt19937_64 plus hand-rolled bounded draws, so
// corpora reproduce bit-for-bit across standard libraries (the engine is
// pinned by the standard, the distributions are not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }
    long long below(long long bound);               // uniform over [0, bound)
    long long between(long long lo, long long hi);  // uniform over [lo, hi]

  private:
    std::mt19937_64 engine_;
};

enum class SignClass { NonNegative, NonPositive, Objective };

std::string sign_class_name(SignClass cls);
std::optional<SignClass> sign_class_from_name(const std::string& name);

// Additive values: per item uniform in [0, magnitude], [-magnitude, 0], or
// (objective) a per-item coin picks good or chore and every agent's value for
// it takes that sign.
Instance random_additive_instance(Rng& rng, int n, int m, SignClass cls, long long magnitude = 9);

// Interval-table values: every v[i][s][t] drawn uniformly in the
// sign-respecting range. Objective is meaningless here and is rejected.
Instance random_interval_instance(Rng& rng, int n, int m, SignClass cls, long long magnitude = 9);

// Subset-table values: arbitrary sign-respecting tables for the one-sided
// classes; for Objective a per-item coin splits goods from chores, each
// agent's goods part grows a random monotone set function (capped at
// magnitude) and the chores part mirrors it downward, summed per subset.
Instance random_subset_instance(Rng& rng, int n, int m, SignClass cls, long long magnitude = 9);

// Uniformly random special coloring / normalized special multicoloring.
// Per-vertex draws are hashed from (seed, u), so colors do not depend on
// query order.
Coloring random_special_coloring(const Triangulation& t, std::uint64_t seed);
MultiColoring random_normalized_special_multicoloring(const Triangulation& t, std::uint64_t seed);

}  // namespace fairdiv
