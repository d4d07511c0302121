// include/sexa/roots.hpp - Exact and Heron square roots, distances, constants.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sexa/exact_number.hpp"

namespace sexa {

enum class ConstantId { SQRT2_COARSE, SQRT2_FINE, SQRT3, PI_COMMON, PI_BRUINS, PI_FINE };

struct NamedConstant {
  ConstantId id;
  ExactNumber value;
};

/// Historical approximations: sqrt2 = 3/2 or 17/12, sqrt3 = 7/4,
/// pi = 3, 25/8 or 63/20.
NamedConstant named_constant(ConstantId id);
std::string_view to_string(ConstantId id) noexcept;
const std::vector<ConstantId>& all_constants();

/// floor(sqrt(n)) for n >= 0, by Newton iteration on integers.
BigInt isqrt(const BigInt& n);

/// The exact root r >= 0 with r*r == x, when numerator and denominator are
/// both perfect squares. Throws Error{NegativeInput} for x < 0.
std::optional<ExactNumber> sqrt_exact(const ExactNumber& x);

/// Heron averaging r <- (r + x/r)/2 applied `iterations` times from `seed`.
/// Throws Error{DomainError} for x <= 0, seed <= 0 or iterations < 0.
ExactNumber sqrt_heron(const ExactNumber& x, const ExactNumber& seed, int iterations);

/// Heron iteration from the default seed (x + 1)/2.
ExactNumber sqrt_heron(const ExactNumber& x, int iterations);

ExactNumber heron_default_seed(const ExactNumber& x);

ExactNumber squared_distance(const ExactNumber& x1, const ExactNumber& y1,
                             const ExactNumber& x2, const ExactNumber& y2);

/// Exact distance between two points, absent when it is irrational.
std::optional<ExactNumber> euclidean_distance(const ExactNumber& x1, const ExactNumber& y1,
                                              const ExactNumber& x2, const ExactNumber& y2);

/// Squared hypotenuses [1, 2, ..., n] of the unit-leg right-triangle chain,
/// each built from the previous one as h_k^2 = h_{k-1}^2 + 1^2.
/// Throws Error{DomainError} for n < 1.
std::vector<ExactNumber> incommensurable_chain(int n);

}  // namespace sexa
