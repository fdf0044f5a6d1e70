#pragma once

#include "primdiv/integer.hpp"

namespace primdiv {

enum class Primality { Composite, Prime, ProbablePrime };

/// Miller-Rabin. Deterministic (witnesses 2..37) below 3.317e24; above that
/// the verdict is ProbablePrime (64 fixed small-prime witnesses), never Prime.
Primality classify_prime(const Integer& n);

inline bool is_prime(const Integer& n) { return classify_prime(n) != Primality::Composite; }

/// True only when the deterministic witness set applies.
inline bool is_certified_prime(const Integer& n) { return classify_prime(n) == Primality::Prime; }

}  // namespace primdiv
