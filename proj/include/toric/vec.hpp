#pragma once

#include <vector>

#include "toric/numeric.hpp"

namespace toric {

// Points of the lattice M, directions of the dual lattice N, and rational
// points of M_R. The ambient rank is carried by the containers that own them.
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Exact dual pairing <m, nu>. Throws std::invalid_argument on length mismatch.
Int pairing(const IntVec& m, const IntVec& nu);
Rat pairing(const RatVec& x, const IntVec& nu);

/// v / gcd(entries), same direction. Throws std::invalid_argument on v = 0.
IntVec primitive(const IntVec& v);

bool is_zero(const IntVec& v);

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

struct LexLess {
    bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);
IntVec scale(const Int& k, const IntVec& v);

RatVec to_rat(const IntVec& v);
bool is_integral(const RatVec& v);
/// Throws std::invalid_argument unless every coordinate is an integer.
IntVec to_int(const RatVec& v);

std::string vec_to_string(const IntVec& v);
std::string vec_to_string(const RatVec& v);

}  // namespace toric
