// CSV matrix format: one row per line, comma-separated tokens, each token a
// rational "a/b" or a (signed) decimal string.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rns/linalg.hpp"
#include "rns/rng.hpp"

namespace rns {

std::vector<std::vector<Rational>> parse_matrix_csv(std::istream& in);

FixedMatrix encode_matrix(const std::vector<std::vector<Rational>>& values, SplitPtr split);
std::vector<std::vector<Rational>> decode_matrix(const FixedMatrix& m);

// decimal rendering with the given number of places
std::string matrix_to_csv(const std::vector<std::vector<Rational>>& values, std::size_t places);

// square matrix with payloads uniform in [-F, F] (values in [-1, 1])
FixedMatrix random_matrix(SplitPtr split, std::size_t M, SplitMix64& rng);

}  // namespace rns
