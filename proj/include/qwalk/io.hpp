#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/evolve.hpp"

namespace qwalk::io {

/// One complex scalar: "0.5", "-2", "0.5+0.25i", "-i", "3e-2i".
cplx parse_complex(std::string_view text);

/// Comma-separated scalars describing `count` complex numbers. Either
/// `count` tokens (each a complex literal) or 2 * `count` plain reals read
/// as "re,im" pairs.
std::vector<cplx> parse_complex_list(std::string_view text, std::size_t count);

/// "hadamard" or four entries "a,b,c,d" (see parse_complex_list).
Coin parse_coin(std::string_view text);

/// "eta,phi,psi" in radians.
Coin parse_symmetric_coin(std::string_view text);

/// Presets: symmetric = t[1/sqrt2, i/sqrt2], left = t[1, 0], right = t[0, 1];
/// otherwise "alpha,beta" (see parse_complex_list).
Qubit parse_qubit(std::string_view text);

/// Comma-separated lists.
std::vector<int> parse_int_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

/// Header `k,p`, rows ascending in k, parity-empty rows omitted.
std::string distribution_csv(const Distribution& dist);

/// {"n", "coin": [[re,im] x 4], "phi": [[re,im] x 2], "distribution": [{"k", "p"}]}.
std::string distribution_json(const Distribution& dist, const Coin& coin, const Qubit& phi);

/// Reads the "n" and "distribution" fields written by distribution_json.
Distribution parse_distribution_json(std::string_view text);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace qwalk::io
