// Copyright 2026 The rank2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random instances for property checks. All draws come from the caller's
// generator so results are reproducible per seed.

#ifndef RANK2_SAMPLING_HPP
#define RANK2_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "rank2/channel.hpp"

namespace rank2 {

using Rng = std::mt19937_64;

/// Generator for stream 'stream' derived from 'seed' by a splitmix step.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

ComplexMatrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols);
CVector random_unit_vector(Rng& rng, std::size_t d);
ComplexMatrix random_unitary(Rng& rng, std::size_t n);
ComplexMatrix random_hermitian(Rng& rng, std::size_t d);
/// G G^dagger / tr with G Gaussian d x rank.
ComplexMatrix random_density(Rng& rng, std::size_t d, std::size_t rank);

/// m Gaussian 2 x d Kraus operators. With trace_preserving they are rescaled by
/// (sum K^dagger K)^(-1/2), which needs 2m >= d.
RankTwoChannel random_channel(Rng& rng, std::size_t m, std::size_t d, bool trace_preserving);
/// Canonical qubit map with random complex parameters of modulus >= 0.1;
/// trace_preserving rescales columns so that A^*A + B^*B = I.
RankTwoChannel random_canonical(Rng& rng, bool trace_preserving);

}  // namespace rank2

#endif  // RANK2_SAMPLING_HPP
