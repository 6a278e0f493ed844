// Copyright 2026 The superadmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERADMM_ORDERING_HPP_
#define SUPERADMM_ORDERING_HPP_

#include <vector>

#include "superadmm/settings.hpp"
#include "superadmm/sparse_matrix.hpp"

namespace superadmm {

// A permutation is stored new-to-old: perm[k] is the original index placed at
// position k.
std::vector<Index> natural_order(Index n);

// Fill-reducing ordering of a symmetric pattern given by its upper triangle.
// Runs minimum degree on the quotient graph with exact external degrees; if
// the result would produce more fill than the natural ordering, the natural
// ordering is returned instead.
std::vector<Index> mindeg_order(const SparseMatrix& upper_pattern);

std::vector<Index> compute_ordering(const SparseMatrix& upper_pattern,
                                    Ordering ordering);

std::vector<Index> inverse_permutation(const std::vector<Index>& perm);

// Upper triangle of P K P^T for a symmetric K stored as its upper triangle.
// When `value_map` is non-null it receives, for every entry of `upper`, the
// index of the same entry in the result.
SparseMatrix symmetric_permute(const SparseMatrix& upper,
                               const std::vector<Index>& pinv,
                               std::vector<Index>* value_map = nullptr);

}  // namespace superadmm

#endif  // SUPERADMM_ORDERING_HPP_
