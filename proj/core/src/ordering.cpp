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

#include "superadmm/ordering.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <utility>

#include "superadmm/ldl.hpp"

namespace superadmm {
namespace {

// Minimum degree on the quotient graph. Each uneliminated variable keeps its
// variable neighbours and the elements (eliminated pivots) it touches; an
// element stores the variables of the clique it represents. Degrees are exact
// external degrees, ties are broken by the lowest index.
class QuotientGraph {
 public:
  explicit QuotientGraph(const SparseMatrix& upper)
      : n_(upper.ncols),
        vars_(n_),
        elems_(n_),
        elem_vars_(n_),
        eliminated_(n_, false),
        absorbed_(n_, false),
        degree_(n_, 0),
        mark_(n_, 0) {
    for (Index j = 0; j < n_; ++j) {
      for (Index p = upper.colptr[j]; p < upper.colptr[j + 1]; ++p) {
        const Index i = upper.rowidx[p];
        if (i == j) continue;
        vars_[i].push_back(j);
        vars_[j].push_back(i);
      }
    }
    for (Index i = 0; i < n_; ++i) {
      std::sort(vars_[i].begin(), vars_[i].end());
      vars_[i].erase(std::unique(vars_[i].begin(), vars_[i].end()),
                     vars_[i].end());
      degree_[i] = static_cast<Index>(vars_[i].size());
      queue_.emplace(degree_[i], i);
    }
  }

  std::vector<Index> order() {
    std::vector<Index> perm;
    perm.reserve(n_);
    while (!queue_.empty()) {
      const Index pivot = queue_.begin()->second;
      queue_.erase(queue_.begin());
      eliminate(pivot);
      perm.push_back(pivot);
    }
    return perm;
  }

 private:
  Index next_stamp() {
    if (++stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    return stamp_;
  }

  void eliminate(Index pivot) {
    // Variables of the new element: the pivot's reach through variables and
    // through the elements it absorbs.
    const Index s = next_stamp();
    mark_[pivot] = s;
    std::vector<Index> clique;
    for (Index v : vars_[pivot]) {
      if (!eliminated_[v] && mark_[v] != s) {
        mark_[v] = s;
        clique.push_back(v);
      }
    }
    for (Index e : elems_[pivot]) {
      if (absorbed_[e]) continue;
      for (Index v : elem_vars_[e]) {
        if (!eliminated_[v] && mark_[v] != s) {
          mark_[v] = s;
          clique.push_back(v);
        }
      }
      absorbed_[e] = true;
      std::vector<Index>().swap(elem_vars_[e]);
    }
    eliminated_[pivot] = true;
    std::vector<Index>().swap(vars_[pivot]);
    std::vector<Index>().swap(elems_[pivot]);
    std::sort(clique.begin(), clique.end());
    elem_vars_[pivot] = clique;

    for (Index v : clique) {
      auto& ev = elems_[v];
      ev.erase(std::remove_if(ev.begin(), ev.end(),
                              [&](Index e) { return absorbed_[e]; }),
               ev.end());
      ev.push_back(pivot);
      // Edges inside the clique are now represented by the element.
      auto& vv = vars_[v];
      vv.erase(std::remove_if(vv.begin(), vv.end(),
                              [&](Index w) {
                                return eliminated_[w] || mark_[w] == s;
                              }),
               vv.end());
    }
    for (Index v : clique) {
      queue_.erase({degree_[v], v});
      degree_[v] = external_degree(v);
      queue_.emplace(degree_[v], v);
    }
  }

  Index external_degree(Index v) {
    const Index s = next_stamp();
    mark_[v] = s;
    Index deg = 0;
    for (Index w : vars_[v]) {
      if (mark_[w] != s) {
        mark_[w] = s;
        ++deg;
      }
    }
    for (Index e : elems_[v]) {
      for (Index w : elem_vars_[e]) {
        if (mark_[w] != s) {
          mark_[w] = s;
          ++deg;
        }
      }
    }
    return deg;
  }

  Index n_;
  std::vector<std::vector<Index>> vars_;
  std::vector<std::vector<Index>> elems_;
  std::vector<std::vector<Index>> elem_vars_;
  std::vector<bool> eliminated_;
  std::vector<bool> absorbed_;
  std::vector<Index> degree_;
  std::vector<Index> mark_;
  Index stamp_ = 0;
  std::set<std::pair<Index, Index>> queue_;
};

}  // namespace

std::vector<Index> natural_order(Index n) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

std::vector<Index> inverse_permutation(const std::vector<Index>& perm) {
  std::vector<Index> pinv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    pinv[perm[k]] = static_cast<Index>(k);
  }
  return pinv;
}

std::vector<Index> mindeg_order(const SparseMatrix& upper_pattern) {
  std::vector<Index> perm = QuotientGraph(upper_pattern).order();
  const Index nnz_md = symbolic_factorize(upper_pattern, perm).nnz_l;
  std::vector<Index> natural = natural_order(upper_pattern.ncols);
  const Index nnz_nat = symbolic_factorize(upper_pattern, natural).nnz_l;
  return nnz_md <= nnz_nat ? perm : natural;
}

std::vector<Index> compute_ordering(const SparseMatrix& upper_pattern,
                                    Ordering ordering) {
  switch (ordering) {
    case Ordering::kNatural:
      return natural_order(upper_pattern.ncols);
    case Ordering::kMinimumDegree:
      return mindeg_order(upper_pattern);
  }
  return natural_order(upper_pattern.ncols);
}

SparseMatrix symmetric_permute(const SparseMatrix& upper,
                               const std::vector<Index>& pinv,
                               std::vector<Index>* value_map) {
  const Index n = upper.ncols;
  SparseMatrix out(n, n);
  std::vector<Index> dest_col(upper.nnz());
  for (Index j = 0; j < n; ++j) {
    for (Index p = upper.colptr[j]; p < upper.colptr[j + 1]; ++p) {
      const Index i = upper.rowidx[p];
      if (i > j) continue;
      const Index c = std::max(pinv[i], pinv[j]);
      dest_col[p] = c;
      ++out.colptr[c + 1];
    }
  }
  for (Index j = 0; j < n; ++j) out.colptr[j + 1] += out.colptr[j];

  // Bucket source entries by destination column, then sort each bucket by
  // destination row so the result is canonical.
  std::vector<Index> next(out.colptr.begin(), out.colptr.end() - 1);
  std::vector<Index> source(out.nnz());
  for (Index j = 0; j < n; ++j) {
    for (Index p = upper.colptr[j]; p < upper.colptr[j + 1]; ++p) {
      if (upper.rowidx[p] > j) continue;
      source[next[dest_col[p]]++] = p;
    }
  }
  out.rowidx.resize(out.nnz());
  out.values.resize(out.nnz());
  if (value_map) value_map->assign(upper.nnz(), -1);

  std::vector<Index> src_col(upper.nnz());
  for (Index j = 0; j < n; ++j) {
    for (Index p = upper.colptr[j]; p < upper.colptr[j + 1]; ++p) {
      src_col[p] = j;
    }
  }

  for (Index c = 0; c < n; ++c) {
    auto first = source.begin() + out.colptr[c];
    auto last = source.begin() + out.colptr[c + 1];
    auto row_of = [&](Index p) {
      return std::min(pinv[upper.rowidx[p]], pinv[src_col[p]]);
    };
    std::sort(first, last,
              [&](Index a, Index b) { return row_of(a) < row_of(b); });
    for (Index q = out.colptr[c]; q < out.colptr[c + 1]; ++q) {
      const Index p = source[q];
      out.rowidx[q] = row_of(p);
      out.values[q] = upper.values[p];
      if (value_map) (*value_map)[p] = q;
    }
  }
  return out;
}

}  // namespace superadmm
