#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heis/slices.hpp"
#include "heis/word.hpp"

namespace heis::oracle {

/// Permutation of {0..k-1} as its image vector. Shorter vectors act as the
/// identity on the missing points, so elements of nested symmetric groups
/// compose without explicit padding.
using Perm = std::vector<int>;

int perm_apply(const Perm& p, int x);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inv(const Perm& p);
Perm perm_identity(int k);
Perm transposition(int a, int b, int k);

/// Left coset representative c_i of S_{r-1} in S_r: the cycle
/// (i, i+1, ..., r-1), so c_i(r-1) = i.
Perm coset_rep(int i, int r);

/// Sparse integer matrix stored by columns; entries sorted by row.
struct SparseMat {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> col;

  static SparseMat zero(std::int64_t r, std::int64_t c);
  static SparseMat identity(std::int64_t n);
};

SparseMat mat_mul(const SparseMat& a, const SparseMat& b);
SparseMat mat_add(const SparseMat& a, const SparseMat& b);
SparseMat mat_scale(const SparseMat& a, std::int64_t k);
bool mat_is_zero(const SparseMat& a);
bool operator==(const SparseMat& a, const SparseMat& b);

/// The permutation module a word evaluates to on the regular module of the
/// symmetric group at base level n. Letters act rightmost first: u is
/// induction, d is restriction. A restriction below level 0 kills the
/// module.
struct Space {
  int base_level = 0;
  bool valid = true;
  int level = 0;
  std::vector<int> u_ranks;  // chronological ranks of the induction steps
  std::int64_t dim = 0;
};

Space space_for(const Word& w, int n);

/// Basis label: a base permutation in S_n and one coset-representative
/// index per induction step, chronological.
struct Label {
  Perm base;
  std::vector<int> reps;
};

std::int64_t encode_label(const Space& sp, const Label& lbl);
Label decode_label(const Space& sp, std::int64_t index);

/// Group action on labels: tau is an element of S_m for the current level m
/// of the space; decomposes recursively through the coset chain.
Label act(const Space& sp, Perm tau, Label lbl);

/// Matrix of an elementary slice (atoms and dots; derived crossings must be
/// expanded first) at base level n.
SparseMat slice_matrix(const Slice& s, int n);

/// Composite of a slice word, bottom to top, on the given source word.
SparseMat eval_slices(const SliceWord& sw, const Word& source, int n);

/// Matrix of a basis diagram via its slice factorization.
SparseMat eval_diagram(const BasisDiagram& d, int n);

/// Defining and derived relations checked by exact evaluation at base
/// levels 0..max_level. Returns (relation name, holds) pairs.
std::vector<std::pair<std::string, bool>> relations_selftest(int max_level);

}  // namespace heis::oracle
