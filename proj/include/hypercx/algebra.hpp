#pragma once

// Cayley-Dickson algebras of arbitrary level: the full basis product table
// for dimension 2^n, built by iterated doubling, plus triplet enumeration.
//
// Basis convention at level k+1 (pairs over level k):
//   e_i       <-> (e_i, 0)   for i <  2^k
//   e_{i+2^k} <-> (0, e_i)   for i <  2^k
// with the pair product (a,b)(c,d) = (ac - d*b, da + bc*), conjugation
// taken at level k. This reproduces e1e2 = e3, e_i e_{2^k} = e_{i+2^k},
// and the classical octonion cycle list.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercx/rational.hpp"

namespace hypercx {

inline constexpr int kDefaultMaxLevel = 8;  // dim 256; tables are O(dim^2)

/// Thrown when a requested level exceeds the configured cap.
class LevelLimitError : public std::runtime_error {
 public:
  LevelLimitError(int level, int max_level)
      : std::runtime_error("level " + std::to_string(level) +
                           " exceeds configured maximum " +
                           std::to_string(max_level)),
        level(level),
        max_level(max_level) {}
  int level;
  int max_level;
};

/// sign * e_index with sign in {-1,+1}. Basis products never vanish.
struct SignedUnit {
  int sign = 1;
  int index = 0;
  friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

/// Complete basis product table e_i e_j for one level. Immutable once built.
class StructureTable {
 public:
  /// Iterated doubling from level 0 (the reals).
  static StructureTable build(int level, int max_level = kDefaultMaxLevel) {
    if (level < 0) throw std::domain_error("algebra level must be >= 0");
    if (max_level < 0) throw std::domain_error("level cap must be >= 0");
    if (level > max_level) throw LevelLimitError(level, max_level);
    StructureTable t = reals();
    for (int k = 0; k < level; ++k) t = doubling_step(t);
    return t;
  }

  /// One doubling step: level k table -> level k+1 table via the pair rule.
  static StructureTable doubling_step(const StructureTable& base) {
    const int half = base.dim_;
    const int dim = 2 * half;
    StructureTable out;
    out.level_ = base.level_ + 1;
    out.dim_ = dim;
    out.sign_.assign(static_cast<size_t>(dim) * dim, 0);
    out.index_.assign(static_cast<size_t>(dim) * dim, 0);

    // (s_i e_i)(s_j e_j) at the base level
    const auto mul_low = [&](int si, int i, int sj, int j) -> SignedUnit {
      SignedUnit p = base.product(i, j);
      return {si * sj * p.sign, p.index};
    };
    // conjugation on a base basis unit only flips the sign of imaginaries
    const auto conj_sign = [](int c) { return c == 0 ? 1 : -1; };

    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const bool ilo = i < half, jlo = j < half;
        const int a = ilo ? i : i - half;
        const int c = jlo ? j : j - half;
        SignedUnit r;
        if (ilo && jlo) {  // (a,0)(c,0) = (ac, 0)
          r = mul_low(1, a, 1, c);
        } else if (ilo && !jlo) {  // (a,0)(0,d) = (0, da)
          r = mul_low(1, c, 1, a);
          r.index += half;
        } else if (!ilo && jlo) {  // (0,b)(c,0) = (0, bc*)
          r = mul_low(1, a, conj_sign(c), c);
          r.index += half;
        } else {  // (0,b)(0,d) = (-d*b, 0)
          r = mul_low(-conj_sign(c), c, 1, a);
        }
        out.sign_[static_cast<size_t>(i) * dim + j] = static_cast<int8_t>(r.sign);
        out.index_[static_cast<size_t>(i) * dim + j] = static_cast<uint16_t>(r.index);
      }
    }
    return out;
  }

  /// Rebuild a full table from a canonical triplet list (the inverse of
  /// enumerate_triplets). Validates that every off-diagonal pair is covered
  /// exactly once.
  static StructureTable from_triplets(int level,
                                      const std::vector<struct Triplet>& triplets);

  int level() const noexcept { return level_; }
  int dim() const noexcept { return dim_; }

  /// e_i e_j, valid for all 0 <= i,j < dim (identity and diagonal included).
  SignedUnit product(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
      throw std::domain_error("basis index out of range");
    const size_t at = static_cast<size_t>(i) * dim_ + j;
    return {sign_[at], index_[at]};
  }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  static StructureTable reals() {
    StructureTable t;
    t.level_ = 0;
    t.dim_ = 1;
    t.sign_ = {1};
    t.index_ = {0};
    return t;
  }

  int level_ = 0;
  int dim_ = 1;
  std::vector<int8_t> sign_;     // dim*dim, row-major over (i,j)
  std::vector<uint16_t> index_;  // dim*dim
};

/// One positively oriented cycle (a,b,c): e_a e_b = e_c, e_b e_c = e_a,
/// e_c e_a = e_b. Canonical form rotates the smallest index first.
struct Triplet {
  int a = 0, b = 0, c = 0;
  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

struct TripletTable {
  int level = 0;
  std::vector<Triplet> triplets;  // sorted, canonical
  friend bool operator==(const TripletTable&, const TripletTable&) = default;
};

/// Rotation of (a,b,c) placing the smallest index first.
inline Triplet canonical_rotation(int a, int b, int c) {
  if (b <= a && b <= c) return {b, c, a};
  if (c <= a && c <= b) return {c, a, b};
  return {a, b, c};
}

/// All triplets of a table in canonical form, sorted. Empty below level 2.
/// Each unordered triple is reached through its three index pairs and lands
/// on the same canonical rotation, so duplicates collapse in the final pass.
inline TripletTable enumerate_triplets(const StructureTable& table) {
  TripletTable out;
  out.level = table.level();
  const int dim = table.dim();
  for (int i = 1; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      SignedUnit p = table.product(i, j);
      // orient positively: s=+1 keeps (i,j,k); s=-1 means e_j e_i = +e_k
      out.triplets.push_back(p.sign == 1 ? canonical_rotation(i, j, p.index)
                                         : canonical_rotation(j, i, p.index));
    }
  }
  std::sort(out.triplets.begin(), out.triplets.end());
  out.triplets.erase(std::unique(out.triplets.begin(), out.triplets.end()),
                     out.triplets.end());
  return out;
}

/// (2^n - 1)(2^n - 2)/6 in exact integer arithmetic.
inline Int count_triplets_formula(int level) {
  if (level < 2) throw std::domain_error("triplet count formula needs level >= 2");
  const Int d = Int(1) << level;
  return (d - 1) * (d - 2) / 6;
}

/// Conventional name of the level-n algebra.
inline std::string level_name(int level) {
  switch (level) {
    case 0: return "R";
    case 1: return "C";
    case 2: return "H";
    case 3: return "O";
    case 4: return "X";
    default: return "F" + std::to_string(level);
  }
}

inline StructureTable StructureTable::from_triplets(
    int level, const std::vector<Triplet>& triplets) {
  if (level < 0) throw std::domain_error("algebra level must be >= 0");
  const int dim = 1 << level;
  StructureTable t;
  t.level_ = level;
  t.dim_ = dim;
  t.sign_.assign(static_cast<size_t>(dim) * dim, 0);
  t.index_.assign(static_cast<size_t>(dim) * dim, 0);
  const auto put = [&](int i, int j, int s, int k) {
    const size_t at = static_cast<size_t>(i) * dim + j;
    if (t.sign_[at] != 0)
      throw std::invalid_argument("triplet list covers a pair twice");
    t.sign_[at] = static_cast<int8_t>(s);
    t.index_[at] = static_cast<uint16_t>(k);
  };
  // identity row/column and diagonal
  for (int i = 0; i < dim; ++i) {
    if (i > 0) {
      put(0, i, 1, i);
      put(i, 0, 1, i);
    }
    const size_t at = static_cast<size_t>(i) * dim + i;
    t.sign_[at] = static_cast<int8_t>(i == 0 ? 1 : -1);
    t.index_[at] = 0;
  }
  for (const Triplet& tr : triplets) {
    for (int v : {tr.a, tr.b, tr.c})
      if (v < 1 || v >= dim) throw std::invalid_argument("triplet index out of range");
    if (tr.a == tr.b || tr.b == tr.c || tr.a == tr.c)
      throw std::invalid_argument("triplet indices must be distinct");
    put(tr.a, tr.b, 1, tr.c);
    put(tr.b, tr.c, 1, tr.a);
    put(tr.c, tr.a, 1, tr.b);
    put(tr.b, tr.a, -1, tr.c);
    put(tr.c, tr.b, -1, tr.a);
    put(tr.a, tr.c, -1, tr.b);
  }
  for (int i = 1; i < dim; ++i)
    for (int j = 1; j < dim; ++j)
      if (i != j && t.sign_[static_cast<size_t>(i) * dim + j] == 0)
        throw std::invalid_argument("triplet list leaves a pair uncovered");
  return t;
}

}  // namespace hypercx
