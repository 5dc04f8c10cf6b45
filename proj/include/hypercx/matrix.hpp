#pragma once

// Translation of basis units into multiplication matrices over R^dim.
// Every such matrix is monomial (one +-1 per row and column), so matrices
// are stored as a column permutation plus a sign vector; products and
// anticommutator tests are O(dim) instead of O(dim^3). Dense integer views
// are available where a report wants actual entries.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hypercx/algebra.hpp"

namespace hypercx {

/// Square monomial matrix with entries in {-1,0,+1}; M M^T = I.
/// Column action: M e_col = sign_of_col(col) * e_row_of_col(col).
class SignedPermMatrix {
 public:
  static SignedPermMatrix from_column_action(std::vector<uint16_t> rows,
                                             std::vector<int8_t> signs) {
    if (rows.size() != signs.size() || rows.empty())
      throw std::invalid_argument("column action vectors must match and be nonempty");
    const size_t dim = rows.size();
    std::vector<bool> hit(dim, false);
    for (size_t c = 0; c < dim; ++c) {
      if (rows[c] >= dim || hit[rows[c]])
        throw std::invalid_argument("column action is not a permutation");
      if (signs[c] != 1 && signs[c] != -1)
        throw std::invalid_argument("column signs must be +-1");
      hit[rows[c]] = true;
    }
    SignedPermMatrix m;
    m.row_ = std::move(rows);
    m.sign_ = std::move(signs);
    return m;
  }

  static SignedPermMatrix identity(int dim) {
    std::vector<uint16_t> rows(static_cast<size_t>(dim));
    for (int c = 0; c < dim; ++c) rows[static_cast<size_t>(c)] = static_cast<uint16_t>(c);
    return from_column_action(std::move(rows),
                              std::vector<int8_t>(static_cast<size_t>(dim), 1));
  }

  int dim() const noexcept { return static_cast<int>(row_.size()); }
  int row_of_col(int c) const { return row_.at(static_cast<size_t>(c)); }
  int sign_of_col(int c) const { return sign_.at(static_cast<size_t>(c)); }

  int at(int r, int c) const {
    if (r < 0 || c < 0 || r >= dim() || c >= dim())
      throw std::out_of_range("matrix index out of range");
    return row_[static_cast<size_t>(c)] == r ? sign_[static_cast<size_t>(c)] : 0;
  }

  friend SignedPermMatrix operator*(const SignedPermMatrix& a,
                                    const SignedPermMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const size_t n = a.row_.size();
    SignedPermMatrix m;
    m.row_.resize(n);
    m.sign_.resize(n);
    for (size_t c = 0; c < n; ++c) {
      m.row_[c] = a.row_[b.row_[c]];
      m.sign_[c] = static_cast<int8_t>(b.sign_[c] * a.sign_[b.row_[c]]);
    }
    return m;
  }

  SignedPermMatrix transpose() const {
    const size_t n = row_.size();
    SignedPermMatrix m;
    m.row_.resize(n);
    m.sign_.resize(n);
    for (size_t c = 0; c < n; ++c) {
      m.row_[row_[c]] = static_cast<uint16_t>(c);
      m.sign_[row_[c]] = sign_[c];
    }
    return m;
  }

  friend SignedPermMatrix operator-(const SignedPermMatrix& a) {
    SignedPermMatrix m = a;
    for (int8_t& s : m.sign_) s = static_cast<int8_t>(-s);
    return m;
  }

  /// +1 / -1 when the matrix is +-I, 0 otherwise.
  int scalar_identity_sign() const {
    int s = sign_[0];
    for (size_t c = 0; c < row_.size(); ++c)
      if (row_[c] != c || sign_[c] != s) return 0;
    return s;
  }

  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;

 private:
  SignedPermMatrix() = default;
  std::vector<uint16_t> row_;
  std::vector<int8_t> sign_;
};

/// Dense integer matrix for anticommutators and other sums of monomials.
struct IntMatrix {
  int dim = 0;
  std::vector<int32_t> e;  // row-major

  static IntMatrix zero(int dim) {
    IntMatrix m;
    m.dim = dim;
    m.e.assign(static_cast<size_t>(dim) * dim, 0);
    return m;
  }
  int32_t& at(int r, int c) { return e[static_cast<size_t>(r) * dim + c]; }
  int32_t at(int r, int c) const { return e[static_cast<size_t>(r) * dim + c]; }

  bool is_zero() const {
    for (int32_t v : e)
      if (v != 0) return false;
    return true;
  }
  bool is_scaled_identity(int32_t s) const {
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        if (at(r, c) != (r == c ? s : 0)) return false;
    return true;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

inline IntMatrix to_dense(const SignedPermMatrix& m) {
  IntMatrix d = IntMatrix::zero(m.dim());
  for (int c = 0; c < m.dim(); ++c) d.at(m.row_of_col(c), c) = m.sign_of_col(c);
  return d;
}

/// AB + BA, exact.
inline IntMatrix anticommutator(const SignedPermMatrix& a,
                                const SignedPermMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix m = IntMatrix::zero(a.dim());
  for (int c = 0; c < a.dim(); ++c) {
    // column c of AB and of BA each hold a single +-1
    m.at(a.row_of_col(b.row_of_col(c)), c) +=
        b.sign_of_col(c) * a.sign_of_col(b.row_of_col(c));
    m.at(b.row_of_col(a.row_of_col(c)), c) +=
        a.sign_of_col(c) * b.sign_of_col(a.row_of_col(c));
  }
  return m;
}

/// {A,B} == 0, without materialising the dense matrix.
inline bool anticommutes(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  for (int c = 0; c < a.dim(); ++c) {
    const int rab = a.row_of_col(b.row_of_col(c));
    const int rba = b.row_of_col(a.row_of_col(c));
    if (rab != rba) return false;  // two disjoint +-1 entries cannot cancel
    const int vab = b.sign_of_col(c) * a.sign_of_col(b.row_of_col(c));
    const int vba = a.sign_of_col(c) * b.sign_of_col(a.row_of_col(c));
    if (vab + vba != 0) return false;
  }
  return true;
}

struct AnticommutatorReport {
  int i = 0, j = 0;
  IntMatrix value;  // {E_i, E_j}
  /// Recomputed from the stored matrix: true iff {E_i,E_j} = -2 delta_ij I.
  bool is_clifford() const {
    return i == j ? value.is_scaled_identity(-2) : value.is_zero();
  }
};

namespace detail {
inline void check_unit_index(const StructureTable& table, int i) {
  if (i < 1 || i >= table.dim())
    throw std::domain_error("imaginary unit index must be in [1, dim)");
}
}  // namespace detail

/// Matrix of x -> e_i x, column by column from the product table.
inline SignedPermMatrix left_mult_matrix(const StructureTable& table, int i) {
  detail::check_unit_index(table, i);
  const int dim = table.dim();
  std::vector<uint16_t> rows(static_cast<size_t>(dim));
  std::vector<int8_t> signs(static_cast<size_t>(dim));
  for (int b = 0; b < dim; ++b) {
    const SignedUnit p = table.product(i, b);
    rows[static_cast<size_t>(b)] = static_cast<uint16_t>(p.index);
    signs[static_cast<size_t>(b)] = static_cast<int8_t>(p.sign);
  }
  return SignedPermMatrix::from_column_action(std::move(rows), std::move(signs));
}

/// Matrix of x -> x e_i.
inline SignedPermMatrix right_mult_matrix(const StructureTable& table, int i) {
  detail::check_unit_index(table, i);
  const int dim = table.dim();
  std::vector<uint16_t> rows(static_cast<size_t>(dim));
  std::vector<int8_t> signs(static_cast<size_t>(dim));
  for (int b = 0; b < dim; ++b) {
    const SignedUnit p = table.product(b, i);
    rows[static_cast<size_t>(b)] = static_cast<uint16_t>(p.index);
    signs[static_cast<size_t>(b)] = static_cast<int8_t>(p.sign);
  }
  return SignedPermMatrix::from_column_action(std::move(rows), std::move(signs));
}

/// Index order used for the C term of the closed-form translation matrix.
/// The two orders differ by a transpose of the C part; c_i_col_row makes the
/// formula the left-multiplication matrix, c_i_row_col makes it the
/// right-multiplication matrix (complete antisymmetry: C_{b,i,a} = C_{i,a,b}).
enum class FormulaIndexOrder { c_i_col_row, c_i_row_col };

/// Closed-form build: entry (a,b) = d_{ia} d_{b0} - d_{ib} d_{a0} + C-term.
/// The C symbol is read off the cycle list (not the product table), so this
/// is an independent construction route from left_mult_matrix.
inline SignedPermMatrix translation_matrix_formula(
    const StructureTable& table, int i,
    FormulaIndexOrder order = FormulaIndexOrder::c_i_col_row) {
  detail::check_unit_index(table, i);
  const int dim = table.dim();
  const TripletTable trips = enumerate_triplets(table);
  // expand cycles to a full antisymmetric C lookup: c[j][k] = sign of e_j e_k
  std::vector<int8_t> csign(static_cast<size_t>(dim) * dim, 0);
  std::vector<uint16_t> cindex(static_cast<size_t>(dim) * dim, 0);
  const auto set = [&](int x, int y, int s, int z) {
    csign[static_cast<size_t>(x) * dim + y] = static_cast<int8_t>(s);
    cindex[static_cast<size_t>(x) * dim + y] = static_cast<uint16_t>(z);
  };
  for (const Triplet& t : trips.triplets) {
    set(t.a, t.b, 1, t.c);
    set(t.b, t.c, 1, t.a);
    set(t.c, t.a, 1, t.b);
    set(t.b, t.a, -1, t.c);
    set(t.c, t.b, -1, t.a);
    set(t.a, t.c, -1, t.b);
  }
  std::vector<uint16_t> rows(static_cast<size_t>(dim), 0);
  std::vector<int8_t> signs(static_cast<size_t>(dim), 0);
  const auto place = [&](int a, int b, int v) {
    if (v == 0) return;
    if (signs[static_cast<size_t>(b)] != 0)
      throw std::logic_error("closed form produced two entries in one column");
    rows[static_cast<size_t>(b)] = static_cast<uint16_t>(a);
    signs[static_cast<size_t>(b)] = static_cast<int8_t>(v);
  };
  place(i, 0, 1);   // d_{ia} d_{b0}
  place(0, i, -1);  // -d_{ib} d_{a0}
  for (int a = 1; a < dim; ++a) {
    if (a == i) continue;
    for (int b = 1; b < dim; ++b) {
      if (b == i || b == a) continue;
      const size_t key = order == FormulaIndexOrder::c_i_col_row
                             ? static_cast<size_t>(i) * dim + b
                             : static_cast<size_t>(i) * dim + a;
      const int want = order == FormulaIndexOrder::c_i_col_row ? a : b;
      if (csign[key] != 0 && cindex[key] == want) place(a, b, csign[key]);
    }
  }
  return SignedPermMatrix::from_column_action(std::move(rows), std::move(signs));
}

/// The Darboux block form [[0, -I],[I, 0]] of size dim.
inline SignedPermMatrix symplectic_form(int dim) {
  if (dim < 2 || dim % 2 != 0)
    throw std::domain_error("symplectic form needs even dimension >= 2");
  const int half = dim / 2;
  std::vector<uint16_t> rows(static_cast<size_t>(dim));
  std::vector<int8_t> signs(static_cast<size_t>(dim));
  for (int c = 0; c < half; ++c) {  // lower-left +I
    rows[static_cast<size_t>(c)] = static_cast<uint16_t>(c + half);
    signs[static_cast<size_t>(c)] = 1;
  }
  for (int c = half; c < dim; ++c) {  // upper-right -I
    rows[static_cast<size_t>(c)] = static_cast<uint16_t>(c - half);
    signs[static_cast<size_t>(c)] = -1;
  }
  return SignedPermMatrix::from_column_action(std::move(rows), std::move(signs));
}

struct SymplecticReport {
  int level = 0;
  int dim = 0;
  // C_{(dim/2), k, (dim/2)+k} = -1 for k = 1 .. dim/2 - 1
  bool constants_fixed = false;
  std::vector<std::array<int, 4>> constant_rows;  // {k, sign, index, ok}
  // right_mult_matrix(dim/2) == sign * symplectic_form(dim)
  bool matches_form = false;
  int form_sign = 0;
};

inline SymplecticReport check_symplectic(const StructureTable& table) {
  if (table.level() < 1)
    throw std::domain_error("symplectic check needs level >= 1");
  SymplecticReport rep;
  rep.level = table.level();
  rep.dim = table.dim();
  const int half = rep.dim / 2;
  rep.constants_fixed = true;
  for (int k = 1; k < half; ++k) {
    const SignedUnit p = table.product(half, k);
    const bool ok = p.sign == -1 && p.index == half + k;
    rep.constant_rows.push_back({k, p.sign, p.index, ok ? 1 : 0});
    rep.constants_fixed = rep.constants_fixed && ok;
  }
  const SignedPermMatrix r = right_mult_matrix(table, half);
  const SignedPermMatrix j = symplectic_form(rep.dim);
  if (r == j) {
    rep.matches_form = true;
    rep.form_sign = 1;
  } else if (r == -j) {
    rep.matches_form = true;
    rep.form_sign = -1;
  }
  return rep;
}

}  // namespace hypercx
