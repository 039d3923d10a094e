#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "braidlcs/presentation.hpp"

namespace braidlcs {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  BigInt const& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, BigInt const& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, BigInt const& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool is_zero() const;

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend bool operator==(IntMatrix const& a, IntMatrix const& b);
  friend std::ostream& operator<<(std::ostream& os, IntMatrix const& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
BigInt determinant(IntMatrix const& m);

struct HermiteForm {
  IntMatrix H;  ///< row-echelon, pivots positive, entries above pivots in [0, pivot)
  IntMatrix U;  ///< unimodular, U * A == H
};

HermiteForm hermite_normal_form(IntMatrix const& a);

struct SmithForm {
  IntMatrix S;  ///< diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix U;  ///< unimodular
  IntMatrix V;  ///< unimodular, U * A * V == S
};

SmithForm smith_normal_form(IntMatrix const& a);

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... with
/// t_i >= 2 and t_i | t_{i+1}.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(AbelianInvariants const& a,
                         AbelianInvariants const& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// Renders as `Z^r + Z/d1 + Z/d2 ...`; `Z` for rank one and `0` when trivial.
std::string to_string(AbelianInvariants const& a);

/// Invariants of the direct sum a + b.
AbelianInvariants direct_sum(AbelianInvariants const& a,
                             AbelianInvariants const& b);

/// Invariants of Z^cols / (row lattice of m).
AbelianInvariants cokernel_invariants(IntMatrix const& m);

/// Relator-by-generator exponent-sum matrix of p.
IntMatrix relation_matrix(Presentation const& p);

/// Invariants of G/[G,G] for the group presented by p.
AbelianInvariants abelian_invariants(Presentation const& p);

/// Incrementally maintained row-echelon basis of a sublattice of Z^n.
///
/// Rows are kept sparse and keyed by pivot column. After finalize() the basis
/// is in Hermite normal form.
class EchelonLattice {
 public:
  using Row = std::map<std::size_t, BigInt>;

  explicit EchelonLattice(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the lattice. Returns true when the lattice grew.
  bool add(std::vector<BigInt> const& v);
  bool add(Row v);

  /// Reduces the entries above each pivot into [0, pivot).
  void finalize();

  /// Pivot column -> row.
  std::map<std::size_t, Row> const& rows() const { return rows_; }

  IntMatrix to_matrix() const;

 private:
  void reduce_tail(Row& v, std::size_t after) const;

  std::size_t dimension_;
  std::map<std::size_t, Row> rows_;
};

}  // namespace braidlcs
