#include "braidlcs/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace braidlcs {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap((*this)(r, a), (*this)(r, b));
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 BigInt const& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 BigInt const& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](BigInt const& v) { return v == 0; });
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      BigInt const& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

bool operator==(IntMatrix const& a, IntMatrix const& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os;
}

BigInt determinant(IntMatrix const& input) {
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

HermiteForm hermite_normal_form(IntMatrix const& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (!best || abs(h(i, col)) < abs(h(*best, col))) best = i;
      }
      if (!best) break;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(IntMatrix const& a) {
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    bool done = false;
    while (true) {
      // Smallest nonzero entry of the active block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          if (!best || abs(s(i, j)) < abs(s(best->first, best->second))) {
            best = {i, j};
          }
        }
      }
      if (!best) {
        done = true;
        break;
      }
      s.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      s.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < s.rows() && !offender; ++i) {
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) break;
      s.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (done) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::string to_string(AbelianInvariants const& a) {
  if (a.trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (a.free_rank == 1) {
    out << "Z";
    first = false;
  } else if (a.free_rank > 1) {
    out << "Z^" << a.free_rank;
    first = false;
  }
  for (auto const& t : a.torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

AbelianInvariants direct_sum(AbelianInvariants const& a,
                             AbelianInvariants const& b) {
  std::size_t k = a.torsion.size() + b.torsion.size();
  IntMatrix m(k, k);
  std::size_t i = 0;
  for (auto const& t : a.torsion) m(i, i) = t, ++i;
  for (auto const& t : b.torsion) m(i, i) = t, ++i;
  AbelianInvariants out = cokernel_invariants(m);
  out.free_rank = a.free_rank + b.free_rank;
  return out;
}

AbelianInvariants cokernel_invariants(IntMatrix const& m) {
  SmithForm snf = smith_normal_form(m);
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    BigInt const& d = snf.S(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = m.cols() - nonzero;
  return out;
}

IntMatrix relation_matrix(Presentation const& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (auto const& g : p.relators()[r]) m(r, g.index) += g.sign;
  }
  return m;
}

AbelianInvariants abelian_invariants(Presentation const& p) {
  return cokernel_invariants(relation_matrix(p));
}

namespace {

void axpy(EchelonLattice::Row& y, BigInt const& k, EchelonLattice::Row const& x) {
  if (k == 0) return;
  for (auto const& [c, v] : x) {
    auto [it, inserted] = y.try_emplace(c, 0);
    it->second += k * v;
    if (it->second == 0) y.erase(it);
  }
}

EchelonLattice::Row combine(BigInt const& a, EchelonLattice::Row const& x,
                            BigInt const& b, EchelonLattice::Row const& y) {
  EchelonLattice::Row out;
  axpy(out, a, x);
  axpy(out, b, y);
  return out;
}

}  // namespace

bool EchelonLattice::add(std::vector<BigInt> const& v) {
  if (v.size() != dimension_) throw std::invalid_argument("dimension mismatch");
  Row row;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] != 0) row.emplace(c, v[c]);
  }
  return add(std::move(row));
}

// Brings the entries of v after column `after` into [0, pivot) wherever a
// pivot row exists. Without this the stored rows grow without bound.
void EchelonLattice::reduce_tail(Row& v, std::size_t after) const {
  for (auto it = v.upper_bound(after); it != v.end();) {
    std::size_t c = it->first;
    auto row = rows_.find(c);
    if (row != rows_.end()) {
      BigInt const& pivot = row->second.at(c);
      if (it->second < 0 || it->second >= pivot) {
        BigInt k;
        mpz_fdiv_q(k.get_mpz_t(), it->second.get_mpz_t(), pivot.get_mpz_t());
        axpy(v, -k, row->second);
      }
    }
    it = v.upper_bound(c);
  }
}

bool EchelonLattice::add(Row v) {
  bool grew = false;
  while (!v.empty()) {
    std::size_t p = v.begin()->first;
    if (p >= dimension_) throw std::out_of_range("column beyond dimension");
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      if (v.begin()->second < 0) {
        for (auto& [c, x] : v) x = -x;
      }
      reduce_tail(v, p);
      rows_.emplace(p, std::move(v));
      for (auto& [q, upper] : rows_) {
        if (q >= p) break;
        if (upper.count(p)) reduce_tail(upper, q);
      }
      return true;
    }
    Row& r = it->second;
    BigInt const a = r.at(p);
    BigInt const b = v.at(p);
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      BigInt q = b / a;
      axpy(v, -q, r);
      continue;
    }
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Row new_r = combine(s, r, t, v);
    Row new_v = combine(BigInt(a / g), v, BigInt(-(b / g)), r);
    r = std::move(new_r);
    if (r.at(p) < 0) {
      for (auto& [c, x] : r) x = -x;
    }
    reduce_tail(r, p);
    v = std::move(new_v);
    grew = true;
  }
  return grew;
}

void EchelonLattice::finalize() {
  for (auto const& [p, row] : rows_) {
    BigInt const& pivot = row.at(p);
    for (auto& [q, upper] : rows_) {
      if (q >= p) break;
      auto it = upper.find(p);
      if (it == upper.end()) continue;
      BigInt k;
      mpz_fdiv_q(k.get_mpz_t(), it->second.get_mpz_t(), pivot.get_mpz_t());
      axpy(upper, -k, row);
    }
  }
}

IntMatrix EchelonLattice::to_matrix() const {
  IntMatrix m(rows_.size(), dimension_);
  std::size_t r = 0;
  for (auto const& [p, row] : rows_) {
    for (auto const& [c, v] : row) m(r, c) = v;
    ++r;
  }
  return m;
}

}  // namespace braidlcs
