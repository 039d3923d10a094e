#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidlcs/int_matrix.hpp"
#include "braidlcs/presentation.hpp"

namespace braidlcs {

/// Engine hit a configured limit (pc generator cap, exponent range).
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The engine reached a state that a correct implementation never reaches.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Collected word g_{i1}^{e1} g_{i2}^{e2} ... with i1 < i2 < ... and nonzero
/// exponents; exponents of finite-order generators lie in [0, order).
using NormalWord = std::vector<std::pair<std::size_t, std::int64_t>>;

/// How a pc generator entered the table.
struct PcDefinition {
  enum class Kind {
    None,        ///< hand-built table
    Image,       ///< image of fp generator `first`
    Commutator,  ///< tail of g_first^{g_second}, i.e. [g_first, g_second]
    Power,       ///< tail of the power relation of g_first
  };
  Kind kind = Kind::None;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(PcDefinition const&, PcDefinition const&) = default;
};

struct PcGenerator {
  std::size_t weight = 1;
  PcDefinition definition;
};

/// Weighted nilpotent presentation:
///
///   g_i^{m_i} = power(i)            for generators of finite order m_i
///   g_j^{g_i} = g_j conjugate(j, i)  for i < j
///
/// Conjugation is x^y = y^-1 x y. Generators are ordered by weight, and a
/// conjugate tail only mentions generators after g_j.
class PolycyclicTable {
 public:
  PolycyclicTable() = default;
  explicit PolycyclicTable(std::vector<PcGenerator> generators);

  std::size_t size() const { return generators_.size(); }
  PcGenerator const& generator(std::size_t i) const { return generators_[i]; }
  std::size_t weight(std::size_t i) const { return generators_[i].weight; }
  /// Relative order, 0 for infinite.
  std::int64_t order(std::size_t i) const { return orders_[i]; }
  NormalWord const& power(std::size_t i) const { return powers_[i]; }
  NormalWord const& conjugate(std::size_t j, std::size_t i) const {
    return conjugates_[j][i];
  }

  void set_power(std::size_t i, std::int64_t order, NormalWord rhs);
  void set_conjugate(std::size_t j, std::size_t i, NormalWord tail);

  /// Appends a generator with trivial relations; returns its index.
  std::size_t add_generator(PcGenerator g);

 private:
  std::vector<PcGenerator> generators_;
  std::vector<std::int64_t> orders_;
  std::vector<NormalWord> powers_;
  std::vector<std::vector<NormalWord>> conjugates_;
};

/// Reusable collector over a finished table.
class TableCollector {
 public:
  explicit TableCollector(PolycyclicTable const& table);
  ~TableCollector();
  TableCollector(TableCollector&&) noexcept;
  TableCollector& operator=(TableCollector&&) noexcept;

  /// Normal form of a word whose letters index pc generators.
  NormalWord collect(Word const& w) const;
  NormalWord multiply(NormalWord const& a, NormalWord const& b) const;
  NormalWord inverse(NormalWord const& a) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Collection from the left; the result is the unique normal word for w.
NormalWord collect(PolycyclicTable const& table, Word const& w);

/// Word whose letters spell out a normal word.
Word to_word(NormalWord const& w);

struct ConsistencyViolation {
  std::string overlap;  ///< e.g. "g3 (g2 g1)" style description
  NormalWord lhs;
  NormalWord rhs;
};

/// Runs every overlap test (associativity triples, power overlaps, inverse
/// overlaps). Empty iff the table is consistent.
std::vector<ConsistencyViolation> consistency_violations(
    PolycyclicTable const& table);

struct NqOptions {
  std::size_t max_pc_generators = 512;
  /// Run every associativity overlap instead of only those of weight sum at
  /// most the new class. Slower; results are identical.
  bool full_consistency = false;
};

struct NqResult {
  PolycyclicTable table;
  std::size_t nilpotency_class = 0;  ///< requested class c
  /// quotients[i - 1] = Gamma_i / Gamma_{i+1}, for i = 1..c.
  std::vector<AbelianInvariants> quotients;
  /// Images of the fp generators in G / Gamma_{c+1}.
  std::vector<NormalWord> epimorphism;
};

/// Computes G / Gamma_{c+1}(G) class by class.
NqResult nilpotent_quotient(Presentation const& p, std::size_t c,
                            NqOptions const& options = {});

/// Free ranks of the successive quotients, i.e. ranks of D_i / D_{i+1}.
std::vector<std::size_t> rational_ranks(NqResult const& r);

/// Image of an fp word under the epimorphism, collected.
NormalWord evaluate(NqResult const& r, Word const& w);

/// {"class": c, "quotients": [{"free_rank": r, "torsion": [...]}, ...],
///  "pc_generators": n}
std::string to_json(NqResult const& r);

std::string to_string(NormalWord const& w);

}  // namespace braidlcs
