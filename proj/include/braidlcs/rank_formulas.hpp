#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidlcs/int_matrix.hpp"

namespace braidlcs {

/// Raised when a closed-form rank evaluates to a non-integer.
class NonIntegralRank : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Moebius function, n >= 1.
int mobius(std::size_t n);

/// Rank of Gamma_i / Gamma_{i+1} of the free group of rank k:
/// (1/i) sum_{d | i} mu(d) k^{i/d}.
BigInt witt_rank(std::size_t k, std::size_t i);

/// 2^k + 2(-1)^k.
BigInt k_alpha_k(std::size_t k);

/// Number of Z/2 summands predicted for the i-th lower central quotient of
/// Z2 * Z2 * Z2, evaluated from the closed formula:
///
///   R_i = sum_{j=1}^{i-2} sum_{k | i-j, k > 1} mu((i-j)/k) k_alpha_k(k) / (i-j)
///
/// i >= 2. Throws NonIntegralRank if the sum is not an integer.
BigInt gaglione_R(std::size_t i);

/// Expands -ln((1+x)^2 (1-2x)) as an exact power series and checks that
/// k [x^k] equals k_alpha_k(k) for 1 <= k <= order.
bool series_check(std::size_t order);

/// Ranks indexed from `first_index`, e.g. witt ranks from 1 or R_i from 2.
struct RankTable {
  std::string label;
  std::size_t first_index = 1;
  std::vector<BigInt> ranks;
};

RankTable witt_table(std::size_t k, std::size_t last);
RankTable gaglione_table(std::size_t last);

/// Two columns "index rank", one row per entry.
std::string to_string(RankTable const& t);

}  // namespace braidlcs
