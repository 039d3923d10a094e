#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "braidlcs/presentation.hpp"

namespace braidlcs::catalog {

/// Reading of the side condition "i+1=r<j<s for odd r<2g or r>2g" in the
/// last conjugation relation of the pure surface braid presentation.
enum class Pr4Reading {
  OddOrLarge,  ///< (r odd and r < 2g) or r > 2g
  OddOnly,     ///< r odd and (r < 2g or r > 2g)
};

/// Artin braid group B_n, generators s1..s_{n-1}. n >= 2.
Presentation artin_braid(std::size_t n);

/// Artin-Tits group of a symmetric Coxeter matrix. Off-diagonal entries are
/// m_{s,t} >= 2, or 0 for infinity (no relator). Generators s1..sk.
Presentation artin_tits(std::vector<std::vector<std::size_t>> const& coxeter);

/// <a, b | (ab)^m = (ba)^m>, m >= 2.
Presentation dihedral_artin(std::size_t m);

/// <a, c | [a, c^m] = 1>, m >= 1.
Presentation baumslag_solitar_mm(std::size_t m);

/// <m, n | m^p = n^q>, p, q >= 1.
Presentation g_pq(std::size_t p, std::size_t q);

/// Braid group of the closed orientable surface of genus g on n strands.
///
/// Generators a1 b1 ... ag bg s1 ... s_{n-1}; relation families:
///   (1) s_i s_j = s_j s_i                      |i-j| >= 2
///   (2) s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}  1 <= i <= n-2
///   (3) c_i s_j = s_j c_i                      j >= 2, c_i in {a_i, b_i}
///   (4) c_i s1 c_i s1 = s1 c_i s1 c_i
///   (5) a_i s1 b_i = s1 b_i s1 a_i s1
///   (6) c_i s1^-1 c_j s1 = s1^-1 c_j s1 c_i    1 <= j < i <= g
///   (7) prod_i [a_i^-1, b_i] = s1 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s1
/// Families (4)-(6) need s1 and vanish for n = 1.
Presentation surface_braid_closed(std::size_t n, std::size_t g);

/// Braid group of the genus-g surface with m boundary components.
///
/// Generators a1 b1 ... ag bg z1 ... z_{m-1} s1 ... s_{n-1}; families
/// (1)-(6) of the closed case (not (7)) plus
///   (9)  z_i s_j = s_j z_i                     j >= 2
///   (10) z_i s1 z_i s1 = s1 z_i s1 z_i
///   (11) z_i s1^-1 z_j s1 = s1^-1 z_j s1 z_i   1 <= j < i <= m-1
///   (12) c_i s1^-1 z_j s1 = s1^-1 z_j s1 c_i
Presentation surface_braid_boundary(std::size_t n, std::size_t g,
                                    std::size_t m);

/// Pure braid group of the genus-g surface with one boundary component.
///
/// Generators A_i_j for 1 <= i <= 2g+n-1, 2g+1 <= j <= 2g+n, i < j, ordered
/// by (j, i). Relations (PR1)-(PR4), (ER1), (ER2) describe the conjugate
/// A_{i,j}^-1 A_{r,s} A_{i,j}, always with j < s.
Presentation pure_surface_braid(std::size_t n, std::size_t g,
                                Pr4Reading reading = Pr4Reading::OddOrLarge);

/// Number of relators contributed by each family of pure_surface_braid.
std::map<std::string, std::size_t> pure_surface_braid_counts(
    std::size_t n, std::size_t g, Pr4Reading reading = Pr4Reading::OddOrLarge);

/// B_2 of the torus on generators alpha, beta, gamma: alpha^2 and beta^2
/// central, alpha^2 beta^2 = gamma^2.
Presentation b2t2_alpha_beta_gamma();

/// Z2 * Z2 * Z2 on generators alphabar, betabar, gammabar.
Presentation z2_free_cubed();

/// Free group on x1..xk.
Presentation free_group(std::size_t k);

/// Z^k on x1..xk.
Presentation free_abelian(std::size_t k);

/// P x Q: disjoint generators (colliding symbols of Q get a suffix), both
/// relator sets, and [p, q] for every pair of generators.
Presentation direct_product(Presentation const& p, Presentation const& q);

/// A catalog family with its integer parameters, as named on the command
/// line.
struct FamilySpec {
  std::string family;
  std::vector<long> params;
};

/// Family names accepted by build(), with a parameter synopsis.
std::vector<std::pair<std::string, std::string>> families();

/// Builds a family by name. artin_tits takes k followed by the upper
/// triangle of the Coxeter matrix row by row (0 for infinity).
/// direct_product is not buildable from integers alone.
Presentation build(FamilySpec const& spec,
                   Pr4Reading reading = Pr4Reading::OddOrLarge);

}  // namespace braidlcs::catalog
