#include "braidlcs/catalog.hpp"

#include <functional>
#include <stdexcept>

namespace braidlcs::catalog {

namespace {

void require(bool ok, std::string const& what) {
  if (!ok) throw std::invalid_argument("parameter out of range: " + what);
}

Word letter(std::size_t i, int sign = 1) { return Word{{i, sign}}; }

Word product(std::initializer_list<Word> parts) {
  Word out;
  for (auto const& p : parts) out *= p;
  return out;
}

// st... of the given length, starting with s.
Word alternating(std::size_t s, std::size_t t, std::size_t length) {
  Word out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(gen(k % 2 ? t : s));
  return out;
}

std::vector<std::string> numbered(std::string const& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// Shared layout of the surface braid presentations.
struct SurfaceLayout {
  std::size_t g;
  std::size_t punctures;  // number of z generators
  std::size_t n;

  std::size_t a(std::size_t i) const { return 2 * (i - 1); }      // i in 1..g
  std::size_t b(std::size_t i) const { return 2 * (i - 1) + 1; }  // i in 1..g
  std::size_t z(std::size_t i) const { return 2 * g + i - 1; }    // i in 1..m-1
  std::size_t s(std::size_t i) const { return 2 * g + punctures + i - 1; }

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= g; ++i) {
      out.push_back("a" + std::to_string(i));
      out.push_back("b" + std::to_string(i));
    }
    for (auto& z : numbered("z", punctures)) out.push_back(z);
    for (auto& s : numbered("s", n - 1)) out.push_back(s);
    return out;
  }
};

// Relation families (1)-(6), shared by the closed and bounded cases.
void add_braid_and_handle_relations(Presentation& p, SurfaceLayout const& L) {
  std::size_t n = L.n;
  std::size_t g = L.g;
  // (1)
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      p.add_relation(product({letter(L.s(i)), letter(L.s(j))}),
                     product({letter(L.s(j)), letter(L.s(i))}));
    }
  }
  // (2)
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    Word si = letter(L.s(i)), sn = letter(L.s(i + 1));
    p.add_relation(product({si, sn, si}), product({sn, si, sn}));
  }
  auto handles = [&](std::size_t i) {
    return std::vector<std::size_t>{L.a(i), L.b(i)};
  };
  // (3)
  for (std::size_t i = 1; i <= g; ++i) {
    for (std::size_t c : handles(i)) {
      for (std::size_t j = 2; j < n; ++j) {
        p.add_relation(product({letter(c), letter(L.s(j))}),
                       product({letter(L.s(j)), letter(c)}));
      }
    }
  }
  if (n < 2) return;
  Word s1 = letter(L.s(1)), s1inv = letter(L.s(1), -1);
  // (4)
  for (std::size_t i = 1; i <= g; ++i) {
    for (std::size_t c : handles(i)) {
      Word ci = letter(c);
      p.add_relation(product({ci, s1, ci, s1}), product({s1, ci, s1, ci}));
    }
  }
  // (5)
  for (std::size_t i = 1; i <= g; ++i) {
    Word ai = letter(L.a(i)), bi = letter(L.b(i));
    p.add_relation(product({ai, s1, bi}), product({s1, bi, s1, ai, s1}));
  }
  // (6)
  for (std::size_t i = 1; i <= g; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      for (std::size_t ci : handles(i)) {
        for (std::size_t cj : handles(j)) {
          p.add_relation(
              product({letter(ci), s1inv, letter(cj), s1}),
              product({s1inv, letter(cj), s1, letter(ci)}));
        }
      }
    }
  }
}

using PureVisitor =
    std::function<void(std::string const& family, Word const& lhs,
                        Word const& rhs)>;

void enumerate_pure(std::size_t n, std::size_t g, Pr4Reading reading,
                    std::vector<std::string>* symbols, PureVisitor const& visit) {
  std::size_t const top = 2 * g + n;
  std::size_t const two_g = 2 * g;
  // index[i][j] for the generator A_{i,j}
  std::vector<std::vector<long>> index(top + 1, std::vector<long>(top + 1, -1));
  std::size_t count = 0;
  for (std::size_t j = two_g + 1; j <= top; ++j) {
    for (std::size_t i = 1; i < j && i <= top - 1; ++i) {
      index[i][j] = static_cast<long>(count++);
      if (symbols) {
        symbols->push_back("A_" + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }
  auto A = [&](std::size_t i, std::size_t j, int sign = 1) {
    long k = index.at(i).at(j);
    if (k < 0) throw std::logic_error("missing pure braid generator");
    return letter(static_cast<std::size_t>(k), sign);
  };

  for (std::size_t j = two_g + 1; j <= top; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      for (std::size_t s = j + 1; s <= top; ++s) {
        for (std::size_t r = 1; r < s; ++r) {
          Word lhs = product({A(i, j, -1), A(r, s), A(i, j)});
          bool r_odd = r % 2 == 1;
          bool small = r < two_g;
          bool large = r > two_g;
          int matched = 0;
          auto emit = [&](char const* family, Word const& rhs) {
            ++matched;
            visit(family, lhs, rhs);
          };
          if ((i < j && j < r) || (r + 1 < i) ||
              (i == r + 1 && ((!r_odd && small) || large))) {
            emit("PR1", A(r, s));
          }
          if (r == j) {
            emit("PR2", product({A(i, s), A(j, s), A(i, s, -1)}));
          }
          if (r == i) {
            emit("PR3", product({A(i, s), A(j, s), A(i, s), A(j, s, -1),
                                 A(i, s, -1)}));
          }
          bool pr4_adjacent =
              reading == Pr4Reading::OddOrLarge
                  ? ((r_odd && small) || large)
                  : (r_odd && (small || large));
          if ((i + 1 < r && r < j) || (i + 1 == r && r < j && pr4_adjacent)) {
            emit("PR4", product({A(i, s), A(j, s), A(i, s, -1), A(j, s, -1),
                                 A(r, s), A(j, s), A(i, s), A(j, s, -1),
                                 A(i, s, -1)}));
          }
          if (i == r + 1 && r_odd && small) {
            emit("ER1", product({A(r, s), A(r + 1, s), A(j, s, -1),
                                 A(r + 1, s, -1)}));
          }
          if (r >= 2 && i == r - 1 && !r_odd && small) {
            emit("ER2", product({A(r - 1, s), A(j, s), A(r - 1, s, -1),
                                 A(r, s), A(j, s), A(r - 1, s),
                                 A(j, s, -1), A(r - 1, s, -1)}));
          }
          if (matched > 1) {
            throw std::logic_error("overlapping pure braid relation cases");
          }
        }
      }
    }
  }
}

}  // namespace

Presentation artin_braid(std::size_t n) {
  require(n >= 2, "artin_braid needs n >= 2");
  SurfaceLayout L{0, 0, n};
  Presentation p("artin_braid(" + std::to_string(n) + ")", L.symbols());
  add_braid_and_handle_relations(p, L);
  return p;
}

Presentation artin_tits(std::vector<std::vector<std::size_t>> const& m) {
  std::size_t k = m.size();
  require(k >= 1, "artin_tits needs at least one generator");
  for (std::size_t s = 0; s < k; ++s) {
    require(m[s].size() == k, "Coxeter matrix must be square");
    for (std::size_t t = 0; t < k; ++t) {
      if (s == t) continue;
      require(m[s][t] == m[t][s], "Coxeter matrix must be symmetric");
      require(m[s][t] == 0 || m[s][t] >= 2, "Coxeter entries are >= 2 or 0");
    }
  }
  Presentation p("artin_tits", numbered("s", k));
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = s + 1; t < k; ++t) {
      if (m[s][t] == 0) continue;
      p.add_relation(alternating(s, t, m[s][t]), alternating(t, s, m[s][t]));
    }
  }
  return p;
}

Presentation dihedral_artin(std::size_t m) {
  require(m >= 2, "dihedral_artin needs m >= 2");
  Presentation p("dihedral_artin(" + std::to_string(m) + ")", {"a", "b"});
  Word ab = product({letter(0), letter(1)});
  Word ba = product({letter(1), letter(0)});
  p.add_relation(pow(ab, static_cast<std::int64_t>(m)),
                 pow(ba, static_cast<std::int64_t>(m)));
  return p;
}

Presentation baumslag_solitar_mm(std::size_t m) {
  require(m >= 1, "baumslag_solitar_mm needs m >= 1");
  Presentation p("baumslag_solitar_mm(" + std::to_string(m) + ")", {"a", "c"});
  p.add_relator(commutator(letter(0), Word::power(1, static_cast<std::int64_t>(m))));
  return p;
}

Presentation g_pq(std::size_t p_exp, std::size_t q_exp) {
  require(p_exp >= 1 && q_exp >= 1, "g_pq needs p, q >= 1");
  Presentation p("g_pq(" + std::to_string(p_exp) + "," + std::to_string(q_exp) + ")",
                 {"m", "n"});
  p.add_relation(Word::power(0, static_cast<std::int64_t>(p_exp)),
                 Word::power(1, static_cast<std::int64_t>(q_exp)));
  return p;
}

Presentation surface_braid_closed(std::size_t n, std::size_t g) {
  require(n >= 1 && g >= 1, "surface_braid_closed needs n >= 1, g >= 1");
  SurfaceLayout L{g, 0, n};
  Presentation p("surface_braid_closed(" + std::to_string(n) + "," +
                     std::to_string(g) + ")",
                 L.symbols());
  add_braid_and_handle_relations(p, L);
  // (7)
  Word lhs;
  for (std::size_t i = 1; i <= g; ++i) {
    lhs *= commutator(letter(L.a(i), -1), letter(L.b(i)));
  }
  Word rhs;
  if (n >= 2) {
    for (std::size_t i = 1; i + 1 < n; ++i) rhs *= letter(L.s(i));
    rhs *= Word::power(L.s(n - 1), 2);
    for (std::size_t i = n - 1; i-- > 1;) rhs *= letter(L.s(i));
  }
  p.add_relation(lhs, rhs);
  return p;
}

Presentation surface_braid_boundary(std::size_t n, std::size_t g,
                                    std::size_t m) {
  require(n >= 1 && g >= 1 && m >= 1,
          "surface_braid_boundary needs n >= 1, g >= 1, m >= 1");
  SurfaceLayout L{g, m - 1, n};
  Presentation p("surface_braid_boundary(" + std::to_string(n) + "," +
                     std::to_string(g) + "," + std::to_string(m) + ")",
                 L.symbols());
  add_braid_and_handle_relations(p, L);
  // (9)
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 2; j < n; ++j) {
      p.add_relation(product({letter(L.z(i)), letter(L.s(j))}),
                     product({letter(L.s(j)), letter(L.z(i))}));
    }
  }
  if (n < 2) return p;
  Word s1 = letter(L.s(1)), s1inv = letter(L.s(1), -1);
  // (10)
  for (std::size_t i = 1; i < m; ++i) {
    Word zi = letter(L.z(i));
    p.add_relation(product({zi, s1, zi, s1}), product({s1, zi, s1, zi}));
  }
  // (11)
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      Word zi = letter(L.z(i)), zj = letter(L.z(j));
      p.add_relation(product({zi, s1inv, zj, s1}),
                     product({s1inv, zj, s1, zi}));
    }
  }
  // (12)
  for (std::size_t i = 1; i <= g; ++i) {
    for (std::size_t c : {L.a(i), L.b(i)}) {
      for (std::size_t j = 1; j < m; ++j) {
        Word ci = letter(c), zj = letter(L.z(j));
        p.add_relation(product({ci, s1inv, zj, s1}),
                       product({s1inv, zj, s1, ci}));
      }
    }
  }
  return p;
}

Presentation pure_surface_braid(std::size_t n, std::size_t g,
                                Pr4Reading reading) {
  require(n >= 1 && g >= 1, "pure_surface_braid needs n >= 1, g >= 1");
  std::vector<std::string> symbols;
  std::vector<std::pair<Word, Word>> relations;
  enumerate_pure(n, g, reading, &symbols,
                 [&](std::string const&, Word const& lhs, Word const& rhs) {
                   relations.emplace_back(lhs, rhs);
                 });
  Presentation p("pure_surface_braid(" + std::to_string(n) + "," +
                     std::to_string(g) + ")",
                 symbols);
  for (auto const& [lhs, rhs] : relations) p.add_relation(lhs, rhs);
  return p;
}

std::map<std::string, std::size_t> pure_surface_braid_counts(
    std::size_t n, std::size_t g, Pr4Reading reading) {
  require(n >= 1 && g >= 1, "pure_surface_braid needs n >= 1, g >= 1");
  std::map<std::string, std::size_t> counts{{"PR1", 0}, {"PR2", 0}, {"PR3", 0},
                                            {"PR4", 0}, {"ER1", 0}, {"ER2", 0}};
  enumerate_pure(n, g, reading, nullptr,
                 [&](std::string const& family, Word const&, Word const&) {
                   ++counts[family];
                 });
  return counts;
}

Presentation b2t2_alpha_beta_gamma() {
  Presentation p("b2t2", {"alpha", "beta", "gamma"});
  Word a2 = Word::power(0, 2), b2 = Word::power(1, 2), c2 = Word::power(2, 2);
  p.add_relator(commutator(a2, letter(1)));
  p.add_relator(commutator(a2, letter(2)));
  p.add_relator(commutator(b2, letter(0)));
  p.add_relator(commutator(b2, letter(2)));
  p.add_relation(a2 * b2, c2);
  return p;
}

Presentation z2_free_cubed() {
  Presentation p("z2_free_cubed", {"alphabar", "betabar", "gammabar"});
  for (std::size_t i = 0; i < 3; ++i) p.add_relator(Word::power(i, 2));
  return p;
}

Presentation free_group(std::size_t k) {
  require(k >= 1, "free_group needs k >= 1");
  return Presentation("free_group(" + std::to_string(k) + ")", numbered("x", k));
}

Presentation free_abelian(std::size_t k) {
  require(k >= 1, "free_abelian needs k >= 1");
  Presentation p("free_abelian(" + std::to_string(k) + ")", numbered("x", k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      p.add_relator(commutator(letter(i), letter(j)));
    }
  }
  return p;
}

Presentation direct_product(Presentation const& p, Presentation const& q) {
  std::vector<std::string> symbols = p.generators();
  auto taken = [&](std::string const& s) {
    for (auto const& t : symbols) {
      if (t == s) return true;
    }
    return false;
  };
  for (auto s : q.generators()) {
    while (taken(s)) s += "_2";
    symbols.push_back(s);
  }
  std::size_t offset = p.generator_count();
  Presentation out(p.name() + " x " + q.name(), symbols, p.relators());
  for (auto const& r : q.relators()) {
    Word shifted;
    for (auto const& l : r) shifted.push_back({l.index + offset, l.sign});
    out.add_relator(shifted);
  }
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    for (std::size_t j = 0; j < q.generator_count(); ++j) {
      out.add_relator(commutator(letter(i), letter(offset + j)));
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> families() {
  return {
      {"artin_braid", "n"},
      {"artin_tits", "k m_12 m_13 ... m_(k-1)k  (0 = infinity)"},
      {"dihedral_artin", "m"},
      {"baumslag_solitar_mm", "m"},
      {"g_pq", "p q"},
      {"surface_braid_closed", "n g"},
      {"surface_braid_boundary", "n g m"},
      {"pure_surface_braid", "n g"},
      {"b2t2", ""},
      {"z2_free_cubed", ""},
      {"free_group", "k"},
      {"free_abelian", "k"},
      {"direct_product", "<family> <params> , <family> <params>"},
  };
}

Presentation build(FamilySpec const& spec, Pr4Reading reading) {
  auto const& f = spec.family;
  auto const& v = spec.params;
  auto arity = [&](std::size_t k) {
    if (v.size() != k) {
      throw std::invalid_argument(f + " takes " + std::to_string(k) +
                                  " parameter(s)");
    }
    for (long x : v) require(x >= 0, f + " parameters are nonnegative");
  };
  auto u = [&](std::size_t i) { return static_cast<std::size_t>(v.at(i)); };
  if (f == "artin_braid") return arity(1), artin_braid(u(0));
  if (f == "dihedral_artin") return arity(1), dihedral_artin(u(0));
  if (f == "baumslag_solitar_mm") return arity(1), baumslag_solitar_mm(u(0));
  if (f == "g_pq") return arity(2), g_pq(u(0), u(1));
  if (f == "surface_braid_closed") return arity(2), surface_braid_closed(u(0), u(1));
  if (f == "surface_braid_boundary") {
    return arity(3), surface_braid_boundary(u(0), u(1), u(2));
  }
  if (f == "pure_surface_braid") {
    return arity(2), pure_surface_braid(u(0), u(1), reading);
  }
  if (f == "b2t2") return arity(0), b2t2_alpha_beta_gamma();
  if (f == "z2_free_cubed") return arity(0), z2_free_cubed();
  if (f == "free_group") return arity(1), free_group(u(0));
  if (f == "free_abelian") return arity(1), free_abelian(u(0));
  if (f == "artin_tits") {
    require(!v.empty() && v[0] >= 1, "artin_tits needs k >= 1");
    std::size_t k = u(0);
    if (v.size() != 1 + k * (k - 1) / 2) {
      throw std::invalid_argument("artin_tits k needs k(k-1)/2 matrix entries");
    }
    for (long x : v) require(x >= 0, "artin_tits entries are nonnegative");
    std::vector<std::vector<std::size_t>> m(k, std::vector<std::size_t>(k, 1));
    std::size_t at = 1;
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = s + 1; t < k; ++t) m[s][t] = m[t][s] = u(at++);
    }
    return artin_tits(m);
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace braidlcs::catalog
