#include <array>
#include <random>
#include <set>

#include "braidlcs/catalog.hpp"
#include "braidlcs/int_matrix.hpp"
#include "braidlcs/nq.hpp"
#include "braidlcs/rank_formulas.hpp"
#include "doctest.h"

using namespace braidlcs;

namespace {

using Mat3 = std::array<std::array<long, 3>, 3>;

Mat3 mul(Mat3 const& a, Mat3 const& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Inverse of a unitriangular integer matrix.
Mat3 unitri_inverse(Mat3 const& a) {
  Mat3 r{{{1, -a[0][1], a[0][1] * a[1][2] - a[0][2]}, {0, 1, -a[1][2]}, {0, 0, 1}}};
  return r;
}

Mat3 const kI{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

Mat3 eval(Word const& w, std::vector<Mat3> const& images) {
  Mat3 r = kI;
  for (auto const& l : w) {
    r = mul(r, l.sign > 0 ? images[l.index] : unitri_inverse(images[l.index]));
  }
  return r;
}

Word random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), g(0, gens - 1);
  std::uniform_int_distribution<int> s(0, 1);
  Word w;
  for (std::size_t i = len(rng); i > 0; --i) w.push_back({g(rng), s(rng) ? 1 : -1});
  return w;
}

PolycyclicTable heisenberg() {
  PolycyclicTable t({{1, {}}, {1, {}}, {2, {}}});
  t.set_conjugate(1, 0, {{2, 1}});  // y^x = y z
  return t;
}

// Coset enumeration over the trivial subgroup (HLT with coincidences).
class CosetTable {
 public:
  CosetTable(std::size_t gens, std::vector<Word> const& relators) : cols_(2 * gens) {
    for (auto const& r : relators) {
      std::vector<int> w;
      for (auto const& l : r) w.push_back(static_cast<int>(2 * l.index + (l.sign < 0)));
      rels_.push_back(w);
    }
  }

  std::size_t enumerate(std::size_t limit) {
    define_row();
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (auto const& r : rels_) {
        if (parent_[c] != c) break;
        scan_and_fill(c, r);
      }
      for (int x = 0; x < cols_ && parent_[c] == c; ++x) {
        if (table_[c][x] < 0) define(c, x);
      }
      if (table_.size() > limit) return 0;
    }
    std::size_t live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) live += parent_[c] == static_cast<int>(c);
    return live;
  }

 private:
  int define_row() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(table_.size() - 1));
    return parent_.back();
  }
  void define(int c, int x) {
    int n = define_row();
    table_[c][x] = n;
    table_[n][x ^ 1] = c;
  }
  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }
  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }
  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < cols_; ++x) {
        int f = table_[e][x];
        if (f < 0) continue;
        table_[f][x ^ 1] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][x ^ 1] >= 0) {
          merge(e1, table_[f1][x ^ 1], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][x ^ 1] = e1;
        }
      }
    }
  }
  void scan_and_fill(int c, std::vector<int> const& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][w[j] ^ 1] >= 0) b = table_[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int cols_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

std::vector<Presentation> sample_catalog() {
  using namespace catalog;
  return {artin_braid(3), artin_braid(4), dihedral_artin(2), dihedral_artin(3),
          baumslag_solitar_mm(2), g_pq(2, 3), g_pq(4, 6),
          surface_braid_closed(2, 1), surface_braid_closed(3, 1),
          surface_braid_boundary(2, 1, 2), surface_braid_boundary(3, 1, 1),
          pure_surface_braid(2, 1), b2t2_alpha_beta_gamma(), z2_free_cubed(),
          free_group(2), free_abelian(3),
          parse_presentation("gens: a b\nrels: a^6; b^4; [a,b]^3\n")};
}

}  // namespace

TEST_CASE("Heisenberg table: collection agrees with unitriangular matrices") {
  auto t = heisenberg();
  CHECK(consistency_violations(t).empty());
  Mat3 x{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat3 y{{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}};
  // z := y^-1 x^-1 y x makes y^x = y z hold; it must be central.
  Mat3 z = mul(mul(unitri_inverse(y), unitri_inverse(x)), mul(y, x));
  CHECK(mul(z, x) == mul(x, z));
  CHECK(mul(z, y) == mul(y, z));
  std::vector<Mat3> images{x, y, z};
  TableCollector coll(t);
  std::mt19937 rng(21);
  for (int k = 0; k < 500; ++k) {
    Word w = random_word(rng, 3, 25);
    NormalWord nf = coll.collect(w);
    CHECK(eval(w, images) == eval(to_word(nf), images));
    for (std::size_t i = 1; i < nf.size(); ++i) CHECK(nf[i - 1].first < nf[i].first);
  }
  CHECK(coll.collect(Word{gen(1), gen(0)}) == NormalWord{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("collecting normal words and g g^-1") {
  auto t = heisenberg();
  NormalWord w{{0, 2}, {1, -3}, {2, 5}};
  CHECK(collect(t, to_word(w)) == w);
  for (std::size_t g = 0; g < 3; ++g) CHECK(collect(t, Word{gen(g), inv(g)}).empty());
  TableCollector c(t);
  CHECK(c.multiply(w, c.inverse(w)).empty());
}

TEST_CASE("finite orders: Z/2 and exponent normalization") {
  PolycyclicTable z2(std::vector<PcGenerator>{PcGenerator{1, {}}});
  z2.set_power(0, 2, {});
  CHECK(consistency_violations(z2).empty());
  CHECK(collect(z2, Word{gen(0), gen(0), gen(0)}) == NormalWord{{0, 1}});
  CHECK(collect(z2, Word{inv(0)}) == NormalWord{{0, 1}});
}

TEST_CASE("corrupted tables are reported") {
  // y of order 2 while y^x = y z with z infinite: (y^2)^x = 1 but (y z)^2 = y^2 z^2
  PolycyclicTable t({{1, {}}, {1, {}}, {2, {}}});
  t.set_power(1, 2, {});
  t.set_conjugate(1, 0, {{2, 1}});
  auto v = consistency_violations(t);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().lhs != v.front().rhs);

  // x of order 2: y^(x^2) = y z^2 must equal y
  auto h = heisenberg();
  h.set_power(0, 2, {});
  CHECK_FALSE(consistency_violations(h).empty());
  h.set_power(2, 2, {});
  CHECK(consistency_violations(h).empty());
}

TEST_CASE("free group F2 to class 3") {
  auto r = nilpotent_quotient(catalog::free_group(2), 3);
  REQUIRE(r.quotients.size() == 3);
  CHECK(rational_ranks(r) == std::vector<std::size_t>{2, 1, 2});
  for (auto const& q : r.quotients) CHECK(q.torsion.empty());
  CHECK(to_json(r) ==
        R"({"class":3,"quotients":[{"free_rank":2,"torsion":[]},{"free_rank":1,"torsion":[]},)"
        R"({"free_rank":2,"torsion":[]}],"pc_generators":5})");
  // y x = x y [x,y]^-1 in the class-2 quotient
  auto h = nilpotent_quotient(catalog::free_group(2), 2);
  Word x{gen(0)}, y{gen(1)};
  TableCollector c(h.table);
  auto yx = evaluate(h, y * x);
  auto xy = evaluate(h, x * y);
  auto comm = evaluate(h, commutator(x, y));
  CHECK(c.multiply(yx, comm) == xy);
  CHECK(yx.size() == 3);
}

TEST_CASE("Witt ranks for F2 and F3 up to class 5") {
  for (std::size_t k : {2u, 3u}) {
    auto r = nilpotent_quotient(catalog::free_group(k), 5);
    for (std::size_t i = 1; i <= 5; ++i) {
      CHECK(r.quotients[i - 1].torsion.empty());
      CHECK(BigInt(static_cast<unsigned long>(r.quotients[i - 1].free_rank)) ==
            witt_rank(k, i));
    }
  }
}

TEST_CASE("engine postconditions over the catalog") {
  for (auto const& p : sample_catalog()) {
    CAPTURE(p.name());
    auto r = nilpotent_quotient(p, 4);
    CHECK(consistency_violations(r.table).empty());
    CHECK(r.quotients[0] == abelian_invariants(p));
    for (auto const& rel : p.relators()) CHECK(evaluate(r, rel).empty());
    for (std::size_t i = 1; i < r.quotients.size(); ++i) {
      if (r.quotients[i - 1].trivial()) CHECK(r.quotients[i].trivial());
    }
    NqOptions full;
    full.full_consistency = true;
    auto s = nilpotent_quotient(p, 4, full);
    CHECK(s.quotients == r.quotients);
    CHECK(s.table.size() == r.table.size());
    std::size_t gens = 0;
    for (auto const& q : r.quotients) gens += q.free_rank + q.torsion.size();
    CHECK(r.table.size() >= gens);
  }
}

TEST_CASE("definitions are weight-exact commutators, images or powers") {
  auto r = nilpotent_quotient(catalog::z2_free_cubed(), 4);
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    auto const& g = r.table.generator(i);
    if (g.definition.kind == PcDefinition::Kind::Commutator) {
      CHECK(g.weight == r.table.weight(g.definition.first) +
                            r.table.weight(g.definition.second));
    } else if (g.definition.kind == PcDefinition::Kind::Image) {
      CHECK(g.weight == 1);
    }
  }
}

TEST_CASE("class-2 quotient of Z2*Z2*Z2 against coset enumeration") {
  auto p = catalog::z2_free_cubed();
  auto r = nilpotent_quotient(p, 2);
  CHECK(to_string(r.quotients[1]) == "Z/2 + Z/2 + Z/2");

  // Independent: enumerate <a,b,c | a^2, b^2, c^2, [[x,y],z]>.
  std::vector<Word> rels = p.relators();
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t z = 0; z < 3; ++z)
        rels.push_back(commutator(commutator(Word{gen(x)}, Word{gen(y)}), Word{gen(z)}));
  CosetTable ct(3, rels);
  std::size_t order = ct.enumerate(200000);
  CHECK(order == 64);

  // Closure over the pc table from the generator images.
  TableCollector c(r.table);
  std::set<NormalWord> seen{NormalWord{}};
  std::vector<NormalWord> frontier{NormalWord{}};
  while (!frontier.empty()) {
    auto w = frontier.back();
    frontier.pop_back();
    for (auto const& img : r.epimorphism) {
      auto next = c.multiply(w, img);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  CHECK(seen.size() == order);

  // Derived subgroup: order 8, exponent 2.
  std::size_t derived = 0;
  for (auto const& w : seen) {
    bool in_derived = true;
    for (auto const& [g, e] : w) in_derived = in_derived && r.table.weight(g) >= 2;
    if (!in_derived) continue;
    ++derived;
    CHECK(c.multiply(w, w).empty());
  }
  CHECK(derived == 8);
}

TEST_CASE("direct products add quotient invariants") {
  using namespace catalog;
  std::vector<std::pair<Presentation, Presentation>> pairs{
      {z2_free_cubed(), free_abelian(2)},
      {free_group(2), g_pq(2, 3)},
      {dihedral_artin(2), free_abelian(1)},
  };
  for (auto const& [p, q] : pairs) {
    auto rp = nilpotent_quotient(p, 3), rq = nilpotent_quotient(q, 3);
    auto rpq = nilpotent_quotient(direct_product(p, q), 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(rpq.quotients[i] == direct_sum(rp.quotients[i], rq.quotients[i]));
    }
  }
}

TEST_CASE("resource cap is an explicit error") {
  NqOptions o;
  o.max_pc_generators = 10;
  CHECK_THROWS_AS(nilpotent_quotient(catalog::free_group(3), 4, o), ResourceLimitExceeded);
  CHECK_THROWS_AS(nilpotent_quotient(catalog::free_group(2), 0), std::invalid_argument);
}
