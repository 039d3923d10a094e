#include "braidlcs/nq.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "collector.hpp"

namespace braidlcs {

using detail::Collector;
using detail::Element;
using detail::Exp;
using detail::Rule;
using detail::Sparse;

// ---------------------------------------------------------------------------
// PolycyclicTable

PolycyclicTable::PolycyclicTable(std::vector<PcGenerator> generators) {
  for (auto& g : generators) add_generator(g);
}

std::size_t PolycyclicTable::add_generator(PcGenerator g) {
  if (!generators_.empty() && g.weight < generators_.back().weight) {
    throw std::invalid_argument("pc generators must be ordered by weight");
  }
  std::size_t j = generators_.size();
  generators_.push_back(g);
  orders_.push_back(0);
  powers_.emplace_back();
  conjugates_.emplace_back(j);
  return j;
}

namespace {

void check_after(NormalWord const& w, std::size_t i, std::size_t n) {
  std::size_t prev = i;
  for (auto const& [g, e] : w) {
    if (g <= prev || g >= n || e == 0) {
      throw std::invalid_argument(
          "relation must be a normal word in later generators");
    }
    prev = g;
  }
}

}  // namespace

void PolycyclicTable::set_power(std::size_t i, std::int64_t order,
                                NormalWord rhs) {
  if (order < 0 || order == 1) throw std::invalid_argument("bad order");
  check_after(rhs, i, size());
  if (order == 0 && !rhs.empty()) {
    throw std::invalid_argument("infinite generator with a power relation");
  }
  orders_[i] = order;
  powers_[i] = std::move(rhs);
}

void PolycyclicTable::set_conjugate(std::size_t j, std::size_t i,
                                    NormalWord tail) {
  if (i >= j) throw std::invalid_argument("conjugate needs i < j");
  check_after(tail, j, size());
  conjugates_[j][i] = std::move(tail);
}

// ---------------------------------------------------------------------------
// Collection over finished tables

namespace {

Collector make_collector(PolycyclicTable const& t) {
  std::vector<Exp> orders(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) orders[i] = t.order(i);
  Collector c(std::move(orders), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.order(i) != 0) c.set_power(i, Rule{t.power(i), {}});
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      c.set_conjugate(j, i, Rule{t.conjugate(j, i), {}});
    }
  }
  c.compute_inverse_conjugates();
  return c;
}

void mul_normal(Collector const& c, Element& x, NormalWord const& w, int sign) {
  c.mul_rule(x, Rule{w, {}}, sign);
}

std::string describe(std::initializer_list<std::string> parts) {
  std::string out;
  for (auto const& p : parts) out += p;
  return out;
}

std::string g(std::size_t i) { return "g" + std::to_string(i + 1); }

// Runs the overlap tests. With a weight cap, associativity triples of weight
// sum above the cap are skipped; they hold automatically when a consistent
// class-c table is extended by central tails of weight c+1.
template <class Report>
void overlap_checks(Collector const& c, std::vector<std::size_t> const& weights,
                    std::optional<std::size_t> weight_cap, Report&& report) {
  std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (weight_cap && weights[i] + 2 * weights[j] > *weight_cap) break;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (weight_cap && weights[i] + weights[j] + weights[k] > *weight_cap) {
          break;
        }
        Element lhs = c.unit(k);
        c.mul_gen(lhs, j, 1);
        c.mul_gen(lhs, i, 1);
        Element z = c.unit(j);
        c.mul_gen(z, i, 1);
        Element rhs = c.unit(k);
        c.mul_element(rhs, z);
        report(describe({"(", g(k), " ", g(j), ") ", g(i)}), lhs, rhs);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Exp m = c.order(j);
    if (m == 0) continue;
    for (std::size_t i = 0; i < j; ++i) {
      Element lhs = c.identity();
      c.mul_rule(lhs, c.power(j), 1);
      c.mul_gen(lhs, i, 1);
      Element z = c.unit(j);
      c.mul_gen(z, i, 1);
      Element rhs = c.unit(j, m - 1);
      c.mul_element(rhs, z);
      report(describe({"(", g(j), "^", std::to_string(m), ") ", g(i)}), lhs,
             rhs);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Exp m = c.order(i);
    if (m == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      Element lhs = c.unit(j);
      c.mul_rule(lhs, c.power(i), 1);
      Element rhs = c.unit(j);
      for (Exp r = 0; r < m; ++r) c.mul_gen(rhs, i, 1);
      report(describe({g(j), " (", g(i), "^", std::to_string(m), ")"}), lhs,
             rhs);
    }
    Element lhs = c.identity();
    c.mul_rule(lhs, c.power(i), 1);
    c.mul_gen(lhs, i, 1);
    Element rhs = c.unit(i);
    c.mul_rule(rhs, c.power(i), 1);
    report(describe({"(", g(i), "^", std::to_string(m), ") ", g(i)}), lhs, rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (c.order(i) != 0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      Element lhs = c.unit(j);
      c.mul_gen(lhs, i, -1);
      c.mul_gen(lhs, i, 1);
      report(describe({"(", g(j), " ", g(i), "^-1) ", g(i)}), lhs, c.unit(j));
    }
  }
}

}  // namespace

struct TableCollector::Impl {
  Collector collector;
};

TableCollector::TableCollector(PolycyclicTable const& table)
    : impl_(std::make_unique<Impl>(Impl{make_collector(table)})) {}
TableCollector::~TableCollector() = default;
TableCollector::TableCollector(TableCollector&&) noexcept = default;
TableCollector& TableCollector::operator=(TableCollector&&) noexcept = default;

NormalWord TableCollector::collect(Word const& w) const {
  auto const& c = impl_->collector;
  Element x = c.identity();
  for (auto const& letter : w) {
    if (letter.index >= c.size()) {
      throw std::out_of_range("letter beyond the pc generators");
    }
    c.mul_gen(x, letter.index, letter.sign);
  }
  return x.word();
}

NormalWord TableCollector::multiply(NormalWord const& a,
                                    NormalWord const& b) const {
  auto const& c = impl_->collector;
  Element x = c.identity();
  mul_normal(c, x, a, 1);
  mul_normal(c, x, b, 1);
  return x.word();
}

NormalWord TableCollector::inverse(NormalWord const& a) const {
  auto const& c = impl_->collector;
  Element x = c.identity();
  mul_normal(c, x, a, -1);
  return x.word();
}

NormalWord collect(PolycyclicTable const& table, Word const& w) {
  return TableCollector(table).collect(w);
}

Word to_word(NormalWord const& w) {
  Word out;
  for (auto const& [gen, e] : w) out *= Word::power(gen, e);
  return out;
}

std::vector<ConsistencyViolation> consistency_violations(
    PolycyclicTable const& table) {
  Collector c = make_collector(table);
  std::vector<std::size_t> weights(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) weights[i] = table.weight(i);
  std::vector<ConsistencyViolation> out;
  overlap_checks(c, weights, std::nullopt,
                 [&](std::string const& what, Element const& lhs,
                     Element const& rhs) {
                   if (lhs.exp != rhs.exp) {
                     out.push_back({what, lhs.word(), rhs.word()});
                   }
                 });
  return out;
}

// ---------------------------------------------------------------------------
// The engine

namespace {

struct TailOrigin {
  PcDefinition::Kind kind;
  std::size_t first;   // conjugated generator j / power generator / fp generator
  std::size_t second;  // conjugating generator i (Commutator only)
};

class Engine {
 public:
  Engine(Presentation const& p, NqOptions const& options)
      : p_(p), options_(options) {
    images_.resize(p.generator_count());
    image_def_.assign(p.generator_count(), 0);
  }

  AbelianInvariants extend() {
    std::size_t n = table_.size();
    std::size_t next = cls_ + 1;

    // Unknown central tails, one per relation that is not a definition.
    // Weight-exact commutator tails go last so that they, and only they,
    // survive elimination and become the new generators.
    std::vector<TailOrigin> origins;
    std::vector<TailOrigin> exact;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::size_t w = table_.weight(i) + table_.weight(j);
        if (w > next || conj_def_[j][i]) continue;
        TailOrigin t{PcDefinition::Kind::Commutator, j, i};
        (w == next ? exact : origins).push_back(t);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table_.order(i) != 0 && !power_def_[i]) {
        origins.push_back({PcDefinition::Kind::Power, i, 0});
      }
    }
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (!image_def_[x]) origins.push_back({PcDefinition::Kind::Image, x, 0});
    }
    origins.insert(origins.end(), exact.begin(), exact.end());
    std::size_t k = origins.size();

    std::vector<Exp> orders(n);
    for (std::size_t i = 0; i < n; ++i) orders[i] = table_.order(i);
    Collector c(orders, k);
    std::vector<std::vector<std::optional<std::size_t>>> conj_tail(n);
    for (std::size_t j = 0; j < n; ++j) conj_tail[j].resize(j);
    std::vector<std::optional<std::size_t>> power_tail(n);
    std::vector<std::optional<std::size_t>> image_tail(images_.size());
    for (std::size_t t = 0; t < k; ++t) {
      auto const& o = origins[t];
      switch (o.kind) {
        case PcDefinition::Kind::Commutator:
          conj_tail[o.first][o.second] = t;
          break;
        case PcDefinition::Kind::Power:
          power_tail[o.first] = t;
          break;
        case PcDefinition::Kind::Image:
          image_tail[o.first] = t;
          break;
        case PcDefinition::Kind::None:
          break;
      }
    }
    auto with_tail = [](NormalWord const& w, std::optional<std::size_t> t) {
      Rule r{w, {}};
      if (t) r.tail.emplace_back(*t, 1);
      return r;
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (table_.order(i) != 0) {
        c.set_power(i, with_tail(table_.power(i), power_tail[i]));
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        c.set_conjugate(j, i, with_tail(table_.conjugate(j, i), conj_tail[j][i]));
      }
    }
    c.compute_inverse_conjugates();

    EchelonLattice lattice(k);
    auto add_relation = [&](Element const& lhs, Element const& rhs,
                            std::string const& what) {
      if (lhs.exp != rhs.exp) {
        throw InternalInconsistency("class " + std::to_string(cls_) +
                                    " table fails overlap " + what);
      }
      EchelonLattice::Row row;
      for (std::size_t t = 0; t < k; ++t) {
        Exp d = lhs.tail[t] - rhs.tail[t];
        if (d != 0) row.emplace(t, BigInt(static_cast<long>(d)));
      }
      lattice.add(std::move(row));
    };

    std::vector<std::size_t> weights(n);
    for (std::size_t i = 0; i < n; ++i) weights[i] = table_.weight(i);
    std::optional<std::size_t> cap;
    if (!options_.full_consistency) cap = next;
    overlap_checks(c, weights, cap,
                   [&](std::string const& what, Element const& lhs,
                       Element const& rhs) { add_relation(lhs, rhs, what); });

    std::vector<Rule> image_rules(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) {
      image_rules[x] = with_tail(images_[x], image_tail[x]);
    }
    Element const one = c.identity();
    for (auto const& r : p_.relators()) {
      Element e = c.identity();
      for (auto const& letter : r) {
        c.mul_rule(e, image_rules[letter.index], letter.sign);
      }
      add_relation(e, one, "relator");
    }
    lattice.finalize();

    AbelianInvariants layer = cokernel_invariants(lattice.to_matrix());
    eliminate(origins, lattice, next);
    cls_ = next;
    return layer;
  }

  NqResult result(std::size_t c, std::vector<AbelianInvariants> quotients) {
    NqResult r;
    r.table = table_;
    r.nilpotency_class = c;
    r.quotients = std::move(quotients);
    r.epimorphism = images_;
    return r;
  }

 private:
  using Vec = std::map<std::size_t, BigInt>;  // new generator -> exponent

  static Exp to_exp(BigInt const& v) {
    if (!v.fits_slong_p()) {
      throw ResourceLimitExceeded("relation exponent exceeds 64 bits");
    }
    return v.get_si();
  }

  // Solves the tail lattice: pivot-1 columns are eliminated, the others
  // become generators of weight `next`, and every relation receives its tail
  // rewritten over them.
  void eliminate(std::vector<TailOrigin> const& origins,
                 EchelonLattice const& lattice, std::size_t next) {
    std::size_t k = origins.size();
    auto const& rows = lattice.rows();
    std::size_t n = table_.size();

    std::vector<std::optional<std::size_t>> new_gen(k);
    std::vector<BigInt> new_order;
    std::vector<std::size_t> column_of;
    for (std::size_t t = 0; t < k; ++t) {
      auto it = rows.find(t);
      if (it != rows.end() && it->second.at(t) == 1) continue;
      new_gen[t] = n + column_of.size();
      column_of.push_back(t);
      new_order.push_back(it == rows.end() ? BigInt(0) : it->second.at(t));
    }
    std::size_t added = column_of.size();
    if (n + added > options_.max_pc_generators) {
      throw ResourceLimitExceeded(
          "pc generator cap " + std::to_string(options_.max_pc_generators) +
          " exceeded at class " + std::to_string(next));
    }

    std::vector<Vec> expr(k);
    std::vector<Vec> power_expr(added);
    auto normalize = [&](Vec v) {
      for (auto it = v.begin(); it != v.end();) {
        std::size_t local = it->first - n;
        BigInt const& m = new_order[local];
        if (m != 0) {
          BigInt q;
          mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), m.get_mpz_t());
          if (q != 0) {
            it->second -= q * m;
            for (auto const& [h, e] : power_expr[local]) v[h] += q * e;
          }
        }
        it = it->second == 0 ? v.erase(it) : std::next(it);
      }
      return v;
    };
    for (std::size_t t = k; t-- > 0;) {
      auto it = rows.find(t);
      Vec rest;
      if (it != rows.end()) {
        for (auto const& [col, coeff] : it->second) {
          if (col == t) continue;
          for (auto const& [h, e] : expr[col]) rest[h] -= coeff * e;
        }
      }
      if (new_gen[t]) {
        expr[t] = {{*new_gen[t], BigInt(1)}};
        if (new_order[*new_gen[t] - n] != 0) {
          power_expr[*new_gen[t] - n] = normalize(std::move(rest));
        }
      } else {
        expr[t] = normalize(std::move(rest));
      }
    }

    auto as_word = [&](Vec const& v) {
      NormalWord w;
      for (auto const& [h, e] : v) {
        if (e != 0) w.emplace_back(h, to_exp(e));
      }
      return w;
    };
    auto append = [](NormalWord base, NormalWord const& extra) {
      base.insert(base.end(), extra.begin(), extra.end());
      return base;
    };

    for (std::size_t local = 0; local < added; ++local) {
      auto const& o = origins[column_of[local]];
      table_.add_generator({next, PcDefinition{o.kind, o.first, o.second}});
    }
    for (std::size_t local = 0; local < added; ++local) {
      if (new_order[local] != 0) {
        table_.set_power(n + local, to_exp(new_order[local]),
                         as_word(power_expr[local]));
      }
    }
    power_def_.resize(n + added, 0);
    conj_def_.resize(n + added);
    for (std::size_t j = n; j < n + added; ++j) conj_def_[j].assign(j, 0);

    for (std::size_t t = 0; t < k; ++t) {
      auto const& o = origins[t];
      NormalWord extra = as_word(expr[t]);
      bool defines = new_gen[t].has_value();
      switch (o.kind) {
        case PcDefinition::Kind::Commutator:
          table_.set_conjugate(o.first, o.second,
                               append(table_.conjugate(o.first, o.second), extra));
          if (defines) conj_def_[o.first][o.second] = 1;
          break;
        case PcDefinition::Kind::Power:
          table_.set_power(o.first, table_.order(o.first),
                           append(table_.power(o.first), extra));
          if (defines) power_def_[o.first] = 1;
          break;
        case PcDefinition::Kind::Image:
          images_[o.first] = append(images_[o.first], extra);
          if (defines) image_def_[o.first] = 1;
          break;
        case PcDefinition::Kind::None:
          break;
      }
    }
  }

  Presentation const& p_;
  NqOptions options_;
  PolycyclicTable table_;
  std::size_t cls_ = 0;
  std::vector<NormalWord> images_;
  std::vector<char> image_def_;
  std::vector<char> power_def_;
  std::vector<std::vector<char>> conj_def_;
};

}  // namespace

NqResult nilpotent_quotient(Presentation const& p, std::size_t c,
                            NqOptions const& options) {
  if (c < 1) throw std::invalid_argument("class must be at least 1");
  if (p.generator_count() < 1) {
    throw std::invalid_argument("presentation needs at least one generator");
  }
  Engine engine(p, options);
  std::vector<AbelianInvariants> quotients;
  for (std::size_t step = 0; step < c; ++step) {
    quotients.push_back(engine.extend());
  }
  return engine.result(c, std::move(quotients));
}

std::vector<std::size_t> rational_ranks(NqResult const& r) {
  std::vector<std::size_t> out;
  for (auto const& q : r.quotients) out.push_back(q.free_rank);
  return out;
}

NormalWord evaluate(NqResult const& r, Word const& w) {
  Collector c = make_collector(r.table);
  Element x = c.identity();
  for (auto const& letter : w) {
    mul_normal(c, x, r.epimorphism.at(letter.index), letter.sign);
  }
  return x.word();
}

std::string to_json(NqResult const& r) {
  nlohmann::ordered_json doc;
  doc["class"] = r.nilpotency_class;
  auto quotients = nlohmann::ordered_json::array();
  for (auto const& q : r.quotients) {
    nlohmann::ordered_json entry;
    entry["free_rank"] = q.free_rank;
    auto torsion = nlohmann::ordered_json::array();
    for (auto const& t : q.torsion) {
      if (t.fits_slong_p()) {
        torsion.push_back(t.get_si());
      } else {
        torsion.push_back(t.get_str());
      }
    }
    entry["torsion"] = torsion;
    quotients.push_back(entry);
  }
  doc["quotients"] = quotients;
  doc["pc_generators"] = r.table.size();
  return doc.dump();
}

std::string to_string(NormalWord const& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto const& [gen, e] : w) {
    if (!first) out << ' ';
    out << "g" << gen + 1;
    if (e != 1) out << '^' << e;
    first = false;
  }
  return out.str();
}

}  // namespace braidlcs
