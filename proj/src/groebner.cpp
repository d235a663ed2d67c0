#include "slopelab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace slopelab {

bool order_less(MonomialOrder order, const Monomial& a, const Monomial& b) {
  switch (order) {
    case MonomialOrder::Grevlex: return grevlex_less(a, b);
    case MonomialOrder::Grlex: return grlex_less(a, b);
    case MonomialOrder::Lex: return lex_less(a, b);
  }
  return false;
}

Monomial leading_monomial(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order_less(order, *best, m)) best = &m;
  return *best;
}

std::size_t default_pair_cap() {
  if (const char* env = std::getenv("SLOPELAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 50000;
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(Field field, std::size_t nvars, std::vector<Polynomial> gens) : field_(field), n_(nvars) {
  for (auto& g : gens) {
    if (!(g.field() == field) || g.nvars() != nvars)
      throw Error(Errc::InvalidArgument, "generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::generated_by_variables(Field field, std::size_t nvars, const VarSet& vars) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nvars; ++i)
    if (vars.test(i)) gens.push_back(Polynomial::variable(field, nvars, i));
  return Ideal(field, nvars, std::move(gens));
}

Ideal Ideal::maximal(Field field, std::size_t nvars) {
  return generated_by_variables(field, nvars, PointSpec::origin(nvars).vars);
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::vanishes_at_origin() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.constant_term().is_zero(); });
}

// ------------------------------------------------------ working polynomials

namespace {

struct OrderGreater {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order_less(order, b, a); }
};

using Terms = std::map<Monomial, Rational, OrderGreater>;

// Basis element in the working order, monic.
struct Element {
  std::vector<std::pair<Monomial, Rational>> terms;  // descending
  const Monomial& lm() const { return terms.front().first; }
};

Terms to_terms(const Polynomial& f, MonomialOrder order) {
  Terms t(OrderGreater{order});
  for (const auto& [m, c] : f.terms()) t.emplace(m, c);
  return t;
}

Element make_element(const Terms& t, const Field& field) {
  Element e;
  const Rational inv = field.inverse(t.begin()->second);
  for (const auto& [m, c] : t) e.terms.emplace_back(m, field.mul(c, inv));
  return e;
}

Polynomial to_polynomial(const Element& e, const Field& field, std::size_t n) {
  Polynomial p(field, n);
  for (const auto& [m, c] : e.terms) p.add_term(m, c);
  return p;
}

// p -= coef * mult * g
void subtract_multiple(Terms& p, const Rational& coef, const Monomial& mult, const Element& g, const Field& field) {
  for (const auto& [m, c] : g.terms) {
    const Monomial mm = m * mult;
    const Rational delta = field.mul(coef, c);
    auto [it, inserted] = p.try_emplace(mm, field.reduce(-delta));
    if (!inserted) {
      it->second = field.sub(it->second, delta);
      if (it->second.is_zero()) p.erase(it);
    }
  }
}

// Full reduction of p modulo the monic elements; returns the remainder.
Terms reduce(Terms p, const std::vector<Element>& basis, const Field& field) {
  Terms rem(p.key_comp());
  while (!p.empty()) {
    auto it = p.begin();
    const Monomial m = it->first;
    const Rational c = it->second;
    const Element* divisor = nullptr;
    for (const auto& g : basis)
      if (g.lm().divides(m)) {
        divisor = &g;
        break;
      }
    if (!divisor) {
      rem.emplace(m, c);
      p.erase(it);
      continue;
    }
    subtract_multiple(p, c, m / divisor->lm(), *divisor, field);
  }
  return rem;
}

Terms s_polynomial(const Element& a, const Element& b, MonomialOrder order, const Field& field) {
  const Monomial l = lcm(a.lm(), b.lm());
  Terms s(OrderGreater{order});
  const Monomial ma = l / a.lm();
  for (const auto& [m, c] : a.terms) s.emplace(m * ma, c);
  subtract_multiple(s, Rational(1), l / b.lm(), b, field);
  return s;
}

}  // namespace

// ------------------------------------------------------------ GroebnerBasis

GroebnerBasis::GroebnerBasis(Field field, std::size_t nvars, MonomialOrder order, std::vector<Polynomial> reduced)
    : field_(field), n_(nvars), order_(order), elems_(std::move(reduced)) {
  for (const auto& g : elems_) lms_.push_back(leading_monomial(g, order_));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!(f.field() == field_) || f.nvars() != n_) throw Error(Errc::InvalidArgument, "polynomial lives in a different ring");
  std::vector<Element> basis;
  basis.reserve(elems_.size());
  for (const auto& g : elems_) basis.push_back(make_element(to_terms(g, order_), field_));
  const Terms rem = reduce(to_terms(f, order_), basis, field_);
  Polynomial out(field_, n_);
  for (const auto& [m, c] : rem) out.add_term(m, c);
  return out;
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(lms_.begin(), lms_.end(), [](const Monomial& m) { return m.is_one(); });
}

// --------------------------------------------------------------- Buchberger

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& options) {
  const Field& field = I.field();
  const MonomialOrder order = options.order;
  std::vector<Element> G;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t queued = 0;

  auto add_element = [&](Element e) {
    const std::size_t k = G.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (G[i].terms.size() == 1 && e.terms.size() == 1) continue;  // S-polynomial of monomials is 0
      if (gcd(G[i].lm(), e.lm()).is_one()) continue;
      pending.emplace(i, k);
      if (++queued > options.pair_cap)
        throw Error(Errc::BudgetExceeded, "more than " + std::to_string(options.pair_cap) + " critical pairs");
    }
    G.push_back(std::move(e));
  };

  for (const auto& g : I.generators()) {
    const Terms r = reduce(to_terms(g, order), G, field);
    if (!r.empty()) add_element(make_element(r, field));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = lcm(G[best->first].lm(), G[best->second].lm());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const Monomial l = lcm(G[it->first].lm(), G[it->second].lm());
      if (order_less(order, l, best_lcm)) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = G[k].lm().divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    const Terms r = reduce(s_polynomial(G[i], G[j], order, field), G, field);
    if (!r.empty()) add_element(make_element(r, field));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !G[j].lm().divides(G[i].lm())) continue;
      redundant = !(G[j].lm() == G[i].lm()) || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Interreduce.
  std::vector<Element> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Element> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Terms t(OrderGreater{order});
    t.emplace(minimal[i].lm(), Rational(1));
    Terms tail(OrderGreater{order});
    for (std::size_t k = 1; k < minimal[i].terms.size(); ++k) tail.emplace(minimal[i].terms[k]);
    for (const auto& [m, c] : reduce(std::move(tail), others, field)) t.emplace(m, c);
    reduced.push_back(make_element(t, field));
  }
  std::sort(reduced.begin(), reduced.end(),
            [order](const Element& a, const Element& b) { return order_less(order, b.lm(), a.lm()); });

  std::vector<Polynomial> out;
  for (const auto& e : reduced) out.push_back(to_polynomial(e, field, I.nvars()));
  return GroebnerBasis(field, I.nvars(), order, std::move(out));
}

bool ideal_member(const Polynomial& f, const Ideal& I, const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  return buchberger(I, options).contains(f);
}

bool radical_member(const Polynomial& f, const Ideal& I, const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  const std::size_t n = I.nvars();
  if (n + 1 > kMaxVars) throw Error(Errc::DimensionCap, "radical membership needs one spare variable");
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.extended(n + 1));
  const Polynomial t = Polynomial::variable(I.field(), n + 1, n);
  gens.push_back(Polynomial::constant(I.field(), n + 1, Rational(1)) - t * f.extended(n + 1));
  return buchberger(Ideal(I.field(), n + 1, std::move(gens)), options).is_unit_ideal();
}

namespace {

void push_unique(std::vector<Polynomial>& v, Polynomial p) {
  if (p.is_zero()) return;
  for (const auto& q : v)
    if (q == p) return;
  v.push_back(std::move(p));
}

}  // namespace

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars()) throw Error(Errc::InvalidArgument, "ideals in different rings");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) push_unique(gens, f * g);
  return Ideal(a.field(), a.nvars(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "ideal power needs m >= 1");
  // Multisets of generator indices, generated in non-decreasing order.
  const auto& g = I.generators();
  std::vector<Polynomial> gens;
  std::vector<std::size_t> idx(m, 0);
  if (g.empty()) return Ideal(I.field(), I.nvars());
  for (;;) {
    Polynomial p = Polynomial::constant(I.field(), I.nvars(), Rational(1));
    for (auto i : idx) p *= g[i];
    push_unique(gens, std::move(p));
    std::size_t k = m;
    while (k > 0 && idx[k - 1] == g.size() - 1) --k;
    if (k == 0) break;
    const std::size_t v = idx[k - 1] + 1;
    for (std::size_t r = k - 1; r < m; ++r) idx[r] = v;
  }
  return Ideal(I.field(), I.nvars(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars()) throw Error(Errc::InvalidArgument, "ideals in different rings");
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) push_unique(gens, g);
  return Ideal(a.field(), a.nvars(), std::move(gens));
}

int monomial_dimension(const Ideal& M) {
  if (!M.is_monomial()) throw Error(Errc::NotMonomial, "monomial_dimension needs monomial generators");
  const std::size_t n = M.nvars();
  std::vector<VarSet> supports;
  for (const auto& g : M.generators()) supports.push_back(g.leading_monomial().support());
  int best = -1;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    const VarSet s(mask);
    const bool free = std::none_of(supports.begin(), supports.end(), [&](const VarSet& u) { return (u & ~s).none(); });
    if (free) best = std::max(best, static_cast<int>(s.count()));
  }
  return best;
}

int krull_dimension(const Ideal& I, const GroebnerOptions& options) {
  const GroebnerBasis gb = buchberger(I, options);
  std::vector<Polynomial> lead;
  for (const auto& m : gb.leading_monomials()) lead.push_back(Polynomial::term(I.field(), m, Rational(1)));
  return monomial_dimension(Ideal(I.field(), I.nvars(), std::move(lead)));
}

}  // namespace slopelab
