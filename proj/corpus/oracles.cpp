#include "oracles.hpp"

#include <map>

#include "slopelab/linalg.hpp"

namespace slopelab::corpus {

namespace {

void monomials_rec(std::size_t nvars, unsigned d, std::size_t i, Monomial& cur, std::vector<Monomial>& out) {
  if (i == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; cur.degree() + e <= d; ++e) {
    cur.set(i, e);
    monomials_rec(nvars, d, i + 1, cur, out);
  }
  cur.set(i, 0);
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  monomials_rec(nvars, d, 0, cur, out);
  return out;
}

std::size_t nilpotent_linear_forms(const Field& field, std::size_t nvars, const VarSet& vars,
                                   const std::vector<Polynomial>& cone, unsigned max_power) {
  const std::uint64_t p = field.characteristic();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < nvars; ++i)
    if (vars.test(i)) idx.push_back(i);
  const Ideal I(field, nvars, cone);
  const GroebnerBasis G = buchberger(I);
  std::vector<std::uint64_t> c(idx.size(), 0);
  std::size_t count = 0;
  for (;;) {
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == p) c[k++] = 0;
    if (k == c.size()) break;
    Polynomial l(field, nvars);
    for (std::size_t i = 0; i < idx.size(); ++i)
      l += Polynomial::variable(field, nvars, idx[i]) * Rational(long(c[i]));
    Polynomial power = l;
    for (unsigned e = 1; e <= max_power; ++e, power *= l)
      if (G.contains(power)) {
        ++count;
        break;
      }
  }
  return count;
}

int dimension_from_count(std::size_t count, std::uint64_t p) {
  std::size_t total = count + 1;
  int r = 0;
  while (total % p == 0) {
    total /= p;
    ++r;
  }
  return total == 1 ? r : -1;
}

bool brute_force_member(const Polynomial& f, const std::vector<Polynomial>& gens, unsigned D) {
  const Field& field = f.field();
  const std::size_t n = f.nvars();
  std::vector<Polynomial> products;
  for (const auto& g : gens)
    for (const auto& m : monomials_up_to(n, D)) products.push_back(Polynomial::term(field, m, Rational(1)) * g);
  std::map<Monomial, std::size_t, GrlexGreater> col;
  auto index = [&](const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) col.emplace(m, col.size());
  };
  for (const auto& p : products) index(p);
  index(f);
  auto vec = [&](const Polynomial& p) {
    Vector v(col.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) v[col.at(m)] = c;
    return v;
  };
  Matrix rows;
  for (const auto& p : products) rows.push_back(vec(p));
  return in_span(rows, vec(f), field);
}

}  // namespace slopelab::corpus
