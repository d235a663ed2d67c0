#pragma once

#include <cstddef>
#include <vector>

#include "slopelab/poly.hpp"

namespace slopelab {

enum class MonomialOrder { Grevlex, Grlex, Lex };

/// a < b under the given order.
bool order_less(MonomialOrder order, const Monomial& a, const Monomial& b);
Monomial leading_monomial(const Polynomial& f, MonomialOrder order);

/// Pair cap for Buchberger: SLOPELAB_BUDGET if set to a positive integer,
/// otherwise 50000.
std::size_t default_pair_cap();

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::Grevlex;
  std::size_t pair_cap = default_pair_cap();
};

/// Finitely generated ideal of k[x_1..x_n].  Zero generators are dropped, so
/// an empty list is the zero ideal.
class Ideal {
 public:
  Ideal(Field field, std::size_t nvars, std::vector<Polynomial> gens = {});
  /// <x_i : i in vars>
  static Ideal generated_by_variables(Field field, std::size_t nvars, const VarSet& vars);
  static Ideal maximal(Field field, std::size_t nvars);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_monomial() const;
  bool is_principal() const { return gens_.size() == 1; }
  /// Every generator has zero constant term.
  bool vanishes_at_origin() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis: monic, interreduced, sorted by descending
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Field field, std::size_t nvars, MonomialOrder order, std::vector<Polynomial> reduced);

  const std::vector<Polynomial>& elements() const { return elems_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  std::size_t nvars() const { return n_; }
  const Field& field() const { return field_; }

  /// Fully reduced remainder of f.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_unit_ideal() const;

 private:
  Field field_;
  std::size_t n_;
  MonomialOrder order_;
  std::vector<Polynomial> elems_;
  std::vector<Monomial> lms_;
};

/// Throws BudgetExceeded once more than options.pair_cap critical pairs have
/// been queued.
GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& options = {});

bool ideal_member(const Polynomial& f, const Ideal& I, const GroebnerOptions& options = {});
/// f in rad(I), via 1 in I + <1 - t f> with one extra variable t.
bool radical_member(const Polynomial& f, const Ideal& I, const GroebnerOptions& options = {});

/// All m-fold products of generators (duplicates removed).  m >= 1.
Ideal ideal_power(const Ideal& I, unsigned m);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Krull dimension of k[x]/M for a monomial ideal M; -1 for the unit ideal.
int monomial_dimension(const Ideal& M);
/// Krull dimension of k[x]/I via the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const Ideal& I, const GroebnerOptions& options = {});

}  // namespace slopelab
