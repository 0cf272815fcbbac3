#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "orbitslice/simd/monomial_kernels.hpp"

namespace orbitslice {

using Rational = mpq_class;

enum class TermOrder { GrevLex, Lex };

enum class NameStyle {
  Latex,     // z_{3,2}z_{5,5}-\frac{1}{2}z_{4,2}
  Macaulay2  // z_(3,2)*z_(5,5)-1/2*z_(4,2)
};

struct Variable {
  std::string latex;
  std::string m2;

  friend bool operator==(const Variable&, const Variable&) = default;
};

class Monomial {
 public:
  Monomial() = default;

  int operator[](int var) const { return exps_.e[var]; }
  void set(int var, int exponent);

  unsigned degree() const { return simd::active_kernels().degree(exps_); }
  bool divides(const Monomial& other) const { return simd::active_kernels().divides(exps_, other.exps_); }
  bool coprime(const Monomial& other) const { return simd::active_kernels().coprime(exps_, other.exps_); }
  bool is_one() const { return degree() == 0; }

  /// Throws Error(ExponentOverflow) past 255.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  const simd::Exponents& raw() const { return exps_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  simd::Exponents exps_;
};

/// Immutable variable registry plus term order. Polynomials share rings by
/// pointer; rings compare by content.
class Ring {
 public:
  explicit Ring(std::vector<Variable> vars, TermOrder order = TermOrder::GrevLex);

  int size() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
  const std::vector<Variable>& vars() const { return vars_; }
  TermOrder order() const { return order_; }

  /// Sign of a - b under this ring's term order.
  int compare(const Monomial& a, const Monomial& b) const {
    const auto& k = simd::active_kernels();
    return order_ == TermOrder::GrevLex ? k.cmp_grevlex(a.raw(), b.raw()) : k.cmp_lex(a.raw(), b.raw());
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.order_ == b.order_ && a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Variable> vars, TermOrder order = TermOrder::GrevLex);
RingPtr with_order(const RingPtr& ring, TermOrder order);
/// The ring with one more variable appended.
RingPtr extend_ring(const RingPtr& ring, Variable extra);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial: terms strictly decreasing under the ring order, no zero
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int var);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  /// Everything but the leading term.
  Polynomial tail() const;
  unsigned total_degree() const;
  Rational constant_term() const;
  /// Coefficient of each variable's degree-1 monomial.
  std::vector<Rational> linear_coefficients() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  /// this - c * m * g, the elementary reduction step.
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const;

  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Renames variable i of this ring to variable var_map[i] of `target`.
  Polynomial rename(const RingPtr& target, std::span<const int> var_map) const;
  /// Same polynomial re-sorted under another ring with identical variables.
  Polynomial reorder(const RingPtr& target) const;

  std::string to_string(NameStyle style = NameStyle::Latex) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string rational_to_string(const Rational& q, NameStyle style);

}  // namespace orbitslice
