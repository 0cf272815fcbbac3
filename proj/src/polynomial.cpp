#include "orbitslice/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "orbitslice/error.hpp"

namespace orbitslice {

void Monomial::set(int var, int exponent) {
  if (exponent < 0 || exponent > 255) throw Error(ErrorCode::ExponentOverflow, "exponent out of range");
  exps_.e[var] = static_cast<std::uint8_t>(exponent);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  if (!simd::active_kernels().mul(a.exps_, b.exps_, out.exps_)) {
    throw Error(ErrorCode::ExponentOverflow, "monomial exponent exceeds 255");
  }
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out;
  simd::active_kernels().quotient(a.exps_, b.exps_, out.exps_);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  simd::active_kernels().lcm(a.exps_, b.exps_, out.exps_);
  return out;
}

Ring::Ring(std::vector<Variable> vars, TermOrder order) : vars_(std::move(vars)), order_(order) {
  if (size() > simd::kMaxVars) {
    throw Error(ErrorCode::ResourceLimit, "rings are limited to " + std::to_string(simd::kMaxVars) + " variables");
  }
}

RingPtr make_ring(std::vector<Variable> vars, TermOrder order) {
  return std::make_shared<const Ring>(std::move(vars), order);
}

RingPtr with_order(const RingPtr& ring, TermOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->vars(), order);
}

RingPtr extend_ring(const RingPtr& ring, Variable extra) {
  auto vars = ring->vars();
  vars.push_back(std::move(extra));
  return make_ring(std::move(vars), ring->order());
}

namespace {

// Merge of two sorted term lists: a + sign * b.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

std::vector<Term> scaled(const std::vector<Term>& g, const Rational& c, const Monomial& m) {
  std::vector<Term> out;
  out.reserve(g.size());
  for (const Term& t : g) out.push_back({t.monomial * m, t.coeff * c});
  return out;
}

}  // namespace

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (!ring_ || !other.ring_ || !(*ring_ == *other.ring_)) {
    throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  Polynomial p(std::move(ring));
  Monomial m;
  m.set(var, 1);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::tail() const {
  Polynomial p(ring_);
  if (!terms_.empty()) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

std::vector<Rational> Polynomial::linear_coefficients() const {
  std::vector<Rational> out(static_cast<std::size_t>(ring_->size()));
  for (const Term& t : terms_) {
    if (t.monomial.degree() != 1) continue;
    for (int v = 0; v < ring_->size(); ++v) {
      if (t.monomial[v] == 1) out[static_cast<std::size_t>(v)] = t.coeff;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial p(a.ring_);
  p.terms_ = merge(*a.ring_, a.terms_, b.terms_, +1);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial p(a.ring_);
  p.terms_ = merge(*a.ring_, a.terms_, b.terms_, -1);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial p(a.ring_);
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  for (const Term& t : outer.terms_) {
    // Multiplying by a fixed monomial preserves any monomial order.
    p.terms_ = merge(*a.ring_, p.terms_, scaled(inner.terms_, t.coeff, t.monomial), +1);
  }
  return p;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial p(a.ring_);
  if (c == 0) return p;
  p.terms_ = a.terms_;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
  check_ring(g);
  Polynomial p(ring_);
  p.terms_ = merge(*ring_, terms_, scaled(g.terms_, c, m), -1);
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading_coeff();
  return inv * *this;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Term& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff() < 0) scale = -scale;
  return scale * *this;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational total = 0;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (int var = 0; var < ring_->size(); ++var) {
      for (int k = 0; k < t.monomial[var]; ++k) v *= point[static_cast<std::size_t>(var)];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::rename(const RingPtr& target, std::span<const int> var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    for (int var = 0; var < ring_->size(); ++var) {
      const int e = t.monomial[var];
      if (e == 0) continue;
      const int to = var_map[static_cast<std::size_t>(var)];
      m.set(to, m[to] + e);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::reorder(const RingPtr& target) const {
  if (target->vars() != ring_->vars()) throw Error(ErrorCode::RingMismatch, "reorder needs identical variables");
  return from_terms(target, terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string rational_to_string(const Rational& q, NameStyle style) {
  if (q.get_den() == 1) return q.get_num().get_str();
  const mpz_class num = abs(q.get_num());
  std::string body = style == NameStyle::Latex ? "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}"
                                                : num.get_str() + "/" + q.get_den().get_str();
  return (q < 0 ? "-" : "") + body;
}

std::string Polynomial::to_string(NameStyle style) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff < 0;
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    const Rational mag = abs(t.coeff);
    const bool unit_monomial = t.monomial.is_one();
    bool need_star = false;
    if (unit_monomial || mag != 1) {
      out << rational_to_string(mag, style);
      need_star = style == NameStyle::Macaulay2;
    }
    for (int var = 0; var < ring_->size(); ++var) {
      const int e = t.monomial[var];
      if (e == 0) continue;
      if (need_star) out << '*';
      if (style == NameStyle::Latex) {
        out << ring_->var(var).latex;
        if (e > 1) out << "^{" << e << '}';
      } else {
        out << ring_->var(var).m2;
        if (e > 1) out << '^' << e;
        need_star = true;
      }
    }
  }
  return out.str();
}

}  // namespace orbitslice
