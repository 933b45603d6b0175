#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void check_variables(int variables) {
  if (variables < 0 || variables > kMaxVariables) {
    throw ArgumentError("polynomials support at most " + std::to_string(kMaxVariables) +
                        " variables");
  }
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) throw ArgumentError("polynomial ring mismatch");
}

// Order used by divide_linear: exponent of the lead variable first.
struct LeadOrder {
  int lead;
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a[lead] != b[lead]) return a[lead] < b[lead];
    return a < b;
  }
};

}  // namespace

Polynomial::Polynomial(int variables) : variables_(variables) { check_variables(variables); }

Polynomial Polynomial::constant(int variables, const mpq_class& value) {
  Polynomial p(variables);
  p.add_term(Monomial{}, value);
  return p;
}

Polynomial Polynomial::variable(int variables, int index) {
  if (index < 1 || index > variables) throw ArgumentError("variable index out of range");
  Polynomial p(variables);
  Monomial m{};
  m[index - 1] = 1;
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::linear(std::span<const int> coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Monomial m{};
    m[j] = 1;
    p.add_term(m, coeffs[j]);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

mpq_class Polynomial::constant_term() const {
  const auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Polynomial::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto e : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_ring(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_ring(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  check_same_ring(lhs, rhs);
  Polynomial out(lhs.variables_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m{};
      for (int j = 0; j < lhs.variables_; ++j) {
        const int e = ma[j] + mb[j];
        if (e > 255) throw ArgumentError("polynomial degree overflow");
        m[j] = static_cast<std::uint8_t>(e);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::substitute(std::span<const int> images) const {
  if (static_cast<int>(images.size()) != variables_) {
    throw ArgumentError("substitution size does not match the polynomial ring");
  }
  Polynomial out(variables_);
  for (const auto& [m, c] : terms_) {
    Monomial image{};
    int parity = 0;
    for (int j = 0; j < variables_; ++j) {
      const int target = std::abs(images[j]) - 1;
      image[target] = m[j];
      if (images[j] < 0) parity += m[j];
    }
    out.add_term(image, parity % 2 == 0 ? c : mpq_class(-c));
  }
  return out;
}

Polynomial Polynomial::divide_linear(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != variables_) {
    throw ArgumentError("linear form does not match the polynomial ring");
  }
  int lead = -1;
  for (int j = 0; j < variables_; ++j) {
    if (coeffs[j] != 0) lead = j;
  }
  if (lead < 0) throw ArgumentError("division by the zero linear form");

  std::map<Monomial, mpq_class, LeadOrder> rest(terms_.begin(), terms_.end(), LeadOrder{lead});
  Polynomial quotient(variables_);
  while (!rest.empty()) {
    const auto top = std::prev(rest.end());
    const Monomial m = top->first;
    if (m[lead] == 0) {
      throw InvariantViolation("polynomial is not divisible by the linear form");
    }
    const mpq_class q = top->second / coeffs[lead];
    Monomial base = m;
    --base[lead];
    quotient.add_term(base, q);
    for (int j = 0; j < variables_; ++j) {
      if (coeffs[j] == 0) continue;
      Monomial shifted = base;
      ++shifted[j];
      auto [it, inserted] = rest.try_emplace(shifted, 0);
      it->second -= q * coeffs[j];
      if (it->second == 0) rest.erase(it);
    }
  }
  return quotient;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int j = 0; j < variables_; ++j) {
      if (m[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j + 1);
      if (m[j] > 1) mono += "^" + std::to_string(m[j]);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace schubert
