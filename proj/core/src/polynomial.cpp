#include "ctc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ctc {

namespace {

void require_same_roster(const Polynomial& a, const Polynomial& b) {
  if (a.roster() == b.roster()) return;
  if (*a.roster() == *b.roster()) return;
  throw DomainError("roster mismatch between polynomial operands");
}

int monomial_total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

}  // namespace

Roster::Roster(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw DomainError("duplicate variable name in roster: " + names_[i]);
      }
    }
  }
}

std::optional<std::size_t> Roster::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RosterPtr make_roster(std::vector<std::string> names) {
  return std::make_shared<const Roster>(std::move(names));
}

Polynomial::Polynomial() {
  static const RosterPtr empty = make_roster({});
  roster_ = empty;
}

Polynomial::Polynomial(RosterPtr roster) : roster_(std::move(roster)) {
  if (!roster_) throw DomainError("null roster");
}

Polynomial Polynomial::zero(RosterPtr roster) {
  return Polynomial(std::move(roster));
}

Polynomial Polynomial::constant(RosterPtr roster, const Rational& c) {
  Polynomial p(std::move(roster));
  if (c != 0) p.terms_.emplace(Monomial(p.roster_->size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(RosterPtr roster, std::size_t index) {
  Polynomial p(std::move(roster));
  if (index >= p.roster_->size()) throw DomainError("variable index out of range");
  Monomial m(p.roster_->size(), 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::variable(RosterPtr roster, const std::string& name) {
  auto idx = roster->index(name);
  if (!idx) throw DomainError("unknown variable: " + name);
  return variable(std::move(roster), *idx);
}

Polynomial Polynomial::monomial(RosterPtr roster, Monomial exponents,
                                const Rational& coefficient) {
  Polynomial p(std::move(roster));
  if (exponents.size() != p.roster_->size()) {
    throw DomainError("exponent vector length does not match roster");
  }
  for (int e : exponents) {
    if (e < 0) throw DomainError("negative exponent");
  }
  if (coefficient != 0) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

Polynomial make_polynomial(RosterPtr roster, TermMap terms) {
  Polynomial p(std::move(roster));
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != p.roster()->size()) {
      throw DomainError("exponent vector length does not match roster");
    }
    if (it->second == 0) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && monomial_total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial(roster_->size(), 0));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_roster(*this, other);
  TermMap out = terms_;
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = out.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return make_polynomial(roster_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator-() const {
  TermMap out;
  for (const auto& [m, c] : terms_) out.emplace(m, -c);
  return make_polynomial(roster_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  return mul(*this, other, nullptr);
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  if (scalar == 0) return Polynomial(roster_);
  TermMap out;
  for (const auto& [m, c] : terms_) out.emplace(m, c * scalar);
  return make_polynomial(roster_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_roster(*this, other);
  return terms_ == other.terms_;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    deg = std::max(deg, monomial_total_degree(m));
  }
  return deg;
}

int Polynomial::multiplicity_at_origin() const {
  if (terms_.empty()) {
    throw DomainError("multiplicity_at_origin: zero polynomial");
  }
  int mult = -1;
  for (const auto& [m, c] : terms_) {
    int d = monomial_total_degree(m);
    if (mult < 0 || d < mult) mult = d;
  }
  return mult;
}

int Polynomial::degree_in(std::size_t var) const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.at(var));
  return deg;
}

bool Polynomial::uses(std::size_t var) const {
  for (const auto& [m, c] : terms_) {
    if (m.at(var) > 0) return true;
  }
  return false;
}

std::vector<std::size_t> Polynomial::effective_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roster_->size(); ++i) {
    if (uses(i)) out.push_back(i);
  }
  return out;
}

Polynomial Polynomial::coefficient_of(std::size_t var, int k) const {
  if (var >= roster_->size()) throw DomainError("variable index out of range");
  TermMap out;
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial reduced = m;
    reduced[var] = 0;
    out.emplace(std::move(reduced), c);
  }
  return make_polynomial(roster_, std::move(out));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != roster_->size()) {
    throw DomainError("evaluation point length does not match roster");
  }
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial mul(const Polynomial& a, const Polynomial& b,
               const Truncation* trunc) {
  require_same_roster(a, b);
  TermMap out;
  const std::size_t n = a.roster()->size();
  Monomial prod(n, 0);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int deg = 0;
      for (std::size_t i = 0; i < n; ++i) {
        prod[i] = ma[i] + mb[i];
        deg += prod[i];
      }
      if (trunc && deg > trunc->order) {
        trunc->note();
        continue;
      }
      auto [it, inserted] = out.emplace(prod, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return make_polynomial(a.roster(), std::move(out));
}

Polynomial pow(const Polynomial& base, int exponent, const Truncation* trunc) {
  if (exponent < 0) throw DomainError("negative power of a polynomial");
  Polynomial result = Polynomial::constant(base.roster(), 1);
  Polynomial acc = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = mul(result, acc, trunc);
    e >>= 1;
    if (e > 0) acc = mul(acc, acc, trunc);
  }
  return result;
}

Polynomial truncate_total_degree(const Polynomial& f, int order, bool* hit) {
  TermMap out;
  bool dropped = false;
  for (const auto& [m, c] : f.terms()) {
    if (monomial_total_degree(m) > order) {
      dropped = true;
      continue;
    }
    out.emplace(m, c);
  }
  if (hit && dropped) *hit = true;
  return make_polynomial(f.roster(), std::move(out));
}

Polynomial substitute(const Polynomial& f,
                      const std::map<std::string, Polynomial>& images,
                      RosterPtr target, const Truncation* trunc) {
  const Roster& src = *f.roster();
  std::vector<Polynomial> image_of;
  image_of.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = images.find(src.name(i));
    if (it != images.end()) {
      if (!(it->second.roster() == target) && !(*it->second.roster() == *target)) {
        throw DomainError("substitution image for " + src.name(i) +
                          " is not over the target roster");
      }
      image_of.push_back(it->second);
    } else {
      auto idx = target->index(src.name(i));
      if (!idx) {
        if (f.uses(i)) {
          throw DomainError("no image for variable " + src.name(i));
        }
        image_of.push_back(Polynomial::zero(target));
      } else {
        image_of.push_back(Polynomial::variable(target, *idx));
      }
    }
  }
  for (const auto& [name, image] : images) {
    if (!src.index(name)) {
      throw DomainError("substitution assigns unknown variable " + name);
    }
  }

  // Power cache per source variable.
  std::vector<std::map<int, Polynomial>> powers(src.size());
  auto power = [&](std::size_t var, int e) -> const Polynomial& {
    auto it = powers[var].find(e);
    if (it == powers[var].end()) {
      it = powers[var].emplace(e, pow(image_of[var], e, trunc)).first;
    }
    return it->second;
  };

  Polynomial sum = Polynomial::zero(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      term = mul(term, power(i, m[i]), trunc);
      if (term.is_zero()) break;
    }
    sum = sum + term;
  }
  return sum;
}

Polynomial reindex(const Polynomial& f, RosterPtr target) {
  const Roster& src = *f.roster();
  std::vector<std::optional<std::size_t>> to(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) to[i] = target->index(src.name(i));
  TermMap out;
  for (const auto& [m, c] : f.terms()) {
    Monomial image(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!to[i]) {
        throw DomainError("reindex: target roster lacks variable " + src.name(i));
      }
      image[*to[i]] = m[i];
    }
    auto [it, inserted] = out.emplace(std::move(image), c);
    if (!inserted) throw DomainError("reindex: colliding terms");
  }
  return make_polynomial(std::move(target), std::move(out));
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.roster()->size()) throw DomainError("variable index out of range");
  TermMap out;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.emplace(std::move(d), c * m[var]);
  }
  return make_polynomial(f.roster(), std::move(out));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lexicographic order puts leading variables first.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational abs_c = negative ? Rational(-c) : c;

    std::vector<std::string> pieces;
    if (abs_c != 1 || monomial_total_degree(m) == 0) {
      pieces.push_back(abs_c.get_str());
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      std::string piece = f.roster()->name(i);
      if (m[i] > 1) piece += "^" + std::to_string(m[i]);
      pieces.push_back(std::move(piece));
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i) os << "*";
      os << pieces[i];
    }
  }
  return os.str();
}

}  // namespace ctc
