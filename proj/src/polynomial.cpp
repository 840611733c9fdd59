#include "cubiclass/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cubiclass {

Exponent Exponent::variable(std::size_t var, unsigned power) {
  if (var >= kMaxPolyVars || power > 255) throw std::out_of_range("exponent out of range");
  Exponent x;
  x.e[var] = static_cast<std::uint8_t>(power);
  x.degree = static_cast<std::uint16_t>(power);
  return x;
}

bool Exponent::divides(const Exponent& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

bool Exponent::coprime(const Exponent& other) const {
  for (std::size_t i = 0; i < kMaxPolyVars; ++i)
    if (e[i] && other.e[i]) return false;
  return true;
}

std::size_t Exponent::pure_power_variable() const {
  std::size_t found = kMaxPolyVars;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
    if (!e[i]) continue;
    if (found != kMaxPolyVars) return kMaxPolyVars;
    found = i;
  }
  return found;
}

Exponent operator*(const Exponent& a, const Exponent& b) {
  Exponent r;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
    const unsigned s = unsigned{a.e[i]} + b.e[i];
    if (s > 255) throw std::overflow_error("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.degree = static_cast<std::uint16_t>(a.degree + b.degree);
  return r;
}

Exponent Exponent::operator/(const Exponent& divisor) const {
  Exponent r;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - divisor.e[i]);
  r.degree = static_cast<std::uint16_t>(degree - divisor.degree);
  return r;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxPolyVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.degree = static_cast<std::uint16_t>(d);
  return r;
}

int compare_degrevlex(const Exponent& a, const Exponent& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = kMaxPolyVars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

std::size_t ExponentHash::operator()(const Exponent& x) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto v : x.e) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

PolyModQ::PolyModQ(Prime q, std::size_t num_vars) : q_(q), num_vars_(num_vars) {
  if (num_vars == 0 || num_vars > kMaxPolyVars) throw std::invalid_argument("unsupported number of variables");
  if (q.value() > UINT32_MAX) throw std::invalid_argument("modulus must fit in 32 bits");
}

PolyModQ PolyModQ::from_terms(Prime q, std::size_t num_vars, std::vector<Term> terms) {
  PolyModQ f(q, num_vars);
  std::unordered_map<Exponent, std::uint64_t, ExponentHash> acc;
  for (const auto& t : terms) {
    for (std::size_t i = num_vars; i < kMaxPolyVars; ++i) {
      if (t.exp.e[i]) throw std::invalid_argument("term uses a variable beyond num_vars");
    }
    auto& slot = acc[t.exp];
    slot = (slot + t.coeff % q.value()) % q.value();
  }
  for (const auto& [e, c] : acc) {
    if (c) f.terms_.push_back({e, static_cast<std::uint32_t>(c)});
  }
  std::sort(f.terms_.begin(), f.terms_.end(),
            [](const Term& a, const Term& b) { return compare_degrevlex(a.exp, b.exp) > 0; });
  return f;
}

PolyModQ PolyModQ::from_sorted_terms(Prime q, std::size_t num_vars, std::vector<Term> terms) {
  PolyModQ f(q, num_vars);
  f.terms_ = std::move(terms);
  return f;
}

PolyModQ PolyModQ::from_quadratic(const QuadraticForm& form, Prime q) {
  std::vector<Term> terms;
  for (const auto& [m, c] : form.terms) {
    Exponent x = Exponent::variable(m.idx[0]) * Exponent::variable(m.idx[1]);
    terms.push_back({x, static_cast<std::uint32_t>(reduce_mod(c, q.value()))});
  }
  return from_terms(q, form.num_vars, std::move(terms));
}

PolyModQ PolyModQ::from_cubic(const CubicForm& form, Prime q) {
  std::vector<Term> terms;
  for (const auto& [m, c] : form.terms()) {
    Exponent x = Exponent::variable(m.idx[0]) * Exponent::variable(m.idx[1]) * Exponent::variable(m.idx[2]);
    terms.push_back({x, static_cast<std::uint32_t>(reduce_mod(c, q.value()))});
  }
  return from_terms(q, form.num_vars(), std::move(terms));
}

bool PolyModQ::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.exp.degree == terms_.front().exp.degree; });
}

void PolyModQ::make_monic() {
  if (terms_.empty()) return;
  const std::uint64_t inv = inverse_mod(terms_.front().coeff, q_);
  for (auto& t : terms_) t.coeff = static_cast<std::uint32_t>(mul_mod(t.coeff, inv, q_.value()));
}

std::uint32_t PolyModQ::evaluate(const std::vector<std::uint32_t>& point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("point has the wrong number of coordinates");
  const std::uint64_t q = q_.value();
  std::uint64_t sum = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = t.coeff;
    for (std::size_t i = 0; i < num_vars_; ++i) v = mul_mod(v, pow_mod(point[i] % q, t.exp.e[i], q), q);
    sum = (sum + v) % q;
  }
  return static_cast<std::uint32_t>(sum);
}

std::string PolyModQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << " + ";
    os << terms_[k].coeff;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (!terms_[k].exp.e[i]) continue;
      os << "*x" << i;
      if (terms_[k].exp.e[i] > 1) os << '^' << unsigned{terms_[k].exp.e[i]};
    }
  }
  return os.str();
}

}  // namespace cubiclass
