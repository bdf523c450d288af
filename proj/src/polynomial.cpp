#include "hyperent/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "hyperent/error.hpp"

namespace hyperent {

std::string variable_name(int id) { return id == 0 ? "p" : "p" + std::to_string(id); }

void RationalPolynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) {
  RationalPolynomial p;
  p.add_term({}, c);
  return p;
}

RationalPolynomial RationalPolynomial::variable(int id) {
  RationalPolynomial p;
  p.add_term({{id, 1}}, mpq_class(1));
  return p;
}

RationalPolynomial RationalPolynomial::univariate(int id, const std::vector<long>& coefficients, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  RationalPolynomial p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    mpq_class c(coefficients[i], denominator);
    c.canonicalize();
    p.add_term(i == 0 ? Monomial{} : Monomial{{id, static_cast<int>(i)}}, c);
  }
  return p;
}

std::vector<int> RationalPolynomial::variables() const {
  std::vector<int> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& [id, e] : m) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

int RationalPolynomial::degree(int id) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(id);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

int RationalPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& [id, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

mpq_class RationalPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::vector<mpq_class> RationalPolynomial::univariate_coefficients(int id) const {
  for (int v : variables())
    if (v != id) throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate in " + variable_name(id));
  std::vector<mpq_class> out(static_cast<std::size_t>(degree(id)) + 1, mpq_class(0));
  for (const auto& [m, c] : terms_) out[m.empty() ? 0 : static_cast<std::size_t>(m.begin()->second)] = c;
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  RationalPolynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [id, e] : mb) m[id] += e;
      out.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

RationalPolynomial RationalPolynomial::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial power");
  RationalPolynomial result = constant(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RationalPolynomial RationalPolynomial::derivative(int id) const {
  RationalPolynomial out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(id);
    if (it == m.end()) continue;
    Monomial d = m;
    const int e = it->second;
    if (e == 1) d.erase(id);
    else d[id] = e - 1;
    out.add_term(d, c * e);
  }
  return out;
}

RationalPolynomial RationalPolynomial::bind_all(int target) const {
  RationalPolynomial out;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (const auto& [id, k] : m) e += k;
    out.add_term(e == 0 ? Monomial{} : Monomial{{target, e}}, c);
  }
  return out;
}

namespace {

mpq_class qpow(const mpq_class& x, int e) {
  mpq_class r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

mpq_class RationalPolynomial::evaluate(const std::map<int, mpq_class>& point) const {
  mpq_class sum(0);
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (const auto& [id, e] : m) {
      auto it = point.find(id);
      if (it == point.end()) {
        t = 0;
        break;
      }
      t *= qpow(it->second, e);
    }
    sum += t;
  }
  return sum;
}

double RationalPolynomial::evaluate(const std::map<int, double>& point) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (const auto& [id, e] : m) {
      auto it = point.find(id);
      t *= it == point.end() ? 0.0 : std::pow(it->second, e);
    }
    sum += t;
  }
  return sum;
}

mpq_class RationalPolynomial::evaluate_uniform(const mpq_class& x) const {
  mpq_class sum(0);
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (const auto& [id, k] : m) e += k;
    sum += c * qpow(x, e);
  }
  return sum;
}

std::string RationalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  mpz_class denom(1);
  for (const auto& [m, c] : terms_) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());

  std::vector<std::pair<int, const Monomial*>> order;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (const auto& [id, k] : m) e += k;
    order.emplace_back(e, &m);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string body;
  bool first = true;
  for (const auto& [deg, m] : order) {
    const mpq_class& c = terms_.at(*m);
    mpz_class num = c.get_num() * (denom / c.get_den());
    const bool negative = num < 0;
    if (negative) num = -num;
    if (first) {
      if (negative) body += "-";
    } else {
      body += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (const auto& [id, e] : *m) {
      if (!mono.empty()) mono += "*";
      mono += variable_name(id);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) body += num.get_str();
    else if (num == 1) body += mono;
    else body += num.get_str() + "*" + mono;
  }
  return denom == 1 ? "(" + body + ")" : "(" + body + ")/" + denom.get_str();
}

}  // namespace hyperent
