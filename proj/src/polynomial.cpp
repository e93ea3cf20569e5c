#include "recdiff/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "recdiff/errors.hpp"

namespace recdiff {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  if (c_.empty() || c_.back() == 0) {
    throw BadInput("polynomial must have a nonzero leading coefficient");
  }
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() == 0) {
    throw BadInput("derivative of a constant polynomial is zero");
  }
  std::vector<mpz_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = mpz_class(static_cast<long>(i)) * c_[i];
  return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  std::vector<mpz_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = c_.back();
  for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc(c_.back());
  for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + mpq_class(c_[i]);
  return acc;
}

Complex IntPolynomial::eval(const Complex& z) const {
  const mpfr_prec_t prec = z.prec();
  Complex acc(BigFloat::of(c_.back(), prec, MPFR_RNDN), BigFloat::of(0L, prec));
  for (size_t i = c_.size() - 1; i-- > 0;) {
    acc = acc * z;
    acc.re = BigFloat::add(acc.re, BigFloat::of(c_[i], prec, MPFR_RNDN), MPFR_RNDN);
  }
  return acc;
}

Complex IntPolynomial::eval_derivative(const Complex& z) const {
  const mpfr_prec_t prec = z.prec();
  Complex acc(prec);
  if (degree() == 0) return acc;
  acc.re = BigFloat::of(mpz_class(mpz_class(degree()) * c_.back()), prec, MPFR_RNDN);
  for (size_t i = c_.size() - 1; i-- > 1;) {
    acc = acc * z;
    mpz_class weighted = mpz_class(static_cast<long>(i)) * c_[i];
    acc.re = BigFloat::add(acc.re, BigFloat::of(weighted, prec, MPFR_RNDN), MPFR_RNDN);
  }
  return acc;
}

ComplexInterval IntPolynomial::eval(const ComplexInterval& z, mpfr_prec_t prec) const {
  ComplexInterval acc = ComplexInterval::exact(c_.back(), prec);
  for (size_t i = c_.size() - 1; i-- > 0;) {
    acc = acc * z + ComplexInterval::exact(c_[i], prec);
  }
  return acc;
}

std::string IntPolynomial::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<size_t>(i)];
    if (c == 0 && degree() > 0) continue;
    mpz_class a = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial characteristic_polynomial(const RecurrenceSpec& spec) {
  const int k = spec.order();
  std::vector<mpz_class> c(static_cast<size_t>(k) + 1);
  for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = -spec.coeffs()[static_cast<size_t>(i)];
  c[static_cast<size_t>(k)] = 1;
  return IntPolynomial(std::move(c));
}

namespace {

// Dense rational polynomial helpers for gcd / exact division.
using QPoly = std::vector<mpq_class>;  // constant first; empty == zero

QPoly to_q(const IntPolynomial& p) {
  QPoly q(p.coeffs().size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = mpq_class(p.coeffs()[i]);
  return q;
}

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool q_zero(const QPoly& p) { return p.empty(); }

int q_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  q_trim(r);
  return r;
}

QPoly q_derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * mpq_class(static_cast<long>(i));
  return r;
}

// Division with remainder over Q.
std::pair<QPoly, QPoly> q_divmod(QPoly num, const QPoly& den) {
  if (q_zero(den)) throw BadInput("polynomial division by zero");
  QPoly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, mpq_class(0));
  while (!q_zero(num) && q_deg(num) >= q_deg(den)) {
    const size_t shift = static_cast<size_t>(q_deg(num) - q_deg(den));
    mpq_class f = num.back() / den.back();
    quot[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    q_trim(num);
  }
  q_trim(quot);
  return {quot, num};
}

QPoly q_gcd(QPoly a, QPoly b) {
  q_trim(a);
  q_trim(b);
  while (!q_zero(b)) {
    QPoly r = q_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!q_zero(a)) {
    // normalize monic
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

IntPolynomial q_to_primitive_int(const QPoly& p) {
  if (q_zero(p)) throw BadInput("cannot convert zero polynomial");
  mpz_class den_lcm = 1;
  for (const auto& c : p) {
    mpz_class d = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> z(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    mpq_class scaled = p[i] * mpq_class(den_lcm);
    z[i] = scaled.get_num();
  }
  return IntPolynomial(std::move(z)).primitive_part();
}

}  // namespace

std::vector<SquareFreeFactor> squarefree_decomposition(const IntPolynomial& poly) {
  std::vector<SquareFreeFactor> out;
  if (poly.degree() == 0) return out;

  // Yun's algorithm over Q.
  QPoly f = to_q(poly);
  QPoly fp = q_derivative(f);
  QPoly a0 = q_gcd(f, fp);
  QPoly b = q_divmod(f, a0).first;
  QPoly c = q_divmod(fp, a0).first;
  QPoly d = q_sub(c, q_derivative(b));
  int mult = 1;
  while (q_deg(b) > 0) {
    QPoly g = q_gcd(b, d);
    if (q_deg(g) > 0) {
      out.push_back({q_to_primitive_int(g), mult});
    }
    QPoly b_next = q_divmod(b, g).first;
    QPoly c_next = q_divmod(d, g).first;
    d = q_sub(c_next, q_derivative(b_next));
    b = std::move(b_next);
    ++mult;
  }
  return out;
}

std::vector<mpq_class> rational_roots(const IntPolynomial& poly) {
  std::vector<mpq_class> roots;
  IntPolynomial p = poly.primitive_part();

  // Strip x | p(x) factors first.
  int zero_mult = 0;
  std::vector<mpz_class> cs = p.coeffs();
  while (cs.size() > 1 && cs.front() == 0) {
    cs.erase(cs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(0);
  IntPolynomial q(std::move(cs));
  if (q.degree() == 0) return roots;

  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    mpz_class a = n < 0 ? mpz_class(-n) : n;
    for (mpz_class d = 1; d * d <= a; ++d) {
      if (a % d == 0) {
        ds.push_back(d);
        if (d * d != a) ds.push_back(a / d);
      }
    }
    return ds;
  };

  const std::vector<mpz_class> ps = divisors(q[0]);
  const std::vector<mpz_class> qs = divisors(q.leading());
  for (const auto& num : ps) {
    for (const auto& den : qs) {
      for (int s = 0; s < 2; ++s) {
        mpq_class r(s == 0 ? num : mpz_class(-num), den);
        r.canonicalize();
        if (q.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) {
          roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

IntPolynomial deflate_rational_root(const IntPolynomial& poly, const mpq_class& r) {
  if (poly.eval(r) != 0) throw BadInput("requested deflation at a non-root");
  QPoly den = {mpq_class(-r.get_num(), 1), mpq_class(r.get_den(), 1)};  // q*x - p
  den[0].canonicalize();
  den[1].canonicalize();
  auto [quot, rem] = q_divmod(to_q(poly), den);
  if (!q_zero(rem)) throw BadInput("deflation left a remainder");
  return q_to_primitive_int(quot);
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  auto [quot, rem] = q_divmod(to_q(num), to_q(den));
  if (!q_zero(rem) || q_zero(quot)) throw BadInput("inexact polynomial division");
  return q_to_primitive_int(quot);
}

}  // namespace recdiff
