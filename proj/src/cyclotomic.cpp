#include "minchar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "minchar/errors.hpp"

namespace minchar {

namespace {

// Quotient of two integer polynomials with monic divisor; the division must
// be exact. Coefficients are constant term first.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) throw std::logic_error("polynomial division underflow");
  std::vector<Int> quot(num.size() - dn, Int(0));
  for (size_t d = num.size() - 1; d + 1 > dn; --d) {
    Int c = num[d];
    if (c == 0) continue;
    quot[d - dn] = c;
    for (size_t i = 0; i <= dn; ++i) num[d - dn + i] -= c * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("polynomial division not exact");
  return quot;
}

}  // namespace

long totient(long n) {
  if (n < 1) throw InvalidParametersError("totient needs n >= 1");
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Int>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  if (n < 1) throw InvalidParametersError("cyclotomic polynomial needs n >= 1");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Fill in every divisor order in increasing order; each is x^d - 1 divided
  // by the polynomials of the proper divisors of d, all already present.
  for (long d = 1; d <= n; ++d) {
    if (n % d || cache.count(d)) continue;
    std::vector<Int> poly(static_cast<size_t>(d) + 1, Int(0));
    poly[0] = -1;
    poly[static_cast<size_t>(d)] = 1;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) poly = divide_exact(std::move(poly), cache.at(e));
    cache.emplace(d, std::move(poly));
  }
  return cache.at(n);
}

std::vector<Int> Cyclotomic::reduce(std::vector<Int> dense, long n) {
  const size_t phi = static_cast<size_t>(totient(n));
  const std::vector<Int>& cyc = cyclotomic_polynomial(n);
  for (size_t d = dense.size() - 1; d >= phi; --d) {
    Int c = dense[d];
    if (c == 0) continue;
    for (size_t i = 0; i <= phi; ++i) dense[d - phi + i] -= c * cyc[i];
  }
  dense.resize(phi);
  return dense;
}

Cyclotomic Cyclotomic::zeta(long n, long exponent) {
  if (n < 1) throw InvalidParametersError("zeta needs order >= 1");
  long e = exponent % n;
  if (e < 0) e += n;
  std::vector<Int> dense(static_cast<size_t>(n), Int(0));
  dense[static_cast<size_t>(e)] = 1;
  return Cyclotomic(n, reduce(std::move(dense), n));
}

Cyclotomic Cyclotomic::from_terms(long n, const std::vector<std::pair<Int, long>>& terms) {
  if (n < 1) throw InvalidParametersError("from_terms needs order >= 1");
  std::vector<Int> dense(static_cast<size_t>(n), Int(0));
  for (const auto& [c, exponent] : terms) {
    long e = exponent % n;
    if (e < 0) e += n;
    dense[static_cast<size_t>(e)] += c;
  }
  return Cyclotomic(n, reduce(std::move(dense), n));
}

bool Cyclotomic::is_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Int Cyclotomic::as_integer() const {
  if (!is_rational()) throw NotRationalError("not an integer: " + str());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Int> dense(static_cast<size_t>(order_), Int(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    size_t e = (order_ - static_cast<long>(j)) % order_;
    dense[e] += coeffs_[j];
  }
  return Cyclotomic(order_, reduce(std::move(dense), order_));
}

Cyclotomic Cyclotomic::norm_squared() const { return *this * conj(); }

Cyclotomic Cyclotomic::embedded(long m) const {
  if (m % order_) throw std::logic_error("embedding target must be a multiple of the order");
  if (m == order_) return *this;
  const long stride = m / order_;
  std::vector<Int> dense(static_cast<size_t>(m), Int(0));
  for (size_t j = 0; j < coeffs_.size(); ++j)
    dense[j * static_cast<size_t>(stride)] = coeffs_[j];
  return Cyclotomic(m, reduce(std::move(dense), m));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const long l = std::lcm(order_, rhs.order_);
  if (l != order_) *this = embedded(l);
  if (l == rhs.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    Cyclotomic other = rhs.embedded(l);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const long l = std::lcm(order_, rhs.order_);
  const Cyclotomic a = embedded(l);
  const Cyclotomic b = rhs.embedded(l);
  std::vector<Int> dense(static_cast<size_t>(l), Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      dense[(i + j) % static_cast<size_t>(l)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = Cyclotomic(l, reduce(std::move(dense), l));
  return *this;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  const long l = std::lcm(lhs.order_, rhs.order_);
  return lhs.embedded(l).coeffs_ == rhs.embedded(l).coeffs_;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Int& c = coeffs_[j];
    if (c == 0) continue;
    if (!first && c > 0) out << "+";
    if (j == 0) {
      out << c.get_str();
    } else {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << c.get_str() << "*";
      out << "z" << order_;
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace minchar
