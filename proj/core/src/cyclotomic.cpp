#include "optiframe/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "optiframe/errors.hpp"

namespace optiframe {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer product");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer subtraction");
  return r;
}

class CyclotomicCache {
 public:
  CyclotomicPoly get(int n) {
    std::lock_guard lock(mutex_);
    return compute(n);
  }

 private:
  // Caller holds mutex_.
  const CyclotomicPoly& compute(int n) {
    if (auto it = table_.find(n); it != table_.end()) return it->second;

    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p.front() = -1;
    p.back() = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      const CyclotomicPoly& phi_d = compute(d);
      PolyDivision div = poly_divmod_monic(p, phi_d.coeffs);
      if (!div.remainder.empty()) {
        throw InexactDivision("Phi_" + std::to_string(d) + " does not divide the partial quotient for n = " +
                              std::to_string(n));
      }
      p = std::move(div.quotient);
    }
    return table_.emplace(n, CyclotomicPoly{n, std::move(p)}).first->second;
  }

  std::mutex mutex_;
  std::map<int, CyclotomicPoly> table_;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

}  // namespace

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.size() < 3) {
    throw InvalidSignVector("length must be at least 3, got " + std::to_string(signs_.size()));
  }
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw InvalidSignVector("entry " + std::to_string(i) + " is " + std::to_string(signs_[i]));
    }
  }
}

SignVector SignVector::from_index(std::uint64_t index, std::size_t m) {
  if (m > 64) throw InvalidSignVector("index encoding supports m <= 64");
  std::vector<int> s(m);
  for (std::size_t j = 0; j < m; ++j) s[j] = ((index >> j) & 1U) ? -1 : 1;
  return SignVector(std::move(s));
}

std::uint64_t SignVector::index() const {
  if (m() > 64) throw InvalidSignVector("index encoding supports m <= 64");
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < m(); ++j) {
    if (signs_[j] == -1) idx |= std::uint64_t{1} << j;
  }
  return idx;
}

SignVector SignVector::operator-() const {
  std::vector<int> s(signs_);
  for (int& v : s) v = -v;
  return SignVector(std::move(s));
}

std::strong_ordering SignVector::operator<=>(const SignVector& other) const {
  const std::size_t n = std::min(m(), other.m());
  for (std::size_t i = 0; i < n; ++i) {
    if (signs_[i] != other.signs_[i]) {
      // +1 encodes as 0 and sorts first.
      return signs_[i] == 1 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return m() <=> other.m();
}

void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
  }
  poly_trim(out);
  return out;
}

PolyDivision poly_divmod_monic(const IntPoly& numerator, const IntPoly& monic_divisor) {
  IntPoly den = monic_divisor;
  poly_trim(den);
  if (den.empty() || den.back() != 1) {
    throw InvalidArgument("divisor must be monic");
  }
  IntPoly rem = numerator;
  poly_trim(rem);
  const std::size_t dd = den.size() - 1;
  if (rem.size() <= dd) return {{}, rem};

  IntPoly quot(rem.size() - dd, 0);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const std::int64_t lead = rem[k];
    if (lead == 0) continue;
    const std::size_t shift = k - dd;
    quot[shift] = lead;
    for (std::size_t i = 0; i <= dd; ++i) {
      rem[shift + i] = checked_sub(rem[shift + i], checked_mul(lead, den[i]));
    }
  }
  poly_trim(rem);
  poly_trim(quot);
  return {std::move(quot), std::move(rem)};
}

CyclotomicPoly cyclotomic_polynomial(int n) {
  if (n < 1 || n > kMaxCyclotomicIndex) {
    throw InvalidArgument("cyclotomic index " + std::to_string(n) + " outside [1, 10000]");
  }
  return cache().get(n);
}

int euler_totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool sign_sum_is_zero(const SignVector& eps) {
  const std::size_t m = eps.m();
  IntPoly p(m + 1, 0);
  for (std::size_t j = 0; j < m; ++j) p[j + 1] = eps[j];
  const CyclotomicPoly phi = cyclotomic_polynomial(static_cast<int>(2 * m));
  return poly_divmod_monic(p, phi.coeffs).remainder.empty();
}

double sign_sum_numeric(const SignVector& eps) {
  const double m = static_cast<double>(eps.m());
  std::complex<double> g{0.0, 0.0};
  for (std::size_t j = 0; j < eps.m(); ++j) {
    g += static_cast<double>(eps[j]) *
         std::polar(1.0, static_cast<double>(j + 1) * std::numbers::pi / m);
  }
  return std::abs(g);
}

SignSumTester::SignSumTester(std::size_t m) : m_(m) {
  if (m < 3 || 2 * m > static_cast<std::size_t>(kMaxCyclotomicIndex)) {
    throw InvalidArgument("SignSumTester needs 3 <= m <= 5000");
  }
  const CyclotomicPoly phi = cyclotomic_polynomial(static_cast<int>(2 * m));
  width_ = static_cast<std::size_t>(phi.degree());
  residues_.assign(m_ * width_, 0);
  for (std::size_t j = 0; j < m_; ++j) {
    IntPoly monomial(j + 2, 0);
    monomial.back() = 1;
    const IntPoly r = poly_divmod_monic(monomial, phi.coeffs).remainder;
    std::copy(r.begin(), r.end(), residues_.begin() + static_cast<std::ptrdiff_t>(j * width_));
  }
}

bool SignSumTester::is_zero(const SignVector& eps) const {
  if (eps.m() != m_) throw InvalidArgument("sign vector length mismatch");
  std::vector<std::int64_t> acc(width_, 0);
  for (std::size_t j = 0; j < m_; ++j) {
    const auto row = residue(j);
    for (std::size_t k = 0; k < width_; ++k) {
      acc[k] = checked_add(acc[k], checked_mul(eps[j], row[k]));
    }
  }
  return std::all_of(acc.begin(), acc.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace optiframe
