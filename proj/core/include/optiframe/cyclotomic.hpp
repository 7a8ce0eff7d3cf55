#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace optiframe {

/// epsilon in {+1, -1}^m with m >= 3.
class SignVector {
 public:
  /// Throws InvalidSignVector on an entry other than +-1 or on m < 3.
  explicit SignVector(std::vector<int> signs);

  /// Enumeration order: bit j of index set means epsilon_{j+1} = -1.
  static SignVector from_index(std::uint64_t index, std::size_t m);
  std::uint64_t index() const;

  std::size_t m() const { return signs_.size(); }
  std::span<const int> signs() const { return signs_; }
  int operator[](std::size_t i) const { return signs_[i]; }

  SignVector operator-() const;
  bool operator==(const SignVector&) const = default;
  /// Lexicographic with +1 ordered before -1 (i.e. +1 -> 0, -1 -> 1 as a
  /// binary string).
  std::strong_ordering operator<=>(const SignVector& other) const;

 private:
  std::vector<int> signs_;
};

using IntPoly = std::vector<std::int64_t>;  // ascending degree

/// Overflow-checked integer polynomial product. Throws ArithmeticOverflow.
IntPoly poly_multiply(const IntPoly& a, const IntPoly& b);

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;  // trimmed; empty means zero
};

/// Long division by a monic divisor; stays in the integers.
PolyDivision poly_divmod_monic(const IntPoly& numerator, const IntPoly& monic_divisor);

/// Drops trailing zero coefficients.
void poly_trim(IntPoly& p);

struct CyclotomicPoly {
  int n = 1;
  IntPoly coeffs;  // ascending degree, monic

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline constexpr int kMaxCyclotomicIndex = 10000;

/// Phi_n via (x^n - 1) / prod_{d | n, d < n} Phi_d, memoized process-wide.
/// Throws InvalidArgument outside [1, 10^4] and InexactDivision if a
/// division leaves a remainder.
CyclotomicPoly cyclotomic_polynomial(int n);

int euler_totient(int n);

/// Exact test of sum_j eps_j zeta^j == 0 with zeta = exp(i pi / m): reduce
/// p(x) = sum eps_j x^j modulo Phi_{2m}, the minimal polynomial of zeta.
bool sign_sum_is_zero(const SignVector& eps);

/// |sum_j eps_j exp(i j pi / m)| in double precision.
double sign_sum_numeric(const SignVector& eps);

/// Precomputes x^j mod Phi_{2m} for j = 1..m, so the exact test for any sign
/// vector becomes an integer linear combination of m residue rows.
class SignSumTester {
 public:
  explicit SignSumTester(std::size_t m);

  std::size_t m() const { return m_; }
  /// Number of coefficients per residue row (= deg Phi_{2m}).
  std::size_t width() const { return width_; }
  /// Row j (0-based) is x^{j+1} mod Phi_{2m}.
  std::span<const std::int64_t> residue(std::size_t j) const {
    return {residues_.data() + j * width_, width_};
  }

  bool is_zero(const SignVector& eps) const;

 private:
  std::size_t m_;
  std::size_t width_;
  std::vector<std::int64_t> residues_;
};

}  // namespace optiframe
