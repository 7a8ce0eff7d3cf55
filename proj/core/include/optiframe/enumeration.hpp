#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "optiframe/cyclotomic.hpp"

namespace optiframe {

/// S(eps) = (eps_2, ..., eps_m, -eps_1).
SignVector shift(const SignVector& eps);
/// R(eps) = (eps_m, ..., eps_1).
SignVector flip(const SignVector& eps);

/// Distinct images R^a S^b (eps), a in {0,1}, b in [0, 2m), sorted ascending.
std::vector<SignVector> orbit(const SignVector& eps);

/// Lexicographic minimum of the orbit (+1 before -1).
SignVector canonical_form(const SignVector& eps);

struct SignClass {
  SignVector canonical;
  std::size_t orbit_size = 0;
  /// Number of enumerated solutions that fell into this class.
  std::size_t raw_count = 0;
  /// Filled only when requested; ascending order.
  std::vector<SignVector> raw_members;
};

inline constexpr std::size_t kMaxEnumerationM = 30;

bool has_odd_factor(std::size_t m);

/// Every eps in {+-1}^m with sum eps_j zeta^j = 0, grouped by canonical_form
/// and sorted by canonical representative. Throws MTooLarge for m > 30 and
/// InvalidArgument for m < 3.
std::vector<SignClass> enumerate_solution_classes(std::size_t m, bool keep_members = false);

/// Raw solution set, ascending by enumeration index.
std::vector<SignVector> enumerate_solutions(std::size_t m);

struct ClassCount {
  std::size_t count = 0;
  bool power_of_two = false;
  /// For m = 4 and m = 8 the optimum is known from the literature rather than
  /// from the sign enumeration, which finds nothing when m has no odd factor.
  std::optional<std::size_t> literature_count;
};

ClassCount class_count(std::size_t m);

}  // namespace optiframe
