#include "optiframe/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "optiframe/errors.hpp"
#include "optiframe/parallel.hpp"

namespace optiframe {
namespace {

void check_m(std::size_t m) {
  if (m < 3) throw InvalidArgument("m must be at least 3, got " + std::to_string(m));
  if (m > kMaxEnumerationM) {
    throw MTooLarge("m = " + std::to_string(m) + " exceeds the enumeration cap of " +
                    std::to_string(kMaxEnumerationM));
  }
}

// Scans gray-code positions [lo, hi) and returns the enumeration indices of
// vanishing sign vectors. Consecutive gray codes differ in one sign, so the
// residue accumulator changes by +-2 times a single row.
std::vector<std::uint64_t> scan_range(const SignSumTester& tester, std::uint64_t lo,
                                      std::uint64_t hi) {
  std::vector<std::uint64_t> found;
  if (lo >= hi) return found;
  const std::size_t m = tester.m();
  const std::size_t w = tester.width();

  std::vector<std::int64_t> acc(w, 0);
  std::uint64_t code = lo ^ (lo >> 1);
  for (std::size_t j = 0; j < m; ++j) {
    const std::int64_t s = ((code >> j) & 1U) ? -1 : 1;
    const auto row = tester.residue(j);
    for (std::size_t k = 0; k < w; ++k) acc[k] += s * row[k];
  }

  for (std::uint64_t i = lo;;) {
    bool zero = true;
    for (std::size_t k = 0; k < w; ++k) {
      if (acc[k] != 0) {
        zero = false;
        break;
      }
    }
    if (zero) found.push_back(code);
    if (++i == hi) break;
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t bit = std::uint64_t{1} << j;
    // bit 0 -> 1 turns +1 into -1.
    const std::int64_t delta = (code & bit) ? 2 : -2;
    code ^= bit;
    const auto row = tester.residue(j);
    for (std::size_t k = 0; k < w; ++k) acc[k] += delta * row[k];
  }
  return found;
}

}  // namespace

SignVector shift(const SignVector& eps) {
  const auto s = eps.signs();
  std::vector<int> out(s.begin() + 1, s.end());
  out.push_back(-s.front());
  return SignVector(std::move(out));
}

SignVector flip(const SignVector& eps) {
  const auto s = eps.signs();
  return SignVector(std::vector<int>(s.rbegin(), s.rend()));
}

std::vector<SignVector> orbit(const SignVector& eps) {
  std::vector<SignVector> images;
  images.reserve(4 * eps.m());
  for (SignVector base : {eps, flip(eps)}) {
    for (std::size_t k = 0; k < 2 * eps.m(); ++k) {
      images.push_back(base);
      base = shift(base);
    }
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

SignVector canonical_form(const SignVector& eps) { return orbit(eps).front(); }

bool has_odd_factor(std::size_t m) { return m > 0 && !std::has_single_bit(m); }

std::vector<SignVector> enumerate_solutions(std::size_t m) {
  check_m(m);
  const SignSumTester tester(m);
  const std::uint64_t total = std::uint64_t{1} << m;
  const std::size_t chunks = m < 16 ? 1 : 8 * worker_count();

  std::vector<std::vector<std::uint64_t>> per_chunk(chunks);
  parallel_chunks(total, chunks, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
    per_chunk[c] = scan_range(tester, lo, hi);
  });

  std::vector<std::uint64_t> indices;
  for (const auto& part : per_chunk) indices.insert(indices.end(), part.begin(), part.end());
  std::sort(indices.begin(), indices.end());

  std::vector<SignVector> out;
  out.reserve(indices.size());
  for (std::uint64_t idx : indices) out.push_back(SignVector::from_index(idx, m));
  return out;
}

std::vector<SignClass> enumerate_solution_classes(std::size_t m, bool keep_members) {
  const std::vector<SignVector> solutions = enumerate_solutions(m);

  std::map<SignVector, SignClass> classes;
  for (const SignVector& eps : solutions) {
    const std::vector<SignVector> images = orbit(eps);
    auto [it, inserted] =
        classes.try_emplace(images.front(), SignClass{images.front(), images.size(), 0, {}});
    ++it->second.raw_count;
    if (keep_members) it->second.raw_members.push_back(eps);
  }

  std::vector<SignClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) {
    std::sort(cls.raw_members.begin(), cls.raw_members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

ClassCount class_count(std::size_t m) {
  ClassCount result;
  result.count = enumerate_solution_classes(m).size();
  result.power_of_two = !has_odd_factor(m);
  if (m == 4 || m == 8) result.literature_count = 1;
  return result;
}

}  // namespace optiframe
