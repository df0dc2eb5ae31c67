#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pk::linalg {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  /// Copy with one row and one column removed.
  IntMatrix withoutRowCol(std::size_t dropRow, std::size_t dropCol) const;
  /// Rows of `other` appended below this matrix; column counts must agree.
  IntMatrix stacked(const IntMatrix& other) const;

  void appendRow(std::span<const Integer> values);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Signed determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// |det| of `m` with row `dropRow` and column `dropCol` removed.
/// A 1x1 matrix has the empty minor, whose determinant is 1.
Integer minorDeterminant(const IntMatrix& m, std::size_t dropRow, std::size_t dropCol);

/// Invariant factors d1 | d2 | ... | dr followed by zeros, r = min(rows, cols).
struct SmithForm {
  std::vector<Integer> invariantFactors;

  std::size_t rank() const;
  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

SmithForm smithNormalForm(const IntMatrix& m);

/// Smith form together with a unimodular column transform V such that
/// U * m * V is diagonal for some unimodular U.
struct SmithDecomposition {
  SmithForm form;
  IntMatrix columnTransform;
};

SmithDecomposition smithDecomposition(const IntMatrix& m);

/// Number of x in (Z/modulus)^cols with m x = 0, derived from the Smith form:
/// prod gcd(d_i, modulus) * modulus^(cols - min(rows, cols)), gcd(0, n) = n.
Integer solutionCount(const SmithForm& form, std::size_t cols, const Integer& modulus);

/// Default ceiling on the number of vectors an enumeration may produce.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Homogeneous solution space of m x = 0 over Z/modulus.
class ModularSolutionSpace {
 public:
  ModularSolutionSpace(const IntMatrix& m, const Integer& modulus);

  const Integer& modulus() const noexcept { return modulus_; }
  const Integer& count() const noexcept { return count_; }
  std::size_t dimension() const noexcept { return cols_; }

  /// Calls `visit` once per solution (residues in [0, modulus)). Stops early
  /// when `visit` returns false. Throws EnumerationTooLarge when count > cap.
  void enumerate(const std::function<bool(std::span<const std::int64_t>)>& visit,
                 std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  IntMatrix matrix_;
  Integer modulus_;
  std::size_t cols_;
  SmithForm form_;
  Integer count_;
};

ModularSolutionSpace solutionSpaceMod(const IntMatrix& m, const Integer& modulus);

std::string toString(const Integer& value);
/// Nested-array rendering, e.g. [[2,-1,-1],[...]].
std::string toString(const IntMatrix& m);

}  // namespace pk::linalg
