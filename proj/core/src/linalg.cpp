#include "pk/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "pk/error.hpp"

namespace pk::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::IndexOutOfRange, "ragged matrix literal");
    }
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::withoutRowCol(std::size_t dropRow, std::size_t dropCol) const {
  if (dropRow >= rows_ || dropCol >= cols_) {
    throw Error(ErrorKind::IndexOutOfRange, "minor index outside matrix");
  }
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == dropRow) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == dropCol) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

IntMatrix IntMatrix::stacked(const IntMatrix& other) const {
  if (other.rows_ == 0) return *this;
  if (rows_ == 0) return other;
  if (other.cols_ != cols_) {
    throw Error(ErrorKind::IndexOutOfRange, "column count mismatch when stacking");
  }
  IntMatrix out = *this;
  out.rows_ += other.rows_;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  return out;
}

void IntMatrix::appendRow(std::span<const Integer> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw Error(ErrorKind::IndexOutOfRange, "row length mismatch");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::IndexOutOfRange, "matrix product dimension mismatch");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// Coloring matrices have three nonzeros per row and a -1 in almost every
// row, so most of the elimination can be done with unit pivots on a sparse
// representation. Eliminating a unit pivot with row operations leaves the
// Schur complement, which has the same |det| and the same Smith form up to a
// leading 1. Whatever has no unit entry left is handed to the dense routines.
class SparseReducer {
 public:
  explicit SparseReducer(const IntMatrix& m)
      : rows_(m.rows()), colRows_(m.cols()), rowAlive_(m.rows(), true),
        colAlive_(m.cols(), true) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c) != 0) {
          rows_[r].emplace(c, m(r, c));
          colRows_[c].insert(r);
        }
      }
    }
  }

  struct Pivot {
    std::size_t row;
    std::size_t col;
    int unit;
  };

  // Performs one unit-pivot elimination. Column operations that clear the
  // pivot row are reported through `onColumnOp(target, source, factor)`
  // meaning col_target -= factor * col_source.
  template <typename ColumnOp>
  std::optional<Pivot> step(ColumnOp&& onColumnOp) {
    std::optional<Pivot> best;
    std::size_t bestCost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows_.size() && bestCost > 0; ++r) {
      if (!rowAlive_[r]) continue;
      const std::size_t rn = rows_[r].size();
      for (const auto& [c, v] : rows_[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rn - 1) * (colRows_[c].size() - 1);
        if (cost < bestCost) {
          bestCost = cost;
          best = Pivot{r, c, v > 0 ? 1 : -1};
          if (cost == 0) break;
        }
      }
    }
    if (!best) return std::nullopt;

    const auto [pr, pc, unit] = *best;
    const auto pivotRow = rows_[pr];
    for (const auto& [c, v] : pivotRow) {
      if (c != pc) onColumnOp(c, pc, Integer(v * unit));
    }
    const std::vector<std::size_t> targets(colRows_[pc].begin(), colRows_[pc].end());
    for (std::size_t r : targets) {
      if (r == pr) continue;
      const Integer factor = rows_[r].at(pc) * unit;
      for (const auto& [c, v] : pivotRow) {
        auto [it, inserted] = rows_[r].try_emplace(c, 0);
        it->second -= factor * v;
        if (it->second == 0) {
          rows_[r].erase(it);
          colRows_[c].erase(r);
        } else if (inserted) {
          colRows_[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : pivotRow) colRows_[c].erase(pr);
    rows_[pr].clear();
    rowAlive_[pr] = false;
    colAlive_[pc] = false;
    ++pivots_;
    return best;
  }

  void run() {
    while (step([](std::size_t, std::size_t, const Integer&) {})) {
    }
  }

  std::size_t pivots() const noexcept { return pivots_; }

  std::vector<std::size_t> aliveRows() const { return alive(rowAlive_); }
  std::vector<std::size_t> aliveCols() const { return alive(colAlive_); }

  IntMatrix remainder(const std::vector<std::size_t>& rowIdx,
                      const std::vector<std::size_t>& colIdx) const {
    IntMatrix out(rowIdx.size(), colIdx.size());
    for (std::size_t i = 0; i < rowIdx.size(); ++i) {
      for (std::size_t j = 0; j < colIdx.size(); ++j) {
        auto it = rows_[rowIdx[i]].find(colIdx[j]);
        if (it != rows_[rowIdx[i]].end()) out(i, j) = it->second;
      }
    }
    return out;
  }

 private:
  static std::vector<std::size_t> alive(const std::vector<bool>& flags) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (flags[i]) out.push_back(i);
    }
    return out;
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> colRows_;
  std::vector<bool> rowAlive_;
  std::vector<bool> colAlive_;
  std::size_t pivots_ = 0;
};

Integer bareiss(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Dense Smith reduction in place. When `transform` is given, every column
// operation is mirrored onto the listed columns of it. Leaves `m` with a
// diagonal whose nonzero entries form a divisibility chain (signs arbitrary).
void denseSmith(IntMatrix& m, IntMatrix* transform, const std::vector<std::size_t>& tcols) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t n = std::min(rows, cols);

  auto swapRows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swapCols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
    if (transform) {
      for (std::size_t i = 0; i < transform->rows(); ++i) {
        std::swap((*transform)(i, tcols[a]), (*transform)(i, tcols[b]));
      }
    }
  };
  // col_target -= q * col_source
  auto colOp = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) m(i, target) -= q * m(i, source);
    if (transform) {
      for (std::size_t i = 0; i < transform->rows(); ++i) {
        (*transform)(i, tcols[target]) -= q * (*transform)(i, tcols[source]);
      }
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m(i, j) != 0 && (!best || abs(m(i, j)) < abs(m(best->first, best->second)))) {
          best = {i, j};
        }
      }
    }
    if (!best) break;
    swapRows(t, best->first);
    swapCols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0) colOp(j, t, q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder appeared in the pivot row or column.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (m(i, t) != 0 && abs(m(i, t)) < abs(m(bi, bj))) { bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(t, j) != 0 && abs(m(t, j)) < abs(m(bi, bj))) { bi = t; bj = j; }
        }
        swapRows(t, bi);
        swapCols(t, bj);
        continue;
      }
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      for (std::size_t j = t; j < cols; ++j) m(t, j) += m(*offending, j);
    }
  }
}

struct Reduction {
  SmithForm form;
  // For each column of the original matrix: the diagonal entry it ends up
  // paired with after the column transform (nullopt = unconstrained).
  std::vector<std::optional<Integer>> columnDiagonal;
  IntMatrix transform;
};

Reduction reduce(const IntMatrix& m, bool wantTransform) {
  Reduction out;
  SparseReducer sparse(m);
  IntMatrix v = wantTransform ? IntMatrix::identity(m.cols()) : IntMatrix();
  out.columnDiagonal.assign(m.cols(), std::nullopt);

  for (;;) {
    auto pivot = sparse.step([&](std::size_t target, std::size_t source, const Integer& q) {
      if (!wantTransform) return;
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, target) -= q * v(i, source);
    });
    if (!pivot) break;
    out.columnDiagonal[pivot->col] = Integer(1);
  }

  const auto rowIdx = sparse.aliveRows();
  const auto colIdx = sparse.aliveCols();
  IntMatrix rest = sparse.remainder(rowIdx, colIdx);
  denseSmith(rest, wantTransform ? &v : nullptr, colIdx);

  std::vector<Integer>& f = out.form.invariantFactors;
  f.assign(sparse.pivots(), Integer(1));
  const std::size_t rn = std::min(rest.rows(), rest.cols());
  for (std::size_t t = 0; t < rn; ++t) {
    Integer d = abs(rest(t, t));
    if (d != 0) out.columnDiagonal[colIdx[t]] = d;
    f.push_back(std::move(d));
  }
  // Nonzero factors first, zeros trailing.
  std::stable_partition(f.begin(), f.end(), [](const Integer& x) { return x != 0; });
  out.transform = std::move(v);
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
  return bareiss(m);
}

Integer minorDeterminant(const IntMatrix& m, std::size_t dropRow, std::size_t dropCol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "minor of non-square matrix");
  if (m.rows() == 0) throw Error(ErrorKind::IndexOutOfRange, "minor of an empty matrix");
  IntMatrix minor = m.withoutRowCol(dropRow, dropCol);
  SparseReducer sparse(minor);
  sparse.run();
  const auto rowIdx = sparse.aliveRows();
  const auto colIdx = sparse.aliveCols();
  if (rowIdx.size() != colIdx.size()) return 0;
  return abs(bareiss(sparse.remainder(rowIdx, colIdx)));
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(
      invariantFactors.begin(), invariantFactors.end(), [](const Integer& d) { return d != 0; }));
}

SmithForm smithNormalForm(const IntMatrix& m) { return reduce(m, false).form; }

SmithDecomposition smithDecomposition(const IntMatrix& m) {
  Reduction r = reduce(m, true);
  return {std::move(r.form), std::move(r.transform)};
}

Integer solutionCount(const SmithForm& form, std::size_t cols, const Integer& modulus) {
  if (modulus < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be at least 2");
  Integer count = 1;
  for (const Integer& d : form.invariantFactors) count *= gcd(d, modulus);
  const std::size_t free = cols - std::min(cols, form.invariantFactors.size());
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), modulus.get_mpz_t(), free);
  return count * power;
}

ModularSolutionSpace::ModularSolutionSpace(const IntMatrix& m, const Integer& modulus)
    : matrix_(m), modulus_(modulus), cols_(m.cols()) {
  if (modulus < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be at least 2");
  form_ = smithNormalForm(m);
  count_ = solutionCount(form_, cols_, modulus_);
}

void ModularSolutionSpace::enumerate(
    const std::function<bool(std::span<const std::int64_t>)>& visit, std::uint64_t cap) const {
  if (count_ > Integer(std::to_string(cap))) {
    throw Error(ErrorKind::EnumerationTooLarge,
                "solution space has " + count_.get_str() + " vectors, cap is " +
                    std::to_string(cap));
  }
  if (!modulus_.fits_slong_p() || modulus_ > Integer(1L << 31)) {
    throw Error(ErrorKind::EnumerationTooLarge, "modulus too large to enumerate");
  }
  const std::int64_t p = modulus_.get_si();

  const Reduction r = reduce(matrix_, true);
  // x = V y; y_c ranges over multiples of p / gcd(d_c, p).
  struct Digit {
    std::vector<std::int64_t> column;  // step * V[:, c] mod p
    std::int64_t radix;
  };
  std::vector<Digit> digits;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer g = r.columnDiagonal[c] ? gcd(*r.columnDiagonal[c], modulus_) : modulus_;
    if (g == 1) continue;
    const Integer step = modulus_ / g;
    Digit d;
    d.radix = g.get_si();
    d.column.resize(cols_);
    for (std::size_t i = 0; i < cols_; ++i) {
      Integer e = (r.transform(i, c) * step) % modulus_;
      if (e < 0) e += modulus_;
      d.column[i] = e.get_si();
    }
    digits.push_back(std::move(d));
  }

  std::vector<std::int64_t> x(cols_, 0);
  std::vector<std::int64_t> counter(digits.size(), 0);
  for (;;) {
    if (!visit(x)) return;
    std::size_t k = 0;
    for (; k < digits.size(); ++k) {
      const Digit& d = digits[k];
      if (++counter[k] < d.radix) {
        for (std::size_t i = 0; i < cols_; ++i) x[i] = (x[i] + d.column[i]) % p;
        break;
      }
      // wrap: subtract (radix - 1) steps
      counter[k] = 0;
      for (std::size_t i = 0; i < cols_; ++i) {
        x[i] = ((x[i] - (d.radix - 1) * d.column[i]) % p + p) % p;
      }
    }
    if (k == digits.size()) return;
  }
}

ModularSolutionSpace solutionSpaceMod(const IntMatrix& m, const Integer& modulus) {
  return ModularSolutionSpace(m, modulus);
}

std::string toString(const Integer& value) { return value.get_str(); }

std::string toString(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace pk::linalg
