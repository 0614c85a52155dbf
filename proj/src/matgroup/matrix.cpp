/*
  Copyright 2026 The mckay Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "matgroup/matrix.hpp"

#include <utility>

#include "error.hpp"

namespace mckay::matgroup {

namespace {

void requireCompatible(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) {
    raise(ErrorCode::DimensionMismatch,
          "matrix dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  if (a.conductor() != b.conductor()) {
    raise(ErrorCode::ConductorMismatch, "matrix conductors " + std::to_string(a.conductor()) +
                                            " and " + std::to_string(b.conductor()));
  }
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t dim, unsigned conductor)
    : dim_(dim), conductor_(conductor), entries_(dim * dim, Cyclotomic::zero(conductor)) {}

SquareMatrix::SquareMatrix(std::size_t dim, unsigned conductor, std::vector<Cyclotomic> entries)
    : dim_(dim), conductor_(conductor), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim) raise(ErrorCode::DimensionMismatch, "entry count");
  for (const auto& e : entries_) {
    if (e.conductor() != conductor) raise(ErrorCode::ConductorMismatch, "matrix entry conductor");
  }
}

SquareMatrix SquareMatrix::identity(std::size_t dim, unsigned conductor) {
  SquareMatrix out(dim, conductor);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = Cyclotomic::one(conductor);
  return out;
}

SquareMatrix SquareMatrix::diagonal(std::initializer_list<Cyclotomic> diag) {
  unsigned n = 1;
  for (const auto& d : diag) n = static_cast<unsigned>(exactnum::lcm(n, d.conductor()));
  SquareMatrix out(diag.size(), n);
  std::size_t i = 0;
  for (const auto& d : diag) {
    out(i, i) = d.promote(n);
    ++i;
  }
  return out;
}

SquareMatrix SquareMatrix::fromRows(const std::vector<std::vector<Cyclotomic>>& rows) {
  unsigned n = 1;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) raise(ErrorCode::DimensionMismatch, "matrix is not square");
    for (const auto& e : row) n = static_cast<unsigned>(exactnum::lcm(n, e.conductor()));
  }
  SquareMatrix out(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c].promote(n);
  }
  return out;
}

SquareMatrix SquareMatrix::promote(unsigned conductor) const {
  if (conductor == conductor_) return *this;
  std::vector<Cyclotomic> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) entries.push_back(e.promote(conductor));
  return SquareMatrix(dim_, conductor, std::move(entries));
}

SquareMatrix SquareMatrix::scaled(const Cyclotomic& s) const {
  SquareMatrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix out(dim_, conductor_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Cyclotomic SquareMatrix::trace() const {
  Cyclotomic acc = Cyclotomic::zero(conductor_);
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  return a.dim_ == b.dim_ && a.conductor_ == b.conductor_ && a.entries_ == b.entries_;
}

SquareMatrix matMul(const SquareMatrix& a, const SquareMatrix& b) {
  requireCompatible(a, b);
  const std::size_t n = a.dim();
  SquareMatrix out(n, a.conductor());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Cyclotomic& aik = a(i, k);
      if (aik.isZero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Cyclotomic& bkj = b(k, j);
        if (bkj.isZero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

SquareMatrix matInv(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  const unsigned cond = a.conductor();
  SquareMatrix work = a;
  SquareMatrix out = SquareMatrix::identity(n, cond);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).isZero()) ++pivot;
    if (pivot == n) raise(ErrorCode::SingularMatrix, "matrix is not invertible");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(out(pivot, c), out(col, c));
      }
    }
    const Cyclotomic scale = work(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      out(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).isZero()) continue;
      const Cyclotomic factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        out(r, c) -= factor * out(col, c);
      }
    }
  }
  return out;
}

Cyclotomic det(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  const unsigned cond = a.conductor();
  if (n == 0) return Cyclotomic::one(cond);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (n == 3) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }
  SquareMatrix work = a;
  Cyclotomic result = Cyclotomic::one(cond);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).isZero()) ++pivot;
    if (pivot == n) return Cyclotomic::zero(cond);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work(pivot, c), work(col, c));
      result = -result;
    }
    result *= work(col, col);
    const Cyclotomic inv = work(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col).isZero()) continue;
      const Cyclotomic factor = work(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) work(r, c) -= factor * work(col, c);
    }
  }
  return result;
}

std::string canonicalKey(const SquareMatrix& a) {
  std::string out = std::to_string(a.dim()) + "x@" + std::to_string(a.conductor()) + ":";
  for (const auto& e : a.entries()) out += e.key();
  return out;
}

}  // namespace mckay::matgroup
