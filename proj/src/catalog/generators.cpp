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

#include "catalog/generators.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"

namespace mckay::catalog {

using exactnum::Cyclotomic;
using exactnum::Rational;

namespace {

unsigned ucast(long v) { return static_cast<unsigned>(v); }

Cyclotomic z(long k, long n) { return Cyclotomic::root(k, ucast(n)); }
Cyclotomic q(long num, long den = 1) { return Cyclotomic(Rational(num, den), 1); }

// Entries may sit at different conductors; bring them to the lcm first.
Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned n = static_cast<unsigned>(exactnum::lcm(a.conductor(), b.conductor()));
  return a.promote(n) + b.promote(n);
}
Cyclotomic sub(const Cyclotomic& a, const Cyclotomic& b) { return add(a, -b); }
Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned n = static_cast<unsigned>(exactnum::lcm(a.conductor(), b.conductor()));
  return a.promote(n) * b.promote(n);
}

std::vector<SquareMatrix> common(std::vector<SquareMatrix> gens) {
  unsigned n = 1;
  for (const auto& g : gens) n = static_cast<unsigned>(exactnum::lcm(n, g.conductor()));
  for (auto& g : gens) g = g.promote(n);
  return gens;
}

std::vector<SquareMatrix> concat(std::vector<SquareMatrix> a, const std::vector<SquareMatrix>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<SquareMatrix> hmnGens(long m, long n) {
  return {SquareMatrix::diagonal({z(1, m), q(1), z(-1, m)}),
          SquareMatrix::diagonal({q(1), z(1, n), z(-1, n)})};
}

// 2x2 matrices of the standard binary polyhedral generators, rows flattened.
using Mat2 = std::array<Cyclotomic, 4>;

// a + b i + c j + d k  ->  [[a + b i, c + d i], [-c + d i, a - b i]]
Mat2 quaternion(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                const Cyclotomic& d) {
  const Cyclotomic i = z(1, 4);
  return {add(a, mul(b, i)), add(c, mul(d, i)), add(-c, mul(d, i)), sub(a, mul(b, i))};
}

std::vector<Mat2> sl2Generators(const GroupSpec& spec) {
  const Cyclotomic zero = q(0);
  const Cyclotomic one = q(1);
  const Cyclotomic half = q(1, 2);
  const Mat2 qi = quaternion(zero, one, zero, zero);
  const Mat2 qj = quaternion(zero, zero, one, zero);
  const Mat2 omega = quaternion(-half, half, half, half);
  switch (spec.sl2) {
    case SL2Type::Cyclic:
      return {Mat2{z(1, spec.k), zero, zero, z(-1, spec.k)}};
    case SL2Type::BinaryDihedral:
      return {Mat2{z(1, 2 * spec.k), zero, zero, z(-1, 2 * spec.k)},
              quaternion(zero, zero, zero, one)};
    case SL2Type::Tetrahedral:
      return {qi, qj, omega};
    case SL2Type::Octahedral:
      return {qi, qj, omega, Mat2{z(1, 8), zero, zero, z(7, 8)}};
    case SL2Type::Icosahedral: {
      const Cyclotomic s5 = exactnum::sqrtConstant(5);
      const Cyclotomic phi = mul(add(one, s5), half);
      const Cyclotomic phiInv = mul(sub(s5, one), half);
      return {qi, qj, omega, quaternion(mul(phi, half), mul(phiInv, half), half, zero)};
    }
  }
  return {};
}

std::vector<SquareMatrix> sl2Embedded(const GroupSpec& spec) {
  const Cyclotomic alpha = z(1, spec.alpha);
  const Cyclotomic corner = z(-2, spec.alpha);
  const Cyclotomic zero = q(0);
  std::vector<SquareMatrix> out;
  for (const Mat2& a : sl2Generators(spec)) {
    out.push_back(SquareMatrix::fromRows({{corner, zero, zero},
                                          {zero, mul(alpha, a[0]), mul(alpha, a[1])},
                                          {zero, mul(alpha, a[2]), mul(alpha, a[3])}}));
  }
  return out;
}

std::vector<long> repeatDims(std::initializer_list<std::pair<long, long>> parts) {
  std::vector<long> out;
  for (auto [dim, count] : parts) out.insert(out.end(), static_cast<std::size_t>(count), dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

namespace named {

SquareMatrix W() { return SquareMatrix::diagonal({z(1, 3), z(1, 3), z(1, 3)}); }

SquareMatrix T() {
  return SquareMatrix::fromRows({{q(0), q(1), q(0)}, {q(0), q(0), q(1)}, {q(1), q(0), q(0)}});
}

// a = b = c = -1
SquareMatrix R() {
  return SquareMatrix::fromRows({{q(-1), q(0), q(0)}, {q(0), q(0), q(-1)}, {q(0), q(-1), q(0)}});
}

SquareMatrix S() { return SquareMatrix::diagonal({q(1), z(1, 3), z(2, 3)}); }

SquareMatrix V() {
  const Cyclotomic w = z(1, 3);
  const Cyclotomic w2 = z(2, 3);
  const Cyclotomic one = Cyclotomic::one(3);
  SquareMatrix m = SquareMatrix::fromRows({{one, one, one}, {one, w, w2}, {one, w2, w}});
  return m.scaled(exactnum::sqrtConstant(-3).inverse());
}

SquareMatrix K() {
  const Cyclotomic w = z(1, 3);
  const Cyclotomic w2 = z(2, 3);
  const Cyclotomic one = Cyclotomic::one(3);
  SquareMatrix m = SquareMatrix::fromRows({{one, one, w2}, {one, w, w}, {w, one, w}});
  return m.scaled(exactnum::sqrtConstant(-3).inverse());
}

SquareMatrix E2() { return SquareMatrix::diagonal({q(1), q(-1), q(-1)}); }

SquareMatrix E3() {
  const Cyclotomic s5 = exactnum::sqrtConstant(5);
  const Cyclotomic one = Cyclotomic::one(5);
  const Rational half(1, 2);
  const Cyclotomic muPlus = (s5 - one) * half;
  const Cyclotomic muMinus = (-s5 - one) * half;
  const Cyclotomic m1 = -one;
  SquareMatrix m = SquareMatrix::fromRows(
      {{m1, muMinus, muPlus}, {muMinus, muPlus, m1}, {muPlus, m1, muMinus}});
  return m.scaled(Cyclotomic(half, 5));
}

SquareMatrix X7() { return SquareMatrix::diagonal({z(1, 7), z(2, 7), z(4, 7)}); }

// With the principal square root of -7 the displayed matrix has det -1 and
// generates G8 x {+-I}; the opposite root gives the order-168 group.
SquareMatrix U() {
  const Cyclotomic a = z(4, 7) - z(3, 7);
  const Cyclotomic b = z(2, 7) - z(5, 7);
  const Cyclotomic c = z(1, 7) - z(6, 7);
  SquareMatrix m = SquareMatrix::fromRows({{a, b, c}, {b, c, a}, {c, a, b}});
  return m.scaled(-exactnum::sqrtConstant(-7).inverse());
}

// epsilon = zeta_9^2, so epsilon^3 = zeta_3^2
SquareMatrix M() {
  const Cyclotomic eps = z(2, 9);
  return SquareMatrix::diagonal({eps, eps, eps * z(3, 9)});
}

// w = zeta_3. The displayed matrix has det -1; its negative lies in SL3 and
// gives the order-1080 group.
SquareMatrix E4() {
  const Cyclotomic w = z(1, 3);
  const Cyclotomic zero = Cyclotomic::zero(3);
  SquareMatrix m = SquareMatrix::fromRows(
      {{Cyclotomic::one(3), zero, zero}, {zero, zero, -w}, {zero, -(w * w), zero}});
  return m.scaled(-Cyclotomic::one(3));
}

}  // namespace named

std::vector<SquareMatrix> generators(const GroupSpec& spec) {
  using namespace named;
  switch (spec.kind) {
    case Kind::Hmn:
      if (spec.m < 1 || spec.n < 1) raise(ErrorCode::InvalidParameter, "m, n must be >= 1");
      return common(hmnGens(spec.m, spec.n));
    case Kind::Gm3:
      if (spec.m < 1) raise(ErrorCode::InvalidParameter, "m must be >= 1");
      return common(concat(hmnGens(spec.m, spec.m), {T()}));
    case Kind::Gm6:
      if (spec.m < 1) raise(ErrorCode::InvalidParameter, "m must be >= 1");
      return common(concat(hmnGens(spec.m, spec.m), {T(), R()}));
    case Kind::SL2:
      if (spec.alpha < 1) raise(ErrorCode::InvalidParameter, "alpha order must be >= 1");
      if ((spec.sl2 == SL2Type::Cyclic || spec.sl2 == SL2Type::BinaryDihedral) && spec.k < 1) {
        raise(ErrorCode::InvalidParameter, "k must be >= 1");
      }
      return common(sl2Embedded(spec));
    case Kind::G5: return common({T(), S(), V()});
    case Kind::G6: return common({T(), S(), V(), K()});
    case Kind::G7: return common({T(), E2(), E3()});
    case Kind::G8: return common({T(), X7(), U()});
    case Kind::G9: return common({T(), E2(), E3(), W()});
    case Kind::G10: return common({T(), X7(), U(), W()});
    case Kind::G11: return common({T(), S(), V(), M()});
    case Kind::G12: return common({T(), E2(), E3(), E4()});
  }
  raise(ErrorCode::InvalidParameter, "unknown group kind");
}

Profile expectedProfile(const GroupSpec& spec) {
  Profile p;
  auto setDims = [&](std::vector<long> dims) {
    std::size_t order = 0;
    for (long d : dims) order += static_cast<std::size_t>(d * d);
    p.expectedDimMultiset = std::move(dims);
    p.expectedClassCount = p.expectedDimMultiset->size();
    if (p.expectedOrder && *p.expectedOrder != order) {
      raise(ErrorCode::Internal, "profile dims do not sum to the order for " + formatSpec(spec));
    }
    p.expectedOrder = order;
  };
  const long m = spec.m;
  switch (spec.kind) {
    case Kind::Hmn:
      p.expectedOrder = static_cast<std::size_t>(spec.m * spec.n);
      setDims(repeatDims({{1, spec.m * spec.n}}));
      break;
    case Kind::Gm3:
      p.expectedOrder = static_cast<std::size_t>(3 * m * m);
      if (m % 3 == 0) {
        setDims(repeatDims({{1, 9}, {3, (m * m - 3) / 3}}));
        p.notes.push_back("3 | m: nine 1-dim and (m^2-3)/3 3-dim irreps");
      } else {
        setDims(repeatDims({{1, 3}, {3, (m * m - 1) / 3}}));
        p.notes.push_back("3 does not divide m: three 1-dim and (m^2-1)/3 3-dim irreps");
      }
      break;
    case Kind::Gm6:
      p.expectedOrder = static_cast<std::size_t>(6 * m * m);
      p.notes.push_back("R taken with a = b = c = -1");
      if (m % 3 == 0) {
        setDims(repeatDims({{1, 2}, {2, 4}, {3, 2 * (m - 1)}, {6, (m * m - 3 * m) / 6}}));
      } else {
        setDims(repeatDims({{1, 2}, {2, 1}, {3, 2 * (m - 1)}, {6, (m * m - 3 * m + 2) / 6}}));
      }
      break;
    case Kind::SL2: {
      if (spec.alpha != 1) {
        p.notes.push_back("alpha != 1: group generated by the embedded generators; order not fixed");
        break;
      }
      switch (spec.sl2) {
        case SL2Type::Cyclic: setDims(repeatDims({{1, spec.k}})); break;
        case SL2Type::BinaryDihedral:
          setDims(spec.k == 1 ? repeatDims({{1, 4}}) : repeatDims({{1, 4}, {2, spec.k - 1}}));
          break;
        case SL2Type::Tetrahedral: setDims(repeatDims({{1, 3}, {2, 3}, {3, 1}})); break;
        case SL2Type::Octahedral: setDims(repeatDims({{1, 2}, {2, 3}, {3, 2}, {4, 1}})); break;
        case SL2Type::Icosahedral:
          setDims(repeatDims({{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}}));
          break;
      }
      break;
    }
    case Kind::G5:
      p.expectedOrder = 108;
      setDims(repeatDims({{1, 4}, {3, 8}, {4, 2}}));
      p.notes.push_back("the two remaining dims are forced by 108 - 4 - 72 = 2 * 4^2");
      break;
    case Kind::G6:
      p.expectedOrder = 216;
      setDims(repeatDims({{1, 4}, {2, 1}, {3, 8}, {6, 2}, {8, 1}}));
      break;
    case Kind::G7:
      p.expectedOrder = 60;
      setDims(repeatDims({{1, 1}, {3, 2}, {4, 1}, {5, 1}}));
      break;
    case Kind::G8:
      p.expectedOrder = 168;
      setDims(repeatDims({{1, 1}, {3, 2}, {6, 1}, {7, 1}, {8, 1}}));
      p.notes.push_back("U scaled by the square root of -7 that puts it in SL3");
      break;
    case Kind::G9:
      p.expectedOrder = 180;
      setDims(repeatDims({{1, 3}, {3, 6}, {4, 3}, {5, 3}}));
      p.notes.push_back("G7 x <W>");
      break;
    case Kind::G10:
      p.expectedOrder = 504;
      setDims(repeatDims({{1, 3}, {3, 6}, {6, 3}, {7, 3}, {8, 3}}));
      p.notes.push_back("G8 x <W>");
      break;
    case Kind::G11:
      p.expectedOrder = 648;
      setDims(repeatDims({{1, 3}, {2, 3}, {3, 7}, {6, 6}, {8, 3}, {9, 2}}));
      p.notes.push_back("epsilon = zeta_9^2");
      break;
    case Kind::G12:
      p.expectedOrder = 1080;
      setDims(repeatDims({{1, 1}, {3, 4}, {5, 2}, {6, 2}, {8, 2}, {9, 3}, {10, 1}, {15, 2}}));
      p.notes.push_back("w = zeta_3; E4 negated so that det E4 = 1");
      break;
  }
  return p;
}

FiniteMatrixGroup buildGroup(const GroupSpec& spec, std::size_t maxOrder) {
  const auto gens = generators(spec);
  FiniteMatrixGroup g = FiniteMatrixGroup::closure(gens, maxOrder);
  const Profile p = expectedProfile(spec);
  if (p.expectedOrder && *p.expectedOrder != g.order()) {
    raise(ErrorCode::InvalidParameter, formatSpec(spec) + " closes to order " +
                                           std::to_string(g.order()) + ", expected " +
                                           std::to_string(*p.expectedOrder));
  }
  return g;
}

}  // namespace mckay::catalog
