# Copyright 2023 The hkmatrix Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Truncated formal power series over the rationals.

A `TruncatedSeries` of order N stands for c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})
with exact `fractions.Fraction` coefficients. Every operation states the order
of its result; nothing is truncated silently. Binary operations insist on equal
orders unless the caller asks for truncation to the smaller one.
"""

import math
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from hkmatrix.types import common_types

Rational = common_types.Rational
_Scalar = Union[int, Rational]


class OrderMismatchError(ValueError):
  """Raised when a binary operation receives series of different orders."""


class TruncatedSeries(object):
  """An immutable power series known up to (and including) x^order."""

  __slots__ = ["_coeffs"]

  def __init__(self,
               coeffs: Iterable[common_types.RationalLike],
               order: Optional[int] = None):
    """Builds a series from its leading coefficients.

    Args:
      coeffs: coefficients of x^0, x^1, ... . May be shorter than order + 1, in
        which case the missing coefficients are zero.
      order: the truncation order N. Defaults to len(coeffs) - 1.

    Raises:
      ValueError: if the order is negative or more than order + 1 coefficients
        are given.
    """
    values = [common_types.ToRational(c) for c in coeffs]
    if order is None:
      order = len(values) - 1
    if order < 0:
      raise ValueError("Series order must be nonnegative, got {}".format(order))
    if len(values) > order + 1:
      raise ValueError(
          "Got {} coefficients for a series of order {}; truncate explicitly."
          .format(len(values), order))
    values.extend([Rational(0)] * (order + 1 - len(values)))
    self._coeffs = tuple(values)

  @property
  def order(self) -> int:
    return len(self._coeffs) - 1

  @property
  def coeffs(self) -> Tuple[Rational, ...]:
    return self._coeffs

  def __getitem__(self, k: int) -> Rational:
    if not 0 <= k <= self.order:
      raise IndexError("Coefficient x^{} is outside order {}".format(
          k, self.order))
    return self._coeffs[k]

  def __iter__(self) -> Iterator[Rational]:
    return iter(self._coeffs)

  def __len__(self) -> int:
    return len(self._coeffs)

  def constant_term(self) -> Rational:
    return self._coeffs[0]

  def truncate(self, order: int) -> "TruncatedSeries":
    """Returns the same series known only up to x^order (order <= self.order)."""
    if order > self.order:
      raise ValueError("Cannot raise the order of a series from {} to {}".format(
          self.order, order))
    return TruncatedSeries(self._coeffs[:order + 1], order)

  def __eq__(self, other) -> bool:
    if not isinstance(other, TruncatedSeries):
      return NotImplemented
    return self._coeffs == other._coeffs

  def __hash__(self) -> int:
    return hash(self._coeffs)

  def __repr__(self) -> str:
    terms = ", ".join(common_types.FormatRational(c) for c in self._coeffs)
    return "TruncatedSeries([{}], order={})".format(terms, self.order)

  def __add__(self, other) -> "TruncatedSeries":
    if isinstance(other, TruncatedSeries):
      return series_add(self, other)
    return series_add(self, constant(other, self.order))

  __radd__ = __add__

  def __neg__(self) -> "TruncatedSeries":
    return series_scale(self, -1)

  def __sub__(self, other) -> "TruncatedSeries":
    return self + (-other)

  def __rsub__(self, other) -> "TruncatedSeries":
    return (-self) + other

  def __mul__(self, other) -> "TruncatedSeries":
    if isinstance(other, TruncatedSeries):
      return series_mul(self, other)
    return series_scale(self, other)

  __rmul__ = __mul__


def _common_order(a: TruncatedSeries, b: TruncatedSeries,
                  truncate_to_min: bool) -> int:
  if a.order == b.order:
    return a.order
  if not truncate_to_min:
    raise OrderMismatchError("Series orders differ: {} vs {}".format(
        a.order, b.order))
  return min(a.order, b.order)


def constant(value: common_types.RationalLike, order: int) -> TruncatedSeries:
  """The constant series `value` at the given order."""
  return TruncatedSeries([value], order)


def monomial(coeff: common_types.RationalLike, power: int,
             order: int) -> TruncatedSeries:
  """coeff * x^power at the given order (zero if power > order)."""
  if power < 0:
    raise ValueError("Monomial power must be nonnegative, got {}".format(power))
  if power > order:
    return TruncatedSeries([], order)
  return TruncatedSeries([0] * power + [coeff], order)


def x_series(order: int) -> TruncatedSeries:
  """The series x at the given order (order >= 0)."""
  return monomial(1, 1, order)


def from_egf(b: Sequence[common_types.RationalLike],
             order: Optional[int] = None) -> TruncatedSeries:
  """Builds sum_k b_k x^k / k! from the list of b_k."""
  if order is None:
    order = len(b) - 1
  return TruncatedSeries(
      [common_types.ToRational(bk) / math.factorial(k)
       for k, bk in enumerate(b[:order + 1])], order)


def to_egf(s: TruncatedSeries) -> Tuple[Rational, ...]:
  """Returns the b_k with s = sum_k b_k x^k / k!, i.e. b_k = k! c_k."""
  return tuple(c * math.factorial(k) for k, c in enumerate(s.coeffs))


def series_add(a: TruncatedSeries,
               b: TruncatedSeries,
               truncate_to_min: bool = False) -> TruncatedSeries:
  """Coefficientwise sum; result order is the common order."""
  order = _common_order(a, b, truncate_to_min)
  return TruncatedSeries(
      [a.coeffs[k] + b.coeffs[k] for k in range(order + 1)], order)


def series_scale(a: TruncatedSeries, scalar: _Scalar) -> TruncatedSeries:
  """scalar * a, same order."""
  scalar = common_types.ToRational(scalar)
  return TruncatedSeries([scalar * c for c in a.coeffs], a.order)


def series_mul(a: TruncatedSeries,
               b: TruncatedSeries,
               truncate_to_min: bool = False) -> TruncatedSeries:
  """Cauchy product; result order is the common order."""
  order = _common_order(a, b, truncate_to_min)
  ac, bc = a.coeffs, b.coeffs
  result = []
  for n in range(order + 1):
    total = Rational(0)
    for k in range(n + 1):
      if ac[k] and bc[n - k]:
        total += ac[k] * bc[n - k]
    result.append(total)
  return TruncatedSeries(result, order)


def multiply_by_x(s: TruncatedSeries) -> TruncatedSeries:
  """x * s; the order rises by one."""
  return TruncatedSeries((0,) + s.coeffs, s.order + 1)


def series_derive(s: TruncatedSeries) -> TruncatedSeries:
  """Termwise derivative; order N - 1 (requires N >= 1)."""
  if s.order < 1:
    raise ValueError("Cannot differentiate a series of order {}".format(
        s.order))
  return TruncatedSeries([k * s.coeffs[k] for k in range(1, s.order + 1)],
                         s.order - 1)


def series_integrate(s: TruncatedSeries) -> TruncatedSeries:
  """Termwise integral from 0; order N + 1, zero constant term."""
  return TruncatedSeries(
      [0] + [c / (k + 1) for k, c in enumerate(s.coeffs)], s.order + 1)


def series_divide_by_x(s: TruncatedSeries) -> TruncatedSeries:
  """s / x; order N - 1. The constant term must vanish."""
  if s.constant_term():
    raise ValueError(
        "Cannot divide by x: constant term is {}".format(s.constant_term()))
  if s.order < 1:
    raise ValueError("Cannot divide a series of order 0 by x")
  return TruncatedSeries(s.coeffs[1:], s.order - 1)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
  """exp(s), same order. Requires s(0) = 0."""
  if s.constant_term():
    raise ValueError("exp needs a zero constant term, got {}".format(
        s.constant_term()))
  c = s.coeffs
  e = [Rational(1)]
  # E' = s' E, compared coefficientwise.
  for n in range(1, s.order + 1):
    total = Rational(0)
    for k in range(1, n + 1):
      if c[k]:
        total += k * c[k] * e[n - k]
    e.append(total / n)
  return TruncatedSeries(e, s.order)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
  """log(s), same order. Requires s(0) = 1."""
  if s.constant_term() != 1:
    raise ValueError("log needs constant term 1, got {}".format(
        s.constant_term()))
  c = s.coeffs
  logs = [Rational(0)]
  # s' = s L'.
  for n in range(1, s.order + 1):
    total = Rational(0)
    for k in range(1, n):
      if logs[k] and c[n - k]:
        total += k * logs[k] * c[n - k]
    logs.append(c[n] - total / n)
  return TruncatedSeries(logs, s.order)


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
  """1 / s, same order. Requires s(0) != 0."""
  head = s.constant_term()
  if not head:
    raise ValueError("Cannot invert a series with zero constant term")
  c = s.coeffs
  r = [1 / head]
  for n in range(1, s.order + 1):
    total = Rational(0)
    for k in range(1, n + 1):
      if c[k]:
        total += c[k] * r[n - k]
    r.append(-total / head)
  return TruncatedSeries(r, s.order)


def series_pow_alpha(s: TruncatedSeries,
                     alpha: common_types.RationalLike) -> TruncatedSeries:
  """s^alpha = exp(alpha log s), same order. Requires s(0) = 1."""
  if s.constant_term() != 1:
    raise ValueError("pow_alpha needs constant term 1, got {}".format(
        s.constant_term()))
  return series_exp(series_scale(series_log(s), common_types.ToRational(alpha)))


def series_sqrt(s: TruncatedSeries) -> TruncatedSeries:
  """Principal square root (constant term 1), same order."""
  return series_pow_alpha(s, Rational(1, 2))


def series_exp_x(order: int) -> TruncatedSeries:
  """e^x at the given order."""
  return TruncatedSeries(
      [Rational(1, math.factorial(k)) for k in range(order + 1)], order)


def series_sin(order: int) -> TruncatedSeries:
  """sin x at the given order."""
  coeffs = []
  for k in range(order + 1):
    if k % 2:
      coeffs.append(Rational((-1)**(k // 2), math.factorial(k)))
    else:
      coeffs.append(Rational(0))
  return TruncatedSeries(coeffs, order)


def series_cos(order: int) -> TruncatedSeries:
  """cos x at the given order."""
  coeffs = []
  for k in range(order + 1):
    if k % 2:
      coeffs.append(Rational(0))
    else:
      coeffs.append(Rational((-1)**(k // 2), math.factorial(k)))
  return TruncatedSeries(coeffs, order)
