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
"""Forward and inverse maps between field data f and generating functions.

The field data f(x) = sum_k b_k x^k / k! determines the ordered exponential

  Phi(x) = exp( int_0^x dt/t int_0^t f(s) ds ),

and conversely f = d/dx( x (ln Phi)' ). Phi(0) = 1 always, so an arbitrary
generating function F is first brought to that form either by dividing by F(0)
or by shifting its constant term to 1.
"""

import math
from typing import Tuple

from absl import logging
from hkmatrix.series import truncated_series as ts
from hkmatrix.types import common_types

Rational = common_types.Rational
TruncatedSeries = ts.TruncatedSeries


def log_phi_from_f(f: TruncatedSeries, order: int) -> TruncatedSeries:
  """Returns ln Phi = int_0^x dt/t int_0^t f, at the given order.

  Args:
    f: the field data. Must be known to order >= order - 1.
    order: the order of the result (>= 0).

  Returns:
    ln Phi at `order`; its constant term is zero.

  Raises:
    ValueError: if f is not known to a high enough order.
  """
  if order < 0:
    raise ValueError("Order must be nonnegative, got {}".format(order))
  if order == 0:
    return ts.constant(0, 0)
  if f.order < order - 1:
    raise ValueError("f is known to order {} but order {} needs {}".format(
        f.order, order, order - 1))
  inner = ts.series_integrate(f.truncate(order - 1))
  return ts.series_integrate(ts.series_divide_by_x(inner))


def phi_from_f(f: TruncatedSeries, order: int) -> TruncatedSeries:
  """Builds the generating function Phi from f, at the given order."""
  return ts.series_exp(log_phi_from_f(f, order))


def connection_potential(phi: TruncatedSeries) -> TruncatedSeries:
  """Returns w = x (ln Phi)', order N; w' = f."""
  _check_unit_constant_term(phi)
  return ts.multiply_by_x(ts.series_derive(ts.series_log(phi))).truncate(
      phi.order)


def _check_unit_constant_term(phi: TruncatedSeries) -> None:
  if phi.constant_term() != 1:
    raise ValueError(
        "Generating function must satisfy Phi(0) = 1, got Phi(0) = {}".format(
            phi.constant_term()))


def _f_from_quotient(phi: TruncatedSeries) -> TruncatedSeries:
  """[Phi Phi' + x (Phi Phi'' - Phi'^2)] / Phi^2 at order N - 2."""
  order = phi.order - 2
  d1 = ts.series_derive(phi)
  d2 = ts.series_derive(d1)
  p = phi.truncate(order)
  d1 = d1.truncate(order)
  bracket = ts.series_mul(p, d2) - ts.series_mul(d1, d1)
  numerator = ts.series_mul(p, d1) + ts.multiply_by_x(bracket).truncate(order)
  return ts.series_mul(numerator, ts.series_reciprocal(ts.series_mul(p, p)))


def _f_from_potential(phi: TruncatedSeries) -> TruncatedSeries:
  """d/dx( x (ln Phi)' ) at order N - 2."""
  return ts.series_derive(connection_potential(phi)).truncate(phi.order - 2)


def f_from_phi(phi: TruncatedSeries) -> TruncatedSeries:
  """Recovers the field data f from Phi, at order N - 2.

  Both the quotient form and the potential form are evaluated and must agree
  exactly.

  Args:
    phi: the generating function, Phi(0) = 1, order N >= 2.

  Returns:
    f at order N - 2.

  Raises:
    ValueError: if Phi(0) != 1 or N < 2.
    RuntimeError: if the two forms disagree.
  """
  _check_unit_constant_term(phi)
  if phi.order < 2:
    raise ValueError(
        "Inverting needs Phi to order >= 2, got {}".format(phi.order))
  by_quotient = _f_from_quotient(phi)
  by_potential = _f_from_potential(phi)
  if by_quotient != by_potential:
    raise RuntimeError(
        "Inverse forms disagree: quotient {!r} vs potential {!r}".format(
            by_quotient, by_potential))
  return by_quotient


def normalize_generating_function(
    gf: TruncatedSeries) -> Tuple[TruncatedSeries, Rational]:
  """Returns (F / F(0), F(0)); the scalar replaces the initial datum 1.

  Raises:
    ValueError: if F(0) = 0, in which case the shift must be used instead.
  """
  head = gf.constant_term()
  if not head:
    raise ValueError("F(0) = 0 cannot be normalized; use the shift mode")
  return ts.series_scale(gf, 1 / head), head


def shift_generating_function(
    gf: TruncatedSeries) -> Tuple[TruncatedSeries, Rational]:
  """Returns (F - F(0) + 1, F(0)).

  Downstream, omega_0 gains the correction F(0) - 1.
  """
  head = gf.constant_term()
  if head != 1:
    logging.info("Shifting generating function constant term %s to 1",
                 common_types.FormatRational(head))
  return gf - head + 1, head


def derivatives_at_zero(phi: TruncatedSeries, n: int) -> Rational:
  """Returns the n-th derivative at zero, n! c_n."""
  if not 0 <= n <= phi.order:
    raise ValueError("Derivative {} exceeds series order {}".format(
        n, phi.order))
  return phi.coeffs[n] * math.factorial(n)
