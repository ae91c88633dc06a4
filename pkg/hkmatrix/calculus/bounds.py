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
"""Right-hand sides of the estimates for powers of the Laplacian.

Given the dimension d, the constant C bounding the connection and n >= 1:

  laplacian_power_bound            d^n C^(2n) omega_2n
  integrated_laplacian_power_bound d^n C^(2n) omega_2n (n-1)! / (2n-1)!

where omega_2n is the 2n-th base-model coefficient. Only these values are
computed; the estimates themselves are not checked.
"""

import math
from typing import Callable, NamedTuple, Optional

from hkmatrix.series import catalog
from hkmatrix.series import generating_functions
from hkmatrix.types import common_types

Rational = common_types.Rational

# Maps m to the base-model omega_m.
OmegaSource = Callable[[int], Rational]


class BoundInput(
    NamedTuple("BoundInput", [
        ("d", int),
        ("c", Rational),
        ("n", int),
    ])):
  """Inputs of the bound calculators.

  Attributes:
    d: the dimension, >= 1.
    c: the constant C of the connection estimate, > 0.
    n: the power, >= 1.
  """
  __slots__ = ()

  def __new__(cls, d: int, c: common_types.RationalLike, n: int):
    c = common_types.ToRational(c)
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
      raise ValueError("d must be a positive integer, got {!r}".format(d))
    if c <= 0:
      raise ValueError("C must be positive, got {}".format(
          common_types.FormatRational(c)))
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
      raise ValueError("n must be a positive integer, got {!r}".format(n))
    return super(BoundInput, cls).__new__(cls, d, c, n)


def base_omega_by_series(m: int) -> Rational:
  """omega_m of the base model, read off Phi at order m."""
  phi = generating_functions.phi_from_f(catalog.base_field_data(m), m)
  return generating_functions.derivatives_at_zero(phi, m)


def laplacian_power_bound(
    inp: BoundInput, omega_source: Optional[OmegaSource] = None) -> Rational:
  """d^n C^(2n) omega_2n."""
  source = base_omega_by_series if omega_source is None else omega_source
  return (Rational(inp.d)**inp.n * inp.c**(2 * inp.n) *
          source(2 * inp.n))


def integrated_laplacian_power_bound(
    inp: BoundInput, omega_source: Optional[OmegaSource] = None) -> Rational:
  """The power bound times (n-1)! / (2n-1)!."""
  return laplacian_power_bound(inp, omega_source) * Rational(
      math.factorial(inp.n - 1), math.factorial(2 * inp.n - 1))
