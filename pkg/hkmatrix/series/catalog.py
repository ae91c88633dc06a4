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
"""Catalog of named generating functions and their field data.

Each entry pairs a generating function F with the field data f that the
inverse map is expected to recover from it:

  name       F(x)                      f(x)
  base       Phi of f = x e^x          x e^x
  zero       1                         0
  catalan    (1 - sqrt(1 - 4x)) / 2x   (1 - 4x)^(-3/2)
  bell       exp(e^x - 1)              e^x (x + 1)
  binomial   (1 + x)^alpha             alpha / (1 + x)^2
  expsin     exp(sin x)                cos x - x sin x
"""

from typing import NamedTuple, Optional

from hkmatrix.series import generating_functions
from hkmatrix.series import truncated_series as ts
from hkmatrix.types import common_types

TruncatedSeries = ts.TruncatedSeries

CATALOG_NAMES = ("base", "zero", "catalan", "bell", "binomial", "expsin")


class CatalogEntry(NamedTuple):
  """A named model: generating function F and the expected field data f."""
  name: str
  generating_function: TruncatedSeries
  field_data: TruncatedSeries


def base_field_data(order: int) -> TruncatedSeries:
  """x e^x, whose b_k = k."""
  return ts.from_egf(list(range(order + 1)), order)


def _linear(c0: int, c1: int, order: int) -> TruncatedSeries:
  return ts.constant(c0, order) + ts.monomial(c1, 1, order)


def _catalan(order: int) -> TruncatedSeries:
  # 1 - sqrt(1 - 4x) has zero constant term, so dividing by x is exact.
  root = ts.series_sqrt(_linear(1, -4, order + 1))
  numerator = ts.constant(1, order + 1) - root
  return ts.series_scale(ts.series_divide_by_x(numerator),
                         common_types.Rational(1, 2))


def catalog(name: str,
            order: int,
            alpha: Optional[common_types.RationalLike] = None) -> CatalogEntry:
  """Returns the catalog entry `name` with both series at `order`.

  Args:
    name: one of CATALOG_NAMES.
    order: the order of both returned series.
    alpha: the exponent of the binomial model; required for (and only for)
      "binomial".

  Returns:
    A CatalogEntry.

  Raises:
    ValueError: on an unknown name or a missing/unexpected alpha.
  """
  if name not in CATALOG_NAMES:
    raise ValueError("Unknown catalog model {!r}; expected one of {}".format(
        name, ", ".join(CATALOG_NAMES)))
  if name == "binomial":
    if alpha is None:
      raise ValueError("The binomial model needs alpha")
    alpha = common_types.ToRational(alpha)
  elif alpha is not None:
    raise ValueError("alpha only applies to the binomial model, not {!r}"
                     .format(name))

  if name == "base":
    f = base_field_data(order)
    gf = generating_functions.phi_from_f(f, order)
  elif name == "zero":
    f = ts.constant(0, order)
    gf = ts.constant(1, order)
  elif name == "catalan":
    gf = _catalan(order)
    f = ts.series_pow_alpha(_linear(1, -4, order),
                            common_types.Rational(-3, 2))
  elif name == "bell":
    exp_x = ts.series_exp_x(order)
    gf = ts.series_exp(exp_x - 1)
    f = ts.series_mul(exp_x, _linear(1, 1, order))
  elif name == "binomial":
    one_plus_x = _linear(1, 1, order)
    gf = ts.series_pow_alpha(one_plus_x, alpha)
    f = ts.series_scale(ts.series_pow_alpha(one_plus_x, -2), alpha)
  else:
    sin = ts.series_sin(order)
    gf = ts.series_exp(sin)
    f = ts.series_cos(order) - ts.series_mul(ts.x_series(order), sin)
  return CatalogEntry(name, gf, f)
