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
"""Tests for hkmatrix.series.catalog."""

import fractions
import math

from absl.testing import absltest
from absl.testing import parameterized
from hkmatrix.series import catalog
from hkmatrix.series import generating_functions as gf_lib
from hkmatrix.series import truncated_series as ts
from hkmatrix.test_util import test_case
import sympy

R = fractions.Fraction
_X = sympy.Symbol("x")
_ORDER = 12


def _SympySeries(expr, order: int) -> ts.TruncatedSeries:
  """Independent expansion of `expr` around 0 up to x^order."""
  expansion = sympy.series(expr, _X, 0, order + 1).removeO()
  coeffs = []
  for k in range(order + 1):
    c = sympy.Rational(expansion.coeff(_X, k))
    coeffs.append(R(int(c.p), int(c.q)))
  return ts.TruncatedSeries(coeffs, order)


_SYMPY_GENERATING_FUNCTIONS = [
    dict(testcase_name="bell", name="bell", alpha=None,
         expr=sympy.exp(sympy.exp(_X) - 1)),
    dict(testcase_name="catalan", name="catalan", alpha=None,
         expr=(1 - sympy.sqrt(1 - 4 * _X)) / (2 * _X)),
    dict(testcase_name="expsin", name="expsin", alpha=None,
         expr=sympy.exp(sympy.sin(_X))),
    dict(testcase_name="binomial_half", name="binomial", alpha=R(1, 2),
         expr=sympy.sqrt(1 + _X)),
    dict(testcase_name="binomial_minus_one", name="binomial", alpha=R(-1),
         expr=1 / (1 + _X)),
]

_INVERTIBLE_MODELS = [
    dict(testcase_name="base", name="base", alpha=None),
    dict(testcase_name="zero", name="zero", alpha=None),
    dict(testcase_name="catalan", name="catalan", alpha=None),
    dict(testcase_name="bell", name="bell", alpha=None),
    dict(testcase_name="expsin", name="expsin", alpha=None),
    dict(testcase_name="binomial_1", name="binomial", alpha=R(1)),
    dict(testcase_name="binomial_minus_1", name="binomial", alpha=R(-1)),
    dict(testcase_name="binomial_half", name="binomial", alpha=R(1, 2)),
    dict(testcase_name="binomial_3", name="binomial", alpha=R(3)),
]


class CatalogTest(test_case.HkMatrixTestCase):

  @parameterized.named_parameters(*_SYMPY_GENERATING_FUNCTIONS)
  def testGeneratingFunctionMatchesSympy(self, name, alpha, expr):
    entry = catalog.catalog(name, _ORDER, alpha)
    self.assertSeriesEqual(_SympySeries(expr, _ORDER),
                           entry.generating_function)

  def testFieldDataMatchesSympy(self):
    self.assertSeriesEqual(
        _SympySeries(sympy.cos(_X) - _X * sympy.sin(_X), _ORDER),
        catalog.catalog("expsin", _ORDER).field_data)
    self.assertSeriesEqual(
        _SympySeries((1 - 4 * _X)**sympy.Rational(-3, 2), _ORDER),
        catalog.catalog("catalan", _ORDER).field_data)

  @parameterized.named_parameters(*_INVERTIBLE_MODELS)
  def testInverseReproducesFieldData(self, name, alpha):
    entry = catalog.catalog(name, _ORDER + 2, alpha)
    f = gf_lib.f_from_phi(entry.generating_function)
    self.assertSeriesEqual(entry.field_data.truncate(_ORDER), f)

  def testCatalanFieldData(self):
    f = catalog.catalog("catalan", 3).field_data
    self.assertSeriesEqual(ts.TruncatedSeries([1, 6, 30, 140]), f)

  def testBellFieldDataWeights(self):
    f = catalog.catalog("bell", 8).field_data
    self.assertSequenceEqual(list(range(1, 10)), ts.to_egf(f))

  def testBinomialFieldData(self):
    f = catalog.catalog("binomial", 3, "3").field_data
    self.assertSeriesEqual(ts.TruncatedSeries([3, -6, 9, -12]), f)

  def testBellNumbers(self):
    gf = catalog.catalog("bell", 8).generating_function
    self.assertSequenceEqual(
        [1, 1, 2, 5, 15, 52, 203, 877, 4140],
        [gf_lib.derivatives_at_zero(gf, n) for n in range(9)])

  def testCatalanNumbers(self):
    gf = catalog.catalog("catalan", 6).generating_function
    self.assertSeriesEqual(ts.TruncatedSeries([1, 1, 2, 5, 14, 42, 132]), gf)
    self.assertEqual(math.factorial(5) * 42, gf_lib.derivatives_at_zero(gf, 5))

  def testBaseEntryIsForwardImage(self):
    entry = catalog.catalog("base", 6)
    self.assertSeriesEqual(gf_lib.phi_from_f(entry.field_data, 6),
                           entry.generating_function)

  def testZeroEntry(self):
    entry = catalog.catalog("zero", 3)
    self.assertSeriesEqual(ts.constant(1, 3), entry.generating_function)
    self.assertSeriesEqual(ts.constant(0, 3), entry.field_data)

  def testOrderZero(self):
    for name in ("base", "zero", "catalan", "bell", "expsin"):
      self.assertEqual(0, catalog.catalog(name, 0).generating_function.order)

  @parameterized.named_parameters(
      dict(testcase_name="unknown_name", name="fibonacci", alpha=None),
      dict(testcase_name="binomial_without_alpha", name="binomial",
           alpha=None),
      dict(testcase_name="alpha_on_bell", name="bell", alpha=R(1)),
  )
  def testErrors(self, name, alpha):
    with self.assertRaises(ValueError):
      catalog.catalog(name, 4, alpha)


if __name__ == "__main__":
  absltest.main()
