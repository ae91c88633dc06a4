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
"""Tests for hkmatrix.series.model_spec."""

from absl.testing import absltest
from absl.testing import parameterized
from hkmatrix.matrix import operators
from hkmatrix.matrix import weights as weights_lib
from hkmatrix.series import catalog
from hkmatrix.series import generating_functions as gf_lib
from hkmatrix.series import model_spec
from hkmatrix.series import truncated_series as ts
from hkmatrix.test_util import test_case
from hkmatrix.types import common_types

ModelSpec = model_spec.ModelSpec
R = common_types.Rational


class ModelSpecTest(test_case.HkMatrixTestCase):

  def testResolveBase(self):
    resolved = model_spec.resolve_model(ModelSpec.base(), 4)
    self.assertIsNone(resolved.weights)
    self.assertEqual(1, resolved.scale)
    self.assertEqual(0, resolved.offset)
    self.assertEqual(6, resolved.generating_function.order)
    self.assertSeriesPrefixEqual(resolved.generating_function,
                                 [1, 0, R(1, 4), R(1, 9), R(1, 16)])

  def testNamedBaseResolvesLikeBase(self):
    self.assertEqual(
        model_spec.resolve_model(ModelSpec.base(), 3),
        model_spec.resolve_model(ModelSpec.named("base"), 3))

  def testResolveFromF(self):
    resolved = model_spec.resolve_model(ModelSpec.from_f([1, 2, 3, 4]), 4)
    self.assertSequenceEqual([1, 2, 3, 4], resolved.weights)
    self.assertEqual(4, resolved.generating_function.order)
    self.assertSeriesEqual(
        gf_lib.phi_from_f(ts.from_egf([1, 2, 3, 4]), 4),
        resolved.generating_function)

  def testFromFTooShort(self):
    with self.assertRaises(ValueError):
      model_spec.resolve_model(ModelSpec.from_f([0, 1]), 5)
    with self.assertRaises(ValueError):
      ModelSpec.from_f([])

  def testResolveNamedBell(self):
    resolved = model_spec.resolve_model(ModelSpec.named("bell"), 5)
    self.assertSequenceEqual(list(range(1, 7)), resolved.weights)
    self.assertEqual(1, resolved.scale)

  def testNormalizationScale(self):
    base_phi = catalog.catalog("base", 6).generating_function
    spec = ModelSpec.from_generating_function((base_phi * 2).coeffs)
    resolved = model_spec.resolve_model(spec, 4)
    self.assertEqual(2, resolved.scale)
    self.assertEqual(0, resolved.offset)
    self.assertSeriesEqual(base_phi, resolved.generating_function)

  def testShiftCorrection(self):
    spec = ModelSpec.from_generating_function(["3", 0, 1, 0, 0, 0],
                                              shift=True)
    resolved = model_spec.resolve_model(spec, 4)
    self.assertEqual(1, resolved.scale)
    self.assertEqual(2, resolved.offset)
    values = operators.omega_sequence(
        4, weights_lib.WeightSeq.from_coefficients(resolved.weights),
        resolved.scale)
    values[0] += resolved.offset
    # omega_0 is F(0) = 3; then n! [x^n] F.
    self.assertEqual([3, 0, 2, 0, 0], values)

  def testZeroConstantTermNeedsShift(self):
    with self.assertRaises(ValueError):
      ModelSpec.from_generating_function([0, 1, 1])
    spec = ModelSpec.from_generating_function([0, 1, 0, 0], shift=True)
    resolved = model_spec.resolve_model(spec, 2)
    self.assertEqual(-1, resolved.offset)

  def testGeneratingFunctionTooShort(self):
    spec = ModelSpec.from_generating_function([1, 1, 1])
    with self.assertRaises(ValueError):
      model_spec.resolve_model(spec, 4)

  @parameterized.named_parameters(
      dict(testcase_name="unknown", name="fibonacci", alpha=None),
      dict(testcase_name="binomial_without_alpha", name="binomial",
           alpha=None),
      dict(testcase_name="alpha_on_catalan", name="catalan", alpha="1/2"),
  )
  def testNamedErrors(self, name, alpha):
    with self.assertRaises(ValueError):
      ModelSpec.named(name, alpha)

  def testNegativeResolveIndex(self):
    with self.assertRaises(ValueError):
      model_spec.resolve_model(ModelSpec.base(), -1)


if __name__ == "__main__":
  absltest.main()
