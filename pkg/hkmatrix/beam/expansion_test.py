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
"""Tests for hkmatrix.beam.expansion."""

import apache_beam as beam
from apache_beam.testing import util as beam_test_util
from hkmatrix.beam import expansion
from hkmatrix.beam import test_helpers
from hkmatrix.matrix import matrix_state
from hkmatrix.matrix import operators
from hkmatrix.matrix import weights
from hkmatrix.types import common_types

from absl.testing import absltest
from absl.testing import parameterized

R = common_types.Rational
_UNIT_TERMS = [(matrix_state.UNIT, R(1))]


class ExpansionTest(parameterized.TestCase):

  @parameterized.named_parameters(
      dict(testcase_name="zero_steps", n=0),
      dict(testcase_name="one_step", n=1),
      dict(testcase_name="five_steps", n=5),
  )
  def testMatchesSerialExpansion(self, n):
    expected = expansion.WeightedSumToTerms(operators.expand_operator_sum(n))
    with beam.Pipeline(**test_helpers.make_test_beam_pipeline_kwargs()) as p:
      result = (
          p | beam.Create(_UNIT_TERMS)
          | expansion.ExpandOperatorSum(n))
      beam_test_util.assert_that(result, beam_test_util.equal_to(expected))

  def testFromGeneralWeightedSum(self):
    init = matrix_state.WeightedSum.from_terms([
        (matrix_state.make_state([(1, 2)]), R(1, 2)),
        (matrix_state.make_state([(0, 1), (2, 3)]), R(-3)),
    ])
    expected = operators.expand_operator_sum(3, init)
    with beam.Pipeline(**test_helpers.make_test_beam_pipeline_kwargs()) as p:
      result = (
          p | beam.Create(expansion.WeightedSumToTerms(init))
          | expansion.ExpandOperatorSum(3))
      beam_test_util.assert_that(result,
                                 test_helpers.weighted_sum_equal_to(expected))

  def testOmegaFromStates(self):
    w = weights.WeightSeq.base()
    with beam.Pipeline(**test_helpers.make_test_beam_pipeline_kwargs()) as p:
      result = (
          p | beam.Create(_UNIT_TERMS)
          | expansion.ExpandOperatorSum(4)
          | expansion.OmegaFromStates(w, scale=2))
      beam_test_util.assert_that(result, beam_test_util.equal_to([R(3)]))

  def testStateCounters(self):
    with beam.Pipeline(**test_helpers.make_test_beam_pipeline_kwargs()) as p:
      _ = (
          p | beam.Create(_UNIT_TERMS)
          | expansion.ExpandOperatorSum(2, telemetry_descriptors=["test"]))
    metrics = p.run().metrics()
    counter = metrics.query(
        beam.metrics.metric.MetricsFilter().with_name(
            "states_step_2"))["counters"]
    self.assertLen(counter, 1)
    self.assertEqual(2, counter[0].committed)
    self.assertEqual("hkmatrix.expansion.test", counter[0].key.metric.namespace)

  def testComputeOmega(self):
    self.assertEqual(
        operators.omega_n(5, weights.WeightSeq.base()),
        expansion.ComputeOmega(5, weights.WeightSeq.base()))

  def testOmegaSequence(self):
    w = weights.WeightSeq.base()
    values = operators.omega_sequence(4, w)
    self.assertEqual([1, 0, R(1, 2), R(2, 3), R(3, 2)], values)
    expected = [(k, len(operators.expand_operator_sum(k)), values[k])
                for k in range(5)]
    with beam.Pipeline(**test_helpers.make_test_beam_pipeline_kwargs()) as p:
      result = (
          p | beam.Create(_UNIT_TERMS)
          | expansion.OmegaSequence(4, w))
      beam_test_util.assert_that(result, beam_test_util.equal_to(expected))

  def testComputeOmegaSequence(self):
    w = weights.WeightSeq.from_coefficients([1, 1, 2, 6, 24, 120])
    self.assertEqual(
        operators.omega_sequence(5, w, scale=3),
        expansion.ComputeOmegaSequence(
            5, w, scale=3,
            pipeline_kwargs=test_helpers.make_test_beam_pipeline_kwargs()))

  def testComputeOmegaSequenceBudget(self):
    with self.assertRaises(operators.ExpansionBudgetExceededError) as cm:
      expansion.ComputeOmegaSequence(
          6, weights.WeightSeq.base(), budget=2,
          pipeline_kwargs=test_helpers.make_test_beam_pipeline_kwargs())
    self.assertEqual(2, cm.exception.budget)
    self.assertGreater(cm.exception.num_states, 2)

  def testTermsRoundTrip(self):
    ws = operators.expand_operator_sum(3)
    self.assertEqual(
        ws, expansion.TermsToWeightedSum(expansion.WeightedSumToTerms(ws)))

  def testNegativeSteps(self):
    with self.assertRaises(ValueError):
      with beam.Pipeline() as p:
        _ = p | beam.Create(_UNIT_TERMS) | expansion.ExpandOperatorSum(-1)


if __name__ == "__main__":
  absltest.main()
