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
"""Tests for hkmatrix.bialgebra.axiom_suite."""

import json

from absl.testing import absltest
from hkmatrix.bialgebra import axiom_suite
from hkmatrix.matrix import weights

_SKIPPED_FOR_NEGATIVE_WEIGHTS = frozenset([
    "seminorm1.triangle",
    "seminorm_v.triangle",
    "seminorm_t.triangle",
    "seminorm_t.kernel",
])


class AxiomSuiteTest(absltest.TestCase):

  def testBaseWeightsPass(self):
    report = axiom_suite.run_axiom_suite(trials=500, seed=7)
    self.assertTrue(axiom_suite.report_passed(report),
                    axiom_suite.format_report(report))
    for law, entry in report.items():
      self.assertEqual(500, entry["trials"], law)
      self.assertNotIn("skipped", entry, law)
    self.assertCountEqual(axiom_suite.law_names(), report)

  def testLawCoverage(self):
    names = set(axiom_suite.law_names())
    for monoid in ("G1", "G2", "V"):
      for law in ("monoid_associativity", "monoid_unit", "algebra_unit",
                  "coassociativity", "counit", "cocommutativity",
                  "delta_multiplicative", "eps_multiplicative"):
        self.assertIn("{}.{}".format(monoid, law), names)
    self.assertIn("seminorm_t.kernel", names)
    self.assertIn("tensor.operator_correspondence", names)

  def testNegativeWeightsSkipSeminormLaws(self):
    w = weights.WeightSeq.from_coefficients([1, -2, 3, -1, 2, 5])
    report = axiom_suite.run_axiom_suite(trials=50, seed=3, weights=w)
    self.assertTrue(axiom_suite.report_passed(report))
    for law, entry in report.items():
      if law in _SKIPPED_FOR_NEGATIVE_WEIGHTS:
        self.assertEqual(0, entry["trials"], law)
        self.assertIn("skipped", entry, law)
      else:
        self.assertEqual(50, entry["trials"], law)
    self.assertEqual(0, report["seminorm2.triangle"]["failures"])

  def testDeterministic(self):
    first = axiom_suite.format_report(
        axiom_suite.run_axiom_suite(trials=20, seed=11))
    second = axiom_suite.format_report(
        axiom_suite.run_axiom_suite(trials=20, seed=11))
    self.assertEqual(first, second)
    self.assertIsInstance(json.loads(first), dict)

  def testShortWeightLists(self):
    w = weights.WeightSeq.from_coefficients([0, 1])
    report = axiom_suite.run_axiom_suite(trials=10, seed=0, weights=w)
    self.assertTrue(axiom_suite.report_passed(report))

  def testArgumentValidation(self):
    with self.assertRaises(ValueError):
      axiom_suite.run_axiom_suite(trials=0)
    with self.assertRaises(ValueError):
      axiom_suite.run_axiom_suite(trials=1, seed=-1)
    with self.assertRaises(ValueError):
      axiom_suite.run_axiom_suite(
          trials=1, weights=weights.WeightSeq.from_coefficients([]))


if __name__ == "__main__":
  absltest.main()
