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
"""Tests for hkmatrix.coders.state_coder."""

from absl.testing import absltest
from absl.testing import parameterized
from hkmatrix.coders import state_coder
from hkmatrix.matrix import matrix_state
from hkmatrix.matrix import operators
from hkmatrix.types import common_types

R = common_types.Rational


class StateCoderTest(parameterized.TestCase):

  def testEncodeIsSorted(self):
    ws = operators.expand_operator_sum(2)
    self.assertEqual(
        '[{"cols": [[0, 2], [0, 1]], "mult": "2"}, '
        '{"cols": [[1, 2]], "mult": "1"}]',
        state_coder.encode_weighted_sum(ws))

  def testUnitAndFractions(self):
    ws = matrix_state.WeightedSum.from_terms([
        (matrix_state.UNIT, R(-1, 3)),
        (matrix_state.make_state([(2, 5)]), R(7)),
    ])
    text = state_coder.encode_weighted_sum(ws)
    self.assertEqual(
        '[{"cols": [], "mult": "-1/3"}, {"cols": [[2, 5]], "mult": "7"}]',
        text)
    self.assertEqual(ws, state_coder.decode_weighted_sum(text))

  def testDecodeMergesRepeatedStates(self):
    ws = state_coder.decode_weighted_sum(
        '[{"cols": [[0, 1]], "mult": "1/2"}, {"cols": [[0, 1]], "mult": 1}]')
    self.assertEqual(R(3, 2),
                     ws.multiplicity(matrix_state.make_state([(0, 1)])))

  def testDecodeErrors(self):
    for text in ('{"cols": []}', '[{"cols": [], "mult": "1", "x": 1}]',
                 '[{"cols": [[0, 0]], "mult": "1"}]',
                 '[{"cols": [], "mult": 0.5}]'):
      with self.assertRaises(ValueError, msg=text):
        state_coder.decode_weighted_sum(text)

  @parameterized.named_parameters(
      dict(testcase_name="short_pair", cols="[[1]]"),
      dict(testcase_name="long_pair", cols="[[1, 2, 3]]"),
      dict(testcase_name="bare_ints", cols="[1, 2]"),
      dict(testcase_name="not_a_list", cols="5"),
      dict(testcase_name="bool_entry", cols="[[true, 1]]"),
      dict(testcase_name="string_entry", cols='[["1", 2]]'),
  )
  def testDecodeRejectsMalformedColumns(self, cols):
    text = '[{"cols": ' + cols + ', "mult": "1"}]'
    with self.assertRaisesRegex(ValueError, "Term 0"):
      state_coder.decode_weighted_sum(text)


if __name__ == "__main__":
  absltest.main()
