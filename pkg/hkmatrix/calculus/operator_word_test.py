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
"""Tests for hkmatrix.calculus.operator_word."""

from absl.testing import absltest
from absl.testing import parameterized
from hkmatrix.calculus import operator_word
from hkmatrix.matrix import operators

OperatorWord = operator_word.OperatorWord


class OperatorWordTest(parameterized.TestCase):

  @parameterized.named_parameters(
      dict(testcase_name="runs", text="A^2BA", letters=("A", "A", "B", "A")),
      dict(testcase_name="spaces", text=" B A ^ 3 ", letters=("B", "A", "A",
                                                             "A")),
      dict(testcase_name="zero_exponent", text="BA^0A", letters=("B", "A")),
      dict(testcase_name="empty", text="", letters=()),
      dict(testcase_name="one", text="1", letters=()),
  )
  def testParse(self, text, letters):
    self.assertEqual(letters, OperatorWord.parse(text).letters)

  @parameterized.named_parameters(
      dict(testcase_name="unknown_letter", text="AC"),
      dict(testcase_name="dangling_caret", text="A^"),
      dict(testcase_name="negative_exponent", text="A^-1"),
      dict(testcase_name="s_letter", text="S(0,1)"),
  )
  def testParseErrors(self, text):
    with self.assertRaises(ValueError):
      OperatorWord.parse(text)

  def testRunsAndStr(self):
    word = OperatorWord.from_runs([("A", 2), ("B", 1), ("B", 2), ("A", 1)])
    self.assertEqual([("A", 2), ("B", 3), ("A", 1)], word.runs())
    self.assertEqual("A^2B^3A", str(word))
    self.assertEqual("1", str(OperatorWord()))
    self.assertLen(word, 6)
    self.assertEqual(word, OperatorWord.parse(str(word)))
    with self.assertRaises(ValueError):
      OperatorWord.from_runs([("A", -1)])
    with self.assertRaises(ValueError):
      OperatorWord(["C"])

  def testToOperatorLetters(self):
    self.assertEqual([operators.B, operators.A],
                     OperatorWord.parse("BA").to_operator_letters())

  def testAllWords(self):
    words = list(operator_word.all_words(3))
    self.assertLen(words, 8)
    self.assertLen(set(words), 8)
    self.assertEqual([OperatorWord()], list(operator_word.all_words(0)))
    with self.assertRaises(ValueError):
      list(operator_word.all_words(-1))


if __name__ == "__main__":
  absltest.main()
