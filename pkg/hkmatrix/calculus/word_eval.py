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
"""Evaluates operator words on a generating function.

With g = (ln Phi)', A acts as h -> g h and B as h -> h' - g h. A word is
applied to Phi right to left and evaluated at 0, which equals Upsilon of the
word applied to the unit state for the weights encoded by Phi. Since
A + B is plain differentiation, (A + B)^n Phi at 0 is the n-th derivative.
"""

from absl import logging

from hkmatrix.calculus import operator_word
from hkmatrix.series import truncated_series as ts
from hkmatrix.types import common_types

OperatorWord = operator_word.OperatorWord
Rational = common_types.Rational
TruncatedSeries = ts.TruncatedSeries

# Order headroom kept beyond two per letter.
_ORDER_SLACK = 8


def required_order(word: OperatorWord) -> int:
  return 2 * len(word) + _ORDER_SLACK


def _check_phi(phi: TruncatedSeries, order: int) -> None:
  if phi.constant_term() != 1:
    raise ValueError("Phi(0) must be 1, got {}".format(
        common_types.FormatRational(phi.constant_term())))
  if phi.order < order:
    raise ValueError("Phi is known to order {} but {} is required".format(
        phi.order, order))


def _connection(phi: TruncatedSeries) -> TruncatedSeries:
  return ts.series_derive(ts.series_log(phi))


def _apply_a(g: TruncatedSeries, h: TruncatedSeries) -> TruncatedSeries:
  return ts.series_mul(g, h, truncate_to_min=True)


def _apply_b(g: TruncatedSeries, h: TruncatedSeries) -> TruncatedSeries:
  return ts.series_add(ts.series_derive(h),
                       -ts.series_mul(g, h, truncate_to_min=True),
                       truncate_to_min=True)


def eval_word(word: OperatorWord, phi: TruncatedSeries) -> Rational:
  """Applies `word` to Phi and returns the constant term.

  Args:
    word: the operator word.
    phi: the generating function with Phi(0) = 1, known to order at least
      2 * len(word) + 8.

  Returns:
    The exact value at 0.

  Raises:
    ValueError: if Phi(0) != 1 or the order is insufficient.
  """
  _check_phi(phi, required_order(word))
  g = _connection(phi)
  h = phi
  for letter in reversed(word.letters):
    h = _apply_a(g, h) if letter == "A" else _apply_b(g, h)
  return h.constant_term()


def omega_by_calculus(n: int, phi: TruncatedSeries) -> Rational:
  """(A + B)^n applied to Phi, at 0; needs Phi to order >= n."""
  if n < 0:
    raise ValueError("n must be nonnegative, got {}".format(n))
  _check_phi(phi, n)
  g = _connection(phi) if phi.order >= 1 else None
  h = phi
  for _ in range(n):
    h = ts.series_add(_apply_a(g, h), _apply_b(g, h), truncate_to_min=True)
  logging.vlog(1, "omega_%d by operator calculus", n)
  return h.constant_term()


def sum_over_words(n: int, phi: TruncatedSeries) -> Rational:
  """Sum of eval_word over all 2^n words of length n."""
  return sum((eval_word(w, phi) for w in operator_word.all_words(n)),
             Rational(0))
