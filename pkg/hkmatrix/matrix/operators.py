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
"""Operators A, B, S and the functional Upsilon on matrix states.

For a state with n columns:

  A inserts a column with s = 0 at each of the n + 1 positions. Columns to the
    left of the insertion point get k + 1. Inserted before column j, the new
    column takes k_j + 1; appended at the end it takes k = 1.
  B has one term per column j: s_j + 1, and k_i + 1 for every i <= j.
  S(kk, l) prepends the column (kk, l).

A on the unit state gives [(0, 1)]; B on the unit state gives nothing.
Upsilon maps a state to prod_i b_{s_i} / k_i, with the empty product 1.

Words are read like operator products: the rightmost letter acts first, so
"BA" means B(A(state)). After every letter identical states are merged.
"""

import re
from typing import Callable, Dict, Iterable, List, NamedTuple, Sequence, Tuple

from absl import logging
from hkmatrix.matrix import matrix_state
from hkmatrix.matrix import weights as weights_lib
from hkmatrix.types import common_types

Column = matrix_state.Column
MatrixState = matrix_state.MatrixState
Rational = common_types.Rational
WeightedSum = matrix_state.WeightedSum
WeightSeq = weights_lib.WeightSeq

# Default cap on the number of distinct states after any single step.
_DEFAULT_STATE_BUDGET = 5_000_000


class ExpansionBudgetExceededError(RuntimeError):
  """Raised when an expansion step produces more states than allowed."""

  def __init__(self, step: int, num_states: int, budget: int):
    super().__init__(
        "Expansion step {} produced {} distinct states, budget is {}".format(
            step, num_states, budget))
    self.step = step
    self.num_states = num_states
    self.budget = budget


class Letter(NamedTuple):
  """A letter of an operator word: "A", "B", or "S" with its column (kk, l)."""
  name: str
  kk: int = 0
  l: int = 0

  def __str__(self) -> str:
    if self.name == "S":
      return "S({},{})".format(self.kk, self.l)
    return self.name


A = Letter("A")
B = Letter("B")


def S(kk: int, l: int) -> Letter:  # pylint: disable=invalid-name
  if kk < 0 or l < 1:
    raise ValueError("S needs kk >= 0 and l >= 1, got ({}, {})".format(kk, l))
  return Letter("S", kk, l)


_TOKEN_RE = re.compile(r"\s*(?:(A)|(B)|S\(\s*(\d+)\s*,\s*(\d+)\s*\))")


def parse_word(text: str) -> Tuple[Letter, ...]:
  """Parses words such as "BA" or "AS(0,3)B". The empty string is allowed.

  Raises:
    ValueError: on any character that does not start a letter.
  """
  letters = []
  pos = 0
  text = text.rstrip()
  while pos < len(text):
    match = _TOKEN_RE.match(text, pos)
    if not match:
      raise ValueError("Cannot parse operator word {!r} at position {}".format(
          text, pos))
    if match.group(1):
      letters.append(A)
    elif match.group(2):
      letters.append(B)
    else:
      letters.append(S(int(match.group(3)), int(match.group(4))))
    pos = match.end()
  return tuple(letters)


def format_word(word: Sequence[Letter]) -> str:
  return "".join(str(letter) for letter in word)


def a_terms(state: MatrixState) -> List[MatrixState]:
  """The n + 1 raw (unmerged) terms of A applied to an n-column state."""
  if not state:
    return [(Column(0, 1),)]
  raised = [Column(c.s, c.k + 1) for c in state]
  result = []
  for j, column in enumerate(state):
    result.append(
        tuple(raised[:j]) + (Column(0, column.k + 1),) + state[j:])
  result.append(tuple(raised) + (Column(0, 1),))
  return result


def b_terms(state: MatrixState) -> List[MatrixState]:
  """The n raw terms of B applied to an n-column state."""
  raised = [Column(c.s, c.k + 1) for c in state]
  return [
      tuple(raised[:j]) + (Column(c.s + 1, c.k + 1),) + state[j + 1:]
      for j, c in enumerate(state)
  ]


def apply_a(state: MatrixState) -> WeightedSum:
  return WeightedSum.from_terms((t, Rational(1)) for t in a_terms(state))


def apply_b(state: MatrixState) -> WeightedSum:
  return WeightedSum.from_terms((t, Rational(1)) for t in b_terms(state))


def apply_s(kk: int, l: int, state: MatrixState) -> MatrixState:
  """Prepends the column (kk, l)."""
  if kk < 0 or l < 1:
    raise ValueError("S needs kk >= 0 and l >= 1, got ({}, {})".format(kk, l))
  return (Column(kk, l),) + tuple(state)


def letter_terms(letter: Letter, state: MatrixState) -> List[MatrixState]:
  """Raw terms of one letter acting on one state."""
  if letter.name == "A":
    return a_terms(state)
  if letter.name == "B":
    return b_terms(state)
  if letter.name == "S":
    return [apply_s(letter.kk, letter.l, state)]
  raise ValueError("Unknown operator letter {!r}".format(letter))


def operator_sum_terms(state: MatrixState) -> List[MatrixState]:
  """Raw terms of (A + B) acting on one state."""
  return a_terms(state) + b_terms(state)


def upsilon(state: MatrixState, w: WeightSeq) -> Rational:
  """prod_i b_{s_i} / k_i; 1 on the unit state."""
  result = Rational(1)
  for column in state:
    weight = w(column.s)
    if not weight:
      return Rational(0)
    result *= Rational(weight, column.k)
  return result


def upsilon_sum(ws: WeightedSum, w: WeightSeq) -> Rational:
  """Linear extension of upsilon: sum of multiplicity * upsilon(state)."""
  total = Rational(0)
  for state, mult in ws.items():
    total += mult * upsilon(state, w)
  return total


def _apply_terms(terms_fn: Callable[[MatrixState], Iterable[MatrixState]],
                 ws: WeightedSum, step: int, budget: int) -> WeightedSum:
  acc = {}  # type: Dict[MatrixState, Rational]
  for state, mult in ws.items():
    for term in terms_fn(state):
      acc[term] = acc.get(term, 0) + mult
  if len(acc) > budget:
    raise ExpansionBudgetExceededError(step, len(acc), budget)
  logging.vlog(1, "Expansion step %d: %d distinct states", step, len(acc))
  return WeightedSum._from_canonical(acc)  # pylint: disable=protected-access


def expand_word(word: Sequence[Letter],
                init: WeightedSum,
                budget: int = _DEFAULT_STATE_BUDGET) -> WeightedSum:
  """Applies `word` to `init`, rightmost letter first.

  Args:
    word: the letters, e.g. from parse_word.
    init: the weighted sum acted upon.
    budget: cap on distinct states after any step.

  Returns:
    The merged weighted sum.

  Raises:
    ExpansionBudgetExceededError: if a step exceeds `budget`.
  """
  ws = init
  for step, letter in enumerate(reversed(word), start=1):
    ws = _apply_terms(lambda s, letter=letter: letter_terms(letter, s), ws,
                      step, budget)
  return ws


def expand_operator_sum(n: int,
                        init: WeightedSum = None,
                        budget: int = _DEFAULT_STATE_BUDGET) -> WeightedSum:
  """Returns (A + B)^n applied to `init` (the unit state by default)."""
  if n < 0:
    raise ValueError("n must be nonnegative, got {}".format(n))
  ws = WeightedSum.of(matrix_state.UNIT) if init is None else init
  for step in range(1, n + 1):
    ws = _apply_terms(operator_sum_terms, ws, step, budget)
  return ws


def omega_n(n: int,
            w: WeightSeq,
            scale: common_types.RationalLike = 1,
            budget: int = _DEFAULT_STATE_BUDGET) -> Rational:
  """scale * Upsilon (A + B)^n 1, by explicit expansion.

  The correction for a shifted generating function belongs to the caller.

  Raises:
    ExpansionBudgetExceededError: if a step exceeds `budget`.
    ValueError: if the expansion reaches a weight `w` does not know.
  """
  ws = expand_operator_sum(n, budget=budget)
  logging.info("Expanded (A+B)^%d: %d distinct states", n, len(ws))
  return common_types.ToRational(scale) * upsilon_sum(ws, w)


def omega_sequence(n_max: int,
                   w: WeightSeq,
                   scale: common_types.RationalLike = 1,
                   budget: int = _DEFAULT_STATE_BUDGET) -> List[Rational]:
  """omega_0 .. omega_{n_max} from a single expansion pass."""
  if n_max < 0:
    raise ValueError("n_max must be nonnegative, got {}".format(n_max))
  scale = common_types.ToRational(scale)
  ws = WeightedSum.of(matrix_state.UNIT)
  values = [scale * upsilon_sum(ws, w)]
  for step in range(1, n_max + 1):
    ws = _apply_terms(operator_sum_terms, ws, step, budget)
    values.append(scale * upsilon_sum(ws, w))
    logging.info("omega_%d computed from %d distinct states", step, len(ws))
  return values
