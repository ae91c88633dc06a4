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
"""Two-row matrix states and formal linear combinations of them.

A state is a tuple of `Column(s, k)`; the empty tuple is the unit state. Column
order matters: two states are equal only if all columns agree position by
position. A `WeightedSum` maps canonical states to nonzero Rational
multiplicities.
"""

from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Sequence, Tuple

from hkmatrix.types import common_types

Rational = common_types.Rational


class Column(NamedTuple):
  """One column: top entry s >= 0, bottom entry k >= 1."""
  s: int
  k: int


MatrixState = Tuple[Column, ...]

# The unit state (no columns).
UNIT: MatrixState = ()


def make_state(pairs: Iterable[Sequence[int]]) -> MatrixState:
  """Builds a validated state from (s, k) pairs.

  Raises:
    ValueError: if some s < 0 or k < 1.
  """
  columns = []
  for pair in pairs:
    s, k = pair
    if isinstance(s, bool) or isinstance(k, bool) or not (
        isinstance(s, int) and isinstance(k, int)):
      raise ValueError("Column entries must be integers, got {!r}".format(pair))
    if s < 0 or k < 1:
      raise ValueError("Column needs s >= 0 and k >= 1, got ({}, {})".format(
          s, k))
    columns.append(Column(s, k))
  return tuple(columns)


def state_to_pairs(state: MatrixState) -> Tuple[Tuple[int, int], ...]:
  """Plain nested tuples, e.g. for serialization."""
  return tuple((c.s, c.k) for c in state)


def format_state(state: MatrixState) -> str:
  if not state:
    return "1"
  return "[" + ",".join("({},{})".format(c.s, c.k) for c in state) + "]"


class WeightedSum(object):
  """An immutable formal linear combination of states.

  Canonical: every state appears at most once and no multiplicity is zero.
  """

  __slots__ = ["_terms"]

  def __init__(self, terms: Mapping[MatrixState, Rational] = None):
    self._terms = {}  # type: Dict[MatrixState, Rational]
    if terms:
      for state, mult in terms.items():
        mult = common_types.ToRational(mult)
        if mult:
          self._terms[tuple(state)] = mult

  @classmethod
  def from_terms(
      cls, terms: Iterable[Tuple[MatrixState, Rational]]) -> "WeightedSum":
    """Aggregates (state, multiplicity) pairs, merging repeated states."""
    acc = {}  # type: Dict[MatrixState, Rational]
    for state, mult in terms:
      acc[state] = acc.get(state, 0) + mult
    return cls._from_canonical(acc)

  @classmethod
  def _from_canonical(cls, acc: Dict[MatrixState, Rational]) -> "WeightedSum":
    result = cls()
    result._terms = {s: Rational(m) for s, m in acc.items() if m}
    return result

  @classmethod
  def of(cls, state: MatrixState,
         mult: common_types.RationalLike = 1) -> "WeightedSum":
    return cls({state: mult})

  def items(self) -> Iterator[Tuple[MatrixState, Rational]]:
    return iter(self._terms.items())

  def states(self) -> Iterator[MatrixState]:
    return iter(self._terms)

  def multiplicity(self, state: MatrixState) -> Rational:
    return self._terms.get(tuple(state), Rational(0))

  def scaled(self, scalar: common_types.RationalLike) -> "WeightedSum":
    scalar = common_types.ToRational(scalar)
    return WeightedSum._from_canonical(
        {s: m * scalar for s, m in self._terms.items()})

  def __add__(self, other: "WeightedSum") -> "WeightedSum":
    return WeightedSum.from_terms(
        list(self._terms.items()) + list(other._terms.items()))

  def __len__(self) -> int:
    return len(self._terms)

  def __bool__(self) -> bool:
    return bool(self._terms)

  def __eq__(self, other) -> bool:
    if not isinstance(other, WeightedSum):
      return NotImplemented
    return self._terms == other._terms

  def __hash__(self):
    return hash(frozenset(self._terms.items()))

  def sorted_items(self) -> Tuple[Tuple[MatrixState, Rational], ...]:
    """Terms sorted lexicographically by column sequence."""
    return tuple(sorted(self._terms.items(), key=lambda item: item[0]))

  def __repr__(self) -> str:
    if not self._terms:
      return "WeightedSum(0)"
    return "WeightedSum({})".format(" + ".join(
        "{}*{}".format(common_types.FormatRational(m), format_state(s))
        for s, m in self.sorted_items()))
