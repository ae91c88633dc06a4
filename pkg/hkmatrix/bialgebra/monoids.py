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
"""The monoids G1, G2 and their product V.

G1 is the nonnegative integers under addition. G2 is {1/q : q >= 1} with
infinity adjoined, under p * q = (1/p + 1/q)^-1. A G2 element is stored by its
denominator, with 0 standing for infinity, so the operation is integer addition
of denominators and infinity is the unit.
"""

from typing import Any, Callable, NamedTuple

from hkmatrix.types import common_types

Rational = common_types.Rational


class G1Elem(NamedTuple):
  value: int

  def __str__(self) -> str:
    return str(self.value)


class G2Elem(NamedTuple):
  """1/denom, or infinity when denom == 0."""
  denom: int

  @property
  def is_infinite(self) -> bool:
    return self.denom == 0

  def as_rational(self) -> Rational:
    """The value 1/denom; raises ValueError on infinity."""
    if self.is_infinite:
      raise ValueError("Infinity has no rational value")
    return Rational(1, self.denom)

  def __str__(self) -> str:
    return "inf" if self.is_infinite else "1/{}".format(self.denom)


class VBasis(NamedTuple):
  """A basis vector (e1_{g1}, e2_{g2}) of V."""
  g1: G1Elem
  g2: G2Elem

  def __str__(self) -> str:
    return "({},{})".format(self.g1, self.g2)


INFINITY = G2Elem(0)


def make_g1(value: int) -> G1Elem:
  if isinstance(value, bool) or not isinstance(value, int) or value < 0:
    raise ValueError("G1 elements are nonnegative integers, got {!r}".format(
        value))
  return G1Elem(value)


def make_g2(denom: int) -> G2Elem:
  """G2 element 1/denom; denom == 0 gives infinity."""
  if isinstance(denom, bool) or not isinstance(denom, int) or denom < 0:
    raise ValueError(
        "G2 denominators are nonnegative integers (0 = infinity), got {!r}"
        .format(denom))
  return G2Elem(denom)


def make_v(g1: int, denom: int) -> VBasis:
  return VBasis(make_g1(g1), make_g2(denom))


def add(p: G1Elem, q: G1Elem) -> G1Elem:
  return G1Elem(p.value + q.value)


def star(p: G2Elem, q: G2Elem) -> G2Elem:
  """(1/p + 1/q)^-1: denominators add, infinity is the unit."""
  return G2Elem(p.denom + q.denom)


def v_op(a: VBasis, b: VBasis) -> VBasis:
  return VBasis(add(a.g1, b.g1), star(a.g2, b.g2))


class Monoid(NamedTuple):
  """A commutative monoid given as data: its operation and unit."""
  name: str
  op: Callable[[Any, Any], Any]
  unit: Any


G1 = Monoid("G1", add, G1Elem(0))
G2 = Monoid("G2", star, INFINITY)
V = Monoid("V", v_op, VBasis(G1Elem(0), INFINITY))
