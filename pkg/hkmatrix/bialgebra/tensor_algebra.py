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
"""The tensor algebra T(V) and the operators acting on it.

An element of T(V) is a finite combination of pure tensors f_1 (x) ... (x) f_k
of basis vectors f_j = (e1_{g1}, e2_{g2}) of V; the empty tuple is the scalar
1. The operators are assembled from three blocks acting on single factors:

  increment_block  (g1, g2) -> (g1, g2 * 1)
  insertion_block  (g1, g2) -> (0, g2 * 1) (x) (g1, g2)
  raise_block      (g1, g2) -> (g1 + 1, g2 * 1)

On a rank-k pure tensor, apply_a has k + 1 terms: for each position j the
insertion block at j with every factor left of j incremented, plus the append
of (0, 1) with every factor incremented. apply_b has k terms: the raise block
at j with every factor left of j incremented. apply_s(kk, l) prepends
(kk, 1/l).

Under factor (g1, 1/q) <-> column (s = g1, k = q) these are exactly the matrix
operators of hkmatrix.matrix.operators.
"""

from typing import Dict, Hashable, List, Sequence, Tuple

from hkmatrix.bialgebra import free_vec
from hkmatrix.bialgebra import monoids
from hkmatrix.matrix import matrix_state
from hkmatrix.matrix import weights as weights_lib
from hkmatrix.types import common_types

G1Elem = monoids.G1Elem
G2Elem = monoids.G2Elem
MatrixState = matrix_state.MatrixState
PureTensor = Tuple[monoids.VBasis, ...]
Rational = common_types.Rational
VBasis = monoids.VBasis
WeightedSum = matrix_state.WeightedSum
WeightSeq = weights_lib.WeightSeq

_ONE_G1 = G1Elem(1)
_ONE_G2 = G2Elem(1)

# The factor created by apply_a at the end of a pure tensor (and on 1).
APPEND_FACTOR = VBasis(G1Elem(0), _ONE_G2)


class TensorElem(free_vec.FreeVec):
  """A combination of pure tensors of any rank; rank 0 is the scalar part."""

  __slots__ = []

  def _validate(self) -> None:
    for key in self._terms:
      if not isinstance(key, tuple) or not all(
          isinstance(f, VBasis) for f in key):
        raise ValueError(
            "T(V) basis elements are tuples of VBasis, got {!r}".format(key))

  @classmethod
  def one(cls) -> "TensorElem":
    return cls.basis(())

  @classmethod
  def pure(cls, *factors: VBasis,
           coeff: common_types.RationalLike = 1) -> "TensorElem":
    return cls.basis(tuple(factors), coeff)

  @property
  def scalar(self) -> Rational:
    return self.coefficient(())

  def _format_basis(self, basis: Hashable) -> str:
    if not basis:
      return "1"
    return " (x) ".join(str(f) for f in basis)


def increment_block(f: VBasis) -> VBasis:
  return VBasis(f.g1, monoids.star(f.g2, _ONE_G2))


def insertion_block(f: VBasis) -> PureTensor:
  return (VBasis(monoids.G1.unit, monoids.star(f.g2, _ONE_G2)), f)


def raise_block(f: VBasis) -> VBasis:
  return VBasis(monoids.add(f.g1, _ONE_G1), monoids.star(f.g2, _ONE_G2))


def _incremented(factors: Sequence[VBasis]) -> PureTensor:
  return tuple(increment_block(f) for f in factors)


def pure_a_terms(key: PureTensor) -> List[PureTensor]:
  terms = [
      _incremented(key[:j]) + insertion_block(key[j]) + key[j + 1:]
      for j in range(len(key))
  ]
  terms.append(_incremented(key) + (APPEND_FACTOR,))
  return terms


def pure_b_terms(key: PureTensor) -> List[PureTensor]:
  return [
      _incremented(key[:j]) + (raise_block(key[j]),) + key[j + 1:]
      for j in range(len(key))
  ]


def _apply_pure(fn, v: TensorElem) -> TensorElem:
  acc = {}  # type: Dict[PureTensor, Rational]
  for key, coeff in v.items():
    for term in fn(key):
      acc[term] = acc.get(term, 0) + coeff
  return TensorElem._from_canonical(acc)  # pylint: disable=protected-access


def apply_a(v: TensorElem) -> TensorElem:
  return _apply_pure(pure_a_terms, v)


def apply_b(v: TensorElem) -> TensorElem:
  return _apply_pure(pure_b_terms, v)


def s_factor(kk: int, l: int) -> VBasis:
  """The factor (kk, 1/l): kk raises of g1 and l stars applied to (0, inf)."""
  if kk < 0 or l < 1:
    raise ValueError("S needs kk >= 0 and l >= 1, got ({}, {})".format(kk, l))
  factor = monoids.V.unit
  for _ in range(kk):
    factor = VBasis(monoids.add(factor.g1, _ONE_G1), factor.g2)
  for _ in range(l):
    factor = increment_block(factor)
  return factor


def apply_s(kk: int, l: int, v: TensorElem) -> TensorElem:
  factor = s_factor(kk, l)
  return _apply_pure(lambda key: [(factor,) + key], v)


def apply_letter(letter, v: TensorElem) -> TensorElem:
  """Applies a matrix.operators.Letter."""
  if letter.name == "A":
    return apply_a(v)
  if letter.name == "B":
    return apply_b(v)
  if letter.name == "S":
    return apply_s(letter.kk, letter.l, v)
  raise ValueError("Unknown operator letter {!r}".format(letter))


def apply_word(word: Sequence, v: TensorElem) -> TensorElem:
  """Applies letters right to left, like an operator product."""
  for letter in reversed(word):
    v = apply_letter(letter, v)
  return v


def _pure_weight(key: PureTensor, w: WeightSeq) -> Rational:
  result = Rational(1)
  for f in key:
    weight = free_vec.v_weight(f, w)
    if not weight:
      return weight
    result *= weight
  return result


def seminorm_t(v: TensorElem, w: WeightSeq) -> Rational:
  """sum |a| * prod_j b_{g1_j} g2_j over pure tensors; |a| on the scalar part.

  With some b_g < 0 this is no longer a seminorm.
  """
  return sum((abs(c) * _pure_weight(key, w) for key, c in v.items()),
             Rational(0))


def weight_functional(v: TensorElem, w: WeightSeq) -> Rational:
  """The linear functional sum a * prod_j b_{g1_j} g2_j."""
  return sum((c * _pure_weight(key, w) for key, c in v.items()), Rational(0))


def in_kernel(key: PureTensor, w: WeightSeq) -> bool:
  """True if some factor has b_{g1} = 0 or g2 = infinity."""
  return any(f.g2.is_infinite or not w(f.g1.value) for f in key)


def pure_to_state(key: PureTensor) -> MatrixState:
  """Factor (g1, 1/q) -> column (g1, q).

  Raises:
    ValueError: if some g2 is infinity.
  """
  columns = []
  for f in key:
    if f.g2.is_infinite:
      raise ValueError(
          "Factor {} has g2 = inf and no matrix counterpart".format(f))
    columns.append(matrix_state.Column(f.g1.value, f.g2.denom))
  return tuple(columns)


def to_matrix(v: TensorElem) -> MatrixState:
  """The state of a single pure tensor with coefficient 1."""
  items = list(v.items())
  if len(items) != 1 or items[0][1] != 1:
    raise ValueError(
        "to_matrix needs a single pure tensor with coefficient 1, got {!r}"
        .format(v))
  return pure_to_state(items[0][0])


def from_matrix(state: MatrixState) -> TensorElem:
  return TensorElem.basis(
      tuple(VBasis(G1Elem(c.s), G2Elem(c.k)) for c in state))


def to_weighted_sum(v: TensorElem) -> WeightedSum:
  return WeightedSum.from_terms(
      (pure_to_state(key), c) for key, c in v.items())


def from_weighted_sum(ws: WeightedSum) -> TensorElem:
  return TensorElem.from_terms(
      (tuple(VBasis(G1Elem(c.s), G2Elem(c.k)) for c in state), mult)
      for state, mult in ws.items())
