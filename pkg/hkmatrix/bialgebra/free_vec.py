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
"""Free vector spaces over the monoids, their bialgebra maps and seminorms.

A `FreeVec` is a finite formal combination of monoid elements with Rational
coefficients. A `FreeTensor` is the same over tuples of monoid elements of one
fixed rank, i.e. an element of H (x) ... (x) H. The bialgebra maps take the
monoid as data:

  mu(e_p (x) e_q) = e_{p.q}   eta(c) = c e_unit
  delta(e_q) = e_q (x) e_q    eps(e_q) = 1

all extended linearly.
"""

import itertools
from typing import (Callable, Dict, Hashable, Iterable, Iterator, Mapping,
                    Optional, Tuple, Union)

from hkmatrix.bialgebra import monoids
from hkmatrix.matrix import weights as weights_lib
from hkmatrix.types import common_types

Rational = common_types.Rational
WeightSeq = weights_lib.WeightSeq


class FreeVec(object):
  """Immutable canonical combination: no zero coefficients are stored."""

  __slots__ = ["_terms"]

  def __init__(self,
               terms: Optional[Mapping[Hashable,
                                       common_types.RationalLike]] = None):
    self._terms = {}  # type: Dict[Hashable, Rational]
    if terms:
      for basis, coeff in terms.items():
        coeff = common_types.ToRational(coeff)
        if coeff:
          self._terms[basis] = coeff
    self._validate()

  def _validate(self) -> None:
    pass

  @classmethod
  def _from_canonical(cls, acc: Dict[Hashable, Rational]):
    result = cls.__new__(cls)
    result._terms = {b: Rational(c) for b, c in acc.items() if c}
    result._validate()
    return result

  @classmethod
  def from_terms(cls, terms: Iterable[Tuple[Hashable, Rational]]):
    """Sums (basis, coefficient) pairs, merging repeated basis elements."""
    acc = {}  # type: Dict[Hashable, Rational]
    for basis, coeff in terms:
      acc[basis] = acc.get(basis, 0) + coeff
    return cls._from_canonical(acc)

  @classmethod
  def basis(cls, element: Hashable, coeff: common_types.RationalLike = 1):
    return cls({element: coeff})

  def items(self) -> Iterator[Tuple[Hashable, Rational]]:
    return iter(self._terms.items())

  def support(self) -> Iterator[Hashable]:
    return iter(self._terms)

  def coefficient(self, element: Hashable) -> Rational:
    return self._terms.get(element, Rational(0))

  def scaled(self, scalar: common_types.RationalLike):
    scalar = common_types.ToRational(scalar)
    return self._from_canonical({b: c * scalar for b, c in self._terms.items()})

  def __add__(self, other):
    if type(other) is not type(self):
      return NotImplemented
    return self.from_terms(
        itertools.chain(self._terms.items(), other._terms.items()))

  def __neg__(self):
    return self.scaled(-1)

  def __sub__(self, other):
    if type(other) is not type(self):
      return NotImplemented
    return self + (-other)

  def __len__(self) -> int:
    return len(self._terms)

  def __bool__(self) -> bool:
    return bool(self._terms)

  def __eq__(self, other) -> bool:
    if type(other) is not type(self):
      return NotImplemented
    return self._terms == other._terms

  def __hash__(self):
    return hash(frozenset(self._terms.items()))

  def sorted_items(self) -> Tuple[Tuple[Hashable, Rational], ...]:
    return tuple(sorted(self._terms.items(), key=lambda item: item[0]))

  def _format_basis(self, basis: Hashable) -> str:
    return "e_{}".format(basis)

  def __repr__(self) -> str:
    if not self._terms:
      return "{}(0)".format(type(self).__name__)
    return "{}({})".format(type(self).__name__, " + ".join(
        "{}*{}".format(common_types.FormatRational(c), self._format_basis(b))
        for b, c in self.sorted_items()))


class FreeTensor(FreeVec):
  """A combination of pure tensors, all of the same rank."""

  __slots__ = []

  def _validate(self) -> None:
    ranks = set()
    for key in self._terms:
      if not isinstance(key, tuple):
        raise ValueError("Pure tensors are tuples of factors, got {!r}".format(
            key))
      ranks.add(len(key))
    if len(ranks) > 1:
      raise ValueError("Mixed ranks in a FreeTensor: {}".format(sorted(ranks)))

  @property
  def rank(self) -> Optional[int]:
    """The common rank; None for the zero tensor."""
    for key in self._terms:
      return len(key)
    return None

  def _format_basis(self, basis: Hashable) -> str:
    return " (x) ".join("e_{}".format(f) for f in basis)


def lift(v: FreeVec) -> FreeTensor:
  """Views v as a rank-1 tensor."""
  return FreeTensor._from_canonical({(b,): c for b, c in v.items()})  # pylint: disable=protected-access


def tensor(*factors: Union[FreeVec, FreeTensor]) -> FreeTensor:
  """The tensor product; FreeVec factors count as rank 1."""
  if not factors:
    raise ValueError("tensor() needs at least one factor")
  lifted = [f if isinstance(f, FreeTensor) else lift(f) for f in factors]
  terms = []
  for combo in itertools.product(*(list(f.items()) for f in lifted)):
    key = ()
    coeff = Rational(1)
    for k, c in combo:
      key += k
      coeff *= c
    terms.append((key, coeff))
  return FreeTensor.from_terms(terms)


def _expand_factor(
    t: FreeTensor, position: int,
    fn: Callable[[Tuple[Hashable, ...]], Iterable[Tuple[Tuple[Hashable, ...],
                                                         Rational]]],
    width: int = 1) -> FreeTensor:
  """Replaces factors [position, position + width) of every pure tensor."""
  if t and not 0 <= position <= t.rank - width:
    raise ValueError("Position {} (width {}) is out of range for rank {}"
                     .format(position, width, t.rank))
  terms = []
  for key, coeff in t.items():
    head, mid, tail = (key[:position], key[position:position + width],
                       key[position + width:])
    for new_mid, c in fn(mid):
      terms.append((head + new_mid + tail, coeff * c))
  return FreeTensor.from_terms(terms)


def mu(monoid: monoids.Monoid, t: FreeTensor) -> FreeVec:
  """Multiplication H (x) H -> H."""
  if t and t.rank != 2:
    raise ValueError("mu expects a rank-2 tensor, got rank {}".format(t.rank))
  return FreeVec.from_terms(
      (monoid.op(p, q), c) for (p, q), c in t.items())


def product(monoid: monoids.Monoid, x: FreeVec, y: FreeVec) -> FreeVec:
  return mu(monoid, tensor(x, y))


def eta(monoid: monoids.Monoid,
        scalar: common_types.RationalLike = 1) -> FreeVec:
  """Unit map: scalar * e_unit (e_0 on G1, e_inf on G2)."""
  return FreeVec.basis(monoid.unit, scalar)


def delta(v: FreeVec) -> FreeTensor:
  """Comultiplication e_q -> e_q (x) e_q."""
  return FreeTensor.from_terms(((b, b), c) for b, c in v.items())


def eps(v: FreeVec) -> Rational:
  """counit e_q -> 1."""
  return sum((c for _, c in v.items()), Rational(0))


def mu_at(monoid: monoids.Monoid, t: FreeTensor, position: int) -> FreeTensor:
  """Applies mu to factors position and position + 1."""
  return _expand_factor(t, position,
                        lambda mid: [((monoid.op(mid[0], mid[1]),), 1)], 2)


def delta_at(t: FreeTensor, position: int) -> FreeTensor:
  return _expand_factor(t, position, lambda mid: [(mid + mid, 1)])


def eps_at(t: FreeTensor, position: int) -> FreeTensor:
  return _expand_factor(t, position, lambda mid: [((), 1)])


def eta_at(monoid: monoids.Monoid, t: FreeTensor, position: int) -> FreeTensor:
  """Inserts the unit as a new factor before `position`."""
  return _expand_factor(t, position, lambda mid: [((monoid.unit,), 1)], 0)


def flip(t: FreeTensor) -> FreeTensor:
  """The swap a (x) b -> b (x) a on rank-2 tensors."""
  if t and t.rank != 2:
    raise ValueError("flip expects a rank-2 tensor, got rank {}".format(t.rank))
  return FreeTensor.from_terms(((q, p), c) for (p, q), c in t.items())


def tensor_product(monoid: monoids.Monoid, s: FreeTensor,
                   t: FreeTensor) -> FreeTensor:
  """Factorwise product in H (x) ... (x) H: (a (x) b)(c (x) d) = ac (x) bd."""
  if s and t and s.rank != t.rank:
    raise ValueError("Rank mismatch: {} vs {}".format(s.rank, t.rank))
  terms = []
  for (ks, cs), (kt, ct) in itertools.product(list(s.items()),
                                              list(t.items())):
    terms.append(
        (tuple(monoid.op(p, q) for p, q in zip(ks, kt)), cs * ct))
  return FreeTensor.from_terms(terms)


def g1_weight(g: monoids.G1Elem, w: WeightSeq) -> Rational:
  return w(g.value)


def g2_weight(g: monoids.G2Elem) -> Rational:
  """The value 1/q of a finite element; infinity weighs 0."""
  if g.is_infinite:
    return Rational(0)
  return g.as_rational()


def v_weight(b: monoids.VBasis, w: WeightSeq) -> Rational:
  """b_{g1} * g2 on a basis vector of V."""
  g2 = g2_weight(b.g2)
  if not g2:
    return g2
  return g1_weight(b.g1, w) * g2


def seminorm1(v: FreeVec, w: WeightSeq) -> Rational:
  """|sum a_g e_g|_1 = sum |a_g| b_g."""
  return sum((abs(c) * g1_weight(g, w) for g, c in v.items()), Rational(0))


def seminorm2(v: FreeVec) -> Rational:
  """|sum a_g e_g|_2 = sum over finite g of |a_g| g."""
  return sum((abs(c) * g2_weight(g) for g, c in v.items()), Rational(0))


def seminorm_v(v: FreeVec, w: WeightSeq) -> Rational:
  """The seminorm on V, weighting (g1, g2) by b_{g1} * g2."""
  return sum((abs(c) * v_weight(b, w) for b, c in v.items()), Rational(0))
