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
"""Weight sequences b_g used by the functional Upsilon."""

from typing import Optional, Sequence

from hkmatrix.series import truncated_series as ts
from hkmatrix.types import common_types

Rational = common_types.Rational


class WeightSeq(object):
  """The weights b_0, b_1, ... .

  The base model uses b_g = g for every g. Other models carry a finite list
  read from their field data; asking for a weight past its end is an error
  rather than a silent zero.
  """

  __slots__ = ["_values"]

  def __init__(self, values: Optional[Sequence[common_types.RationalLike]]):
    """Use `base()` or `from_coefficients()` instead."""
    if values is None:
      self._values = None
    else:
      self._values = tuple(common_types.ToRational(v) for v in values)

  @classmethod
  def base(cls) -> "WeightSeq":
    return cls(None)

  @classmethod
  def from_coefficients(
      cls, b: Sequence[common_types.RationalLike]) -> "WeightSeq":
    return cls(b)

  @classmethod
  def from_f(cls, f: ts.TruncatedSeries) -> "WeightSeq":
    """Reads b_k = k! [x^k] f."""
    return cls(ts.to_egf(f))

  def known_up_to(self) -> Optional[int]:
    """Largest g with a known weight; None if every weight is known."""
    if self._values is None:
      return None
    return len(self._values) - 1

  def __call__(self, g: int) -> Rational:
    if g < 0:
      raise ValueError("Weights are indexed by g >= 0, got {}".format(g))
    if self._values is None:
      return Rational(g)
    if g >= len(self._values):
      raise ValueError("Weight b_{} is unknown; only b_0..b_{} were given"
                       .format(g, len(self._values) - 1))
    return self._values[g]

  def is_nonnegative(self) -> bool:
    return self._values is None or all(v >= 0 for v in self._values)

  def __eq__(self, other) -> bool:
    if not isinstance(other, WeightSeq):
      return NotImplemented
    return self._values == other._values

  def __hash__(self):
    return hash(self._values)

  def __repr__(self) -> str:
    if self._values is None:
      return "WeightSeq(base)"
    return "WeightSeq([{}])".format(", ".join(
        common_types.FormatRational(v) for v in self._values))
