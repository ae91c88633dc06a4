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
"""Types common to hkmatrix."""

import fractions
from typing import Union

# The scalar everywhere: exact, always in lowest terms, positive denominator.
Rational = fractions.Fraction

RationalLike = Union[int, fractions.Fraction, str]


def ToRational(value: RationalLike) -> Rational:
  """Converts an int, Fraction or "p/q" string to a Rational.

  Floats are rejected.

  Args:
    value: the value to convert.

  Returns:
    The exact Rational equal to `value`.

  Raises:
    TypeError: if `value` is a float or of an unsupported type.
    ValueError: if a string is not of the form "p" or "p/q".
  """
  if isinstance(value, bool):
    raise TypeError("Booleans are not rationals: {!r}".format(value))
  if isinstance(value, fractions.Fraction):
    return value
  if isinstance(value, int):
    return fractions.Fraction(value)
  if isinstance(value, str):
    text = value.strip()
    if not text or any(c in text for c in ".eE"):
      raise ValueError("Expected a rational of the form p or p/q, got {!r}"
                       .format(value))
    try:
      return fractions.Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
      raise ValueError("Malformed rational {!r}: {}".format(value, e)) from e
  raise TypeError("Cannot convert {!r} of type {} to a rational".format(
      value, type(value).__name__))


def FormatRational(value: Rational) -> str:
  """Renders a Rational as "p/q", or "p" when the denominator is 1."""
  if value.denominator == 1:
    return str(value.numerator)
  return "{}/{}".format(value.numerator, value.denominator)
