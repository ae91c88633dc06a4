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
"""Words over the letters A and B, optionally run-length encoded."""

import itertools
import re
from typing import Iterator, List, Sequence, Tuple

from hkmatrix.matrix import operators

_LETTERS = ("A", "B")
_RUN_RE = re.compile(r"\s*([AB])(?:\s*\^\s*(\d+))?")


class OperatorWord(object):
  """An immutable word over {A, B}; the empty word is the identity.

  Letters are stored left to right and act right to left: "BA" is B(A(.)).
  """

  __slots__ = ["_letters"]

  def __init__(self, letters: Sequence[str] = ()):
    letters = tuple(letters)
    for letter in letters:
      if letter not in _LETTERS:
        raise ValueError("Words are over A and B only, got {!r}".format(letter))
    self._letters = letters

  @classmethod
  def parse(cls, text: str) -> "OperatorWord":
    """Parses e.g. "A^2BA" or "B A^0 A"; "" and "1" are the empty word."""
    text = text.strip()
    if text in ("", "1"):
      return cls()
    runs = []
    pos = 0
    while pos < len(text):
      match = _RUN_RE.match(text, pos)
      if not match:
        raise ValueError("Cannot parse word {!r} at position {}".format(
            text, pos))
      exponent = int(match.group(2)) if match.group(2) is not None else 1
      runs.append((match.group(1), exponent))
      pos = match.end()
      while pos < len(text) and text[pos].isspace():
        pos += 1
    return cls.from_runs(runs)

  @classmethod
  def from_runs(cls, runs: Sequence[Tuple[str, int]]) -> "OperatorWord":
    letters = []
    for letter, exponent in runs:
      if exponent < 0:
        raise ValueError("Exponents must be nonnegative, got {}^{}".format(
            letter, exponent))
      letters.extend([letter] * exponent)
    return cls(letters)

  @property
  def letters(self) -> Tuple[str, ...]:
    return self._letters

  def runs(self) -> List[Tuple[str, int]]:
    return [(letter, len(list(group)))
            for letter, group in itertools.groupby(self._letters)]

  def to_operator_letters(self) -> List[operators.Letter]:
    """The same word as matrix operator letters."""
    return [operators.A if letter == "A" else operators.B
            for letter in self._letters]

  def __len__(self) -> int:
    return len(self._letters)

  def __eq__(self, other) -> bool:
    if not isinstance(other, OperatorWord):
      return NotImplemented
    return self._letters == other._letters

  def __hash__(self):
    return hash(self._letters)

  def __str__(self) -> str:
    if not self._letters:
      return "1"
    return "".join(
        letter if exponent == 1 else "{}^{}".format(letter, exponent)
        for letter, exponent in self.runs())

  def __repr__(self) -> str:
    return "OperatorWord({!r})".format(str(self))


def all_words(length: int) -> Iterator[OperatorWord]:
  """All 2^length words of the given length."""
  if length < 0:
    raise ValueError("length must be nonnegative, got {}".format(length))
  for letters in itertools.product(_LETTERS, repeat=length):
    yield OperatorWord(letters)
