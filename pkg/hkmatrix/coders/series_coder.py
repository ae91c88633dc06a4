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
"""JSON coder for coefficient files.

A coefficient file is a JSON object with exactly two keys:

  {"kind": "egf-b", "coeffs": ["0", "1", "2", "3"]}
  {"kind": "series-c", "coeffs": ["1", "1", "2", "5/1"]}

"egf-b" lists b_k of f = sum_k b_k x^k / k!; "series-c" lists raw coefficients
c_k. Entries are rationals rendered as "p/q" or "p" (JSON integers are accepted
too; floats are not).
"""

import json
from typing import Any, NamedTuple, Sequence, Tuple

from hkmatrix.series import truncated_series as ts
from hkmatrix.types import common_types

Rational = common_types.Rational

EGF_B = "egf-b"
SERIES_C = "series-c"
_KINDS = (EGF_B, SERIES_C)
_KEYS = frozenset(["kind", "coeffs"])


class CoefficientFileError(ValueError):
  """Raised on malformed coefficient files."""


class CoefficientFile(NamedTuple):
  kind: str
  coeffs: Tuple[Rational, ...]

  def to_series(self) -> ts.TruncatedSeries:
    """The series the file describes, at order len(coeffs) - 1."""
    if self.kind == EGF_B:
      return ts.from_egf(self.coeffs)
    return ts.TruncatedSeries(self.coeffs)


def _decode_entry(entry: Any, index: int) -> Rational:
  if isinstance(entry, bool) or not isinstance(entry, (str, int)):
    raise CoefficientFileError(
        "coeffs[{}] must be a \"p/q\" string or an integer, got {!r}".format(
            index, entry))
  try:
    return common_types.ToRational(entry)
  except ValueError as e:
    raise CoefficientFileError("coeffs[{}]: {}".format(index, e)) from e


def decode_coefficients(text: str) -> CoefficientFile:
  """Parses the JSON text of a coefficient file.

  Raises:
    CoefficientFileError: on invalid JSON, unknown or missing keys, an unknown
      kind, an empty coefficient list or a malformed entry.
  """
  try:
    obj = json.loads(text)
  except ValueError as e:
    raise CoefficientFileError("Invalid JSON: {}".format(e)) from e
  if not isinstance(obj, dict):
    raise CoefficientFileError("Expected a JSON object, got {}".format(
        type(obj).__name__))
  unknown = set(obj) - _KEYS
  if unknown:
    raise CoefficientFileError("Unknown keys: {}".format(
        ", ".join(sorted(unknown))))
  missing = _KEYS - set(obj)
  if missing:
    raise CoefficientFileError("Missing keys: {}".format(
        ", ".join(sorted(missing))))
  if obj["kind"] not in _KINDS:
    raise CoefficientFileError("Unknown kind {!r}; expected one of {}".format(
        obj["kind"], ", ".join(_KINDS)))
  raw = obj["coeffs"]
  if not isinstance(raw, list) or not raw:
    raise CoefficientFileError("coeffs must be a nonempty list")
  return CoefficientFile(
      obj["kind"], tuple(_decode_entry(e, i) for i, e in enumerate(raw)))


def encode_coefficients(kind: str, coeffs: Sequence[Rational]) -> str:
  """Renders a coefficient file; the output is byte-stable for equal input."""
  if kind not in _KINDS:
    raise ValueError("Unknown kind {!r}".format(kind))
  return json.dumps({
      "kind": kind,
      "coeffs": [common_types.FormatRational(Rational(c)) for c in coeffs],
  }, sort_keys=True)


def encode_series(s: ts.TruncatedSeries) -> str:
  return encode_coefficients(SERIES_C, s.coeffs)


def encode_egf(s: ts.TruncatedSeries) -> str:
  return encode_coefficients(EGF_B, ts.to_egf(s))


def read_coefficient_file(path: str) -> CoefficientFile:
  try:
    with open(path) as fp:
      text = fp.read()
  except OSError as e:
    raise CoefficientFileError("Cannot read {}: {}".format(path, e)) from e
  return decode_coefficients(text)
