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
"""JSON coder for weighted sums of matrix states.

A weighted sum is dumped as a list sorted lexicographically by column sequence:

  [{"cols": [[0, 2], [0, 1]], "mult": "2"}, {"cols": [[1, 2]], "mult": "1"}]

The unit state is {"cols": [], ...}.
"""

import json

from hkmatrix.matrix import matrix_state
from hkmatrix.types import common_types

_KEYS = frozenset(["cols", "mult"])


def encode_weighted_sum(ws: matrix_state.WeightedSum) -> str:
  return json.dumps([{
      "cols": [[c.s, c.k] for c in state],
      "mult": common_types.FormatRational(mult),
  } for state, mult in ws.sorted_items()], sort_keys=True)


def _decode_columns(index: int, cols) -> matrix_state.MatrixState:
  if not isinstance(cols, list):
    raise ValueError("Term {} cols must be a list, got {!r}".format(
        index, cols))
  for pair in cols:
    if (not isinstance(pair, list) or len(pair) != 2 or
        any(isinstance(v, bool) or not isinstance(v, int) for v in pair)):
      raise ValueError(
          "Term {} has a column {!r}; expected an [s, k] pair of integers"
          .format(index, pair))
  return matrix_state.make_state(cols)


def decode_weighted_sum(text: str) -> matrix_state.WeightedSum:
  """Parses a dump produced by encode_weighted_sum.

  Repeated states are merged.

  Raises:
    ValueError: on malformed input or unknown keys.
  """
  entries = json.loads(text)
  if not isinstance(entries, list):
    raise ValueError("Expected a JSON list of terms")
  terms = []
  for i, entry in enumerate(entries):
    if not isinstance(entry, dict) or set(entry) != _KEYS:
      raise ValueError(
          "Term {} must have exactly the keys cols and mult: {!r}".format(
              i, entry))
    mult = entry["mult"]
    if isinstance(mult, bool) or not isinstance(mult, (str, int)):
      raise ValueError("Term {} has a malformed multiplicity {!r}".format(
          i, mult))
    terms.append((_decode_columns(i, entry["cols"]),
                  common_types.ToRational(mult)))
  return matrix_state.WeightedSum.from_terms(terms)
