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
"""Beam metric namespaces and counter names used by hkmatrix."""

from typing import Sequence

_ROOT_NAMESPACE = "hkmatrix"


def _CheckDescriptor(descriptor: str) -> str:
  if not descriptor or "." in descriptor:
    raise ValueError(
        "Metric descriptors must be nonempty and dot-free, got {!r}".format(
            descriptor))
  return descriptor


def MakeNamespace(descriptors: Sequence[str]) -> str:
  """Makes an hkmatrix.<descriptor>... namespace."""
  return AppendToNamespace(_ROOT_NAMESPACE, descriptors)


def AppendToNamespace(namespace: str,
                      descriptors_to_append: Sequence[str]) -> str:
  if not descriptors_to_append:
    return namespace
  return ".".join(
      [namespace] + [_CheckDescriptor(d) for d in descriptors_to_append])


def StepCounterName(step: int) -> str:
  """Name of the distinct-state counter of expansion step `step` (>= 1)."""
  if step < 1:
    raise ValueError("Expansion steps start at 1, got {}".format(step))
  return "states_step_{}".format(step)
