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
"""Partitioned expansion of (A + B)^n on Apache Beam.

A weighted sum is carried as a PCollection of (pairs, multiplicity) where
`pairs` is the state as a tuple of (s, k) int tuples, which has a
deterministic coder, and the multiplicity is a Rational. Each step applies
A + B per state, merges equal states with CombinePerKey and reshuffles, so the
result agrees exactly with hkmatrix.matrix.operators.expand_operator_sum.
"""

import os
import tempfile
from typing import Any, Dict, Iterator, List, Optional, Tuple

import apache_beam as beam

from hkmatrix.matrix import matrix_state
from hkmatrix.matrix import operators
from hkmatrix.matrix import weights as weights_lib
from hkmatrix.telemetry import collection
from hkmatrix.telemetry import util as telemetry_util
from hkmatrix.types import common_types

# pylint: disable=no-value-for-parameter

Rational = common_types.Rational
StatePairs = Tuple[Tuple[int, int], ...]
Term = Tuple[StatePairs, Rational]
# (step, distinct states after the step, scale * Upsilon sum).
StepRow = Tuple[int, int, Rational]

_METRICS_DESCRIPTORS = ["expansion"]


def WeightedSumToTerms(ws: matrix_state.WeightedSum) -> List[Term]:
  return [(matrix_state.state_to_pairs(state), mult)
          for state, mult in ws.sorted_items()]


def TermsToWeightedSum(terms: List[Term]) -> matrix_state.WeightedSum:
  return matrix_state.WeightedSum.from_terms(
      (matrix_state.make_state(pairs), mult) for pairs, mult in terms)


def _Namespace(telemetry_descriptors: Optional[List[str]]) -> str:
  return telemetry_util.AppendToNamespace(
      telemetry_util.MakeNamespace(_METRICS_DESCRIPTORS),
      telemetry_descriptors or [])


class _ApplyOperatorSumDoFn(beam.DoFn):
  """Emits the raw terms of (A + B) on one state."""

  def __init__(self, counter_namespace: str):
    self._raw_terms = beam.metrics.Metrics.counter(counter_namespace,
                                                   "raw_terms")

  def process(self, element: Term) -> Iterator[Term]:
    pairs, mult = element
    for term in operators.operator_sum_terms(matrix_state.make_state(pairs)):
      self._raw_terms.inc()
      yield matrix_state.state_to_pairs(term), mult


@beam.ptransform_fn
def _ExpandStep(terms: beam.PCollection[Term], step: int,
                namespace: str) -> beam.PCollection[Term]:
  """One application of (A + B), merged and reshuffled."""
  merged = (
      terms
      | "ApplyOperatorSum" >> beam.ParDo(_ApplyOperatorSumDoFn(namespace))
      | "MergeStates" >> beam.CombinePerKey(sum)
      | "DropZero" >> beam.Filter(lambda kv: kv[1] != 0)
      | "Reshuffle" >> beam.Reshuffle())
  _ = (
      merged
      | "CountStates" >> collection.TrackElementCount(
          counter_namespace=namespace,
          counter_name=telemetry_util.StepCounterName(step)))
  return merged


@beam.ptransform_fn
def ExpandOperatorSum(
    terms: beam.PCollection[Term],
    n: int,
    telemetry_descriptors: Optional[List[str]] = None
) -> beam.PCollection[Term]:
  """Applies (A + B) n times to a weighted sum of states.

  Args:
    terms: the (pairs, multiplicity) terms of the initial weighted sum.
    n: the number of applications, >= 0.
    telemetry_descriptors: appended to the metric namespace.

  Returns:
    The merged terms; no state repeats and no multiplicity is zero.
  """
  if n < 0:
    raise ValueError("n must be nonnegative, got {}".format(n))
  namespace = _Namespace(telemetry_descriptors)
  for step in range(1, n + 1):
    terms = terms | "Step[{}]".format(step) >> _ExpandStep(step, namespace)
  return terms


@beam.ptransform_fn
def OmegaFromStates(terms: beam.PCollection[Term],
                    weights: weights_lib.WeightSeq,
                    scale: common_types.RationalLike = 1
                   ) -> beam.PCollection[Rational]:
  """scale * sum of multiplicity * Upsilon(state), as a single element."""
  scale = common_types.ToRational(scale)
  return (terms
          | "Upsilon" >> beam.Map(lambda kv: kv[1] * operators.upsilon(
              matrix_state.make_state(kv[0]), weights))
          | "Sum" >> beam.CombineGlobally(sum)
          | "Scale" >> beam.Map(lambda total: scale * Rational(total)))


@beam.ptransform_fn
def OmegaSequence(
    terms: beam.PCollection[Term],
    n: int,
    weights: weights_lib.WeightSeq,
    scale: common_types.RationalLike = 1,
    telemetry_descriptors: Optional[List[str]] = None
) -> beam.PCollection[StepRow]:
  """Expands n steps once and measures every intermediate weighted sum.

  Args:
    terms: the terms of the initial weighted sum (step 0).
    n: the number of applications of (A + B), >= 0.
    weights: the weights read by Upsilon.
    scale: multiplies every Upsilon sum.
    telemetry_descriptors: appended to the metric namespace.

  Returns:
    One StepRow per step 0..n.
  """
  if n < 0:
    raise ValueError("n must be nonnegative, got {}".format(n))
  namespace = _Namespace(telemetry_descriptors)
  rows = []
  for step in range(n + 1):
    if step:
      terms = terms | "Step[{}]".format(step) >> _ExpandStep(step, namespace)
    num_states = terms | "NumStates[{}]".format(step) >> (
        beam.combiners.Count.Globally())
    rows.append(
        terms
        | "Omega[{}]".format(step) >> OmegaFromStates(weights, scale)
        | "Row[{}]".format(step) >> beam.Map(
            lambda value, count, step: (step, count, value),
            count=beam.pvalue.AsSingleton(num_states),
            step=step))
  return rows | "FlattenRows" >> beam.Flatten()


def _FormatRow(row: StepRow) -> str:
  step, count, value = row
  return "{}\t{}\t{}".format(step, count, common_types.FormatRational(value))


def _ParseRow(line: str) -> StepRow:
  step, count, value = line.split("\t")
  return int(step), int(count), common_types.ToRational(value)


def ComputeOmegaSequence(
    n: int,
    weights: weights_lib.WeightSeq,
    scale: common_types.RationalLike = 1,
    budget: Optional[int] = None,
    pipeline_kwargs: Optional[Dict[str, Any]] = None) -> List[Rational]:
  """Runs one expansion pipeline and returns omega_0..omega_n.

  The state budget is checked against the per-step counts once the pipeline
  has finished.

  Args:
    n: the largest index.
    weights: the weights read by Upsilon.
    scale: multiplies every value.
    budget: cap on distinct states after any step; None for no cap.
    pipeline_kwargs: keyword arguments for beam.Pipeline.

  Returns:
    The exact values omega_0..omega_n.

  Raises:
    ExpansionBudgetExceededError: if a step produced more than `budget`
      states.
  """
  with tempfile.TemporaryDirectory() as tmp_dir:
    output = os.path.join(tmp_dir, "omega")
    with beam.Pipeline(**(pipeline_kwargs or {})) as p:
      _ = (
          p
          | "CreateUnit" >> beam.Create([(matrix_state.UNIT, Rational(1))])
          | "OmegaSequence" >> OmegaSequence(n, weights, scale)
          | "Format" >> beam.Map(_FormatRow)
          | "Write" >> beam.io.WriteToText(output, shard_name_template=""))
    with open(output) as fp:
      rows = sorted(_ParseRow(line) for line in fp.read().splitlines() if line)
  for step, count, _ in rows:
    if budget is not None and count > budget:
      raise operators.ExpansionBudgetExceededError(step, count, budget)
  return [value for _, _, value in rows]


def ComputeOmega(n: int,
                 weights: weights_lib.WeightSeq,
                 scale: common_types.RationalLike = 1,
                 pipeline_kwargs: Optional[Dict[str, Any]] = None) -> Rational:
  """Runs the expansion pipeline for omega_n and returns the exact value."""
  return ComputeOmegaSequence(
      n, weights, scale, pipeline_kwargs=pipeline_kwargs)[n]
