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
"""Tests for hkmatrix.telemetry.collection."""

import apache_beam as beam
from hkmatrix.beam import test_helpers
from hkmatrix.telemetry import collection

from absl.testing import absltest


def _QueryCounter(pipeline_result, name):
  return pipeline_result.metrics().query(
      beam.metrics.metric.MetricsFilter().with_name(name))["counters"]


class CollectionTest(absltest.TestCase):

  def testIncrementCounter(self):
    with beam.Pipeline(**test_helpers.make_test_beam_pipeline_kwargs()) as p:
      _ = (
          p | beam.Create([3, 4, 5])
          | collection.IncrementCounter("TestNamespace", "sum_count"))

    actual_counter = _QueryCounter(p.run(), "sum_count")
    self.assertLen(actual_counter, 1)
    self.assertEqual(actual_counter[0].committed, 12)

  def testTrackElementCount(self):
    with beam.Pipeline(**test_helpers.make_test_beam_pipeline_kwargs()) as p:
      _ = (
          p | beam.Create([((0, 1),), ((1, 2),), ()])
          | collection.TrackElementCount("TestNamespace", "num_states"))

    actual_counter = _QueryCounter(p.run(), "num_states")
    self.assertLen(actual_counter, 1)
    self.assertEqual(actual_counter[0].committed, 3)


if __name__ == "__main__":
  absltest.main()
