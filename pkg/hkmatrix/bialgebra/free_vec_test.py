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
"""Tests for hkmatrix.bialgebra.free_vec."""

from absl.testing import absltest
from hkmatrix.bialgebra import free_vec
from hkmatrix.bialgebra import monoids
from hkmatrix.matrix import weights
from hkmatrix.types import common_types

FreeTensor = free_vec.FreeTensor
FreeVec = free_vec.FreeVec
R = common_types.Rational
G1 = monoids.G1
G2 = monoids.G2


def _e1(g, coeff=1):
  return FreeVec.basis(monoids.make_g1(g), coeff)


def _e2(denom, coeff=1):
  return FreeVec.basis(monoids.make_g2(denom), coeff)


class FreeVecTest(absltest.TestCase):

  def testCanonical(self):
    v = _e1(2, 3) + _e1(2, -3) + _e1(1)
    self.assertEqual(_e1(1), v)
    self.assertLen(v, 1)
    self.assertFalse(_e1(1) - _e1(1))
    self.assertEqual(FreeVec({monoids.make_g1(4): 0}), FreeVec())

  def testMu(self):
    self.assertEqual(_e1(5), free_vec.mu(G1, free_vec.tensor(_e1(2), _e1(3))))
    self.assertEqual(_e2(5), free_vec.product(G2, _e2(2), _e2(3)))
    with self.assertRaises(ValueError):
      free_vec.mu(G1, free_vec.tensor(_e1(1), _e1(1), _e1(1)))

  def testDeltaAndEps(self):
    g4 = monoids.make_g1(4)
    self.assertEqual(FreeTensor.basis((g4, g4)), free_vec.delta(_e1(4)))
    self.assertEqual(1, free_vec.eps(_e1(3, 3) + _e1(5, -2)))

  def testEta(self):
    self.assertEqual(_e2(0), free_vec.eta(G2))
    self.assertEqual(_e1(0, R(1, 2)), free_vec.eta(G1, R(1, 2)))

  def testTensorIsBilinear(self):
    t = free_vec.tensor(_e1(1) + _e1(2, 2), _e1(3))
    g = monoids.make_g1
    self.assertEqual(2, t.rank)
    self.assertEqual(2, t.coefficient((g(2), g(3))))
    self.assertEqual(
        FreeTensor.basis((g(3), g(1))) + FreeTensor.basis((g(3), g(2)), 2),
        free_vec.flip(t))

  def testFactorMaps(self):
    g = monoids.make_g1
    t = FreeTensor.basis((g(1), g(2), g(3)), 4)
    self.assertEqual(FreeTensor.basis((g(3), g(3)), 4),
                     free_vec.mu_at(G1, t, 0))
    self.assertEqual(FreeTensor.basis((g(1), g(2), g(2), g(3)), 4),
                     free_vec.delta_at(t, 1))
    self.assertEqual(FreeTensor.basis((g(1), g(2)), 4),
                     free_vec.eps_at(t, 2))
    self.assertEqual(FreeTensor.basis((g(1), g(0), g(2), g(3)), 4),
                     free_vec.eta_at(G1, t, 1))
    with self.assertRaises(ValueError):
      free_vec.delta_at(t, 3)

  def testTensorProduct(self):
    g = monoids.make_g1
    s = FreeTensor.basis((g(1), g(2)), 2)
    t = FreeTensor.basis((g(3), g(4)), 3)
    self.assertEqual(FreeTensor.basis((g(4), g(6)), 6),
                     free_vec.tensor_product(G1, s, t))

  def testMixedRanksRejected(self):
    g = monoids.make_g1
    with self.assertRaises(ValueError):
      FreeTensor({(g(1),): 1, (g(1), g(2)): 1})

  def testSeminorms(self):
    base = weights.WeightSeq.base()
    self.assertEqual(6, free_vec.seminorm1(_e1(2, 3), base))
    self.assertEqual(6, free_vec.seminorm1(_e1(2, -3) + _e1(0, 9), base))
    self.assertEqual(0, free_vec.seminorm2(_e2(0, 5)))
    self.assertEqual(R(1, 2), free_vec.seminorm2(_e2(4, -2)))
    v = FreeVec.basis(monoids.make_v(3, 4), -2) + FreeVec.basis(
        monoids.make_v(5, 0), 7)
    self.assertEqual(R(3, 2), free_vec.seminorm_v(v, base))

  def testSeminormUsesWeightsAsGiven(self):
    w = weights.WeightSeq.from_coefficients([1, -2])
    self.assertEqual(-4, free_vec.seminorm1(_e1(1, -2), w))


if __name__ == "__main__":
  absltest.main()
