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
"""Randomized checks of the monoid, bialgebra and seminorm laws.

Every law is checked on `trials` random inputs. Trial t of law i draws from
numpy.random.default_rng([seed, i, t]), so a report is a pure function of
(trials, seed, weights) and trials can be replayed one at a time.

The report is JSON-ready:

  {"G1.coassociativity": {"trials": 500, "failures": 0}, ...}

A failing law also carries "first_counterexample"; a law that does not apply
to the given weights carries "skipped" with the reason and zero trials.
"""

import json
from typing import Any, Callable, Dict, List, NamedTuple, Optional

from absl import logging
import numpy as np

from hkmatrix.bialgebra import free_vec
from hkmatrix.bialgebra import monoids
from hkmatrix.bialgebra import tensor_algebra
from hkmatrix.matrix import matrix_state
from hkmatrix.matrix import operators
from hkmatrix.matrix import weights as weights_lib
from hkmatrix.types import common_types

FreeVec = free_vec.FreeVec
Rational = common_types.Rational
TensorElem = tensor_algebra.TensorElem
WeightSeq = weights_lib.WeightSeq

AxiomReport = Dict[str, Dict[str, Any]]
_Check = Callable[[np.random.Generator, WeightSeq], Optional[str]]

_MAX_G = 5
_MAX_TERMS = 4
_MAX_RANK = 3
_MAX_WORD_LENGTH = 4
_NEGATIVE_WEIGHTS_REASON = (
    "some b_g < 0: the weighted sum is no longer a seminorm")


class _Law(NamedTuple):
  name: str
  check: _Check
  needs_nonnegative_weights: bool = False


def _max_g1(w: WeightSeq) -> int:
  known = w.known_up_to()
  return _MAX_G if known is None else min(_MAX_G, known)


def _coeff(rng: np.random.Generator) -> Rational:
  return Rational(int(rng.integers(-6, 7)), int(rng.integers(1, 4)))


def _sample_g1(rng: np.random.Generator, w: WeightSeq) -> monoids.G1Elem:
  return monoids.G1Elem(int(rng.integers(0, _max_g1(w) + 1)))


def _sample_g2(rng: np.random.Generator, w: WeightSeq) -> monoids.G2Elem:
  del w
  return monoids.G2Elem(int(rng.integers(0, _MAX_G + 1)))


def _sample_v(rng: np.random.Generator, w: WeightSeq) -> monoids.VBasis:
  return monoids.VBasis(_sample_g1(rng, w), _sample_g2(rng, w))


def _sample_vec(rng, w, sample) -> FreeVec:
  n = int(rng.integers(1, _MAX_TERMS + 1))
  return FreeVec.from_terms((sample(rng, w), _coeff(rng)) for _ in range(n))


def _sample_tensor(rng: np.random.Generator, w: WeightSeq) -> TensorElem:
  terms = []
  for _ in range(int(rng.integers(1, _MAX_TERMS + 1))):
    rank = int(rng.integers(0, _MAX_RANK + 1))
    terms.append((tuple(_sample_v(rng, w) for _ in range(rank)), _coeff(rng)))
  return TensorElem.from_terms(terms)


def _sample_state(rng: np.random.Generator, w: WeightSeq,
                  max_columns: int) -> matrix_state.MatrixState:
  return tuple(
      matrix_state.Column(int(rng.integers(0, _max_g1(w) + 1)),
                          int(rng.integers(1, _MAX_G + 1)))
      for _ in range(int(rng.integers(0, max_columns + 1))))


def _sample_word(rng: np.random.Generator,
                 w: WeightSeq) -> List[operators.Letter]:
  word = []
  for _ in range(int(rng.integers(0, _MAX_WORD_LENGTH + 1))):
    pick = int(rng.integers(0, 3))
    if pick == 0:
      word.append(operators.A)
    elif pick == 1:
      word.append(operators.B)
    else:
      word.append(
          operators.S(int(rng.integers(0, _max_g1(w) + 1)),
                      int(rng.integers(1, _MAX_G + 1))))
  return word


def _fail(**inputs) -> str:
  return ", ".join("{}={!r}".format(k, v) for k, v in sorted(inputs.items()))


def _monoid_laws(m: monoids.Monoid, sample) -> List[_Law]:
  """Monoid, algebra, coalgebra and compatibility laws for one monoid."""

  def monoid_associativity(rng, w):
    a, b, c = sample(rng, w), sample(rng, w), sample(rng, w)
    if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)):
      return _fail(a=a, b=b, c=c)

  def monoid_unit(rng, w):
    a = sample(rng, w)
    if m.op(m.unit, a) != a or m.op(a, m.unit) != a:
      return _fail(a=a)

  def monoid_commutativity(rng, w):
    a, b = sample(rng, w), sample(rng, w)
    if m.op(a, b) != m.op(b, a):
      return _fail(a=a, b=b)

  def algebra_associativity(rng, w):
    x, y, z = (_sample_vec(rng, w, sample) for _ in range(3))
    t = free_vec.tensor(x, y, z)
    lhs = free_vec.mu(m, free_vec.mu_at(m, t, 0))
    rhs = free_vec.mu(m, free_vec.mu_at(m, t, 1))
    if lhs != rhs:
      return _fail(x=x, y=y, z=z)

  def algebra_unit(rng, w):
    x = _sample_vec(rng, w, sample)
    t = free_vec.lift(x)
    if (free_vec.mu(m, free_vec.eta_at(m, t, 0)) != x or
        free_vec.mu(m, free_vec.eta_at(m, t, 1)) != x):
      return _fail(x=x)

  def algebra_commutativity(rng, w):
    x, y = _sample_vec(rng, w, sample), _sample_vec(rng, w, sample)
    t = free_vec.tensor(x, y)
    if free_vec.mu(m, t) != free_vec.mu(m, free_vec.flip(t)):
      return _fail(x=x, y=y)

  def coassociativity(rng, w):
    x = _sample_vec(rng, w, sample)
    d = free_vec.delta(x)
    if free_vec.delta_at(d, 0) != free_vec.delta_at(d, 1):
      return _fail(x=x)

  def counit(rng, w):
    x = _sample_vec(rng, w, sample)
    d = free_vec.delta(x)
    lifted = free_vec.lift(x)
    if free_vec.eps_at(d, 0) != lifted or free_vec.eps_at(d, 1) != lifted:
      return _fail(x=x)

  def cocommutativity(rng, w):
    x = _sample_vec(rng, w, sample)
    d = free_vec.delta(x)
    if free_vec.flip(d) != d:
      return _fail(x=x)

  def delta_multiplicative(rng, w):
    x, y = _sample_vec(rng, w, sample), _sample_vec(rng, w, sample)
    lhs = free_vec.delta(free_vec.product(m, x, y))
    rhs = free_vec.tensor_product(m, free_vec.delta(x), free_vec.delta(y))
    if lhs != rhs:
      return _fail(x=x, y=y)

  def eps_multiplicative(rng, w):
    x, y = _sample_vec(rng, w, sample), _sample_vec(rng, w, sample)
    if free_vec.eps(free_vec.product(m, x, y)) != (
        free_vec.eps(x) * free_vec.eps(y)):
      return _fail(x=x, y=y)

  def unit_compatibility(rng, w):
    c = _coeff(rng)
    one = free_vec.eta(m, c)
    if (free_vec.delta(one) != free_vec.tensor(free_vec.eta(m),
                                               one) or
        free_vec.eps(one) != c):
      return _fail(c=c)

  checks = [
      ("monoid_associativity", monoid_associativity),
      ("monoid_unit", monoid_unit),
      ("monoid_commutativity", monoid_commutativity),
      ("algebra_associativity", algebra_associativity),
      ("algebra_unit", algebra_unit),
      ("algebra_commutativity", algebra_commutativity),
      ("coassociativity", coassociativity),
      ("counit", counit),
      ("cocommutativity", cocommutativity),
      ("delta_multiplicative", delta_multiplicative),
      ("eps_multiplicative", eps_multiplicative),
      ("unit_compatibility", unit_compatibility),
  ]
  return [_Law("{}.{}".format(m.name, name), fn) for name, fn in checks]


def _seminorm_laws(name: str, norm: Callable[[Any, WeightSeq], Rational],
                   sample: Callable[[np.random.Generator, WeightSeq], Any],
                   weighted: bool) -> List[_Law]:
  """Absolute homogeneity and the triangle inequality."""

  def homogeneity(rng, w):
    x, c = sample(rng, w), _coeff(rng)
    if norm(x.scaled(c), w) != abs(c) * norm(x, w):
      return _fail(x=x, c=c)

  def triangle(rng, w):
    x, y = sample(rng, w), sample(rng, w)
    if norm(x + y, w) > norm(x, w) + norm(y, w):
      return _fail(x=x, y=y)

  return [
      _Law(name + ".homogeneity", homogeneity),
      _Law(name + ".triangle", triangle, needs_nonnegative_weights=weighted),
  ]


def _kernel(rng, w):
  v = _sample_tensor(rng, w)
  vanishes = tensor_algebra.seminorm_t(v, w) == 0
  all_in_kernel = all(tensor_algebra.in_kernel(k, w) for k in v.support())
  if vanishes != all_in_kernel:
    return _fail(v=v)


def _upsilon_correspondence(rng, w):
  state = _sample_state(rng, w, _MAX_RANK)
  if tensor_algebra.weight_functional(tensor_algebra.from_matrix(state),
                                      w) != operators.upsilon(state, w):
    return _fail(state=matrix_state.format_state(state))


def _operator_correspondence(rng, w):
  state = _sample_state(rng, w, 2)
  word = _sample_word(rng, w)
  via_tensors = tensor_algebra.to_weighted_sum(
      tensor_algebra.apply_word(word, tensor_algebra.from_matrix(state)))
  via_matrices = operators.expand_word(word,
                                       matrix_state.WeightedSum.of(state))
  if via_tensors != via_matrices:
    return _fail(state=matrix_state.format_state(state),
                 word=operators.format_word(word))


def _all_laws() -> List[_Law]:
  laws = []
  laws += _monoid_laws(monoids.G1, _sample_g1)
  laws += _monoid_laws(monoids.G2, _sample_g2)
  laws += _monoid_laws(monoids.V, _sample_v)
  laws += _seminorm_laws("seminorm1", free_vec.seminorm1,
                         lambda rng, w: _sample_vec(rng, w, _sample_g1), True)
  laws += _seminorm_laws("seminorm2", lambda v, w: free_vec.seminorm2(v),
                         lambda rng, w: _sample_vec(rng, w, _sample_g2), False)
  laws += _seminorm_laws("seminorm_v", free_vec.seminorm_v,
                         lambda rng, w: _sample_vec(rng, w, _sample_v), True)
  laws += _seminorm_laws("seminorm_t", tensor_algebra.seminorm_t,
                         _sample_tensor, True)
  laws.append(_Law("seminorm_t.kernel", _kernel,
                   needs_nonnegative_weights=True))
  laws.append(_Law("tensor.upsilon_correspondence", _upsilon_correspondence))
  laws.append(
      _Law("tensor.operator_correspondence", _operator_correspondence))
  return laws


def law_names() -> List[str]:
  return [law.name for law in _all_laws()]


def run_axiom_suite(trials: int = 500,
                    seed: int = 0,
                    weights: Optional[WeightSeq] = None) -> AxiomReport:
  """Checks every law on `trials` random inputs.

  Args:
    trials: random inputs per law.
    seed: nonnegative root seed.
    weights: the b_g used by the seminorms; base weights by default.

  Returns:
    The report, keyed by law name.
  """
  if trials < 1:
    raise ValueError("trials must be positive, got {}".format(trials))
  if seed < 0:
    raise ValueError("seed must be nonnegative, got {}".format(seed))
  w = weights_lib.WeightSeq.base() if weights is None else weights
  if w.known_up_to() is not None and w.known_up_to() < 0:
    raise ValueError("weights must give at least b_0")
  nonnegative = w.is_nonnegative()
  report = {}  # type: AxiomReport
  for law_index, law in enumerate(_all_laws()):
    if law.needs_nonnegative_weights and not nonnegative:
      logging.warning("Skipping %s: %s", law.name, _NEGATIVE_WEIGHTS_REASON)
      report[law.name] = {
          "trials": 0,
          "failures": 0,
          "skipped": _NEGATIVE_WEIGHTS_REASON,
      }
      continue
    entry = {"trials": trials, "failures": 0}  # type: Dict[str, Any]
    for trial in range(trials):
      rng = np.random.default_rng([seed, law_index, trial])
      counterexample = law.check(rng, w)
      if counterexample is not None:
        entry["failures"] += 1
        if "first_counterexample" not in entry:
          entry["first_counterexample"] = counterexample
          logging.error("%s failed on trial %d: %s", law.name, trial,
                        counterexample)
    report[law.name] = entry
  logging.info("Axiom suite: %d laws, %d trials each, seed %d", len(report),
               trials, seed)
  return report


def report_passed(report: AxiomReport) -> bool:
  return all(entry["failures"] == 0 for entry in report.values())


def format_report(report: AxiomReport) -> str:
  return json.dumps(report, sort_keys=True, indent=2)
