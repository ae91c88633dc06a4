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
r"""Command-line tool for the omega numbers and the structures around them.

Usage:
python -m hkmatrix.tools.cli <command> [--flags]

Commands:
  omega    omega_0..omega_n of a model, by one pipeline or by all of them.
  invert   field data f (b_k) recovered from a generating function F.
  forward  generating function Phi (c_k) built from field data f.
  word     Upsilon of an operator word applied to 1, by matrices and calculus.
  axioms   randomized checks of the monoid, bialgebra and seminorm laws.
  bound    right-hand sides of the Laplacian power estimates.

Exact values are printed as "p/q". Decimal columns are labeled approx and
carry 12 significant digits.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 budget
exceeded.
"""

import decimal
import json
import sys
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, TextIO

from absl import app
from absl import flags
from absl import logging

from hkmatrix.beam import expansion
from hkmatrix.bialgebra import axiom_suite
from hkmatrix.calculus import bounds
from hkmatrix.calculus import operator_word
from hkmatrix.calculus import word_eval
from hkmatrix.coders import series_coder
from hkmatrix.matrix import matrix_state
from hkmatrix.matrix import operators
from hkmatrix.matrix import weights as weights_lib
from hkmatrix.series import catalog
from hkmatrix.series import generating_functions
from hkmatrix.series import model_spec
from hkmatrix.series import truncated_series as ts
from hkmatrix.types import common_types

Rational = common_types.Rational

COMMANDS = ("omega", "invert", "forward", "word", "axioms", "bound")
METHODS = ("matrix", "series", "calculus", "beam", "all")
MODES = ("normalize", "shift")
FORMATS = ("tsv", "json")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3

_DEFAULT_BUDGET = 5_000_000
_DEFAULT_ORDER = 12
_APPROX_DIGITS = 12
# Pipelines compared by --method=all.
_CROSS_CHECK_METHODS = ("matrix", "series", "calculus")

flags.DEFINE_string(
    "model", None,
    "Catalog model: one of {}. Defaults to base when --model_file is not set."
    .format(", ".join(catalog.CATALOG_NAMES)))
flags.DEFINE_string(
    "model_file", None,
    "Coefficient file: egf-b gives field data f, series-c a generating "
    "function F.")
flags.DEFINE_string("alpha", None, "Exponent of the binomial model, p/q.")
flags.DEFINE_integer("n", 4, "Largest index (omega) or the power (bound).")
flags.DEFINE_integer("order", _DEFAULT_ORDER,
                     "Output order for invert and forward.")
flags.DEFINE_enum("method", "matrix", METHODS, "Pipeline used by omega/bound.")
flags.DEFINE_enum("mode", "normalize", MODES,
                  "How F(0) != 1 is handled: divide by F(0) or shift.")
flags.DEFINE_enum("format", "tsv", FORMATS, "Output format.")
flags.DEFINE_integer("budget", _DEFAULT_BUDGET,
                     "Cap on distinct states per expansion step.")
flags.DEFINE_integer("trials", 500, "Random trials per law (axioms).")
flags.DEFINE_integer("seed", 0, "Root seed (axioms).")
flags.DEFINE_string("word", "", "Operator word over A and B, e.g. A^2BA.")
flags.DEFINE_string("f", None, "Field data for forward: catalog name or file.")
flags.DEFINE_string("F", None,
                    "Generating function for invert: catalog name or file.")
flags.DEFINE_integer("d", 1, "Dimension (bound).")
flags.DEFINE_string("C", "1", "Positive constant C, p/q (bound).")

FLAGS = flags.FLAGS


class VerificationMismatchError(RuntimeError):
  """Raised when two pipelines disagree."""


class RunConfig(
    NamedTuple("RunConfig", [
        ("command", str),
        ("model", Optional[str]),
        ("model_file", Optional[str]),
        ("alpha", Optional[str]),
        ("n", int),
        ("order", int),
        ("method", str),
        ("mode", str),
        ("output_format", str),
        ("budget", int),
        ("trials", int),
        ("seed", int),
        ("word", str),
        ("field_data", Optional[str]),
        ("generating_function", Optional[str]),
        ("d", int),
        ("c", str),
    ])):
  """Everything a command needs; see the flag definitions for meanings."""
  __slots__ = ()

  def __new__(cls,
              command: str,
              model: Optional[str] = None,
              model_file: Optional[str] = None,
              alpha: Optional[str] = None,
              n: int = 4,
              order: int = _DEFAULT_ORDER,
              method: str = "matrix",
              mode: str = "normalize",
              output_format: str = "tsv",
              budget: int = _DEFAULT_BUDGET,
              trials: int = 500,
              seed: int = 0,
              word: str = "",
              field_data: Optional[str] = None,
              generating_function: Optional[str] = None,
              d: int = 1,
              c: str = "1"):
    if command not in COMMANDS:
      raise ValueError("Unknown command {!r}; expected one of {}".format(
          command, ", ".join(COMMANDS)))
    if method not in METHODS:
      raise ValueError("Unknown method {!r}".format(method))
    if mode not in MODES:
      raise ValueError("Unknown mode {!r}".format(mode))
    if output_format not in FORMATS:
      raise ValueError("Unknown format {!r}".format(output_format))
    if model is not None and model_file is not None:
      raise ValueError("Give at most one of --model and --model_file")
    if budget < 1:
      raise ValueError("budget must be positive, got {}".format(budget))
    return super(RunConfig, cls).__new__(cls, command, model, model_file,
                                         alpha, n, order, method, mode,
                                         output_format, budget, trials, seed,
                                         word, field_data, generating_function,
                                         d, c)


def run_config_from_flags(command: str) -> RunConfig:
  return RunConfig(
      command=command,
      model=FLAGS.model,
      model_file=FLAGS.model_file,
      alpha=FLAGS.alpha,
      n=FLAGS.n,
      order=FLAGS.order,
      method=FLAGS.method,
      mode=FLAGS.mode,
      output_format=FLAGS.format,
      budget=FLAGS.budget,
      trials=FLAGS.trials,
      seed=FLAGS.seed,
      word=FLAGS.word,
      field_data=FLAGS.f,
      generating_function=FLAGS.F,
      d=FLAGS.d,
      c=FLAGS.C)


def format_approx(value: Rational) -> str:
  """value to 12 significant digits."""
  with decimal.localcontext() as ctx:
    ctx.prec = _APPROX_DIGITS
    approx = decimal.Decimal(value.numerator) / decimal.Decimal(
        value.denominator)
  return "{:.{}g}".format(approx, _APPROX_DIGITS)


def _alpha(config: RunConfig) -> Optional[Rational]:
  return None if config.alpha is None else common_types.ToRational(
      config.alpha)


def _model_spec(config: RunConfig) -> model_spec.ModelSpec:
  shift = config.mode == "shift"
  if config.model_file is not None:
    cf = series_coder.read_coefficient_file(config.model_file)
    if cf.kind == series_coder.EGF_B:
      return model_spec.ModelSpec.from_f(cf.coeffs)
    return model_spec.ModelSpec.from_generating_function(cf.coeffs, shift)
  name = config.model or "base"
  if name == "base" and config.alpha is None and not shift:
    return model_spec.ModelSpec.base()
  return model_spec.ModelSpec.named(name, _alpha(config), shift)


def _weights(resolved: model_spec.ResolvedModel) -> weights_lib.WeightSeq:
  if resolved.weights is None:
    return weights_lib.WeightSeq.base()
  return weights_lib.WeightSeq.from_coefficients(resolved.weights)


def _omega_by_method(method: str, n: int, resolved: model_spec.ResolvedModel,
                     budget: int) -> List[Rational]:
  """omega_0..omega_n with the scale applied and the offset added to omega_0."""
  scale = resolved.scale
  phi = resolved.generating_function
  if method == "matrix":
    values = operators.omega_sequence(n, _weights(resolved), scale, budget)
  elif method == "series":
    values = [
        scale * generating_functions.derivatives_at_zero(phi, k)
        for k in range(n + 1)
    ]
  elif method == "calculus":
    values = [
        scale * word_eval.omega_by_calculus(k, phi) for k in range(n + 1)
    ]
  else:
    values = expansion.ComputeOmegaSequence(n, _weights(resolved), scale,
                                            budget)
  values[0] += resolved.offset
  return values


def _check_agreement(results: Dict[str, Sequence[Rational]]) -> None:
  """Raises VerificationMismatchError unless all result lists agree."""
  (first_method, first), *rest = list(results.items())
  for method, values in rest:
    for k, (expected, actual) in enumerate(zip(first, values)):
      if expected != actual:
        raise VerificationMismatchError(
            "omega_{}: {} gives {} but {} gives {}".format(
                k, first_method, common_types.FormatRational(expected),
                method, common_types.FormatRational(actual)))


def _write_table(out: TextIO, config: RunConfig, header: Sequence[str],
                 rows: Sequence[Sequence[Rational]], index_name: str,
                 extra: Optional[Dict[str, object]] = None) -> None:
  """Writes (index, exact value) rows as TSV or JSON."""
  if config.output_format == "json":
    payload = dict(extra or {})
    payload["command"] = config.command
    payload["values"] = [{
        index_name: index,
        "exact": common_types.FormatRational(value),
        "approx": format_approx(value),
    } for index, value in rows]
    out.write(json.dumps(payload, sort_keys=True) + "\n")
    return
  out.write("\t".join(header) + "\n")
  for index, value in rows:
    out.write("{}\t{}\t{}\n".format(index, common_types.FormatRational(value),
                                    format_approx(value)))


def _cmd_omega(config: RunConfig, out: TextIO) -> int:
  if config.n < 0:
    raise ValueError("n must be nonnegative, got {}".format(config.n))
  resolved = model_spec.resolve_model(_model_spec(config), config.n)
  methods = (_CROSS_CHECK_METHODS
             if config.method == "all" else (config.method,))
  results = {}
  for method in methods:
    results[method] = _omega_by_method(method, config.n, resolved,
                                       config.budget)
    logging.info("omega_0..omega_%d computed by %s", config.n, method)
  _check_agreement(results)
  values = results[methods[0]]
  _write_table(out, config, ("n", "omega_n", "approx"),
               list(enumerate(values)), "n", {"method": config.method})
  return EXIT_OK


def _read_series(source: str, config: RunConfig, column: str,
                 order: int) -> ts.TruncatedSeries:
  """A catalog column at `order`, or the series of a coefficient file."""
  if source in catalog.CATALOG_NAMES:
    entry = catalog.catalog(source, order, _alpha(config))
    return getattr(entry, column)
  return series_coder.read_coefficient_file(source).to_series()


def _write_coefficients(out: TextIO, config: RunConfig, kind: str,
                        s: ts.TruncatedSeries) -> None:
  """Writes s as raw coefficients (series-c) or as b_k (egf-b)."""
  if config.output_format == "json":
    encode = (series_coder.encode_series if kind == series_coder.SERIES_C
              else series_coder.encode_egf)
    out.write(encode(s) + "\n")
    return
  if kind == series_coder.SERIES_C:
    name, values = "c_k", s.coeffs
  else:
    name, values = "b_k", ts.to_egf(s)
  _write_table(out, config, ("k", name, "approx"), list(enumerate(values)),
               "k")


def _cmd_invert(config: RunConfig, out: TextIO) -> int:
  if config.generating_function is None:
    raise ValueError("invert needs --F")
  gf = _read_series(config.generating_function, config, "generating_function",
                    config.order + 2)
  if config.mode == "shift":
    phi, _ = generating_functions.shift_generating_function(gf)
  else:
    phi, _ = generating_functions.normalize_generating_function(gf)
  f = generating_functions.f_from_phi(phi)
  if f.order < config.order:
    raise ValueError("F is known to order {}, which gives f to order {} < {}"
                     .format(gf.order, f.order, config.order))
  _write_coefficients(out, config, series_coder.EGF_B, f.truncate(config.order))
  return EXIT_OK


def _cmd_forward(config: RunConfig, out: TextIO) -> int:
  if config.field_data is None:
    raise ValueError("forward needs --f")
  f = _read_series(config.field_data, config, "field_data", config.order)
  phi = generating_functions.phi_from_f(f, config.order)
  _write_coefficients(out, config, series_coder.SERIES_C, phi)
  return EXIT_OK


def _cmd_word(config: RunConfig, out: TextIO) -> int:
  word = operator_word.OperatorWord.parse(config.word)
  resolved = model_spec.resolve_model(_model_spec(config),
                                      word_eval.required_order(word))
  expanded = operators.expand_word(
      word.to_operator_letters(),
      matrix_state.WeightedSum.of(matrix_state.UNIT), config.budget)
  by_matrix = operators.upsilon_sum(expanded, _weights(resolved))
  by_calculus = word_eval.eval_word(word, resolved.generating_function)
  if by_matrix != by_calculus:
    raise VerificationMismatchError(
        "Word {}: matrix gives {} but calculus gives {}".format(
            word, common_types.FormatRational(by_matrix),
            common_types.FormatRational(by_calculus)))
  _write_table(out, config, ("word", "value", "approx"),
               [(str(word), by_matrix)], "word")
  return EXIT_OK


def _cmd_axioms(config: RunConfig, out: TextIO) -> int:
  weights = None
  if config.model is not None or config.model_file is not None:
    weights = _weights(
        model_spec.resolve_model(_model_spec(config), config.order))
  logging.info("Axiom suite seed: %d", config.seed)
  report = axiom_suite.run_axiom_suite(config.trials, config.seed, weights)
  if config.output_format == "json":
    out.write(json.dumps({"seed": config.seed, "report": report},
                         sort_keys=True) + "\n")
  else:
    out.write("seed\t{}\n".format(config.seed))
    out.write("law\ttrials\tfailures\tnote\n")
    for law in sorted(report):
      entry = report[law]
      note = entry.get("skipped", entry.get("first_counterexample", ""))
      out.write("{}\t{}\t{}\t{}\n".format(law, entry["trials"],
                                          entry["failures"], note))
  if not axiom_suite.report_passed(report):
    logging.error("Axiom suite failed; reproduce with --seed=%d --trials=%d",
                  config.seed, config.trials)
    return EXIT_MISMATCH
  return EXIT_OK


def _cmd_bound(config: RunConfig, out: TextIO) -> int:
  inp = bounds.BoundInput(config.d, common_types.ToRational(config.c),
                          config.n)

  def by_matrix(m: int) -> Rational:
    return operators.omega_n(m, weights_lib.WeightSeq.base(),
                             budget=config.budget)

  sources = {"series": bounds.base_omega_by_series, "matrix": by_matrix}
  if config.method == "all":
    methods = ("series", "matrix")
  elif config.method in sources:
    methods = (config.method,)
  else:
    raise ValueError("bound supports --method series, matrix or all")
  results = {
      method: [
          bounds.laplacian_power_bound(inp, sources[method]),
          bounds.integrated_laplacian_power_bound(inp, sources[method]),
      ] for method in methods
  }
  _check_agreement(results)
  _write_table(out, config, ("bound", "value", "approx"),
               list(zip(("laplacian_power", "integrated_laplacian_power"),
                        results[methods[0]])), "bound")
  return EXIT_OK


_COMMAND_FNS = {
    "omega": _cmd_omega,
    "invert": _cmd_invert,
    "forward": _cmd_forward,
    "word": _cmd_word,
    "axioms": _cmd_axioms,
    "bound": _cmd_bound,
}  # type: Dict[str, Callable[[RunConfig, TextIO], int]]


def run(config: RunConfig, out: TextIO = sys.stdout) -> int:
  """Runs one command and maps its outcome to an exit code."""
  try:
    return _COMMAND_FNS[config.command](config, out)
  except VerificationMismatchError as e:
    logging.error("Verification mismatch: %s", e)
    return EXIT_MISMATCH
  except operators.ExpansionBudgetExceededError as e:
    logging.error("%s", e)
    return EXIT_BUDGET_EXCEEDED
  except (ValueError, TypeError, OSError) as e:
    logging.error("Input error: %s", e)
    return EXIT_INPUT_ERROR
  except RuntimeError as e:
    logging.error("Internal consistency check failed: %s", e)
    return EXIT_MISMATCH


def main(argv):
  if len(argv) != 2 or argv[1] not in COMMANDS:
    logging.error("Usage: %s <%s> [--flags]", argv[0], "|".join(COMMANDS))
    return EXIT_INPUT_ERROR
  try:
    config = run_config_from_flags(argv[1])
  except ValueError as e:
    logging.error("Input error: %s", e)
    return EXIT_INPUT_ERROR
  return run(config)


def run_main():
  app.run(main)


if __name__ == "__main__":
  run_main()
