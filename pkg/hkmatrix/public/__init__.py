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
"""Module level imports for hkmatrix.public.

The exact series, matrix operator, bialgebra and operator calculus APIs.
"""

from hkmatrix.beam.expansion import ExpandOperatorSum
from hkmatrix.beam.expansion import OmegaFromStates
from hkmatrix.bialgebra.axiom_suite import run_axiom_suite
from hkmatrix.bialgebra.free_vec import FreeTensor
from hkmatrix.bialgebra.free_vec import FreeVec
from hkmatrix.bialgebra.monoids import G1Elem
from hkmatrix.bialgebra.monoids import G2Elem
from hkmatrix.bialgebra.monoids import star
from hkmatrix.bialgebra.monoids import VBasis
from hkmatrix.bialgebra.tensor_algebra import TensorElem
from hkmatrix.calculus.bounds import BoundInput
from hkmatrix.calculus.bounds import integrated_laplacian_power_bound
from hkmatrix.calculus.bounds import laplacian_power_bound
from hkmatrix.calculus.operator_word import OperatorWord
from hkmatrix.calculus.word_eval import eval_word
from hkmatrix.calculus.word_eval import omega_by_calculus
from hkmatrix.coders.series_coder import CoefficientFile
from hkmatrix.coders.series_coder import CoefficientFileError
from hkmatrix.coders.state_coder import decode_weighted_sum
from hkmatrix.coders.state_coder import encode_weighted_sum
from hkmatrix.matrix.matrix_state import Column
from hkmatrix.matrix.matrix_state import MatrixState
from hkmatrix.matrix.matrix_state import WeightedSum
from hkmatrix.matrix.operators import ExpansionBudgetExceededError
from hkmatrix.matrix.operators import expand_operator_sum
from hkmatrix.matrix.operators import expand_word
from hkmatrix.matrix.operators import omega_n
from hkmatrix.matrix.operators import omega_sequence
from hkmatrix.matrix.operators import upsilon
from hkmatrix.matrix.weights import WeightSeq
from hkmatrix.series.generating_functions import derivatives_at_zero
from hkmatrix.series.generating_functions import f_from_phi
from hkmatrix.series.generating_functions import phi_from_f
from hkmatrix.series.model_spec import ModelSpec
from hkmatrix.series.model_spec import resolve_model
from hkmatrix.series.truncated_series import OrderMismatchError
from hkmatrix.series.truncated_series import TruncatedSeries
