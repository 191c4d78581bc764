# Copyright 2026 The polsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Dressed-state Lambda-system STIRAP/saSTIRAP simulator for driven circuit QED.

All frequencies and rates are angular (rad/ns); divide by TWO_PI for GHz.
"""

from polsim._core import (  # noqa: F401
    TWO_PI,
    DressedStates,
    DriveConfig,
    EvolutionResult,
    EvolutionSummary,
    IntegratorConfig,
    PolaritonBasis,
    ProtocolConfig,
    PulseSchedule,
    RatesSource,
    SweepGrid,
    SweepMetric,
    SystemParams,
    Table1Report,
    Table1Row,
    TransitionTable,
    __version__,
    adiabaticity_ratio,
    build_hrwa,
    cd_envelope_closed_form,
    cd_generic,
    dark_state,
    dissipator,
    dressed_state_analytic,
    envelopes,
    fidelity,
    hermitian_eig,
    kron,
    lambda_hamiltonian,
    matrix_sqrt_psd,
    mixing_angle,
    polariton_basis,
    reproduce_table1,
    run_protocol,
    sweep2d,
    transition_table,
)
