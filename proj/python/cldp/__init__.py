# Copyright 2026 The CLDP Authors
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

"""Cooperative LDP mechanism for multi-user time series.

Per-user noise is read off a shared sine wave: the wave is partitioned among
the users, each user draws its per-sample noise from the amplitudes at its
partition's tossing points, and the collector's window sums see the injected
noise cancel.
"""

from cldp._core import (  # noqa: F401
    AggregateReport,
    CldpConfig,
    ConfigError,
    DomainError,
    EmptyInput,
    FileNotFound,
    IndexOutOfRange,
    LaplaceConfig,
    LengthMismatch,
    MissingColumn,
    NoiseMode,
    NoiseVector,
    ParseError,
    PartitionAssignment,
    PerturbedSeries,
    PrivacyReport,
    RawDataset,
    ShapeMismatch,
    SplitResult,
    SynthSignal,
    SynthSpec,
    TossingGrid,
    UserCountMismatch,
    UserSeries,
    aggregate,
    aggregate_error,
    aggregate_with_truth,
    assign_partitions,
    break_probability_log10,
    epsilon_proxy,
    export_csv,
    import_csv,
    laplace_perturb,
    load_power_csv,
    mse,
    partition_interval,
    perturb_user_series,
    perturb_window,
    privacy_report,
    residual,
    sample_noise_vector,
    split_users,
    synth_series,
    tossing_grid,
)

__version__ = "0.1.0"
