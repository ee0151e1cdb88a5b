# Copyright 2026 The CSDC Simulator Authors
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

"""Simulator for controlled secure direct communication over GHZ states."""

from ._core import (
    __version__,
    bell_probabilities_after_encoding,
    build_decode_table,
    decode,
    detection_oracle,
    estimate_detection,
    ghz_gram_residual,
    run_session,
    run_verify,
    verify_ghz_expansion,
    verify_swap_identity,
)

__all__ = [
    "__version__",
    "bell_probabilities_after_encoding",
    "build_decode_table",
    "decode",
    "detection_oracle",
    "estimate_detection",
    "ghz_gram_residual",
    "run_session",
    "run_verify",
    "verify_ghz_expansion",
    "verify_swap_identity",
]
