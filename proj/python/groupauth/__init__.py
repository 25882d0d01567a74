# Copyright 2026 The groupauth Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Group authentication with split Naccache-Stern keys."""

from groupauth._core import (
    Challenge,
    DomainError,
    GroupAuthError,
    GroupLargerThanPrimeCount,
    InsufficientPrimes,
    KeyShare,
    MalformedCiphertext,
    NonMonotone,
    PolicyParseError,
    PrivateKey,
    PublicKey,
    Response,
    SchemaError,
    ShareSequence,
    UnknownIdentifier,
    Verdict,
    VerifierState,
    audit,
    authorized_groups,
    compile_monotone,
    compile_sequence,
    decrypt,
    encrypt,
    is_monotone,
    keygen,
    make_challenge,
    respond,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
