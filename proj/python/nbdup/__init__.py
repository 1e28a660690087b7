# Copyright 2026 The nbdup Authors
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
"""Duplicate code cells in notebook repositories."""

import json

from ._core import (
    NbdupError,
    abstract_identifiers,
    denominator,
    duplicate_ratio,
    levenshtein,
    levenshtein_bounded,
    normalize,
    parse_notebook,
)
from ._core import scan_repository as _scan_repository_json


def scan_repository(root, **kwargs):
    """Scans `root` and returns the report as a dict (see the JSON schema)."""
    return json.loads(_scan_repository_json(str(root), **kwargs))


__all__ = [
    "NbdupError",
    "abstract_identifiers",
    "denominator",
    "duplicate_ratio",
    "levenshtein",
    "levenshtein_bounded",
    "normalize",
    "parse_notebook",
    "scan_repository",
]
