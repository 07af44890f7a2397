"""Square roots of -1 in real Clifford algebras Cl(p,q)."""

import json

from ._core import (
    DomainError,
    InconsistencyError,
    MultiVector,
    ParseError,
    Signature,
    UnsupportedSignature,
    centralizer,
    find_conjugator,
    golden_files,
    manifold_csv,
    representative_root,
)
from . import _core

__all__ = [
    "DomainError",
    "InconsistencyError",
    "MultiVector",
    "ParseError",
    "Signature",
    "UnsupportedSignature",
    "centralizer",
    "class_of",
    "classify",
    "find_conjugator",
    "golden_files",
    "manifold_csv",
    "represent",
    "representative_root",
    "roots",
    "verify_golden",
]


def classify(p, q):
    return json.loads(_core.classify_json(p, q))


def roots(p, q):
    return json.loads(_core.roots_json(p, q))


def represent(p, q):
    return json.loads(_core.represent_json(p, q))


def class_of(f):
    return json.loads(_core.class_of_json(f))


def verify_golden(path):
    return json.loads(_core.verify_golden_json(str(path)))
