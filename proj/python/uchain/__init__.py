"""Chain complexes over F2[U]: normal forms, homology and the Lefschetz check.

Complexes and maps are passed in the same text format the command-line tool
reads. Results are plain dicts decoded from the library's JSON output.
"""

import json

from . import _core
from ._core import UChainError

__all__ = [
    "UChainError",
    "classify",
    "homology",
    "delta_quantity",
    "lefschetz",
    "verify",
    "les_check",
    "mapping_torus",
    "realize",
    "canonical_text",
]


def classify(complex_text):
    return json.loads(_core.classify(complex_text))


def homology(complex_text, flavor="minus"):
    return json.loads(_core.homology(complex_text, flavor))


def delta_quantity(complex_text, map_text, map_first=False):
    return _core.delta_quantity(complex_text, map_text, map_first)


def lefschetz(complex_text, map_text):
    return json.loads(_core.lefschetz(complex_text, map_text))


def verify(seed, trials, max_rank=8, max_exponent=6, jobs=1, mutate=False):
    return json.loads(_core.verify(seed, trials, max_rank, max_exponent, jobs, mutate))


def les_check(complex_text):
    return json.loads(_core.les_check(complex_text))


def mapping_torus(complex_text, map_text):
    # JSON object keys are strings; gradings are ints here.
    return {int(k): v for k, v in json.loads(_core.mapping_torus(complex_text, map_text)).items()}


def realize(one_steps=(), two_steps=()):
    """Text of the standard complex with the given 1-step gradings and (grading, exponent) 2-steps."""
    return _core.realize(list(one_steps), [tuple(t) for t in two_steps])


def canonical_text(complex_text):
    return _core.canonical_text(complex_text)
