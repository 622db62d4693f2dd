"""Z2 homology, van Kampen obstructions, Helly numbers and constrained chain maps.

Complexes are passed as lists of simplices (lists of vertex ids); families and
bundles use the same JSON layout as the ``hb`` command-line tool, given either
as text or as already-decoded dicts.
"""

import json

from . import _core
from ._core import (
    BudgetExceeded,
    DegenerateConfiguration,
    InputError,
    InsufficientFamily,
    InvariantViolation,
    barycentric_subdivision,
    betti,
    closure,
    deleted_product_betti,
    eml_flip_check,
    eml_triangulation,
    f_vector,
    obstruction_nonzero,
    rescale,
)

__all__ = [
    "BudgetExceeded",
    "DegenerateConfiguration",
    "InputError",
    "InsufficientFamily",
    "InvariantViolation",
    "almost_embedding_verdict",
    "barycentric_subdivision",
    "betti",
    "build_ccm",
    "closure",
    "deleted_product_betti",
    "eml_flip_check",
    "eml_triangulation",
    "example",
    "f_vector",
    "helly_number",
    "obstruction_nonzero",
    "rescale",
    "verify_constrained",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def example(kind, b=1, d=2, n=3, k=1):
    """Example family (or the gamma3prime complex) as a dict."""
    return json.loads(_core.generate(kind, b=b, d=d, n=n, k=k))


def helly_number(family, budget=20):
    return _core.helly_number(_text(family), budget)


def build_ccm(complex, family, b):
    """Bundle dict for a complex given as a JSON dict/text or a list of simplices."""
    if isinstance(complex, list):
        complex = {"maximal_simplices": complex}
    return json.loads(_core.build_ccm(_text(complex), _text(family), b))


def verify_constrained(bundle):
    return _core.verify_constrained(_text(bundle))


def almost_embedding_verdict(bundle):
    return _core.almost_embedding_verdict(_text(bundle))
