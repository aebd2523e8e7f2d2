"""JSON interchange for forms, vectors, matrices, and reports.

Exact scalars travel as canonical "p/q" strings (with an optional imaginary
part), floats as JSON numbers - the latter only in documents whose root
carries "mode": "float".  Matrices are row-major.  Reports are serialized by
:func:`dumps_canonical`: sorted keys, no incidental whitespace, floats in
fixed 17-significant-digit form, so a report is byte-reproducible from
(command, inputs, seed, mode).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .forms import ExteriorForm
from .scalars import EXACT, FLOAT, ComplexRational, sim, sre


class JsonFormatError(ValueError):
    """Document does not follow the interchange schema."""


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def scalar_to_obj(x, mode):
    if mode == FLOAT:
        re, im = sre(x), sim(x)
        return {"re": float(re), "im": float(im)}
    return {"re": str(Fraction(sre(x))), "im": str(Fraction(sim(x)))}


def scalar_from_obj(obj, mode):
    re, im = obj.get("re", 0), obj.get("im", 0)
    if mode == FLOAT:
        if isinstance(re, str) or isinstance(im, str):
            raise JsonFormatError("float documents must use JSON numbers")
        return complex(re, im) if im else float(re)
    if isinstance(re, (int, str)):
        re = Fraction(re)
    else:
        raise JsonFormatError(f"exact documents need 'p/q' strings, got {re!r}")
    if isinstance(im, (int, str)):
        im = Fraction(im)
    else:
        raise JsonFormatError(f"exact documents need 'p/q' strings, got {im!r}")
    return ComplexRational(re, im) if im else re


def number_to_obj(x, mode):
    """Bare real scalar (vectors/matrices): string in exact mode, number in float."""
    if mode == FLOAT:
        return float(x)
    return str(Fraction(x))


def number_from_obj(obj, mode):
    if mode == FLOAT:
        if isinstance(obj, str):
            raise JsonFormatError("float documents must use JSON numbers")
        return float(obj)
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    raise JsonFormatError(f"exact documents need 'p/q' strings, got {obj!r}")


# ---------------------------------------------------------------------------
# forms / vectors / matrices
# ---------------------------------------------------------------------------

def form_to_obj(form: ExteriorForm):
    return {
        "dim": form.dim,
        "degree": form.degree,
        "mode": form.mode,
        "terms": [
            {"idx": list(idx), **scalar_to_obj(c, form.mode)}
            for idx, c in sorted(form.terms.items())
        ],
    }


def form_from_obj(obj):
    mode = obj.get("mode", EXACT)
    if mode not in (EXACT, FLOAT):
        raise JsonFormatError(f"unknown mode {mode!r}")
    try:
        dim, degree = int(obj["dim"]), int(obj["degree"])
        terms = {
            tuple(t["idx"]): scalar_from_obj(t, mode) for t in obj.get("terms", [])
        }
    except (KeyError, TypeError) as exc:
        raise JsonFormatError(f"malformed form document: {exc}") from exc
    return ExteriorForm(dim, degree, terms, mode=mode)


def vector_to_obj(v, mode):
    return [number_to_obj(x, mode) for x in v]


def vector_from_obj(obj, mode):
    return tuple(number_from_obj(x, mode) for x in obj)


def matrix_to_obj(m, mode):
    return [vector_to_obj(row, mode) for row in m]


def matrix_from_obj(obj, mode):
    rows = [vector_from_obj(row, mode) for row in obj]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise JsonFormatError("ragged matrix")
    return [list(r) for r in rows]


# ---------------------------------------------------------------------------
# canonical report serialization
# ---------------------------------------------------------------------------

def _canonical(obj):
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        return "{" + ",".join(f"{json.dumps(str(k))}:{_canonical(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_canonical(x) for x in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return repr(obj)
    if isinstance(obj, float):
        return format(obj, ".17g")
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, ComplexRational):
        return json.dumps(f"{obj.re}{'+' if obj.im >= 0 else ''}{obj.im}i")
    if isinstance(obj, complex):
        return json.dumps(f"{format(obj.real, '.17g')}{'+' if obj.imag >= 0 else ''}{format(obj.imag, '.17g')}i")
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)}")


def dumps_canonical(obj) -> str:
    """Deterministic JSON text: sorted keys, fixed float formatting."""
    return _canonical(obj)


def write_report(obj, path):
    text = dumps_canonical(obj)
    with open(path, "w") as fh:
        fh.write(text + "\n")
    return text
