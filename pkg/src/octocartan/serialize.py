"""JSON forms for the CLI: octonions, matrices, reports, factors.

Floats are emitted with 17 significant digits, enough to reproduce every
binary64 value exactly, so matrices survive a CLI round trip bit-for-bit.
Emission is hand-rolled (json.dumps chooses shortest-repr formatting) and
parsing goes through the standard json module.
"""

import json

import numpy as np

from . import linalg


def _fmt(x):
    return format(float(x), ".17g")


def dumps(obj):
    """Deterministic compact JSON with fixed-precision floats."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ",".join(f"{json.dumps(str(k))}:{dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if obj is None:
        return "null"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _pair(z):
    return [float(np.real(z)), float(np.imag(z))]


def octonion_to_obj(v):
    v = np.asarray(v, dtype=complex)
    if v.shape != (8,):
        raise ValueError(f"expected 8 octonion coefficients, got shape {v.shape}")
    return [_pair(z) for z in v]


def octonion_from_obj(obj):
    if not isinstance(obj, list) or len(obj) != 8:
        raise ValueError("octonion JSON must be an array of 8 [re, im] pairs")
    return np.array([_complex_from(p) for p in obj])


def _complex_from(p):
    if not isinstance(p, list) or len(p) != 2:
        raise ValueError("expected an [re, im] pair")
    return complex(float(p[0]), float(p[1]))


def matrix_to_obj(g):
    g = linalg.as_cmatrix(g)
    return {"rows": [[_pair(z) for z in row] for row in g]}


def matrix_from_obj(obj):
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError('matrix JSON must be {"rows": [...]}')
    rows = obj["rows"]
    if not isinstance(rows, list) or len(rows) != 8:
        raise ValueError("matrix JSON needs 8 rows")
    data = []
    for row in rows:
        if not isinstance(row, list) or len(row) != 8:
            raise ValueError("matrix JSON rows need 8 [re, im] pairs")
        data.append([_complex_from(p) for p in row])
    return linalg.as_cmatrix(np.array(data))


def table_to_obj(table):
    return [[{"sign": int(table.sign[i, j]), "e": int(table.index[i, j])}
             for j in range(8)] for i in range(8)]


def membership_to_obj(rep):
    return {
        "orthogonal": rep.orthogonal,
        "special": rep.special,
        "fixes_e0": rep.fixes_e0,
        "fixes_e1": rep.fixes_e1,
        "is_automorphism": rep.is_automorphism,
        "has_triality_companion": rep.has_triality_companion,
        "is_real": rep.is_real,
        "residuals": {
            "orthogonal": rep.residual_orthogonal,
            "special": rep.residual_special,
            "fixes_e0": rep.residual_e0,
            "fixes_e1": rep.residual_e1,
            "is_automorphism": rep.residual_automorphism,
            "has_triality_companion": rep.residual_triality,
            "is_real": rep.residual_real,
        },
    }


def factors_to_obj(f):
    return {
        "pair": f.pair,
        "theta": f.theta,
        "k": matrix_to_obj(f.k),
        "h": matrix_to_obj(f.h),
        "residual": f.residual,
    }


def realform_to_obj(r):
    return {
        "algebra": r.algebra,
        "dim": r.dim_fixed,
        "dim_compact": r.dim_compact,
        "dim_noncompact": r.dim_noncompact,
        "signature": {"pos": r.signature[0], "neg": r.signature[1],
                      "zero": r.signature[2]},
        "rank": r.real_rank_estimate,
        "rank_trials": list(r.rank_trials),
        "inconclusive": r.inconclusive,
    }
