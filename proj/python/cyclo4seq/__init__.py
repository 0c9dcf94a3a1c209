"""Quaternary sequences of period 2p from cyclotomic classes of order four.

Thin wrappers over the compiled core; the *_json entry points mirror the CLI
output schemas exactly, so anything valid against schemas/*.schema.json can
also be produced here.
"""

import json as _json

from ._core import (  # noqa: F401
    __version__,
    acf_json,
    acf_pairs,
    find_primitive_root,
    gen_json,
    lc_json,
    numbers_json,
    sequence_values,
    survey_json,
    verify_json,
)


def gen(p, g=0, preset="", jvec=(), lvec=(), variant="standard"):
    return _json.loads(gen_json(p, g, preset, list(jvec), list(lvec), variant))


def acf(p, g=0, preset="", jvec=(), lvec=(), variant="standard"):
    return _json.loads(acf_json(p, g, preset, list(jvec), list(lvec), variant))


def lc(p, ring, g=0, preset="", jvec=(), lvec=(), variant="standard", diagnostics=False):
    return _json.loads(lc_json(p, ring, g, preset, list(jvec), list(lvec), variant, diagnostics))


def numbers(p, g=0):
    return _json.loads(numbers_json(p, g))


def survey(p, g=0, with_lc_z4=False):
    return _json.loads(survey_json(p, g, with_lc_z4))


def verify(p, g=0, diag_limit=24):
    return _json.loads(verify_json(p, g, diag_limit))
