import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeinpbw import _pykernels as py
from skeinpbw import kernels
from skeinpbw.laurent import ONE

ck = pytest.importorskip("skeinpbw._ckernels")

terms = st.dictionaries(st.integers(-10, 10), st.integers(-50, 50).filter(bool), max_size=6)


@given(terms, terms, st.sampled_from([1, -1]))
def test_add_terms(a, b, sign):
    assert ck.add_terms(a, b, sign) == py.add_terms(a, b, sign)


@given(terms, terms)
def test_mul_terms(a, b):
    assert ck.mul_terms(a, b) == py.mul_terms(a, b)


@given(terms, terms, st.integers(-3, 3))
def test_accumulate(a, b, scale):
    x, y = dict(a), dict(a)
    ck.accumulate(x, b, scale)
    py.accumulate(y, b, scale)
    assert x == y


@given(st.lists(st.integers(0, 7), max_size=6))
def test_reduce_word(daisy1, word):
    _, rs = daisy1
    word = tuple(word)
    out = []
    for mod in (ck, py):
        out.append(mod.reduce_word(word, rs._rules, {}, [10 ** 6], ONE))
    assert out[0] == out[1]


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, SKEINPBW_PURE="1")
    res = subprocess.run([sys.executable, "-c", "from skeinpbw import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "python"


def test_backends_print_identical_relators():
    from conftest import data_path
    outs = []
    for pure in ("0", "1"):
        env = dict(os.environ, SKEINPBW_PURE=pure)
        res = subprocess.run([sys.executable, "-m", "skeinpbw.cli", "relators", data_path("daisy1.json")],
                             env=env, capture_output=True, text=True, check=True)
        outs.append(res.stdout)
    assert outs[0] == outs[1] and outs[0].count("\n") == 30
