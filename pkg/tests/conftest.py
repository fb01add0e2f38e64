import json
import re
from pathlib import Path

import pytest
from hypothesis import settings

from skeinpbw.presentation import presentation_from_json
from skeinpbw.relators import build_rewrite_system
from skeinpbw.ribbon import CiliatedGraph, build_presentation

settings.register_profile("skeinpbw", deadline=None, max_examples=60)
settings.load_profile("skeinpbw")

DATA = Path(__file__).resolve().parent.parent / "data"


def data_path(name):
    return str(DATA / name)


def load_json(name):
    with open(DATA / name, encoding="utf-8") as fh:
        return json.load(fh)


def graph_presentation(name):
    return build_presentation(CiliatedGraph.from_json(load_json(name)))


def file_presentation(name):
    return presentation_from_json(load_json(name))


def one_generator(arc_type):
    if arc_type == "a":
        gens = [{"id": "a", "source": ["u", 0], "target": ["v", 0]}]
    else:
        height = {"d": "source_above", "c": "target_above"}[arc_type]
        gens = [{"id": "a", "source": ["u", 0], "target": ["u", 1], "height": height}]
    return presentation_from_json({"generators": gens})


@pytest.fixture(scope="session")
def one_loop():
    p = graph_presentation("one_loop.json")
    return p, build_rewrite_system(p)


@pytest.fixture(scope="session")
def daisy1():
    p = graph_presentation("daisy1.json")
    return p, build_rewrite_system(p)


@pytest.fixture(scope="session")
def daisy2():
    p = graph_presentation("daisy2.json")
    return p, build_rewrite_system(p)


@pytest.fixture(scope="session")
def type_a():
    p = one_generator("a")
    return p, build_rewrite_system(p)


@pytest.fixture(scope="session")
def type_d():
    p = one_generator("d")
    return p, build_rewrite_system(p)


@pytest.fixture(scope="session")
def type_c():
    p = one_generator("c")
    return p, build_rewrite_system(p)


# acceptance summary ------------------------------------------------------------

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = re.match(r"test_ac(\d+)_", item.name)
    if m and (rep.when == "call" or rep.failed):
        doc = (item.function.__doc__ or "").strip().splitlines()
        _ACCEPTANCE[f"AC{m.group(1)}"] = ("PASS" if rep.passed else "FAIL",
                                         doc[0] if doc else item.name)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s[2:])):
        status, doc = _ACCEPTANCE[label]
        terminalreporter.write_line(f"{label:<5} {status}  {doc}")
