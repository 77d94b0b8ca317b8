"""Bundled poset fixtures used by the CLI and the test suite.

Fixtures are addressed by short name; anything that is not a known name
is treated as a filesystem path to a poset JSON file.
"""

import json
import os
from importlib import resources

from .poset import poset_from_json

FIXTURE_NAMES = (
    "c1",
    "c2",
    "c3",
    "c4",
    "antichain1",
    "antichain2",
    "antichain3",
    "antichain4",
    "example",
    "diamond",
    "c2_disjoint_c3",
)


def load_fixture(name):
    text = resources.files("incgrade.fixtures").joinpath(
        f"{name}.json").read_text()
    return poset_from_json(json.loads(text))


def load_poset(name_or_path):
    """Load a bundled fixture by name, or a poset JSON file by path."""
    if name_or_path in FIXTURE_NAMES:
        return load_fixture(name_or_path)
    if not os.path.exists(name_or_path):
        raise FileNotFoundError(
            f"{name_or_path!r} is neither a fixture name nor a file; "
            f"fixtures: {', '.join(FIXTURE_NAMES)}")
    with open(name_or_path) as handle:
        return poset_from_json(json.load(handle))


def corpus_posets():
    """All bundled fixtures, name to poset, in the canonical order."""
    return {name: load_fixture(name) for name in FIXTURE_NAMES}
