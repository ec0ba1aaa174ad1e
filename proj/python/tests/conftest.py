import json
import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("GROWTHCODES_CLI") or shutil.which("growthcodes")
    if not exe:
        candidate = ROOT / "build" / "tools" / "growthcodes"
        exe = str(candidate) if candidate.exists() else None
    if not exe:
        pytest.skip("growthcodes executable not found")
    return exe


@pytest.fixture(scope="session")
def schemas():
    from referencing import Registry, Resource

    directory = pathlib.Path(os.environ.get("GROWTHCODES_SCHEMAS", ROOT / "schemas"))
    loaded = {p.stem.replace(".schema", ""): json.loads(p.read_text()) for p in directory.glob("*.schema.json")}
    registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in loaded.values())
    return loaded, registry
