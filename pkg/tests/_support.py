"""Shared helpers for the test suite."""

import importlib.util
import sys
from pathlib import Path

_loaded = {}


def load_generated_sdk(tree: Path, name: str = "know_sdk"):
    """Import a generated py-profile tree as a package, by path."""
    key = (str(tree), name)
    if key in _loaded:
        return _loaded[key]
    spec = importlib.util.spec_from_file_location(
        name, tree / "__init__.py", submodule_search_locations=[str(tree)]
    )
    module = importlib.util.module_from_spec(spec)
    sys.modules[name] = module
    saved = sys.dont_write_bytecode
    sys.dont_write_bytecode = True  # keep the committed tree pristine
    try:
        spec.loader.exec_module(module)
    finally:
        sys.dont_write_bytecode = saved
    _loaded[key] = module
    return module
