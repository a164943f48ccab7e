"""Loading .ld files: import resolution, parse, elaborate, in order."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .env import Definition, Environment
from .errors import LDError
from .surface.cst import SourceModule
from .surface.elaborate import elaborate
from .surface.parser import parse_module


@dataclass
class LoadResult:
    defs: list[Definition] = field(default_factory=list)
    spans: dict[str, tuple[int, int]] = field(default_factory=dict)
    files: dict[str, str] = field(default_factory=dict)  # name -> source path
    modules: list[SourceModule] = field(default_factory=list)


def _expand(path: str) -> list[str]:
    if os.path.isdir(path):
        return [
            os.path.join(path, f)
            for f in sorted(os.listdir(path))
            if f.endswith(".ld")
        ]
    return [path]


def load_paths(paths: list[str], base: Environment | None = None) -> LoadResult:
    """Parse and elaborate files plus their imports, depth-first, deduplicated."""
    result = LoadResult()
    arity_env = Environment()
    if base is not None:
        for d in base:
            arity_env.add(d)
    visited: set[str] = set()
    visiting: set[str] = set()

    def load_file(path: str) -> None:
        real = os.path.realpath(path)
        if real in visited:
            return
        if real in visiting:
            raise LDError(f"import cycle through {path}")
        visiting.add(real)
        try:
            with open(real, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise LDError(f"cannot read {path}: {exc}") from exc
        module = parse_module(text, path=real)
        for imp in module.imports():
            load_file(os.path.join(os.path.dirname(real), imp.path))
        defs, spans = elaborate(module, arity_env)
        for d in defs:
            arity_env.add(d)
            result.files[d.name] = real
        result.defs.extend(defs)
        result.spans.update(spans)
        result.modules.append(module)
        visiting.discard(real)
        visited.add(real)

    for p in paths:
        for f in _expand(p):
            load_file(f)
    return result
