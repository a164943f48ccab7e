"""The shipped library: loading, manifests, the theorem index, axiom tracking."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .display import display_term
from .env import Definition, Environment
from .errors import LDError, MissingEntry
from .loader import LoadResult, load_paths
from .reduce import DEFAULT_FUEL
from .terms import Const, Term, subterms
from .typecheck import CheckReport, check_environment


def corpus_dir() -> Path:
    override = os.environ.get("LDCHECK_CORPUS")
    if override:
        return Path(override)
    return Path(__file__).resolve().parents[2] / "corpus"


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    label: str
    kind: str  # definition | primitive | proof-term | omitted


def read_manifest(path: Path) -> list[ManifestEntry]:
    data = json.loads(path.read_text(encoding="utf-8"))
    return [ManifestEntry(e["name"], e["label"], e["kind"]) for e in data["entries"]]


def prelude_manifest() -> list[ManifestEntry]:
    return read_manifest(corpus_dir() / "prelude" / "MANIFEST.json")


def groups_manifest() -> list[ManifestEntry]:
    return read_manifest(corpus_dir() / "groups" / "MANIFEST.json")


def _load_and_check(
    paths: list[str], fuel: int, keep_going: bool = False
) -> tuple[Environment, CheckReport, LoadResult]:
    loaded = load_paths(paths)
    env, report = check_environment(
        loaded.defs, fuel_limit=fuel, keep_going=keep_going, spans=loaded.spans
    )
    return env, report, loaded


def load_prelude(fuel: int = DEFAULT_FUEL) -> Environment:
    """Load and check the base library; every entry must be accepted."""
    env, report, _ = _load_and_check([str(corpus_dir() / "prelude")], fuel)
    if not report.ok:
        bad = report.failures[0]
        raise LDError(f"prelude rejected at {bad.name}: {bad.error_message}")
    return env


def load_groups(prelude: Environment | None = None, fuel: int = DEFAULT_FUEL) -> Environment:
    """Extend the checked prelude with the group-theory corpus."""
    if prelude is None:
        prelude = load_prelude(fuel)
    loaded = load_paths([str(corpus_dir() / "groups")], base=prelude)
    env, report = check_environment(
        loaded.defs, fuel_limit=fuel, spans=loaded.spans, base=prelude
    )
    if not report.ok:
        bad = report.failures[0]
        raise LDError(f"groups corpus rejected at {bad.name}: {bad.error_message}")
    return env


def body_constants(d: Definition) -> set[str]:
    found: set[str] = set()
    if d.body is None:
        return found
    for t in subterms(d.body):
        if isinstance(t, Const):
            found.add(t.name)
    return found


def classical_dependency_report(env: Environment, axiom: str = "exc_thrd") -> list[str]:
    """Names whose bodies transitively mention the classical axiom."""
    direct: dict[str, set[str]] = {d.name: body_constants(d) for d in env}
    classical: set[str] = set()
    for d in env:  # environment order: dependencies come first
        uses = direct[d.name]
        if axiom in uses or uses & classical:
            classical.add(d.name)
    return sorted(classical)


def theorem_index(env: Environment, entries: list[ManifestEntry] | None = None) -> dict[str, tuple[str, str]]:
    """Map manifest labels of proof terms to (name, displayed stated type)."""
    if entries is None:
        entries = prelude_manifest() + groups_manifest()
    index: dict[str, tuple[str, str]] = {}
    for e in entries:
        if e.kind == "omitted":
            continue
        if e.name not in env:
            raise MissingEntry(f"manifest entry {e.name!r} ({e.label}) not in environment")
        if e.kind == "proof-term":
            d = env.lookup(e.name)
            stated = display_term(d.declared_type, [hint for hint, _ in d.params])
            index[e.label] = (e.name, stated)
    return index
