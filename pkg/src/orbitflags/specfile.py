"""Code spec files: ``key = value`` lines, ``#`` comments, comma-separated int lists.

Example::

    p = 2
    e = 1
    n = 10
    construction = weaved
    chain = 1, 5
    beta_order = 1023

Keys per construction: ``type`` (galois), ``m``, ``l``, ``s`` (basic),
``chain`` (weaved), repeated ``subspace`` exponent lists (custom: each line
spans alpha^e for the listed e).  ``beta_exponent`` or ``beta_order`` picks
the acting element; alpha is used when both are absent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from orbitflags.flagcodes import (
    FlagCode,
    basic_construction,
    galois_construction,
    weaved_construction,
)
from orbitflags.flags import Flag, make_flag
from orbitflags.gfield import FieldCtx, FieldElement, build_field
from orbitflags.subspaces import subspace_from_exponents

CONSTRUCTIONS = {
    "galois": {"type"},
    "basic": {"m", "l", "s"},
    "weaved": {"chain"},
    "custom": {"subspace"},
}
_INT_KEYS = {"p", "e", "n", "m", "l", "beta_exponent", "beta_order"}
_LIST_KEYS = {"type", "s", "chain", "subspace"}
_KNOWN = _INT_KEYS | _LIST_KEYS | {"construction"}


class SpecError(ValueError):
    """Malformed spec file; the message carries the line number."""


@dataclass
class CodeSpec:
    p: int
    e: int
    n: int
    construction: str
    params: dict[str, object] = field(default_factory=dict)
    subspaces: list[list[int]] = field(default_factory=list)
    beta_exponent: int | None = None
    beta_order: int | None = None

    def build_ctx(self) -> FieldCtx:
        return build_field(self.p, self.e, self.n)

    def flag(self, ctx: FieldCtx | None = None) -> Flag:
        ctx = ctx or self.build_ctx()
        kind, prm = self.construction, self.params
        if kind == "galois":
            return galois_construction(ctx, prm["type"])
        if kind == "basic":
            return basic_construction(ctx, prm["m"], prm["l"], prm["s"])
        if kind == "weaved":
            return weaved_construction(ctx, prm["chain"])
        return make_flag([subspace_from_exponents(ctx, ex) for ex in self.subspaces])

    def beta(self, ctx: FieldCtx | None = None) -> FieldElement:
        ctx = ctx or self.build_ctx()
        if self.beta_order is not None:
            if self.beta_order < 1 or ctx.order % self.beta_order:
                raise ValueError(f"no element of order {self.beta_order} in F_{{q^n}}^*")
            return ctx.element(ctx.order // self.beta_order)
        return ctx.element(1 if self.beta_exponent is None else self.beta_exponent)

    def code(self) -> FlagCode:
        ctx = self.build_ctx()
        return FlagCode(self.flag(ctx), self.beta(ctx))


def _parse_int(raw: str, lineno: int, key: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise SpecError(f"line {lineno}: {key} expects an integer, got {raw!r}") from None


def _parse_list(raw: str, lineno: int, key: str) -> list[int]:
    parts = [x.strip() for x in raw.split(",")]
    if not parts or any(not x for x in parts):
        raise SpecError(f"line {lineno}: {key} expects a comma-separated integer list")
    return [_parse_int(x, lineno, key) for x in parts]


def parse_spec(text: str) -> CodeSpec:
    values: dict[str, object] = {}
    subspaces: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecError(f"line {lineno}: expected key = value")
        key, raw = (x.strip() for x in line.split("=", 1))
        if key not in _KNOWN:
            raise SpecError(f"line {lineno}: unknown key {key!r}")
        if key == "subspace":
            subspaces.append(_parse_list(raw, lineno, key))
            continue
        if key in values:
            raise SpecError(f"line {lineno}: duplicate key {key!r}")
        if key in _INT_KEYS:
            values[key] = _parse_int(raw, lineno, key)
        elif key in _LIST_KEYS:
            values[key] = _parse_list(raw, lineno, key)
        else:
            values[key] = raw
    for key in ("p", "e", "n", "construction"):
        if key not in values:
            raise SpecError(f"missing required key {key!r}")
    kind = values["construction"]
    if kind not in CONSTRUCTIONS:
        raise SpecError(f"unknown construction {kind!r}")
    if "beta_exponent" in values and "beta_order" in values:
        raise SpecError("give at most one of beta_exponent and beta_order")
    needed = CONSTRUCTIONS[kind]
    present = {k for k in values if k in {"type", "m", "l", "s", "chain"}}
    if subspaces:
        present.add("subspace")
    if present != needed:
        raise SpecError(
            f"construction {kind} needs keys {sorted(needed)}, got {sorted(present)}"
        )
    return CodeSpec(
        p=values["p"],
        e=values["e"],
        n=values["n"],
        construction=kind,
        params={k: values[k] for k in present if k != "subspace"},
        subspaces=subspaces,
        beta_exponent=values.get("beta_exponent"),
        beta_order=values.get("beta_order"),
    )


def load_spec(path: str | Path) -> CodeSpec:
    return parse_spec(Path(path).read_text(encoding="utf-8"))
