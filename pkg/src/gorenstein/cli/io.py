"""Polytope and nef-partition files (JSON with exact rational literals)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from gorenstein.core.polytope import Polytope, normalize_polytope
from gorenstein.errors import InputError, ParseError, ValidationError
from gorenstein.nef import NefPartition

Row = tuple[Fraction, ...]


@dataclass(frozen=True)
class PolytopeFile:
    ambient_dim: int
    vertices: tuple[Row, ...]
    lattice_generators: tuple[Row, ...] | None = None
    name: str | None = None


@dataclass(frozen=True)
class NefFile:
    host: PolytopeFile
    parts: tuple[tuple[Row, ...], ...]
    name: str | None = None


def _rational(x: Any, where: str) -> Fraction:
    if isinstance(x, bool):
        raise ValidationError(f"{where}: booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"{where}: {x!r} is not a rational literal") from None
    raise ValidationError(f"{where}: expected an integer or an \"a/b\" string, got {x!r}")


def _rows(value: Any, width: int | None, where: str) -> tuple[Row, ...]:
    if not isinstance(value, list):
        raise ValidationError(f"{where} must be a list of rows")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise ValidationError(f"{where}[{i}] must be a list")
        if width is not None and len(row) != width:
            raise ValidationError(f"{where}[{i}] has length {len(row)}, expected {width}")
        out.append(tuple(_rational(x, f"{where}[{i}]") for x in row))
    return tuple(out)


def _load_json(text: bytes | str) -> Any:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _polytope_from_obj(obj: Any) -> PolytopeFile:
    if not isinstance(obj, dict):
        raise ValidationError("polytope file must be an object")
    unknown = set(obj) - {"ambient_dim", "vertices", "lattice_generators", "name"}
    if unknown:
        raise ValidationError(f"unknown fields {sorted(unknown)}")
    d = obj.get("ambient_dim")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ValidationError("ambient_dim must be a positive integer")
    if "vertices" not in obj:
        raise ValidationError("vertices missing")
    verts = _rows(obj["vertices"], d, "vertices")
    gens = None
    if obj.get("lattice_generators") is not None:
        gens = _rows(obj["lattice_generators"], d, "lattice_generators")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ValidationError("name must be a string")
    return PolytopeFile(d, verts, gens, name)


def parse_polytope_file(text: bytes | str) -> PolytopeFile:
    return _polytope_from_obj(_load_json(text))


def parse_nef_file(text: bytes | str, base: Path | None = None) -> NefFile:
    """Nef file: ``host`` inline or ``host_file`` relative to ``base``, plus ``parts``."""
    obj = _load_json(text)
    if not isinstance(obj, dict):
        raise ValidationError("nef file must be an object")
    if "host" in obj:
        host = _polytope_from_obj(obj["host"])
    elif "host_file" in obj:
        path = Path(obj["host_file"])
        if base is not None and not path.is_absolute():
            path = base / path
        try:
            host = parse_polytope_file(path.read_bytes())
        except OSError as exc:
            raise ValidationError(f"cannot read host file: {exc}") from None
    else:
        raise ValidationError("nef file needs host or host_file")
    parts = obj.get("parts")
    if not isinstance(parts, list) or not parts:
        raise ValidationError("parts must be a nonempty list of vertex lists")
    rows = tuple(_rows(p, host.ambient_dim, f"parts[{i}]") for i, p in enumerate(parts))
    name = obj.get("name", host.name)
    return NefFile(host, rows, name)


def _literal(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _polytope_obj(pf: PolytopeFile) -> dict:
    obj: dict[str, Any] = {"ambient_dim": pf.ambient_dim}
    if pf.lattice_generators is not None:
        obj["lattice_generators"] = [[_literal(x) for x in r] for r in pf.lattice_generators]
    if pf.name is not None:
        obj["name"] = pf.name
    obj["vertices"] = [[_literal(x) for x in r] for r in pf.vertices]
    return obj


def serialize_polytope_file(pf: PolytopeFile) -> str:
    return json.dumps(_polytope_obj(pf), sort_keys=True) + "\n"


def serialize_nef_file(nf: NefFile) -> str:
    obj: dict[str, Any] = {"host": _polytope_obj(nf.host),
                           "parts": [[[_literal(x) for x in r] for r in p] for p in nf.parts]}
    if nf.name is not None:
        obj["name"] = nf.name
    return json.dumps(obj, sort_keys=True) + "\n"


def to_polytope(pf: PolytopeFile) -> Polytope:
    if not pf.vertices:
        return Polytope.empty(pf.ambient_dim)
    return normalize_polytope(pf.ambient_dim, pf.lattice_generators, pf.vertices, pf.name)


def to_nef(nf: NefFile) -> NefPartition:
    host = to_polytope(nf.host)
    gens = nf.host.lattice_generators
    parts = []
    for p in nf.parts:
        if not p:
            raise ValidationError("empty part")
        parts.append(normalize_polytope(nf.host.ambient_dim, gens, p))
    return NefPartition(host, tuple(parts))


def from_polytope(P: Polytope) -> PolytopeFile:
    """File form of a polytope; a non-standard lattice is written as its basis."""
    if P.lattice is None:
        verts = tuple(tuple(Fraction(x) for x in v) for v in P.vertices)
        return PolytopeFile(P.ambient_dim, verts, None, P.name)
    B = P.lattice
    verts = tuple(tuple(sum((c * B[i][j] for i, c in enumerate(v)), Fraction(0))
                        for j in range(P.ambient_dim)) for v in P.vertices)
    return PolytopeFile(P.ambient_dim, verts, tuple(tuple(r) for r in B), P.name)


def read_polytope(path: str | Path) -> Polytope:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from None
    return to_polytope(parse_polytope_file(data))


def read_nef(path: str | Path) -> NefPartition:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from None
    return to_nef(parse_nef_file(data, Path(path).parent))
