"""JSON interchange for braids, factorizations, representations and linear systems."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .braid import BraidError, BraidWord, parse_braid_text
from .factorization import BraidFactorization, Factor, FactorizationError
from .induction import LinearSystemData
from .representation import MonodromyRep

__all__ = [
    "InputError",
    "load_json",
    "dumps",
    "braid_from_json",
    "factorization_from_dict",
    "factorization_to_dict",
    "theta_from_dict",
    "theta_to_dict",
    "linear_system_from_dict",
    "linear_system_to_dict",
    "load_factorization",
    "load_theta",
    "load_linear_system",
]


class InputError(ValueError):
    pass


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def _fields(obj: Any, what: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    missing = sorted(required - obj.keys())
    if missing:
        raise InputError(f"{what}: missing field(s) {', '.join(missing)}")
    unknown = sorted(obj.keys() - required - optional)
    if unknown:
        raise InputError(f"{what}: unknown field(s) {', '.join(unknown)}")
    return obj


def braid_from_json(value: Any, d: int) -> BraidWord:
    """Signed-integer list or "s1 s2^-1" text."""
    try:
        if isinstance(value, str):
            return parse_braid_text(value, d)
        if isinstance(value, list):
            return BraidWord(d, tuple(_int(x, "braid letter") for x in value))
    except BraidError as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"braid must be a list of signed integers or a string, got {value!r}")


def factorization_from_dict(obj: Any, allow_negative_cusps: bool = False) -> BraidFactorization:
    """``allow_negative_cusps`` forces the flag on regardless of the file."""
    obj = _fields(obj, "factorization", {"d", "factors"}, {"allow_negative_cusps"})
    d = _int(obj["d"], "d")
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    flag = obj.get("allow_negative_cusps", False)
    if not isinstance(flag, bool):
        raise InputError("allow_negative_cusps must be a boolean")
    flag = flag or allow_negative_cusps
    if not isinstance(obj["factors"], list):
        raise InputError("factors must be a list")
    factors = []
    for j, raw in enumerate(obj["factors"], start=1):
        raw = _fields(raw, f"factor {j}", {"conj", "deg"})
        factors.append(Factor(braid_from_json(raw["conj"], d), _int(raw["deg"], f"factor {j} deg")))
    try:
        return BraidFactorization(d, tuple(factors), flag)
    except FactorizationError as exc:
        raise InputError(str(exc)) from exc


def factorization_to_dict(fact: BraidFactorization) -> dict:
    return {
        "d": fact.d,
        "allow_negative_cusps": fact.allow_negative_cusps,
        "factors": [{"conj": list(f.conj.letters), "deg": f.degree} for f in fact.factors],
    }


def theta_from_dict(obj: Any) -> MonodromyRep:
    obj = _fields(obj, "theta", {"d", "n", "images"})
    d, n = _int(obj["d"], "d"), _int(obj["n"], "n")
    images = obj["images"]
    if not isinstance(images, list) or not all(isinstance(p, list) and len(p) == 2 for p in images):
        raise InputError("images must be a list of [a, b] pairs")
    try:
        return MonodromyRep(d, n, tuple((_int(a, "image entry"), _int(b, "image entry")) for a, b in images))
    except BraidError as exc:
        raise InputError(str(exc)) from exc


def theta_to_dict(theta: MonodromyRep) -> dict:
    return {"d": theta.d, "n": theta.n, "images": [list(p) for p in theta.images]}


def linear_system_from_dict(obj: Any) -> LinearSystemData:
    obj = _fields(obj, "linear system", {"n", "theta1", "rhos"})
    if not isinstance(obj["rhos"], list):
        raise InputError("rhos must be a list")
    try:
        return LinearSystemData(
            _int(obj["n"], "n"),
            theta_from_dict(obj["theta1"]),
            tuple(factorization_from_dict(r) for r in obj["rhos"]),
        )
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from exc


def linear_system_to_dict(data: LinearSystemData) -> dict:
    return {
        "n": data.n,
        "theta1": theta_to_dict(data.theta1),
        "rhos": [factorization_to_dict(r) for r in data.rhos],
    }


def load_factorization(path: str | Path, allow_negative_cusps: bool = False) -> BraidFactorization:
    return factorization_from_dict(load_json(path), allow_negative_cusps)


def load_theta(path: str | Path) -> MonodromyRep:
    return theta_from_dict(load_json(path))


def load_linear_system(path: str | Path) -> LinearSystemData:
    return linear_system_from_dict(load_json(path))
