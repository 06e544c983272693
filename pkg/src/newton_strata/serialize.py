"""JSON encoding for every public value type.

Rationals are strings ``"p/q"`` (``"p"`` when q = 1).  Integers are also
accepted on input; floats never are.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bg import GroupTag, NewtonClass, validate
from .levi import LeviBlocks, LeviCocharacter, OrderedPartition
from .polygon import Polygon
from .strata import Decision, MinusculeShape, StratumCertificate


class MalformedInput(ValueError):
    """Input that does not match the JSON schema (as opposed to a domain rejection)."""

    code = "MalformedInput"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def rational_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise MalformedInput(f"{value!r} is not an exact rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"cannot parse {value!r} as a rational") from None
    raise MalformedInput(f"{value!r} is not a rational")


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse ``[5/2, 1, "3/4"]``-style text; bare ``p/q`` tokens are allowed."""
    text = text.strip()
    try:
        items = json.loads(text)
    except json.JSONDecodeError:
        if not (text.startswith("[") and text.endswith("]")):
            raise MalformedInput(f"expected a bracketed list, got {text!r}") from None
        inner = text[1:-1].strip()
        items = [tok.strip().strip('"') for tok in inner.split(",")] if inner else []
    if not isinstance(items, list):
        raise MalformedInput(f"expected a list, got {text!r}")
    return [parse_rational(v) for v in items]


def polygon_to_json(p: Polygon) -> list[str]:
    return [rational_to_str(s) for s in p.slopes]


def polygon_from_json(data) -> Polygon:
    if isinstance(data, str):
        return Polygon(tuple(parse_rational_list(data)))
    if not isinstance(data, list):
        raise MalformedInput(f"polygon must be a list, got {type(data).__name__}")
    return Polygon(tuple(parse_rational(v) for v in data))


def _require(data: dict, *keys: str) -> None:
    if not isinstance(data, dict):
        raise MalformedInput(f"expected an object, got {type(data).__name__}")
    missing = [k for k in keys if k not in data]
    if missing:
        raise MalformedInput(f"missing field(s): {', '.join(missing)}")


def _int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInput(f"{name} must be an integer")
    return value


def newton_class_to_json(b: NewtonClass) -> dict:
    return {"group": b.group.family, "n": b.group.n, "nu": polygon_to_json(b.nu)}


def group_from_json(data: dict) -> GroupTag:
    _require(data, "group", "n")
    try:
        return GroupTag(data["group"], _int(data["n"], "n"))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def newton_class_from_json(data: dict) -> NewtonClass:
    """Parse and validate; validation failures propagate as domain errors."""
    _require(data, "group", "n", "nu")
    return validate(group_from_json(data), polygon_from_json(data["nu"]))


def partition_to_json(alpha: OrderedPartition) -> dict:
    return {"n": alpha.n, "parts": list(alpha.parts)}


def partition_from_json(data: dict) -> OrderedPartition:
    _require(data, "n", "parts")
    parts = data["parts"]
    if not isinstance(parts, list):
        raise MalformedInput("parts must be a list")
    try:
        return OrderedPartition(_int(data["n"], "n"), tuple(_int(a, "part") for a in parts))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def levi_cochar_to_json(mu: LeviCocharacter) -> dict:
    return {"alpha": partition_to_json(mu.alpha), "slopes": polygon_to_json(mu.slopes)}


def levi_cochar_from_json(data: dict) -> LeviCocharacter:
    _require(data, "alpha", "slopes")
    return LeviCocharacter(partition_from_json(data["alpha"]), polygon_from_json(data["slopes"]))


def levi_blocks_to_json(blocks: LeviBlocks) -> dict:
    return {
        "alpha": partition_to_json(blocks.alpha),
        "gl_blocks": [polygon_to_json(p) for p in blocks.gl_blocks],
        "gsp_block": polygon_to_json(blocks.gsp_block),
        "dual_blocks": [polygon_to_json(p) for p in blocks.dual_blocks],
    }


def shape_to_json(mu: MinusculeShape) -> dict:
    return {"n": mu.n, "d": mu.d, "ordinary": mu.ordinary}


def shape_from_json(data: dict) -> MinusculeShape:
    _require(data, "n", "d", "ordinary")
    if not isinstance(data["ordinary"], bool):
        raise MalformedInput("ordinary must be a boolean")
    return MinusculeShape(_int(data["n"], "n"), _int(data["d"], "d"), data["ordinary"])


def _rationals(xs) -> list[str]:
    return [rational_to_str(x) for x in xs]


def certificate_to_json(cert: StratumCertificate) -> dict:
    return {
        "alpha": partition_to_json(cert.alpha),
        "d_vector": list(cert.d_vector),
        "mu_bar": levi_cochar_to_json(cert.mu_bar),
        "kappa_check": cert.kappa_check,
        "bruhat_check": cert.bruhat_check,
        "basic_check": cert.basic_check,
        "shift": cert.shift,
        "kappa_b": _rationals(cert.kappa_b),
        "kappa_bt": _rationals(cert.kappa_bt),
        "degree": _rationals(cert.degree),
        "notes": list(cert.notes),
    }


def certificate_from_json(data: dict) -> StratumCertificate:
    _require(data, "alpha", "d_vector", "mu_bar", "kappa_check", "bruhat_check", "basic_check")
    return StratumCertificate(
        alpha=partition_from_json(data["alpha"]),
        d_vector=tuple(_int(d, "d_i") for d in data["d_vector"]),
        mu_bar=levi_cochar_from_json(data["mu_bar"]),
        kappa_check=bool(data["kappa_check"]),
        bruhat_check=bool(data["bruhat_check"]),
        basic_check=bool(data["basic_check"]),
        shift=_int(data.get("shift", 0), "shift"),
        kappa_b=tuple(parse_rational(x) for x in data.get("kappa_b", [])),
        kappa_bt=tuple(parse_rational(x) for x in data.get("kappa_bt", [])),
        degree=tuple(parse_rational(x) for x in data.get("degree", [])),
        notes=tuple(data.get("notes", [])),
    )


def decision_to_json(decision: Decision) -> dict:
    return {
        "nonempty": decision.nonempty,
        "failed_condition": decision.failed_condition,
        "checks": dict(decision.checks),
        "certificate": (
            certificate_to_json(decision.certificate) if decision.certificate else None
        ),
    }


def decision_from_json(data: dict) -> Decision:
    _require(data, "nonempty")
    cert = data.get("certificate")
    return Decision(
        nonempty=bool(data["nonempty"]),
        failed_condition=data.get("failed_condition"),
        certificate=certificate_from_json(cert) if cert else None,
        checks=dict(data.get("checks") or {}),
    )
