"""JSON model and decomposition files.

Model schema:  {"vars": ["x","y"], "top": ["x","y^2"], "bottom": ["x*y"]}
with "top" omitted for the unit ideal (cyclic modules S/I) and "bottom"
omitted for the zero ideal (an ideal viewed as a module).  Monomials are
either strings (factors joined by '*', optional '^exponent') or plain
exponent lists.

Decomposition schema:
  {"vars": [...], "target": {"top": [...], "bottom": [...]},
   "spaces": [{"rep": "x*z", "z": ["x","z"]}, ...]}

Serialization is canonical: generators come out in the ideal's canonical
order, so parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .decompositions import StanleyDecomposition, StanleySpace
from .errors import ContainmentViolated, ParseError, UnknownVariable, ZeroModule
from .monomials import ExponentVector, MonomialIdeal, QuotientModule

_FACTOR = re.compile(r"^([^\^\s]+)\s*(?:\^\s*(\d+))?$")


@dataclass(frozen=True)
class ModelFile:
    """A parsed model: the variable names and the quotient module."""

    vars: tuple[str, ...]
    module: QuotientModule


def default_vars(arity: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, arity + 1))


def parse_monomial(token, names: tuple[str, ...]) -> ExponentVector:
    """Parse one monomial given as a string or an exponent list."""
    if isinstance(token, (list, tuple)):
        if len(token) != len(names):
            raise ParseError(
                f"exponent list {token} has length {len(token)}, expected {len(names)}"
            )
        try:
            exps = [int(e) for e in token]
        except (TypeError, ValueError):
            raise ParseError(f"non-integer exponent in {token}") from None
        if any(e < 0 for e in exps):
            raise ParseError(f"negative exponent in {token}")
        return tuple(exps)
    if not isinstance(token, str):
        raise ParseError(f"monomial must be a string or exponent list, got {token!r}")
    text = token.strip()
    exps = [0] * len(names)
    if text == "1":
        return tuple(exps)
    position = {name: j for j, name in enumerate(names)}
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ParseError(f"cannot parse factor {factor!r} in monomial {token!r}")
        name, exp = m.group(1), m.group(2)
        if name not in position:
            raise UnknownVariable(name)
        exps[position[name]] += int(exp) if exp is not None else 1
    return tuple(exps)


def monomial_str(a: ExponentVector, names: tuple[str, ...]) -> str:
    parts = []
    for e, name in zip(a, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _parse_names(doc: dict) -> tuple[str, ...]:
    names = doc.get("vars")
    if not isinstance(names, list) or not names:
        raise ParseError('"vars" must be a non-empty list of names')
    names = tuple(str(v) for v in names)
    if len(set(names)) != len(names):
        raise ParseError(f"variable names are not unique: {list(names)}")
    return names


def _parse_ideal(doc: dict, key: str, names: tuple[str, ...], absent: MonomialIdeal):
    if key not in doc:
        return absent
    tokens = doc[key]
    if not isinstance(tokens, list):
        raise ParseError(f'"{key}" must be a list of monomials')
    return MonomialIdeal(len(names), (parse_monomial(t, names) for t in tokens))


def _loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return doc


def load_model(text: str) -> ModelFile:
    doc = _loads(text)
    names = _parse_names(doc)
    n = len(names)
    top = _parse_ideal(doc, "top", names, MonomialIdeal.unit(n))
    bottom = _parse_ideal(doc, "bottom", names, MonomialIdeal.zero(n))
    try:
        module = QuotientModule(top, bottom)
    except ContainmentViolated:
        raise
    if module.is_zero():
        raise ZeroModule("model describes the zero module")
    return ModelFile(names, module)


def parse_model(text: str) -> QuotientModule:
    """Parse a model file into its canonical quotient module."""
    return load_model(text).module


def model_document(module: QuotientModule, names: tuple[str, ...] | None = None) -> dict:
    names = names or default_vars(module.arity)
    doc: dict = {"vars": list(names)}
    if not module.top.is_unit():
        doc["top"] = [monomial_str(g, names) for g in module.top.gens]
    if not module.bottom.is_zero():
        doc["bottom"] = [monomial_str(g, names) for g in module.bottom.gens]
    return doc


def serialize_model(module: QuotientModule, names: tuple[str, ...] | None = None) -> str:
    return json.dumps(model_document(module, names), indent=2) + "\n"


def load_decomposition(text: str) -> tuple[StanleyDecomposition, tuple[str, ...]]:
    doc = _loads(text)
    names = _parse_names(doc)
    n = len(names)
    target_doc = doc.get("target")
    if not isinstance(target_doc, dict):
        raise ParseError('"target" must be an object with "top"/"bottom" lists')
    top = _parse_ideal(target_doc, "top", names, MonomialIdeal.unit(n))
    bottom = _parse_ideal(target_doc, "bottom", names, MonomialIdeal.zero(n))
    target = QuotientModule(top, bottom)
    spaces_doc = doc.get("spaces")
    if not isinstance(spaces_doc, list):
        raise ParseError('"spaces" must be a list')
    position = {name: j + 1 for j, name in enumerate(names)}
    spaces = []
    for sp in spaces_doc:
        if not isinstance(sp, dict) or "rep" not in sp or "z" not in sp:
            raise ParseError(f'space {sp!r} must carry "rep" and "z"')
        rep = parse_monomial(sp["rep"], names)
        zset = set()
        for name in sp["z"]:
            if name not in position:
                raise UnknownVariable(str(name))
            zset.add(position[name])
        spaces.append(StanleySpace(rep, zset))
    return StanleyDecomposition(target, tuple(spaces)), names


def parse_decomposition(text: str) -> StanleyDecomposition:
    return load_decomposition(text)[0]


def decomposition_document(
    d: StanleyDecomposition, names: tuple[str, ...] | None = None
) -> dict:
    names = names or default_vars(d.target.arity)
    target: dict = {}
    if not d.target.top.is_unit():
        target["top"] = [monomial_str(g, names) for g in d.target.top.gens]
    if not d.target.bottom.is_zero():
        target["bottom"] = [monomial_str(g, names) for g in d.target.bottom.gens]
    return {
        "vars": list(names),
        "target": target,
        "spaces": [
            {
                "rep": monomial_str(sp.rep, names),
                "z": [names[k - 1] for k in sorted(sp.zset)],
            }
            for sp in d.spaces
        ],
    }


def serialize_decomposition(
    d: StanleyDecomposition, names: tuple[str, ...] | None = None
) -> str:
    return json.dumps(decomposition_document(d, names), indent=2) + "\n"
