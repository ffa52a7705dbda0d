"""Monoid spec files (Cayley tables and construction recipes), pair lists, and
JSON emission of congruences.

A spec is one of

* a builtin name: ``U2``, ``Z3``, ``T3``, ``bicyclic``, ``free:axb``;
* a Cayley table block::

      elements: 1 e
      identity: 1
      zero: e
      1 e
      e e

* a JSON recipe such as ``{"op": "brandt", "base": "Z2", "I": 2}``;
* the same recipe written as a call: ``brandt(Z2, I=2)``.
"""
from __future__ import annotations

import ast
import json
from typing import Optional

from . import constructions as C
from .computable import AdjoinedComputable, ComputableMonoid, ProductMonoid
from .congruence import ActCongruence
from .monoid import FiniteMonoid, MonoidError, validate


class SpecError(ValueError):
    """A spec that cannot be parsed or does not describe a monoid."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 witness=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.message = message
        self.line = line
        self.column = column
        self.witness = witness

    def to_dict(self) -> dict:
        out = {"error": "spec", "message": self.message}
        if self.line is not None:
            out["line"] = self.line
            out["column"] = self.column
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


# --- Cayley tables -----------------------------------------------------------------------

def emit_table(m: FiniteMonoid) -> str:
    lines = ["elements: " + " ".join(m.labels), "identity: " + m.label(m.identity)]
    if m.zero is not None:
        lines.append("zero: " + m.label(m.zero))
    for row in m.rows:
        lines.append(" ".join(m.label(x) for x in row))
    return "\n".join(lines) + "\n"


def _tokens(line: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with 1-based columns."""
    out, k = [], 0
    while k < len(line):
        if line[k].isspace():
            k += 1
            continue
        j = k
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((k + 1, line[k:j]))
        k = j
    return out


def parse_table(text: str) -> FiniteMonoid:
    header: dict = {}
    rows: list = []
    labels: list = []
    index: dict = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        key = stripped.split(":", 1)[0] if ":" in stripped.split(None, 1)[0] else None
        if key in ("elements", "identity", "zero"):
            if key in header:
                raise SpecError(f"duplicate '{key}:' line", ln, 1)
            if rows:
                raise SpecError(f"'{key}:' after table rows", ln, 1)
            off = line.index(":") + 1
            toks = [(c + off, t) for c, t in _tokens(line[off:])]
            header[key] = (ln, toks)
            if key == "elements":
                for c, t in toks:
                    if t in index:
                        raise SpecError(f"duplicate element label {t!r}", ln, c)
                    index[t] = len(labels)
                    labels.append(t)
            elif len(toks) != 1:
                raise SpecError(f"'{key}:' takes exactly one label", ln, toks[1][0] if toks else len(line))
            continue
        if "elements" not in header:
            raise SpecError("table rows before 'elements:'", ln, 1)
        toks = _tokens(line)
        if len(toks) != len(labels):
            col = toks[len(labels)][0] if len(toks) > len(labels) else len(line.rstrip()) + 1
            raise SpecError(f"row has {len(toks)} entries, expected {len(labels)}", ln, col)
        row = []
        for c, t in toks:
            if t not in index:
                raise SpecError(f"unknown element label {t!r}", ln, c)
            row.append(index[t])
        rows.append(row)
    if "elements" not in header:
        raise SpecError("missing 'elements:' line", 1, 1)
    if not labels:
        raise SpecError("empty element list", header["elements"][0], 1)
    if len(rows) != len(labels):
        raise SpecError(f"expected {len(labels)} rows, found {len(rows)}", None)

    def lookup(key):
        if key not in header:
            return None
        ln, toks = header[key]
        c, t = toks[0]
        if t not in index:
            raise SpecError(f"unknown element label {t!r}", ln, c)
        return index[t]

    identity = lookup("identity")
    if identity is None:
        raise SpecError("missing 'identity:' line", None)
    m = FiniteMonoid(rows, identity=identity, zero=lookup("zero"), labels=labels)
    v = validate(m)
    if not v.ok:
        raise SpecError(v.reason, witness=[m.label(x) for x in v.witness])
    return m


# --- recipes ------------------------------------------------------------------------------

def _indices(v) -> list:
    if isinstance(v, int) and not isinstance(v, bool):
        if v < 1:
            raise SpecError("index set size must be positive")
        return list(range(1, v + 1))
    if isinstance(v, (list, tuple)) and v:
        return list(v)
    raise SpecError(f"bad index set {v!r}")


def _finite(m, op: str) -> FiniteMonoid:
    if not isinstance(m, FiniteMonoid):
        raise SpecError(f"{op} needs a finite base monoid")
    return m


def _theta(base: FiniteMonoid, spec) -> C.BREndo:
    if spec is None or spec == "identity":
        return C.BREndo.identity_map(base)
    if spec == "trivial":
        return C.BREndo.trivial_map(base)
    if isinstance(spec, dict):
        return C.BREndo(base, [base.index(spec.get(base.label(x), base.label(x)))
                               for x in base.elements])
    if isinstance(spec, list):
        return C.BREndo(base, [base.index(y) for y in spec])
    raise SpecError(f"bad theta {spec!r}")


_RECIPE_KEYS = {
    "adjoin_identity": {"base"},
    "adjoin_zero": {"base"},
    "product": {"left", "right"},
    "rees": {"base", "I", "Lambda", "P", "with_zero", "adjoin_one"},
    "brandt": {"base", "I", "adjoin_one"},
    "bruck_reilly": {"base", "theta"},
    "ebr": {"base", "theta"},
    "free": {"alphabet"},
    "bicyclic": set(),
}


def build_recipe(spec):
    """Build a monoid from a decoded JSON recipe (dict) or builtin name (str)."""
    if isinstance(spec, str):
        try:
            return C.builtin(spec)
        except KeyError as e:
            raise SpecError(e.args[0]) from None
    if not isinstance(spec, dict):
        raise SpecError(f"recipe must be a name or an object, got {type(spec).__name__}")
    if "builtin" in spec:
        return build_recipe(spec["builtin"])
    if "table" in spec:
        t = spec["table"]
        try:
            labels = [str(x) for x in t["elements"]]
            pos = {x: k for k, x in enumerate(labels)}
            rows = [[pos[str(x)] for x in r] for r in t["rows"]]
            zero = t.get("zero")
            m = FiniteMonoid(rows, identity=pos[str(t["identity"])],
                             zero=None if zero is None else pos[str(zero)], labels=labels)
        except (KeyError, TypeError, MonoidError) as e:
            raise SpecError(f"bad table object: {e}") from None
        v = validate(m)
        if not v.ok:
            raise SpecError(v.reason, witness=[m.label(x) for x in v.witness])
        return m
    op = spec.get("op")
    if op not in _RECIPE_KEYS:
        raise SpecError(f"unknown recipe op {op!r}; known: {sorted(_RECIPE_KEYS)}")
    extra = set(spec) - _RECIPE_KEYS[op] - {"op"}
    if extra:
        raise SpecError(f"unexpected parameters for {op}: {sorted(extra)}")
    try:
        return _build_op(op, spec)
    except (MonoidError, KeyError) as e:
        raise SpecError(f"{op}: {e.args[0] if e.args else e}") from None


def _build_op(op: str, spec: dict):
    if op == "free":
        return C.free_monoid(list(spec.get("alphabet", "ab")))
    if op == "bicyclic":
        return C.bicyclic()
    if op == "product":
        left, right = build_recipe(spec["left"]), build_recipe(spec["right"])
        if isinstance(left, FiniteMonoid) and isinstance(right, FiniteMonoid):
            return C.direct_product(left, right)
        if isinstance(left, ComputableMonoid) and isinstance(right, ComputableMonoid):
            return ProductMonoid(left, right)
        raise SpecError("product of a finite and a computable monoid is not supported")
    base = build_recipe(spec["base"])
    if op in ("adjoin_identity", "adjoin_zero"):
        if isinstance(base, FiniteMonoid):
            return C.adjoin_identity(base) if op == "adjoin_identity" else C.adjoin_zero(base)
        return AdjoinedComputable(base, "identity" if op == "adjoin_identity" else "zero")
    base = _finite(base, op)
    if op == "brandt":
        return C.brandt(base, _indices(spec["I"]), adjoin_one=spec.get("adjoin_one", True))
    if op == "rees":
        I = _indices(spec["I"])
        Lam = _indices(spec.get("Lambda", spec["I"]))
        P = spec.get("P")
        if P is None:
            P = [[base.label(base.identity)] * len(I) for _ in Lam]
        return C.rees_matrix(base, I, Lam, [[None if e is None else str(e) for e in r] for r in P],
                             with_zero=spec.get("with_zero", False),
                             adjoin_one=spec.get("adjoin_one", True))
    theta = _theta(base, spec.get("theta"))
    if op == "bruck_reilly":
        return C.bruck_reilly(base, theta)
    return C.extended_bruck_reilly(base, theta)


_CALL_POSITIONAL = {"adjoin_identity": ["base"], "adjoin_zero": ["base"], "product": ["left", "right"],
                    "rees": ["base"], "brandt": ["base"], "bruck_reilly": ["base"], "ebr": ["base"],
                    "free": ["alphabet"], "bicyclic": []}


def _call_to_recipe(node, text: str):
    """Translate a parsed call expression into the JSON recipe form."""
    if isinstance(node, ast.Name):
        if node.id in ("true", "True"):
            return True
        if node.id in ("false", "False"):
            return False
        if node.id in ("null", "None"):
            return None
        if node.id == "bicyclic":
            return {"op": "bicyclic"}
        return node.id
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, (ast.List, ast.Tuple)):
        return [_call_to_recipe(e, text) for e in node.elts]
    if isinstance(node, ast.Dict):
        return {str(_call_to_recipe(k, text)): _call_to_recipe(v, text)
                for k, v in zip(node.keys, node.values)}
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        op = node.func.id
        if op not in _CALL_POSITIONAL:
            raise SpecError(f"unknown recipe op {op!r}; known: {sorted(_RECIPE_KEYS)}",
                            node.lineno, node.col_offset + 1)
        names = _CALL_POSITIONAL[op]
        if len(node.args) > len(names):
            raise SpecError(f"{op} takes {len(names)} positional arguments",
                            node.lineno, node.col_offset + 1)
        out = {"op": op}
        for k, a in zip(names, node.args):
            out[k] = _call_to_recipe(a, text)
        for kw in node.keywords:
            out[kw.arg] = _call_to_recipe(kw.value, text)
        return out
    raise SpecError(f"unsupported recipe syntax {type(node).__name__}",
                    getattr(node, "lineno", None), getattr(node, "col_offset", 0) + 1)


def parse_monoid_spec(text: str):
    """Parse any spec form; finite results are validated."""
    s = text.strip()
    if not s:
        raise SpecError("empty spec", 1, 1)
    if s.startswith("{") or s.startswith('"'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError(e.msg, e.lineno, e.colno) from None
        return build_recipe(data)
    first = s.split(None, 1)[0]
    if first.startswith("elements:") or first in ("elements", "identity:", "zero:"):
        return parse_table(text)
    if "(" in s:
        try:
            node = ast.parse(s, mode="eval").body
        except SyntaxError as e:
            raise SpecError(f"recipe syntax error: {e.msg}", e.lineno, e.offset) from None
        return build_recipe(_call_to_recipe(node, s))
    return build_recipe(s)


# --- pairs and congruences ----------------------------------------------------------------------

def parse_pairs(text: str) -> list[tuple[str, str]]:
    """``a=b;c=d`` or a JSON list of two-element lists; empty text means no pairs."""
    s = text.strip()
    if not s:
        return []
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as e:
            raise SpecError(e.msg, e.lineno, e.colno) from None
        if not all(isinstance(p, list) and len(p) == 2 for p in data):
            raise SpecError("pairs must be two-element lists")
        return [(str(a), str(b)) for a, b in data]
    out = []
    col = 1
    for part in s.split(";"):
        if part.strip():
            if part.count("=") != 1:
                raise SpecError(f"pair {part.strip()!r} needs exactly one '='", 1, col)
            a, b = part.split("=")
            out.append((a.strip(), b.strip()))
        col += len(part) + 1
    return out


def emit_congruence(rho: ActCongruence, witness_pairs=()) -> dict:
    """Classes (as labels) with least-index representatives, plus optional witnesses."""
    A = rho.act
    out = {
        "num_classes": rho.num_classes,
        "representatives": [A.label(r) for r in rho.representatives()],
        "classes": [[A.label(x) for x in cls] for cls in rho.classes()],
    }
    if witness_pairs:
        ws = []
        for a, b in witness_pairs:
            a, b = A.index(a), A.index(b)
            entry = {"a": A.label(a), "b": A.label(b), "related": rho.related(a, b)}
            if entry["related"]:
                w = rho.witness(a, b)
                entry["steps"] = [
                    {"pair": [A.label(w.pairs[k][0]), A.label(w.pairs[k][1])],
                     "t": A.monoid.label(t), "from": A.label(x), "to": A.label(y)}
                    for (k, t), (x, y) in zip(w.steps, w.chain(A.act))
                ]
            ws.append(entry)
        out["witnesses"] = ws
    return out
