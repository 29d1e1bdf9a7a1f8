"""Line-oriented problem files.

    # comment
    ring x, y, z
    weights 2, 3, 1               # optional
    variety wh_hypersurface       # general | wh_icis | linear_subspace | origin | ambient [reduced]
      h1 = x*y^6 + x^4*y^4 + x^10
    f = x + y
    section = x, x                # optional: images of the coordinates under p
    tasks mu, mu_x                # optional
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .derlog import KINDS, VarietySpec
from .poly import ParseError, Poly, RingSpec, parse_poly


class ProblemError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass
class ProblemFile:
    ring: RingSpec
    variety: VarietySpec | None = None
    f: Poly | None = None
    section: object = None  # LinearSection
    tasks: list = field(default_factory=list)

    def echo(self) -> dict:
        out = {"ring": {"vars": list(self.ring.vars), "weights": list(self.ring.weights) if self.ring.weights else None}}
        if self.variety is not None:
            out["variety"] = {"kind": self.variety.kind, "equations": [str(h) for h in self.variety.equations],
                              "reduced_asserted": self.variety.reduced}
        if self.f is not None:
            out["f"] = str(self.f)
        if self.section is not None:
            out["section"] = self.section.to_json()
        return out


_EQ = re.compile(r"^h(\d+)\s*=\s*(.*)$")


def _split_list(text: str) -> list:
    return [t.strip() for t in text.split(",") if t.strip()]


def parse_problem(text: str) -> ProblemFile:
    ring = None
    weights = None
    kind = None
    reduced = False
    eqs: dict = {}
    f_text = None
    sec_text = None
    tasks: list = []
    in_variety = False
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indented = line[0] in " \t"
        body = line.strip()
        m = _EQ.match(body)
        if m:
            if not in_variety:
                raise ProblemError("equation outside a variety block", lineno)
            k = int(m.group(1))
            if k in eqs:
                raise ProblemError(f"duplicate equation h{k}", lineno)
            eqs[k] = (lineno, m.group(2))
            continue
        if indented and in_variety:
            raise ProblemError(f"unexpected line in variety block: {body!r}", lineno)
        in_variety = False
        if re.match(r"^f\s*=", body):
            key, payload = "f", body.split("=", 1)[1]
        elif re.match(r"^section\s*=", body):
            key, payload = "section", body.split("=", 1)[1]
        else:
            parts = body.split(None, 1)
            key, payload = parts[0], parts[1] if len(parts) > 1 else ""
        if key in seen:
            raise ProblemError(f"duplicate key {key!r}", lineno)
        seen.add(key)
        if key == "ring":
            names = _split_list(payload)
            try:
                ring = RingSpec(tuple(names))
            except ValueError as exc:
                raise ProblemError(str(exc), lineno)
        elif key == "weights":
            try:
                weights = tuple(int(a) for a in _split_list(payload))
            except ValueError:
                raise ProblemError("weights must be integers", lineno)
        elif key == "variety":
            words = payload.split()
            if not words or words[0] not in KINDS:
                raise ProblemError(f"variety kind must be one of {KINDS}", lineno)
            kind = words[0]
            if words[1:] == ["reduced"]:
                reduced = True
            elif words[1:]:
                raise ProblemError(f"unexpected variety options {words[1:]}", lineno)
            in_variety = True
        elif key == "f":
            f_text = (lineno, payload)
        elif key == "section":
            sec_text = (lineno, payload)
        elif key == "tasks":
            tasks = _split_list(payload)
        else:
            raise ProblemError(f"unknown key {key!r}", lineno)
    if ring is None:
        raise ProblemError("missing 'ring' line", 1)
    if weights is not None:
        try:
            ring = ring.with_weights(weights)
        except ValueError as exc:
            raise ProblemError(str(exc), 1)

    def poly(lineno, s):
        try:
            return parse_poly(ring, s)
        except ParseError as exc:
            raise ProblemError(str(exc), lineno)

    variety = None
    if kind is not None:
        if sorted(eqs) != list(range(1, len(eqs) + 1)):
            raise ProblemError("equations must be numbered h1, h2, ... without gaps", 1)
        hs = tuple(poly(*eqs[k]) for k in sorted(eqs))
        if kind not in ("ambient", "origin") and not hs:
            raise ProblemError(f"variety kind {kind} needs equations", 1)
        try:
            variety = VarietySpec(ring, hs, weights, kind, reduced)
        except ValueError as exc:
            raise ProblemError(str(exc), 1)
    elif eqs:
        raise ProblemError("equations given without a variety line", 1)
    f = poly(*f_text) if f_text else None
    section = _parse_section(ring, sec_text, poly) if sec_text else None
    return ProblemFile(ring, variety, f, section, tasks)


def _parse_section(ring: RingSpec, sec_text, poly):
    from .sections import LinearSection
    lineno, payload = sec_text
    ims = [poly(lineno, s) for s in _split_list(payload)]
    n = ring.n
    if len(ims) != n:
        raise ProblemError(f"section needs {n} coordinate images", lineno)
    xs = ring.gens()
    i = 0
    while i < n and ims[i] == xs[i]:
        i += 1
    if i == 0:
        raise ProblemError("section must start with the identity on x_1..x_i", lineno)
    rows = []
    for g in ims[i:]:
        row = []
        for j in range(n):
            c = g.terms.get(tuple(1 if k == j else 0 for k in range(n)), 0)
            if j >= i and c:
                raise ProblemError("section images may only use the first i variables", lineno)
            if j < i:
                row.append(c)
        if len(g.terms) != sum(1 for c in row if c):
            raise ProblemError("section images must be linear forms", lineno)
        rows.append(tuple(row))
    return LinearSection(i, n, tuple(rows))
