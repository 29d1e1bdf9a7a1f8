"""Exact multivariate polynomials over the rationals.

Polynomials live in a :class:`RingSpec` (variable names, optional weights and a
local monomial ordering).  Coefficients are ``gmpy2.mpq``; nothing here ever
touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from gmpy2 import mpq

ORDERINGS = ("negdegrevlex", "negdeglex")

Exp = tuple


class ParseError(ValueError):
    """Syntax error in a polynomial expression; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


@dataclass(frozen=True)
class RingSpec:
    vars: tuple
    weights: tuple | None = None
    ordering: str = "negdegrevlex"

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(self.vars) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        for v in self.vars:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                raise ValueError(f"bad variable name {v!r}")
        if self.weights is not None:
            w = tuple(int(a) for a in self.weights)
            if len(w) != len(self.vars):
                raise ValueError("weight vector length must match the number of variables")
            if any(a < 1 for a in w):
                raise ValueError("weights must be positive integers")
            object.__setattr__(self, "weights", w)
        if self.ordering not in ORDERINGS:
            raise ValueError(f"unknown ordering {self.ordering!r}; expected one of {ORDERINGS}")

    @property
    def n(self) -> int:
        return len(self.vars)

    @property
    def w(self) -> tuple:
        """Weights actually used by the ordering (all ones when unset)."""
        return self.weights if self.weights is not None else (1,) * self.n

    def gens(self) -> list:
        return [self.var(i) for i in range(self.n)]

    def var(self, i) -> "Poly":
        if isinstance(i, str):
            i = self.vars.index(i)
        e = [0] * self.n
        e[i] = 1
        return Poly(self, {tuple(e): mpq(1)})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = mpq(c)
        return Poly(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exp, coeff=1) -> "Poly":
        return Poly(self, {tuple(exp): mpq(coeff)})

    def with_weights(self, weights) -> "RingSpec":
        return RingSpec(self.vars, weights, self.ordering)

    def __call__(self, text: str) -> "Poly":
        return parse_poly(self, text)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Immutable polynomial: a map from exponent tuples to nonzero ``mpq``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: dict | None = None, _clean=False):
        self.ring = ring
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {tuple(e): mpq(c) for e, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # -- basic protocol -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, mpq)):
            return self.terms == ({(0,) * self.ring.n: mpq(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.const(other)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = mpq(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: c * a for e, a in self.terms.items()}, _clean=True)
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus and substitution -------------------------------------
    def diff(self, i) -> "Poly":
        if isinstance(i, str):
            i = self.ring.vars.index(i)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Poly(self.ring, out, _clean=True)

    def gradient(self) -> list:
        return [self.diff(i) for i in range(self.ring.n)]

    def compose(self, images: Sequence["Poly"], target: RingSpec | None = None) -> "Poly":
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.n:
            raise ValueError("need one image per variable")
        if target is None:
            target = images[0].ring if images else self.ring
        powers = [{0: target.one()} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        out = target.zero()
        for e, c in self.terms.items():
            t = target.const(c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            out = out + t
        return out

    def eval_at_origin(self):
        return self.terms.get((0,) * self.ring.n, mpq(0))

    # -- degrees --------------------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def ord(self) -> int:
        """Minimal total degree of a term (order at the origin)."""
        if not self.terms:
            raise ValueError("order of the zero polynomial")
        return min(sum(e) for e in self.terms)

    def homogeneous_part(self, w, d) -> "Poly":
        return Poly(self.ring, {e: c for e, c in self.terms.items()
                                if sum(a * b for a, b in zip(w, e)) == d}, _clean=True)

    def to_ring(self, ring: RingSpec) -> "Poly":
        if ring.n != self.ring.n:
            raise ValueError("ring has a different number of variables")
        return Poly(ring, self.terms, _clean=True)

    # -- printing -------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.ring.vars, e) if k
            )
            a = abs(c)
            sign = "-" if c < 0 else "+"
            if not mon:
                body = _fmt_q(a)
            elif a == 1:
                body = mon
            else:
                body = f"{_fmt_q(a)}*{mon}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Poly({self})"


def _fmt_q(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ----------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[stripped]!r}", stripped, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            out.append(("id", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, ring: RingSpec, text: str):
        self.ring = ring
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()
            q = self.unary()
            if op[1] == "*":
                p = p * q
            else:
                if len(q.terms) != 1 or (0,) * self.ring.n not in q.terms:
                    self.error("division only by nonzero constants", op)
                p = p * (1 / q.terms[(0,) * self.ring.n])
        return p

    def unary(self) -> Poly:
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            p = self.unary()
            return -p if t[1] == "-" else p
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "num":
                self.error("exponent must be a nonnegative integer literal", t)
            return base ** int(t[1])
        return base

    def atom(self) -> Poly:
        t = self.take()
        if t[0] == "num":
            return self.ring.const(int(t[1]))
        if t[0] == "id":
            if t[1] not in self.ring.vars:
                raise ParseError(f"unknown variable {t[1]!r}", t[2], self.text)
            return self.ring.var(t[1])
        if t[0] == "op" and t[1] == "(":
            p = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return p
        self.error(f"unexpected token {t[1]!r}" if t[1] else "unexpected end of input", t)


def parse_poly(ring: RingSpec, text: str) -> Poly:
    """Parse ``text`` (``+ - * / ^ **``, parentheses, integer literals) into a Poly."""
    return _Parser(ring, text).parse()


# ----------------------------------------------------------------------
# degrees and the Euler field

def wdeg(exp, w) -> int:
    return sum(a * b for a, b in zip(exp, w))


def weighted_degree(f: Poly, w=None) -> tuple:
    """(min, max) weighted degree over the terms of ``f``."""
    if f.is_zero():
        raise ValueError("weighted degree of the zero polynomial")
    w = f.ring.w if w is None else tuple(w)
    degs = [wdeg(e, w) for e in f.terms]
    return min(degs), max(degs)


def is_weighted_homogeneous(f: Poly, w=None) -> bool:
    lo, hi = weighted_degree(f, w)
    return lo == hi


def euler_apply(f: Poly, w=None) -> Poly:
    """theta_w(f) = sum_i w_i x_i df/dx_i, computed termwise."""
    w = f.ring.w if w is None else tuple(w)
    return Poly(f.ring, {e: c * wdeg(e, w) for e, c in f.terms.items() if wdeg(e, w)}, _clean=True)


# ----------------------------------------------------------------------
# vectors and matrices

class VecPoly:
    """Element of the free module O^m."""

    __slots__ = ("ring", "entries")

    def __init__(self, entries: Sequence[Poly], ring: RingSpec | None = None):
        entries = tuple(entries)
        if ring is None:
            if not entries:
                raise ValueError("empty vector needs an explicit ring")
            ring = entries[0].ring
        for e in entries:
            if e.ring != ring:
                raise ValueError("vector entries from different rings")
        self.ring = ring
        self.entries = entries

    @classmethod
    def unit(cls, ring: RingSpec, rank: int, j: int, coeff: Poly | None = None) -> "VecPoly":
        ent = [ring.zero()] * rank
        ent[j] = ring.one() if coeff is None else coeff
        return cls(ent, ring)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, VecPoly) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        return VecPoly([a + b for a, b in zip(self.entries, other.entries)], self.ring)

    def __sub__(self, other):
        return VecPoly([a - b for a, b in zip(self.entries, other.entries)], self.ring)

    def __neg__(self):
        return VecPoly([-a for a in self.entries], self.ring)

    def scale(self, g) -> "VecPoly":
        return VecPoly([g * a for a in self.entries], self.ring)

    def apply(self, f: Poly) -> Poly:
        """Act as the derivation sum_i v_i d/dx_i on ``f``."""
        if self.rank != f.ring.n:
            raise ValueError("derivation rank must equal the number of variables")
        out = f.ring.zero()
        for i, v in enumerate(self.entries):
            if v:
                out = out + v * f.diff(i)
        return out

    def compose(self, images, target: RingSpec) -> "VecPoly":
        return VecPoly([e.compose(images, target) for e in self.entries], target)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    __repr__ = __str__


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Poly]]) -> "PolyMatrix":
        cols = [list(c) for c in cols]
        return cls.from_rows([list(r) for r in zip(*cols)])

    @property
    def ring(self) -> RingSpec:
        return self.entries[0].ring

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j) -> VecPoly:
        return VecPoly([self[i, j] for i in range(self.rows)], self.ring)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def submatrix(self, rows, cols) -> "PolyMatrix":
        return PolyMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def det(self) -> Poly:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _det([self.row(i) for i in range(self.rows)], self.ring)

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows)) + "]"


def _det(rows, ring) -> Poly:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    out = ring.zero()
    for j, a in enumerate(rows[0]):
        if a:
            sub = [r[:j] + r[j + 1:] for r in rows[1:]]
            t = a * _det(sub, ring)
            out = out + t if j % 2 == 0 else out - t
    return out


def jacobian(fs: Sequence[Poly]) -> PolyMatrix:
    """p x n matrix of partial derivatives."""
    fs = list(fs)
    if not fs:
        raise ValueError("jacobian of an empty sequence")
    return PolyMatrix.from_rows([f.gradient() for f in fs])


def minors(M: PolyMatrix, k: int) -> list:
    """All k x k minors; row subsets outer, column subsets inner, both ascending."""
    if not 1 <= k <= min(M.rows, M.cols):
        raise ValueError(f"minor order {k} out of range for a {M.rows}x{M.cols} matrix")
    out = []
    for rs in combinations(range(M.rows), k):
        for cs in combinations(range(M.cols), k):
            out.append(M.submatrix(rs, cs).det())
    return out


def jacobian_minors(fs: Sequence[Poly]) -> list:
    """Maximal minors of the Jacobian of ``fs`` (the ideal written J(f_1,...,f_p))."""
    fs = list(fs)
    M = jacobian(fs)
    if len(fs) > M.cols:
        return []
    return minors(M, len(fs))


def linear_form(ring: RingSpec, coeffs: Iterable) -> Poly:
    return sum((ring.var(i) * c for i, c in enumerate(coeffs) if c), ring.zero())
