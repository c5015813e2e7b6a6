"""Exact sparse polynomials in the alphabets x, z and b.

A monomial is stored as a single Python int: every variable that has ever
been used owns a fixed-width bit field (its *slot*), and the monomial's
exponent of that variable lives in that field.  Multiplying monomials is
then integer addition, which keeps the inner loop of :meth:`Polynomial.__mul__`
cheap.  Slots are process-global and only ever appended, so packed keys stay
valid for the lifetime of the process.  Nothing about the slot numbering
leaks into output: rendering always sorts by the graded-lex order defined
on :class:`Variable`.
"""

from __future__ import annotations

import json
import re
import threading
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
# exponents must stay below 2**FIELD_BITS; tracked through a degree bound
MAX_DEGREE = FIELD_MASK


class VarClass(IntEnum):
    X = 0
    Z = 1
    B = 2


_PREFIX = {VarClass.X: "x", VarClass.Z: "z", VarClass.B: "b"}
_CLASS_OF = {v: k for k, v in _PREFIX.items()}


class Variable(NamedTuple):
    """A single indeterminate; tuple order is the variable order X < Z < B."""

    cls: VarClass
    index: int

    def __str__(self) -> str:
        return f"{_PREFIX[self.cls]}{self.index}"

    @classmethod
    def parse(cls, name: str) -> Variable:
        return _parse_var(name)


@lru_cache(maxsize=4096)
def _parse_var(name: str) -> Variable:
    m = re.fullmatch(r"([xzb])(-?\d+)", name)
    if m is None:
        raise ValueError(f"bad variable name {name!r}")
    return make_var(_CLASS_OF[m.group(1)], int(m.group(2)))


def make_var(cls: VarClass, index: int) -> Variable:
    cls = VarClass(cls)
    if cls != VarClass.B and index < 1:
        raise ValueError(f"{_PREFIX[cls]}-indices must be >= 1, got {index}")
    return Variable(cls, int(index))


class _SlotTable:
    """Append-only map Variable <-> bit-field slot, safe under threads."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._slot: dict[Variable, int] = {}
        self._var: list[Variable] = []

    def slot(self, v: Variable) -> int:
        s = self._slot.get(v)
        if s is None:
            with self._lock:
                s = self._slot.get(v)
                if s is None:
                    s = len(self._var)
                    self._var.append(v)
                    self._slot[v] = s
        return s

    def var(self, s: int) -> Variable:
        return self._var[s]


_SLOTS = _SlotTable()


def pack(exponents: Mapping[Variable, int]) -> int:
    key = 0
    for v, e in exponents.items():
        if e < 0:
            raise ValueError("negative exponent")
        if e > MAX_DEGREE:
            raise OverflowError("exponent exceeds packed field width")
        if e:
            key |= e << (FIELD_BITS * _SLOTS.slot(v))
    return key


@lru_cache(maxsize=1 << 17)
def _unpack_items(key: int) -> tuple[tuple[Variable, int], ...]:
    out = []
    s = 0
    while key:
        e = key & FIELD_MASK
        if e:
            out.append((_SLOTS.var(s), e))
        key >>= FIELD_BITS
        s += 1
    return tuple(sorted(out))


def unpack(key: int) -> dict[Variable, int]:
    return dict(_unpack_items(key))


@lru_cache(maxsize=1 << 17)
def _key_sort_key(key: int) -> tuple:
    items = _unpack_items(key)
    return (sum(e for _, e in items), tuple((-v.cls, -v.index, e) for v, e in items))


def monomial_sort_key(exps: Mapping[Variable, int]) -> tuple:
    """Ascending key for graded-lex order.

    Total degree first; ties are broken lexicographically with the smallest
    variable (x1 before x2 before ... z1 ... b-1, b0, b1 ...) most
    significant.
    """
    items = sorted(exps.items())
    deg = sum(e for _, e in items)
    return (deg, tuple((-v.cls, -v.index, e) for v, e in items))


Scalar = int
PolyLike = Union["Polynomial", int]


class Polynomial:
    """Immutable polynomial with integer coefficients.

    ``terms`` maps packed monomials to nonzero ints.  Construct through
    :func:`var`, :func:`const`, :meth:`from_terms` or arithmetic.
    """

    __slots__ = ("_terms", "_deg", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, _deg: int | None = None):
        t = {k: c for k, c in (terms or {}).items() if c}
        self._terms = t
        if _deg is None:
            _deg = max((sum(unpack(k).values()) for k in t), default=0)
        self._deg = _deg
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int], deg: int) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = terms
        p._deg = deg
        p._hash = None
        return p

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Mapping[Variable, int]]]) -> Polynomial:
        acc: dict[int, int] = {}
        for c, exps in terms:
            k = pack(exps)
            acc[k] = acc.get(k, 0) + int(c)
        return cls(acc)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, int]:
        return self._terms

    def items(self) -> Iterator[tuple[dict[Variable, int], int]]:
        for k, c in self._terms.items():
            yield unpack(k), c

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for exps, _ in self.items():
            out.update(exps)
        return out

    def degree(self) -> int:
        return max((sum(e.values()) for e, _ in self.items()), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e.values()) for e, _ in self.items()}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: PolyLike) -> Polynomial:
        other = as_poly(other)
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for k, c in small.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Polynomial._raw(out, max(self._deg, other._deg))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({k: -c for k, c in self._terms.items()}, self._deg)

    def __sub__(self, other: PolyLike) -> Polynomial:
        return self + (-as_poly(other))

    def __rsub__(self, other: PolyLike) -> Polynomial:
        return as_poly(other) - self

    def __mul__(self, other: PolyLike) -> Polynomial:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Polynomial._raw({k: c * other for k, c in self._terms.items()}, self._deg)
        other = as_poly(other)
        deg = self._deg + other._deg
        if deg > MAX_DEGREE:
            raise OverflowError("product degree exceeds packed field width")
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Polynomial._raw({k: c for k, c in out.items() if c}, deg)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution -----------------------------------------------------

    def map_variables(self, fn) -> Polynomial:
        """Substitute ``v -> fn(v)`` where ``fn`` returns ``(sign, Variable)``."""
        acc: dict[int, int] = {}
        for exps, c in self.items():
            sign = 1
            new: dict[Variable, int] = {}
            for v, e in exps.items():
                s, w = fn(v)
                if s < 0 and e % 2:
                    sign = -sign
                new[w] = new.get(w, 0) + e
            k = pack(new)
            acc[k] = acc.get(k, 0) + sign * c
        return Polynomial(acc, self._deg)

    def subs_zero(self, classes: Iterable[VarClass]) -> Polynomial:
        """Set every variable in the given classes to 0."""
        kill = set(VarClass(c) for c in classes)
        acc = {}
        for k, c in self._terms.items():
            if not any(v.cls in kill for v in unpack(k)):
                acc[k] = c
        return Polynomial(acc, self._deg)

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[int, dict[Variable, int]]]:
        """Terms in descending graded-lex order."""
        keys = sorted(self._terms, key=_key_sort_key, reverse=True)
        return [(self._terms[k], unpack(k)) for k in keys]

    def to_text(self) -> str:
        rows = self.sorted_terms()
        if not rows:
            return "0"
        parts: list[str] = []
        for i, (c, exps) in enumerate(rows):
            mono = "*".join(
                str(v) if e == 1 else f"{v}^{e}" for v, e in sorted(exps.items())
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"c": str(c), "m": {str(v): e for v, e in sorted(exps.items())}}
                for c, exps in self.sorted_terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def as_poly(p: PolyLike) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, int):
        return const(p)
    raise TypeError(f"cannot coerce {type(p).__name__} to Polynomial")


def const(c: int) -> Polynomial:
    return Polynomial._raw({0: int(c)} if c else {}, 0)


ZERO = Polynomial._raw({}, 0)
ONE = const(1)


def var(v: Variable | str) -> Polynomial:
    if isinstance(v, str):
        v = Variable.parse(v)
    return Polynomial._raw({pack({v: 1}): 1}, 1)


def x(i: int) -> Polynomial:
    return var(make_var(VarClass.X, i))


def z(i: int) -> Polynomial:
    return var(make_var(VarClass.Z, i))


def b(i: int) -> Polynomial:
    return var(make_var(VarClass.B, i))


def add(p: PolyLike, q: PolyLike) -> Polynomial:
    return as_poly(p) + as_poly(q)


def mul(p: PolyLike, q: PolyLike) -> Polynomial:
    return as_poly(p) * as_poly(q)


def poly_sum(ps: Iterable[Polynomial]) -> Polynomial:
    """Sum without building intermediate immutable objects."""
    acc: dict[int, int] = {}
    deg = 0
    for p in ps:
        deg = max(deg, p._deg)
        for k, c in p._terms.items():
            acc[k] = acc.get(k, 0) + c
    return Polynomial._raw({k: c for k, c in acc.items() if c}, deg)


def product(ps: Iterable[PolyLike]) -> Polynomial:
    out = ONE
    for p in ps:
        out = out * as_poly(p)
    return out


# -- substitutions ------------------------------------------------------------

def _star_var(v: Variable) -> tuple[int, Variable]:
    if v.cls == VarClass.B and v.index <= 0:
        return -1, Variable(VarClass.B, 1 - v.index)
    return 1, v


def star(p: Polynomial) -> Polynomial:
    """Replace b_{-i} by -b_{i+1} for every i >= 0."""
    return p.map_variables(_star_var)


def _swap_var(v: Variable) -> tuple[int, Variable]:
    if v.cls == VarClass.Z:
        return 1, Variable(VarClass.B, v.index)
    if v.cls == VarClass.B:
        if v.index < 1:
            raise ValueError(f"swap_xz needs positive b-indices, found {v}; apply star first")
        return 1, Variable(VarClass.Z, v.index)
    return 1, v


def swap_xz(p: Polynomial) -> Polynomial:
    """Exchange z_i and b_i for all i; x is untouched."""
    return p.map_variables(_swap_var)


def _swap_fields(key: int, a: int, c: int) -> int:
    sa, sc = FIELD_BITS * a, FIELD_BITS * c
    ea, ec = (key >> sa) & FIELD_MASK, (key >> sc) & FIELD_MASK
    return key + ((ec - ea) << sa) + ((ea - ec) << sc)


def is_symmetric_x(p: Polynomial, n_x: int) -> bool:
    """Invariance under each adjacent transposition x_i <-> x_{i+1}."""
    terms = p.terms
    for i in range(1, n_x):
        a = _SLOTS.slot(make_var(VarClass.X, i))
        c = _SLOTS.slot(make_var(VarClass.X, i + 1))
        for k, coef in terms.items():
            if terms.get(_swap_fields(k, a, c)) != coef:
                return False
    return True


# -- parsing ------------------------------------------------------------------

def _parse_monomial(body: str) -> tuple[int, dict[Variable, int]]:
    coeff = 1
    exps: dict[Variable, int] = {}
    for factor in body.split("*"):
        if not factor:
            raise ValueError(f"empty factor in {body!r}")
        if factor.isdigit():
            coeff *= int(factor)
            continue
        name, _, power = factor.partition("^")
        v = Variable.parse(name)
        exps[v] = exps.get(v, 0) + (int(power) if power else 1)
    return coeff, exps


def parse_text(s: str) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_text`.

    Terms are separated by `` + `` / `` - `` with surrounding spaces, which
    keeps ``b-1`` unambiguous.
    """
    toks = s.strip().split()
    if not toks:
        raise ValueError("empty polynomial text")
    terms: list[tuple[int, dict[Variable, int]]] = []
    sign = 1
    first = toks[0]
    if first.startswith("-") and len(first) > 1:
        sign, first = -1, first[1:]
    c, e = _parse_monomial(first)
    terms.append((sign * c, e))
    rest = toks[1:]
    if len(rest) % 2:
        raise ValueError(f"malformed polynomial text {s!r}")
    for op, body in zip(rest[::2], rest[1::2]):
        if op not in "+-" or len(op) != 1:
            raise ValueError(f"expected + or -, got {op!r}")
        c, e = _parse_monomial(body)
        terms.append((c if op == "+" else -c, e))
    return Polynomial.from_terms(terms)


def from_json_obj(obj: Mapping) -> Polynomial:
    return Polynomial.from_terms(
        (int(t["c"]), {Variable.parse(k): int(e) for k, e in t["m"].items()})
        for t in obj["terms"]
    )


def parse_json(s: str) -> Polynomial:
    return from_json_obj(json.loads(s))
