from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping

from quiv_errors import ConstraintError, DomainMismatch

DELIMITERS = "(),"
POINT_LABEL = "1"


def _atom_char(c: str) -> bool:
    return c not in DELIMITERS and c != "#" and not c.isspace()


def is_token(text: object) -> bool:
    """Non-empty, no whitespace, no '#': survives a document line as one token."""
    return isinstance(text, str) and bool(text) and not any(c == "#" or c.isspace() for c in text)


def _scan_label(label: str, i: int) -> int:
    # End index of the LABEL starting at i, or -1. Iterative; nesting depth is unbounded.
    n = len(label)
    open_pairs: list[bool] = []  # one per unclosed "(", True once its "," was read
    while True:
        while i < n and label[i] == "(":
            open_pairs.append(False)
            i += 1
        j = i
        while j < n and _atom_char(label[j]):
            j += 1
        if j == i:
            return -1
        i = j
        while open_pairs:
            if i < n and not open_pairs[-1] and label[i] == ",":
                open_pairs[-1] = True
                i += 1
                break
            if i < n and open_pairs[-1] and label[i] == ")":
                open_pairs.pop()
                i += 1
                continue
            return -1
        else:
            return i


def is_label(label: object) -> bool:
    """True for an atom or a (possibly nested) pair encoding "(a,b)"."""
    if not isinstance(label, str) or not label:
        return False
    return _scan_label(label, 0) == len(label)


def pair_label(first: str, second: str) -> str:
    return f"({first},{second})"


def split_pair(label: str) -> tuple[str, str]:
    if not isinstance(label, str) or not label.startswith("("):
        raise ConstraintError(f"not a pair label: {label!r}")
    j = _scan_label(label, 1)
    if j < 0 or j >= len(label) or label[j] != ",":
        raise ConstraintError(f"not a pair label: {label!r}")
    k = _scan_label(label, j + 1)
    if k < 0 or k != len(label) - 1 or label[k] != ")":
        raise ConstraintError(f"not a pair label: {label!r}")
    return label[1:j], label[j + 1 : k]


@dataclass(frozen=True, eq=False)
class FiniteSet:
    """Finite set of distinct labels. Stored order is kept for iteration;
    equality and hashing ignore it."""

    elements: tuple[str, ...] = ()
    _members: frozenset[str] = field(default=frozenset(), init=False, repr=False)

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        for e in elems:
            if not is_label(e):
                raise ConstraintError(f"invalid element label: {e!r}")
        members = frozenset(elems)
        if len(members) != len(elems):
            dups = sorted(e for e, n in Counter(elems).items() if n > 1)
            raise ConstraintError(f"duplicate element labels: {', '.join(dups)}")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", members)

    @classmethod
    def of(cls, *labels: str) -> FiniteSet:
        return cls(tuple(labels))

    def sorted(self) -> list[str]:
        return sorted(self.elements)

    def canonical(self) -> FiniteSet:
        return FiniteSet(tuple(self.sorted()))

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __str__(self) -> str:
        return "{" + ",".join(self.sorted()) + "}"


EMPTY = FiniteSet()
POINT = FiniteSet((POINT_LABEL,))
TWO = FiniteSet(("0", "1"))


@dataclass(frozen=True, eq=False)
class SetFunction:
    """Total function between two finite sets."""

    domain: FiniteSet
    codomain: FiniteSet
    mapping: Mapping[str, str]

    def __post_init__(self) -> None:
        table = dict(self.mapping)
        missing = [x for x in self.domain.sorted() if x not in table]
        if missing:
            raise DomainMismatch(f"function undefined on {', '.join(missing)}")
        extra = sorted(x for x in table if x not in self.domain)
        if extra:
            raise DomainMismatch(f"function defined outside its domain: {', '.join(extra)}")
        for x in self.domain.sorted():
            if table[x] not in self.codomain:
                raise DomainMismatch(f"image of {x!r} is {table[x]!r}, not in codomain {self.codomain}")
        object.__setattr__(self, "mapping", MappingProxyType(table))

    def __call__(self, x: str) -> str:
        try:
            return self.mapping[x]
        except KeyError:
            raise DomainMismatch(f"{x!r} is not in the domain {self.domain}") from None

    def items(self) -> list[tuple[str, str]]:
        return [(x, self.mapping[x]) for x in self.domain.sorted()]

    def image(self) -> FiniteSet:
        return FiniteSet(tuple(sorted(set(self.mapping.values()))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFunction):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and dict(self.mapping) == dict(other.mapping)
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, frozenset(self.mapping.items())))

    def __str__(self) -> str:
        body = ", ".join(f"{x}->{y}" for x, y in self.items())
        return f"{{{body}}}: {self.domain} -> {self.codomain}"


def identity_fn(s: FiniteSet) -> SetFunction:
    return SetFunction(s, s, {x: x for x in s})


def compose_fn(g: SetFunction, f: SetFunction) -> SetFunction:
    """g after f."""
    if f.codomain != g.domain:
        raise DomainMismatch(f"cannot compose: codomain {f.codomain} differs from domain {g.domain}")
    return SetFunction(f.domain, g.codomain, {x: g.mapping[y] for x, y in f.mapping.items()})


def empty_fn(s: FiniteSet) -> SetFunction:
    return SetFunction(EMPTY, s, {})


def constant_fn(s: FiniteSet) -> SetFunction:
    return SetFunction(s, POINT, {x: POINT_LABEL for x in s})


def product(s: FiniteSet, t: FiniteSet) -> FiniteSet:
    return FiniteSet(tuple(pair_label(a, b) for a in s.sorted() for b in t.sorted()))


def tagged_double(s: FiniteSet) -> FiniteSet:
    """{0,1} x S."""
    return product(TWO, s)


def iota(j: int, x: str) -> str:
    if j not in (0, 1):
        raise ConstraintError(f"inclusion index must be 0 or 1, got {j!r}")
    return pair_label(str(j), x)


def inclusion_fn(j: int, s: FiniteSet) -> SetFunction:
    return SetFunction(s, tagged_double(s), {x: iota(j, x) for x in s})


def square(s: FiniteSet) -> FiniteSet:
    return product(s, s)


def pi(k: int, pair: str) -> str:
    if k not in (1, 2):
        raise ConstraintError(f"projection index must be 1 or 2, got {k!r}")
    return split_pair(pair)[k - 1]


def projection_fn(k: int, s: FiniteSet, t: FiniteSet | None = None) -> SetFunction:
    """pi_k : S x T -> S (k=1) or T (k=2); T defaults to S."""
    other = s if t is None else t
    prod = product(s, other)
    cod = s if k == 1 else other
    return SetFunction(prod, cod, {p: pi(k, p) for p in prod})


def pairing(f: SetFunction, g: SetFunction) -> SetFunction:
    """<f, g> : X -> cod(f) x cod(g)."""
    if f.domain != g.domain:
        raise DomainMismatch(f"cannot pair functions with domains {f.domain} and {g.domain}")
    return SetFunction(
        f.domain,
        product(f.codomain, g.codomain),
        {x: pair_label(f.mapping[x], g.mapping[x]) for x in f.domain},
    )


def function_count(s: FiniteSet, t: FiniteSet) -> int:
    return len(t) ** len(s)


def enumerate_functions(s: FiniteSet, t: FiniteSet) -> Iterator[SetFunction]:
    """All |t|^|s| functions s -> t, lexicographic by (sorted domain, image)."""
    dom = s.sorted()
    cod = t.sorted()
    for images in itertools.product(cod, repeat=len(dom)):
        yield SetFunction(s, t, dict(zip(dom, images)))
