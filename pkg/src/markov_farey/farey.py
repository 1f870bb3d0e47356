"""Extended rationals, Farey operations and the exchange tree of Farey triples.

An extended rational is stored as a canonical pair ``(num, den)`` with
``gcd(num, den) == 1`` and ``den >= 0``; infinity is the single value ``1/0``.
Farey triples are stored slotted by parity class, in the order
``(even/odd, odd/odd, odd/even)``, which is also the order of mutation
directions ``0, -1, inf``.
"""

from __future__ import annotations

import enum
import functools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    DepthTooLarge,
    InfiniteInput,
    InvalidTriple,
    IsInitial,
    NonUniqueDescent,
    NotNeighbors,
    ParseError,
    WrongComponent,
    ZeroZero,
)

DEFAULT_MAX_DEPTH = 20


@functools.total_ordering
@dataclass(frozen=True)
class ExtRational:
    """A point of Q ∪ {∞} in canonical form. Build with :func:`normalize`."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num == 0 and self.den == 0:
            raise ZeroZero("0/0 is not an extended rational")
        if self.den < 0 or math.gcd(self.num, self.den) != 1:
            raise ValueError(f"non-canonical pair ({self.num}, {self.den}); use normalize()")
        if self.den == 0 and self.num != 1:
            raise ValueError("infinity must be represented as 1/0")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __lt__(self, other: "ExtRational") -> bool:
        if not isinstance(other, ExtRational):
            return NotImplemented
        if self.den == 0:
            return False
        if other.den == 0:
            return True
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtRational({self.num}/{self.den})"


def normalize(num: int, den: int) -> ExtRational:
    if num == 0 and den == 0:
        raise ZeroZero("0/0 is not an extended rational")
    g = math.gcd(num, den)
    num, den = num // g, den // g
    if den < 0 or (den == 0 and num < 0):
        num, den = -num, -den
    return ExtRational(num, den)


ZERO = ExtRational(0, 1)
INF = ExtRational(1, 0)


def delta(q: ExtRational, q2: ExtRational) -> int:
    return abs(q.num * q2.den - q.den * q2.num)


def are_neighbors(q: ExtRational, q2: ExtRational) -> bool:
    return delta(q, q2) == 1


def _require_neighbors(q: ExtRational, q2: ExtRational) -> None:
    if delta(q, q2) != 1:
        raise NotNeighbors(f"{q} and {q2} are not Farey neighbors (delta={delta(q, q2)})")


def farey_sum(q: ExtRational, q2: ExtRational) -> ExtRational:
    _require_neighbors(q, q2)
    return normalize(q.num + q2.num, q.den + q2.den)


def farey_diff(q: ExtRational, q2: ExtRational) -> ExtRational:
    # Equal denominators leave a numerator of ±1 over 0, which normalizes to 1/0.
    _require_neighbors(q, q2)
    return normalize(q.num - q2.num, q.den - q2.den)


class ParityClass(enum.Enum):
    """Mutation direction and slot label: ``0`` (even/odd), ``-1`` (odd/odd), ``inf`` (odd/even)."""

    C0 = ("0", 0)
    Cm1 = ("-1", 1)
    Cinf = ("inf", 2)

    def __init__(self, label: str, index: int) -> None:
        self.label = label
        self.index = index

    @classmethod
    def from_label(cls, label: str) -> "ParityClass":
        try:
            return _BY_LABEL[label.strip()]
        except KeyError:
            raise ParseError(f"unknown direction {label!r}; expected one of 0, -1, inf") from None

    def __str__(self) -> str:
        return self.label


SLOTS = (ParityClass.C0, ParityClass.Cm1, ParityClass.Cinf)
_BY_LABEL = {k.label: k for k in SLOTS}
_BY_LABEL["∞"] = ParityClass.Cinf

MutationWord = tuple[ParityClass, ...]


def parity_class(q: ExtRational) -> ParityClass:
    if q.num % 2 == 0:
        return ParityClass.C0
    if q.den % 2 == 0:
        return ParityClass.Cinf
    return ParityClass.Cm1


@dataclass(frozen=True)
class FareyTriple:
    """Three pairwise Farey neighbors, one per parity class.

    Use :meth:`of` to build a triple from values given in any order.
    """

    q0: ExtRational
    qm1: ExtRational
    qinf: ExtRational

    def __post_init__(self) -> None:
        for k, q in zip(SLOTS, (self.q0, self.qm1, self.qinf)):
            if parity_class(q) is not k:
                raise InvalidTriple(f"{q} has parity class {parity_class(q)}, not {k}")
        for x, y in ((self.q0, self.qm1), (self.q0, self.qinf), (self.qm1, self.qinf)):
            if delta(x, y) != 1:
                raise InvalidTriple(f"{x} and {y} are not Farey neighbors: delta = {delta(x, y)} != 1")

    @classmethod
    def of(cls, *values: ExtRational) -> "FareyTriple":
        if len(values) != 3:
            raise InvalidTriple(f"a Farey triple has 3 components, got {len(values)}")
        slots: dict[ParityClass, ExtRational] = {}
        for q in values:
            k = parity_class(q)
            if k in slots:
                # Pairwise neighbors never share a parity class.
                raise InvalidTriple(f"{slots[k]} and {q} share parity class {k}; not Farey neighbors")
            slots[k] = q
        return cls(slots[ParityClass.C0], slots[ParityClass.Cm1], slots[ParityClass.Cinf])

    def __getitem__(self, k: ParityClass) -> ExtRational:
        return (self.q0, self.qm1, self.qinf)[k.index]

    def __hash__(self) -> int:
        return hash((self.q0.num, self.q0.den, self.qm1.num, self.qm1.den, self.qinf.num, self.qinf.den))

    def __iter__(self) -> Iterator[ExtRational]:
        return iter((self.q0, self.qm1, self.qinf))

    def replace(self, k: ParityClass, q: ExtRational) -> "FareyTriple":
        vals = [self.q0, self.qm1, self.qinf]
        vals[k.index] = q
        return FareyTriple(*vals)

    def __str__(self) -> str:
        return ",".join(str(q) for q in self)


INITIAL_TRIPLE = FareyTriple(ZERO, ExtRational(-1, 1), INF)


def farey_decompose(q: ExtRational) -> tuple[ExtRational, ExtRational]:
    """Return the two Farey neighbors whose Farey sum is ``q``, smaller first."""
    if q.is_infinite:
        raise InfiniteInput("infinity has no Farey decomposition")
    d, r = q.num, q.den
    # d*y - r*x = 1 with 0 <= y < r
    if r == 1:
        y, x = 0, -1
    else:
        y = pow(d % r, -1, r)
        x = (d * y - 1) // r
    left = normalize(x, y)
    right = farey_diff(q, left)
    return (left, right) if left < right else (right, left)


def positions(T: FareyTriple) -> tuple[ParityClass, ParityClass, ParityClass]:
    """Slots of the smallest, middle and largest component (f, s, t)."""
    a, b, c = T.q0, T.qm1, T.qinf
    C0, Cm1, Cinf = SLOTS
    if a < b:
        if b < c:
            return C0, Cm1, Cinf
        return (C0, Cinf, Cm1) if a < c else (Cinf, C0, Cm1)
    if a < c:
        return Cm1, C0, Cinf
    return (Cm1, Cinf, C0) if b < c else (Cinf, Cm1, C0)


def mutate(T: FareyTriple, k: ParityClass) -> FareyTriple:
    f, s, t = positions(T)
    if k is f:
        new = farey_sum(T[s], T[t])
    elif k is s:
        new = farey_diff(T[f], T[t])
    else:
        new = farey_sum(T[f], T[s])
    assert parity_class(new) is k, (T, k, new)
    return T.replace(k, new)


def apply_word(T: FareyTriple, word: Sequence[ParityClass]) -> FareyTriple:
    for k in word:
        T = mutate(T, k)
    return T


def complexity(T: FareyTriple) -> int:
    middle = T[positions(T)[1]]
    return abs(middle.num) + middle.den


def descent_direction(T: FareyTriple) -> ParityClass:
    if T == INITIAL_TRIPLE:
        raise IsInitial("the initial triple has no descent direction")
    c = complexity(T)
    down = [k for k in SLOTS if complexity(mutate(T, k)) < c]
    if len(down) != 1:
        raise NonUniqueDescent(f"triple {T} has {len(down)} complexity-decreasing directions: {down}")
    return down[0]


_PATH_CACHE: dict[FareyTriple, MutationWord] = {}
_PATH_CACHE_LIMIT = 1 << 17
_PATH_CACHE_MAX_LEN = 64


def path_to_initial(T: FareyTriple) -> MutationWord:
    """Descent word from ``T`` to the initial triple, applied left to right."""
    chain: list[tuple[FareyTriple, ParityClass]] = []
    cur = T
    while cur != INITIAL_TRIPLE and cur not in _PATH_CACHE:
        k = descent_direction(cur)
        chain.append((cur, k))
        cur = mutate(cur, k)
    tail = _PATH_CACHE.get(cur, ())
    word = tuple(k for _, k in chain) + tail
    if len(_PATH_CACHE) > _PATH_CACHE_LIMIT:
        _PATH_CACHE.clear()
    for i, (node, _) in enumerate(chain):
        if len(word) - i <= _PATH_CACHE_MAX_LEN:
            _PATH_CACHE[node] = word[i:]
    return word


def path_from_initial(T: FareyTriple) -> MutationWord:
    """Word that produces ``T`` from the initial triple (the reversed descent word)."""
    return tuple(reversed(path_to_initial(T)))


def component(T: FareyTriple) -> Optional[ParityClass]:
    """Which subtree hanging off the root contains ``T``; ``None`` for the root itself."""
    word = path_to_initial(T)
    return word[-1] if word else None


def moebius_m(q: ExtRational) -> ExtRational:
    return normalize(-q.den, q.den + q.num)


def moebius_m_inv(q: ExtRational) -> ExtRational:
    return normalize(q.num + q.den, -q.num)


def _require_component(T: FareyTriple, expected: ParityClass, name: str) -> None:
    got = component(T)
    if got is not expected:
        raise WrongComponent(f"{name} needs a triple in component {expected}, got {T} in {got or 'root'}")


def phi(T: FareyTriple) -> FareyTriple:
    _require_component(T, ParityClass.Cm1, "phi")
    return FareyTriple(moebius_m(T.qinf), moebius_m(T.q0), moebius_m(T.qm1))


def psi(T: FareyTriple) -> FareyTriple:
    _require_component(T, ParityClass.Cm1, "psi")
    return FareyTriple(moebius_m_inv(T.qm1), moebius_m_inv(T.qinf), moebius_m_inv(T.q0))


def phi_inv(T: FareyTriple) -> FareyTriple:
    _require_component(T, ParityClass.Cinf, "phi_inv")
    return FareyTriple(moebius_m_inv(T.qm1), moebius_m_inv(T.qinf), moebius_m_inv(T.q0))


def psi_inv(T: FareyTriple) -> FareyTriple:
    _require_component(T, ParityClass.C0, "psi_inv")
    return FareyTriple(moebius_m(T.qinf), moebius_m(T.q0), moebius_m(T.qm1))


# Edge labels carried by phi and psi: phi∘μ_k = μ_{PHI_EDGE[k]}∘phi.
PHI_EDGE = {ParityClass.Cm1: ParityClass.Cinf, ParityClass.C0: ParityClass.Cm1, ParityClass.Cinf: ParityClass.C0}
PSI_EDGE = {ParityClass.Cm1: ParityClass.C0, ParityClass.C0: ParityClass.Cinf, ParityClass.Cinf: ParityClass.Cm1}


def iter_tree(depth: int, max_depth: int = DEFAULT_MAX_DEPTH) -> Iterator[tuple[FareyTriple, MutationWord]]:
    """Breadth-first walk of the exchange tree down to ``depth``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth > max_depth:
        raise DepthTooLarge(f"depth {depth} exceeds the cap {max_depth}")
    queue: deque[tuple[FareyTriple, MutationWord]] = deque([(INITIAL_TRIPLE, ())])
    while queue:
        T, word = queue.popleft()
        yield T, word
        if len(word) == depth:
            continue
        for k in SLOTS:
            if word and word[-1] is k:
                continue
            queue.append((mutate(T, k), word + (k,)))


def enumerate_triples(depth: int, max_depth: int = DEFAULT_MAX_DEPTH) -> list[tuple[FareyTriple, MutationWord]]:
    return list(iter_tree(depth, max_depth))


def tree_size(depth: int) -> int:
    return 1 + 3 * (2**depth - 1)


# -- text format --------------------------------------------------------------


def parse_rational(text: str) -> ExtRational:
    s = text.strip()
    if s.lower() in ("inf", "∞"):
        return INF
    try:
        if "/" in s:
            a, b = s.split("/")
            return normalize(int(a), int(b))
        return normalize(int(s), 1)
    except (ValueError, ZeroZero) as exc:
        raise ParseError(f"cannot parse fraction {text!r}: {exc}") from None


def parse_triple(text: str) -> FareyTriple:
    parts = [p for p in text.split(",")]
    if len(parts) != 3:
        raise ParseError(f"expected three comma-separated fractions, got {text!r}")
    return FareyTriple.of(*(parse_rational(p) for p in parts))


def parse_word(text: str) -> MutationWord:
    s = text.strip()
    if not s:
        return ()
    return tuple(ParityClass.from_label(t) for t in s.split(","))


def format_word(word: Sequence[ParityClass]) -> str:
    return ",".join(str(k) for k in word)
