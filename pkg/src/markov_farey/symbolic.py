"""Cluster variables as exact Laurent polynomials, with principal coefficients.

Variables ``x1..x3`` are the initial cluster and ``x4..x6`` the frozen
coefficients. Each seed mutation performs the exchange relation with an exact
polynomial division, so a remainder anywhere means something is wrong.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .closedform import g_matrix
from .errors import Inhomogeneous, NotDivisible
from .exchange import B_PLUS, ExtendedMatrix, Matrix, initial_matrix, mutate_matrix
from .farey import INITIAL_TRIPLE, SLOTS, FareyTriple, ParityClass, format_word, mutate

NVARS = 6
DEFAULT_SYMBOLIC_DEPTH = 6

Exponent = tuple[int, ...]


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Stored as a mapping from exponent tuples to nonzero coefficients; the zero
    polynomial has no terms.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, coeff in items:
            exp = tuple(exp)
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_add(self, other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_add(self, -other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_mul(self, other)

    def __pow__(self, k: int) -> "LaurentPoly":
        return lp_pow(self, k)

    def __truediv__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_exact_div(self, other)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"


def lp_monomial(exponents: Sequence[int], coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly({tuple(exponents): coefficient})


def lp_const(c: int, nvars: int = NVARS) -> LaurentPoly:
    return lp_monomial((0,) * nvars, c)


def variable(i: int, nvars: int = NVARS) -> LaurentPoly:
    """The generator ``x_i`` (1-based)."""
    exp = [0] * nvars
    exp[i - 1] = 1
    return lp_monomial(exp)


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    out = dict(p.terms)
    for e, c in q.terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return LaurentPoly._raw(out)


def _add_exp(e1: Exponent, e2: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(e1, e2))


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if len(p) < len(q):
        p, q = q, p
    out: dict[Exponent, int] = {}
    for e2, c2 in q.terms.items():
        for e1, c1 in p.terms.items():
            e = _add_exp(e1, e2)
            out[e] = out.get(e, 0) + c1 * c2
    return LaurentPoly._raw({e: c for e, c in out.items() if c})


def lp_pow(p: LaurentPoly, k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("negative powers are only defined for monomials; use lp_exact_div")
    nvars = len(next(iter(p.terms))) if p.terms else NVARS
    result = lp_const(1, nvars)
    base = p
    while k:
        if k & 1:
            result = lp_mul(result, base)
        k >>= 1
        if k:
            base = lp_mul(base, base)
    return result


def _min_exponent(p: LaurentPoly) -> Exponent:
    return tuple(min(col) for col in zip(*p.terms))


def _shift(p: LaurentPoly, by: Exponent) -> dict[Exponent, int]:
    return {tuple(a - b for a, b in zip(e, by)): c for e, c in p.terms.items()}


def lp_exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``p / q``, raising :class:`NotDivisible` unless the division is exact.

    Both operands are shifted by monomials into polynomials with no variable
    factor, then divided in lex order.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if p.is_zero():
        return p
    alpha, beta = _min_exponent(p), _min_exponent(q)
    P, Q = _shift(p, alpha), _shift(q, beta)
    lead_q = max(Q)
    lead_c = Q[lead_q]
    rest_q = [(e, c) for e, c in Q.items() if e != lead_q]

    remainder = dict(P)
    # max-heap of remainder exponents via negation; stale entries are skipped
    heap = [tuple(-x for x in e) for e in remainder]
    heapq.heapify(heap)
    quotient: dict[Exponent, int] = {}
    while remainder:
        lead_r = tuple(-x for x in heapq.heappop(heap))
        c = remainder.get(lead_r)
        if c is None:
            continue
        t = tuple(a - b for a, b in zip(lead_r, lead_q))
        if min(t) < 0:
            raise NotDivisible(f"{render(p)} is not divisible by {render(q)}")
        coeff, rem = divmod(c, lead_c)
        if rem:
            raise NotDivisible(f"{render(p)} is not divisible by {render(q)} (coefficient {c} / {lead_c})")
        quotient[t] = coeff
        del remainder[lead_r]
        for e, cq in rest_q:
            key = _add_exp(t, e)
            v = remainder.get(key, 0) - coeff * cq
            if v:
                if key not in remainder:
                    heapq.heappush(heap, tuple(-x for x in key))
                remainder[key] = v
            else:
                remainder.pop(key, None)
    offset = tuple(a - b for a, b in zip(alpha, beta))
    return LaurentPoly._raw({_add_exp(e, offset): c for e, c in quotient.items()})


def render(p: LaurentPoly) -> str:
    """Stable text form: ``c * x1^a1 ... x6^a6`` terms, leading monomial first."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        factors = " ".join(f"x{i + 1}^{a}" for i, a in enumerate(e) if a)
        c = p.terms[e]
        parts.append(f"{c} * {factors}" if factors else f"{c}")
    return " + ".join(parts)


# -- seeds ---------------------------------------------------------------------


@dataclass(frozen=True)
class SymbolicSeed:
    matrix: ExtendedMatrix
    vars: tuple[LaurentPoly, ...]

    def __getitem__(self, k: ParityClass) -> LaurentPoly:
        return self.vars[k.index]


def initial_seed() -> SymbolicSeed:
    return SymbolicSeed(initial_matrix(), tuple(variable(i) for i in (1, 2, 3)))


def mutate_seed(S: SymbolicSeed, k: ParityClass) -> SymbolicSeed:
    idx = k.index
    column = [row[idx] for row in S.matrix.rows]
    n = S.matrix.n
    generators = list(S.vars) + [variable(n + i + 1) for i in range(n)]
    one = lp_const(1)
    pos, neg = one, one
    for X, b in zip(generators, column):
        if b > 0:
            pos = pos * lp_pow(X, b)
        elif b < 0:
            neg = neg * lp_pow(X, -b)
    new_var = lp_exact_div(pos + neg, S.vars[idx])
    new_vars = list(S.vars)
    new_vars[idx] = new_var
    return SymbolicSeed(mutate_matrix(S.matrix, k), tuple(new_vars))


def generator_degrees(B: Matrix = B_PLUS) -> tuple[tuple[int, ...], ...]:
    """Degree of each generator: ``e_j`` for cluster variables, minus column ``j`` of ``B`` for frozen ones."""
    n = len(B)
    degs = []
    for j in range(n):
        degs.append(tuple(int(i == j) for i in range(n)))
    for j in range(n):
        degs.append(tuple(-B[i][j] for i in range(n)))
    return tuple(degs)


_DEGREES = generator_degrees()


def monomial_degree(exp: Exponent, degrees=_DEGREES) -> tuple[int, ...]:
    n = len(degrees[0])
    return tuple(sum(a * d[i] for a, d in zip(exp, degrees)) for i in range(n))


def grading_degree(p: LaurentPoly, degrees=_DEGREES) -> tuple[int, ...]:
    if p.is_zero():
        raise ValueError("the zero polynomial has no degree")
    it = iter(p.terms)
    first = next(it)
    deg = monomial_degree(first, degrees)
    for e in it:
        other = monomial_degree(e, degrees)
        if other != deg:
            raise Inhomogeneous(f"monomials {first} (degree {deg}) and {e} (degree {other}) disagree")
    return deg


# -- verification --------------------------------------------------------------


@dataclass
class VerifyReport:
    word: tuple[ParityClass, ...]
    triple: FareyTriple
    ok: bool = True
    degrees: list[tuple[int, ...] | None] = field(default_factory=list)
    expected: list[tuple[int, ...]] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        head = f"[{status}] word=({format_word(self.word)}) triple={self.triple}"
        return "\n".join([head] + [f"  {f}" for f in self.findings])


def _check_seed(word, T: FareyTriple, S: SymbolicSeed) -> VerifyReport:
    report = VerifyReport(tuple(word), T)
    g = g_matrix(T)
    report.expected = [tuple(row[j] for row in g) for j in range(3)]
    for k, X in zip(SLOTS, S.vars):
        try:
            deg = grading_degree(X)
        except Inhomogeneous as exc:
            report.ok = False
            report.findings.append(f"slot {k}: {exc}")
            report.degrees.append(None)
            continue
        report.degrees.append(deg)
        want = report.expected[k.index]
        if deg != want:
            report.ok = False
            report.findings.append(f"slot {k}: degree {deg} but g-matrix column is {want}")
    return report


def verify_word(word: Sequence[ParityClass], max_length: int = DEFAULT_SYMBOLIC_DEPTH) -> VerifyReport:
    """Mutate the initial seed and the initial triple along ``word`` and compare degrees to g-vectors."""
    if len(word) > max_length:
        raise ValueError(f"word length {len(word)} exceeds the symbolic depth cap {max_length}")
    S, T = initial_seed(), INITIAL_TRIPLE
    for k in word:
        try:
            S = mutate_seed(S, k)
        except NotDivisible as exc:
            report = VerifyReport(tuple(word), T, ok=False)
            report.findings.append(f"exchange division failed at {k}: {exc}")
            return report
        T = mutate(T, k)
    return _check_seed(word, T, S)


def verify_all_words(max_length: int, cap: int = DEFAULT_SYMBOLIC_DEPTH) -> Iterator[VerifyReport]:
    """Check every reduced word up to ``max_length``, reusing prefix seeds."""
    if max_length > cap:
        raise ValueError(f"symbolic depth {max_length} exceeds the cap {cap}")
    stack: list[tuple[tuple[ParityClass, ...], FareyTriple, SymbolicSeed]] = [((), INITIAL_TRIPLE, initial_seed())]
    while stack:
        word, T, S = stack.pop()
        yield _check_seed(word, T, S)
        if len(word) == max_length:
            continue
        for k in reversed(SLOTS):
            if word and word[-1] is k:
                continue
            try:
                child = mutate_seed(S, k)
            except NotDivisible as exc:
                report = VerifyReport(word + (k,), mutate(T, k), ok=False)
                report.findings.append(f"exchange division failed: {exc}")
                yield report
                continue
            stack.append((word + (k,), mutate(T, k), child))
