"""Closed-form c- and g-matrices of the Markov pattern, indexed by Farey triples.

Triples in the component hanging off the root through ``μ_{-1}`` get explicit
formulas; the other two components are reached through ``phi``/``psi`` and the
cyclic action on matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import farey
from .errors import Unclassifiable, WrongComponent
from .exchange import (
    B_MINUS,
    B_PLUS,
    ExtendedMatrix,
    GMatrix,
    Matrix,
    act,
)
from .farey import INF, INITIAL_TRIPLE, FareyTriple, ParityClass


class CaseLabel(enum.Enum):
    SpecialMinus = "special-"
    SpecialPlus = "special+"
    CaseI = "i"
    CaseII = "ii"
    CaseIII = "iii"
    CaseIV = "iv"
    CaseV = "v"
    CaseVI = "vi"


@dataclass(frozen=True)
class TripleCoefficients:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    @classmethod
    def of(cls, T: FareyTriple) -> "TripleCoefficients":
        return cls(T.q0.num, T.q0.den, T.qm1.num, T.qm1.den, T.qinf.num, T.qinf.den)


def _in_tm1(T: FareyTriple) -> bool:
    return T == INITIAL_TRIPLE or farey.component(T) is ParityClass.Cm1


def classify(T: FareyTriple, *, check_component: bool = True) -> CaseLabel:
    """Which closed-form family describes the matrix of ``T``.

    ``check_component=False`` skips the component check so the formulas can be
    evaluated off their domain (used only to study where they still agree).
    """
    if check_component and not _in_tm1(T):
        raise WrongComponent(f"{T} is not in the -1 component or the root")
    x, y, z = T.q0, T.qm1, T.qinf
    if z == INF:
        # delta(q0, inf) = den(q0) = 1, so both finite components are integers.
        if y.num == x.num - 1:
            return CaseLabel.SpecialMinus
        if y.num == x.num + 1:
            return CaseLabel.SpecialPlus
        raise Unclassifiable(f"{T}: infinite q_inf but q_-1 is not q_0 ± 1")
    if x < z < y:
        return CaseLabel.CaseI
    if y < z < x:
        return CaseLabel.CaseII
    if x < y < z:
        return CaseLabel.CaseIII
    if z < y < x:
        return CaseLabel.CaseIV
    if y < x < z:
        return CaseLabel.CaseV
    return CaseLabel.CaseVI


_PLUS_CASES = {CaseLabel.SpecialMinus, CaseLabel.CaseI, CaseLabel.CaseIV, CaseLabel.CaseV}


def _complementary(case: CaseLabel, k: TripleCoefficients) -> Matrix:
    a, b, c, d, e, f = k.a, k.b, k.c, k.d, k.e, k.f
    if case is CaseLabel.SpecialMinus:
        return ((1 - a, a, 0), (-a, a + 1, 0), (0, 0, 1))
    if case is CaseLabel.SpecialPlus:
        return ((a + 1, -a, 0), (a + 2, -(a + 1), 0), (0, 0, 1))
    if case is CaseLabel.CaseI:
        return (
            (a + 1, -c + 1, c - a - 1),
            (a + b + 1, -c - d + 1, c + d - a - b - 1),
            (b + 1, -d + 1, d - b - 1),
        )
    if case is CaseLabel.CaseII:
        return (
            (-a + 1, c + 1, a - c - 1),
            (-a - b + 1, c + d + 1, a + b - c - d - 1),
            (-b + 1, d + 1, b - d - 1),
        )
    if case is CaseLabel.CaseIII:
        return (
            (a + 1, e - a - 1, -e + 1),
            (a + b + 1, e + f - a - b - 1, -e - f + 1),
            (b + 1, f - b - 1, -f + 1),
        )
    if case is CaseLabel.CaseIV:
        return (
            (-a + 1, a - e - 1, e + 1),
            (-a - b + 1, a + b - e - f - 1, e + f + 1),
            (-b + 1, b - f - 1, f + 1),
        )
    if case is CaseLabel.CaseV:
        return (
            (e - c - 1, c + 1, -e + 1),
            (e + f - c - d - 1, c + d + 1, -e - f + 1),
            (f - d - 1, d + 1, -f + 1),
        )
    return (
        (c - e - 1, -c + 1, e + 1),
        (c + d - e - f - 1, -c - d + 1, e + f + 1),
        (d - f - 1, -d + 1, f + 1),
    )


def c_matrix_in_Tm1(T: FareyTriple, *, check_component: bool = True) -> ExtendedMatrix:
    case = classify(T, check_component=check_component)
    principal = B_PLUS if case in _PLUS_CASES else B_MINUS
    return ExtendedMatrix(principal, _complementary(case, TripleCoefficients.of(T)))


def g_matrix_in_Tm1(T: FareyTriple, *, check_component: bool = True) -> GMatrix:
    case = classify(T, check_component=check_component)
    k = TripleCoefficients.of(T)
    a, b, c, d, e, f = k.a, k.b, k.c, k.d, k.e, k.f
    if case is CaseLabel.SpecialMinus:
        return ((a + 1, a, 0), (-a, -a + 1, 0), (0, 0, 1))
    if case is CaseLabel.SpecialPlus:
        return ((a + 1, a + 2, 0), (-a, -(a + 1), 0), (0, 0, 1))
    return (
        (a + 1, c + 1, e + 1),
        (b - a - 1, d - c - 1, f - e - 1),
        (1 - b, 1 - d, 1 - f),
    )


def c_matrix(T: FareyTriple) -> ExtendedMatrix:
    comp = farey.component(T)
    if comp is None or comp is ParityClass.Cm1:
        return c_matrix_in_Tm1(T, check_component=False)
    if comp is ParityClass.Cinf:
        return act("cycA", c_matrix_in_Tm1(farey.phi_inv(T), check_component=False))
    return act("cycB", c_matrix_in_Tm1(farey.psi_inv(T), check_component=False))


def g_matrix(T: FareyTriple) -> GMatrix:
    comp = farey.component(T)
    if comp is None or comp is ParityClass.Cm1:
        return g_matrix_in_Tm1(T, check_component=False)
    if comp is ParityClass.Cinf:
        return act("cycA", g_matrix_in_Tm1(farey.phi_inv(T), check_component=False))
    return act("cycB", g_matrix_in_Tm1(farey.psi_inv(T), check_component=False))
