"""Extended exchange matrices and their mutation.

Matrices are tuples of row tuples of Python ints, so entries never overflow.
Columns follow the slot order ``(0, -1, inf)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import BadColumn, NotUnimodular
from .farey import INITIAL_TRIPLE, FareyTriple, ParityClass, path_to_initial

Matrix = tuple[tuple[int, ...], ...]
GMatrix = Matrix
CVector = tuple[int, ...]

B_PLUS: Matrix = ((0, -2, 2), (2, 0, -2), (-2, 2, 0))
B_MINUS: Matrix = tuple(tuple(-x for x in row) for row in B_PLUS)
IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class ExtendedMatrix:
    """A 2n×n integer matrix: skew-symmetric principal rows on top, complementary rows below."""

    principal: Matrix
    complementary: Matrix

    def __post_init__(self) -> None:
        n = len(self.principal)
        if len(self.complementary) != n or any(len(r) != n for r in self.principal + self.complementary):
            raise ValueError("an extended exchange matrix must be 2n x n")
        for i in range(n):
            for j in range(n):
                if self.principal[i][j] != -self.principal[j][i]:
                    raise ValueError("principal part must be skew-symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ExtendedMatrix":
        n = len(rows) // 2
        return cls(as_matrix(rows[:n]), as_matrix(rows[n:]))

    @property
    def n(self) -> int:
        return len(self.principal)

    @property
    def rows(self) -> Matrix:
        return self.principal + self.complementary


def initial_matrix() -> ExtendedMatrix:
    return ExtendedMatrix(B_PLUS, IDENTITY)


def _column_index(k: Union[int, ParityClass], n: int) -> int:
    idx = k.index if isinstance(k, ParityClass) else k
    if not 0 <= idx < n:
        raise BadColumn(f"column {k} out of range for n={n}")
    return idx


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate_matrix(M: ExtendedMatrix, k: Union[int, ParityClass]) -> ExtendedMatrix:
    """Matrix mutation in direction ``k`` (0-based column index or slot label)."""
    n = M.n
    k = _column_index(k, n)
    b = M.rows
    out = []
    for i, row in enumerate(b):
        bik = row[k]
        new_row = []
        for j in range(n):
            if i == k or j == k:
                new_row.append(-row[j])
            else:
                prod = bik * b[k][j]
                new_row.append(row[j] + _sgn(bik) * prod if prod > 0 else row[j])
        out.append(tuple(new_row))
    return ExtendedMatrix(tuple(out[:n]), tuple(out[n:]))


def c_vectors(M: ExtendedMatrix) -> tuple[CVector, ...]:
    return tuple(zip(*M.complementary))


def is_sign_coherent(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v) or all(x <= 0 for x in v)


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def det3(A: Matrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = A
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate3(A: Matrix) -> Matrix:
    (a, b, c), (d, e, f), (g, h, i) = A
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def inverse_unimodular(A: Matrix) -> Matrix:
    det = det3(A)
    if det not in (1, -1):
        raise NotUnimodular(f"determinant {det} is not ±1")
    return tuple(tuple(det * x for x in row) for row in adjugate3(A))


def g_from_c(C: Matrix) -> GMatrix:
    """g-matrix of a seed as the inverse transpose of its c-matrix."""
    return inverse_unimodular(transpose(as_matrix(C)))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in Bt) for row in A)


# Permutations of {0, 1, 2}: entry (i, j) of the image is entry (sigma[i], sigma[j]).
CYCLES = {
    "cycA": (2, 0, 1),
    "cycB": (1, 2, 0),
}


def _permute(A: Matrix, sigma: tuple[int, ...]) -> Matrix:
    return tuple(tuple(A[sigma[i]][sigma[j]] for j in range(3)) for i in range(3))


def act(sigma: str, M: Union[ExtendedMatrix, Matrix]) -> Union[ExtendedMatrix, Matrix]:
    """Cyclic relabeling of the three vertices, applied to a 3x3 or an extended matrix."""
    try:
        perm = CYCLES[sigma]
    except KeyError:
        raise ValueError(f"unknown permutation {sigma!r}; expected one of {sorted(CYCLES)}") from None
    if isinstance(M, ExtendedMatrix):
        return ExtendedMatrix(_permute(M.principal, perm), _permute(M.complementary, perm))
    return _permute(as_matrix(M), perm)


def apply_word_to_matrix(M: ExtendedMatrix, word: Sequence[ParityClass]) -> ExtendedMatrix:
    for k in word:
        M = mutate_matrix(M, k)
    return M


def matrix_by_path(T: FareyTriple) -> ExtendedMatrix:
    """Exchange matrix of ``T`` by mutating the initial matrix along its tree path.

    Serves as the ground truth for the closed forms.
    """
    if T == INITIAL_TRIPLE:
        return initial_matrix()
    return apply_word_to_matrix(initial_matrix(), reversed(path_to_initial(T)))


def matrix_to_json(M: ExtendedMatrix) -> dict:
    return {
        "principal": [[str(x) for x in row] for row in M.principal],
        "complementary": [[str(x) for x in row] for row in M.complementary],
        "columns": ["0", "-1", "inf"],
    }


def matrix_from_json(obj: dict) -> ExtendedMatrix:
    return ExtendedMatrix(
        tuple(tuple(int(x) for x in row) for row in obj["principal"]),
        tuple(tuple(int(x) for x in row) for row in obj["complementary"]),
    )
