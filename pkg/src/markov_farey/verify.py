"""Invariant suite behind ``markov-farey verify``.

Each check walks the exchange tree (or a finite set of rationals) and records
the first counterexample it meets. Oracles here are deliberately naive.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional

from . import closedform as cf
from . import exchange as ex
from . import farey as fy
from . import symbolic as sym
from .errors import MarkovFareyError
from .farey import INITIAL_TRIPLE, SLOTS, ExtRational, FareyTriple, ParityClass


@dataclass
class VerifyConfig:
    depth: int = 12
    symbolic_depth: int = 5
    equivariance_depth: int = 10
    decomposition_bound: int = 100


@dataclass
class CheckResult:
    name: str
    ok: bool = True
    checked: int = 0
    counterexample: Optional[str] = None

    def fail(self, where: object, what: str) -> None:
        if self.ok:
            self.ok = False
            self.counterexample = f"{where}: {what}"


Tree = list[tuple[FareyTriple, tuple[ParityClass, ...]]]


def check_tree_counts(tree: Tree, depth: int) -> CheckResult:
    res = CheckResult("tree counts")
    seen = set()
    counts = [0] * (depth + 1)
    for T, w in tree:
        if T in seen:
            res.fail(T, f"duplicate triple (word {fy.format_word(w)})")
        seen.add(T)
        counts[len(w)] += 1
    total = 0
    for d in range(depth + 1):
        total += counts[d]
        res.checked += 1
        if total != fy.tree_size(d):
            res.fail(f"depth {d}", f"{total} triples, expected {fy.tree_size(d)}")
    return res


def check_descent(tree: Tree) -> CheckResult:
    res = CheckResult("unique descent and canonical paths")
    for T, w in tree:
        res.checked += 1
        if not w:
            if fy.complexity(T) != 1:
                res.fail(T, "initial triple must have complexity 1")
            continue
        try:
            k = fy.descent_direction(T)
        except MarkovFareyError as exc:
            res.fail(T, str(exc))
            continue
        if k is not w[-1]:
            res.fail(T, f"descent goes along {k}, but the tree edge to the parent is {w[-1]}")
        if fy.path_to_initial(T) != tuple(reversed(w)):
            res.fail(T, "path_to_initial disagrees with the breadth-first word")
    return res


def check_triple_involution(tree: Tree) -> CheckResult:
    res = CheckResult("triple mutation involution")
    for T, _ in tree:
        for k in SLOTS:
            res.checked += 1
            if fy.mutate(fy.mutate(T, k), k) != T:
                res.fail(T, f"mu_{k} is not an involution")
    return res


def check_matrices(tree: Tree) -> list[CheckResult]:
    """Closed forms against the path oracle, plus the properties of every reachable matrix."""
    oracle = CheckResult("closed form = path oracle (c and g)")
    involution = CheckResult("matrix mutation involution")
    coherent = CheckResult("sign coherence of c-vectors")
    unimodular = CheckResult("unimodularity and g-vector plane")
    orientation = CheckResult("principal part alternates B+/B-")
    for T, w in tree:
        M = ex.matrix_by_path(T)
        C = M.complementary
        oracle.checked += 1
        if cf.c_matrix(T) != M:
            oracle.fail(T, f"closed-form c-matrix {cf.c_matrix(T)} != oracle {M}")
        g = cf.g_matrix(T)
        try:
            g_oracle = ex.g_from_c(C)
        except MarkovFareyError as exc:
            unimodular.fail(T, str(exc))
            continue
        if g != g_oracle:
            oracle.fail(T, f"closed-form g-matrix {g} != (C^T)^-1 {g_oracle}")

        involution.checked += 1
        for k in SLOTS:
            if ex.mutate_matrix(ex.mutate_matrix(M, k), k) != M:
                involution.fail(T, f"matrix mutation mu_{k} is not an involution")

        for j, v in enumerate(ex.c_vectors(M)):
            coherent.checked += 1
            if not any(v):
                coherent.fail(T, f"c-vector {j} is zero")
            elif not ex.is_sign_coherent(v):
                coherent.fail(T, f"c-vector {v} mixes signs")

        unimodular.checked += 1
        if ex.det3(C) not in (1, -1):
            unimodular.fail(T, f"det C = {ex.det3(C)}")
        if ex.det3(g) not in (1, -1):
            unimodular.fail(T, f"det g = {ex.det3(g)}")
        sums = [sum(row[j] for row in g) for j in range(3)]
        if sums != [1, 1, 1]:
            unimodular.fail(T, f"g column sums {sums}")

        orientation.checked += 1
        want = ex.B_PLUS if len(w) % 2 == 0 else ex.B_MINUS
        if M.principal != want:
            orientation.fail(T, f"principal part {M.principal} at depth {len(w)}")
    return [oracle, involution, coherent, unimodular, orientation]


def check_equivariance(tree: Tree, depth: int) -> list[CheckResult]:
    equi = CheckResult("phi/psi equivariance of c- and g-matrices")
    edges = CheckResult("phi/psi edge relabeling and inverses")
    for T, w in tree:
        if len(w) > depth or not w or w[0] is not ParityClass.Cm1:
            continue
        equi.checked += 1
        M, g = cf.c_matrix(T), cf.g_matrix(T)
        for name, iso, inv, cyc, relabel in (
            ("phi", fy.phi, fy.phi_inv, "cycA", fy.PHI_EDGE),
            ("psi", fy.psi, fy.psi_inv, "cycB", fy.PSI_EDGE),
        ):
            image = iso(T)
            if ex.matrix_by_path(image) != ex.act(cyc, M):
                equi.fail(T, f"matrix of {name}(T)={image} is not {cyc}·M")
            if cf.g_matrix(image) != ex.act(cyc, g) or ex.g_from_c(ex.matrix_by_path(image).complementary) != ex.act(cyc, g):
                equi.fail(T, f"g-matrix of {name}(T)={image} is not {cyc}·g")
            edges.checked += 1
            if inv(image) != T:
                edges.fail(T, f"{name}_inv({name}(T)) != T")
            for k in SLOTS:
                child = fy.mutate(T, k)
                if child == INITIAL_TRIPLE:
                    continue
                if iso(child) != fy.mutate(image, relabel[k]):
                    edges.fail(T, f"{name}∘mu_{k} != mu_{relabel[k]}∘{name}")
    return [equi, edges]


def finite_rationals(bound: int) -> Iterable[ExtRational]:
    """All finite q with |num| + den <= bound."""
    from math import gcd

    for den in range(1, bound + 1):
        for num in range(-(bound - den), bound - den + 1):
            if gcd(num, den) == 1:
                yield ExtRational(num, den)


def brute_force_decompositions(q: ExtRational) -> list[tuple[ExtRational, ExtRational]]:
    """Every unordered pair of mutual neighbors of ``q`` whose raw sum is ``q``.

    Candidates are found by scanning denominators 0..den(q) and solving
    ``|a*den(q) - b*num(q)| = 1`` for the numerator.
    """
    d, r = q.num, q.den
    neighbors = set()
    for b in range(0, r + 1):
        for s in (1, -1):
            a, rem = divmod(b * d + s, r)
            if rem == 0 and (a, b) != (0, 0):
                p = fy.normalize(a, b)
                if fy.delta(p, q) == 1:
                    neighbors.add(p)
    pairs = set()
    for p in neighbors:
        for p2 in neighbors:
            if p < p2 and fy.delta(p, p2) == 1 and (p.num + p2.num, p.den + p2.den) == (d, r):
                pairs.add((p, p2))
    return sorted(pairs)


def check_decomposition(bound: int) -> CheckResult:
    res = CheckResult("Farey decomposition round-trip")
    for q in finite_rationals(bound):
        res.checked += 1
        left, right = fy.farey_decompose(q)
        if fy.farey_sum(left, right) != q:
            res.fail(q, f"{left} ⊕ {right} != {q}")
        if fy.delta(left, right) != 1 or fy.delta(q, left) != 1 or fy.delta(q, right) != 1:
            res.fail(q, f"decomposition ({left}, {right}) is not pairwise neighboring")
        brute = brute_force_decompositions(q)
        if brute != [(left, right)]:
            res.fail(q, f"brute force found {brute}, construction gave ({left}, {right})")
    return res


def check_symbolic(max_length: int) -> CheckResult:
    res = CheckResult("symbolic degrees = closed-form g-vectors")
    for report in sym.verify_all_words(max_length, cap=max(max_length, sym.DEFAULT_SYMBOLIC_DEPTH)):
        res.checked += 1
        if not report.ok:
            res.fail(report.triple, "; ".join(report.findings))
    return res


@dataclass
class VerifyReport:
    config: VerifyConfig
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {"ok": self.ok, "config": asdict(self.config), "checks": [asdict(r) for r in self.results]}

    def render(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status}  {r.name} ({r.checked} checked)"
            if r.counterexample:
                line += f"\n      first counterexample: {r.counterexample}"
            lines.append(line)
        lines.append("all checks passed" if self.ok else "verification FAILED")
        return "\n".join(lines)


def run_verify(config: VerifyConfig = VerifyConfig(), progress: Callable[[str], None] | None = None) -> VerifyReport:
    tree = fy.enumerate_triples(config.depth)
    report = VerifyReport(config)

    def add(results):
        for r in results if isinstance(results, list) else [results]:
            report.results.append(r)
            if progress:
                progress(r.name)

    add(check_tree_counts(tree, config.depth))
    add(check_descent(tree))
    add(check_triple_involution(tree))
    add(check_matrices(tree))
    add(check_equivariance(tree, min(config.depth, config.equivariance_depth)))
    add(check_decomposition(config.decomposition_bound))
    add(check_symbolic(config.symbolic_depth))
    return report
