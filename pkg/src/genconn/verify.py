"""Instance generators and the equivalence harness that certifies each
reduction against brute-force oracles at desk scale.

For every generated instance the harness computes the source-problem
verdict and the target-problem verdict with the independent solvers and
records any disagreement, along with violations of the construction's
size identities.  Reports are deterministic: generators are exhaustive
below their bounds, random sampling is seeded, and failures are sorted by
their replayable serialization.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from . import io, reductions, solver, trees
from .graphs import CnfFormula, Graph, GraphError, ThreeDMInstance, is_connected

REDUCTION_NAMES = ("R1", "R2", "R3", "R4", "R5", "R6")

GEN_GRAPH_MAX_N = 6
GEN_3DM_MAX_N = 2


@dataclass(frozen=True)
class VerifyBudget:
    """Generator bounds for one verification run.

    ``max_n`` bounds the host graph order (R3, R4, R6), the part size q
    (R2), the ground-set size (R1) or the variable count (R5); ``max_m``
    bounds triple/clause counts; ``ks``/``ls`` choose arities and
    thresholds; ``samples`` seeds the random family where one exists.
    """

    max_n: int
    max_m: int | None = None
    max_terminals: int | None = None
    ks: tuple[int, ...] = ()
    ls: tuple[int, ...] = ()
    samples: int = 0
    seed: int = 0

    def describe(self) -> str:
        parts = [f"max_n={self.max_n}"]
        if self.max_m is not None:
            parts.append(f"max_m={self.max_m}")
        if self.max_terminals is not None:
            parts.append(f"max_terminals={self.max_terminals}")
        if self.ks:
            parts.append("ks=" + ",".join(map(str, self.ks)))
        if self.ls:
            parts.append("ls=" + ",".join(map(str, self.ls)))
        if self.samples:
            parts.append(f"samples={self.samples}")
        parts.append(f"seed={self.seed}")
        return " ".join(parts)


DEFAULT_BUDGETS: dict[str, VerifyBudget] = {
    "R1": VerifyBudget(max_n=2, max_m=3),
    "R2": VerifyBudget(max_n=2),
    "R3": VerifyBudget(max_n=5, max_terminals=4),
    "R4": VerifyBudget(max_n=4, ks=(4, 5), ls=(2, 3)),
    "R5": VerifyBudget(max_n=3, max_m=3, samples=200),
    "R6": VerifyBudget(max_n=4, ls=(3, 4)),
}


@dataclass(frozen=True)
class Failure:
    kind: str  # "equivalence", "size" or "witness"
    instance: str  # replayable serialization
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    reduction_name: str
    budget: VerifyBudget
    instances_checked: int
    failures: tuple[Failure, ...]
    wall_time: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary_line(self, with_time: bool = True) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = (
            f"{verdict} {self.reduction_name} {self.instances_checked} "
            f"{len(self.failures)}"
        )
        if with_time:
            line += f" {self.wall_time:.3f}"
        return line

    def _body(self) -> list[str]:
        out = [
            f"reduction: {self.reduction_name}",
            f"budget: {self.budget.describe()}",
            f"checked: {self.instances_checked}",
            f"failures: {len(self.failures)}",
        ]
        for i, f in enumerate(sorted(self.failures, key=lambda f: f.instance), 1):
            out.append(f"failure {i} kind={f.kind} lhs={f.lhs} rhs={f.rhs}")
            out.append("instance:")
            out.extend("    " + line for line in f.instance.rstrip("\n").split("\n"))
        return out

    def text(self) -> str:
        """Full report; the summary line carries wall-clock seconds."""
        return "\n".join(self._body() + [self.summary_line(with_time=True)]) + "\n"

    def canonical_text(self) -> str:
        """Timing-free form; byte-identical across runs with equal budgets."""
        return "\n".join(self._body() + [self.summary_line(with_time=False)]) + "\n"


# ---------------------------------------------------------------------------
# Generators


def gen_connected_graphs(max_n: int) -> Iterator[Graph]:
    """Every labeled connected graph with 1 <= n <= max_n, exactly once,
    by ascending order and ascending edge-subset mask."""
    if not (1 <= max_n <= GEN_GRAPH_MAX_N):
        raise solver.GuardError(
            f"max_n={max_n} outside the exhaustive-generation guard "
            f"1..{GEN_GRAPH_MAX_N}"
        )
    for n in range(1, max_n + 1):
        slots = list(combinations(range(n), 2))
        for mask in range(1 << len(slots)):
            edges = tuple(slots[i] for i in range(len(slots)) if (mask >> i) & 1)
            g = Graph(n, edges)
            if is_connected(g):
                yield g


def gen_3dm(max_n: int, max_m: int | None = None) -> Iterator[ThreeDMInstance]:
    """Every matching instance with 1 <= n <= max_n and m <= max_m, by
    ascending n and ascending triple-subset mask over the lexicographic
    triple universe."""
    if not (1 <= max_n <= GEN_3DM_MAX_N):
        raise solver.GuardError(
            f"max_n={max_n} outside the exhaustive-generation guard 1..{GEN_3DM_MAX_N}"
        )
    for n in range(1, max_n + 1):
        universe = [
            (u, v, w) for u in range(n) for v in range(n) for w in range(n)
        ]
        for mask in range(1 << len(universe)):
            if max_m is not None and mask.bit_count() > max_m:
                continue
            triples = tuple(
                universe[i] for i in range(len(universe)) if (mask >> i) & 1
            )
            yield ThreeDMInstance(n, triples)


def _exhaustive_clauses(num_vars: int) -> list[tuple[int, int, int]]:
    lits: list[int] = []
    for i in range(1, num_vars + 1):
        lits.extend((i, -i))
    return [tuple(c) for c in combinations_with_replacement(lits, 3)]


def gen_cnf(max_vars: int, max_clauses: int, seed: int = 0, samples: int = 0
            ) -> Iterator[CnfFormula]:
    """The exhaustive family with num_vars <= min(max_vars, 2) and
    m <= min(max_clauses, 2), followed by ``samples`` seeded-random
    formulas within the full bounds."""
    for nv in range(1, min(max_vars, 2) + 1):
        clauses = _exhaustive_clauses(nv)
        for m in range(1, min(max_clauses, 2) + 1):
            for combo in combinations_with_replacement(clauses, m):
                yield CnfFormula(nv, tuple(combo))
    rng = random.Random(seed)
    for _ in range(samples):
        nv = rng.randint(1, max_vars)
        m = rng.randint(1, max_clauses)
        lits = [i for v in range(1, nv + 1) for i in (v, -v)]
        yield CnfFormula(
            nv,
            tuple(
                tuple(rng.choice(lits) for _ in range(3)) for _ in range(m)
            ),
        )


def gen_balanced_tripartite(q: int) -> Iterator[Graph]:
    """Every tripartite graph with parts {0..q-1}, {q..2q-1}, {2q..3q-1},
    over all subsets of the cross-part edge slots."""
    parts = tuple([0] * q + [1] * q + [2] * q)
    slots = [
        (u, v)
        for u in range(3 * q)
        for v in range(u + 1, 3 * q)
        if parts[u] != parts[v]
    ]
    for mask in range(1 << len(slots)):
        edges = tuple(slots[i] for i in range(len(slots)) if (mask >> i) & 1)
        yield Graph(3 * q, edges, parts)


# ---------------------------------------------------------------------------
# Witness re-verification


def verify_packing_result(
    g: Graph, s: tuple[int, ...], result: solver.PackingResult, vertex_mode: bool
) -> bool:
    """Re-check a witness with the tree predicates: every tree is an
    S-tree and all pairs satisfy the requested disjointness."""
    if len(result.witness) != result.value:
        return False
    for t in result.witness:
        if not trees.is_steiner_tree(g, s, t):
            return False
    for t1, t2 in combinations(result.witness, 2):
        if vertex_mode:
            if not trees.internally_disjoint(t1, t2, s):
                return False
        elif not trees.edge_disjoint(t1, t2):
            return False
    return True


# ---------------------------------------------------------------------------
# Per-reduction harnesses.  Each returns (checked, failures).


def _fail(failures: list[Failure], kind: str, instance: str, lhs, rhs) -> None:
    failures.append(Failure(kind, instance, str(lhs), str(rhs)))


def _verify_r1(budget: VerifyBudget) -> tuple[int, list[Failure]]:
    checked = 0
    failures: list[Failure] = []
    for inst in gen_3dm(budget.max_n, budget.max_m):
        checked += 1
        text = io.serialize_3dm(inst)
        g, q = reductions.reduce_3dm_to_p1(inst)
        n, m = inst.n, inst.m
        sizes = tuple(len(p) for p in g.parts())
        if (
            g.n != 3 * n + 18 * m
            or g.m != 26 * m
            or q != n + 6 * m
            or sizes != (q, q, q)
        ):
            _fail(failures, "size", text, f"V={g.n} E={g.m} q={q} parts={sizes}",
                  f"V={3*n+18*m} E={26*m} q={n+6*m}")
            continue
        lhs = solver.decide_3dm(inst)
        rhs = solver.decide_problem1(g)
        if lhs != rhs:
            _fail(failures, "equivalence", text, lhs, rhs)
    return checked, failures


def _verify_r2(budget: VerifyBudget) -> tuple[int, list[Failure]]:
    checked = 0
    failures: list[Failure] = []
    for q in range(1, budget.max_n + 1):
        for g in gen_balanced_tripartite(q):
            checked += 1
            text = io.serialize_graph(g)
            out = reductions.reduce_p1_to_kappa(g, q)
            gp = out.graph
            degs = tuple(gp.degree(t) for t in out.terminals)
            if gp.n != 3 * q + 3 or gp.m != g.m + 3 * q or degs != (q, q, q):
                _fail(failures, "size", text, f"V={gp.n} E={gp.m} deg={degs}",
                      f"V={3*q+3} E={g.m+3*q} deg=({q},{q},{q})")
                continue
            lhs = solver.decide_problem1(g)
            rhs = solver.decide_kappa_set(gp, out.terminals, q)
            if lhs != rhs:
                _fail(failures, "equivalence", text, lhs, rhs)
    return checked, failures


def _verify_r3(budget: VerifyBudget) -> tuple[int, list[Failure]]:
    checked = 0
    failures: list[Failure] = []
    max_t = budget.max_terminals or 4
    for g in gen_connected_graphs(budget.max_n):
        if g.n < 2:
            continue
        for size in range(2, min(max_t, g.n) + 1):
            for s in combinations(range(g.n), size):
                checked += 1
                text = io.serialize_graph(g, s)
                out = reductions.reduce_lambda_to_kappa(g, s)
                gp = out.graph
                lam = solver.lambda_set(g, s)
                kap = solver.kappa_set(gp, out.terminals)
                if gp.n != g.n + g.m:
                    _fail(failures, "size", text, f"V={gp.n}", f"V={g.n + g.m}")
                    continue
                if not verify_packing_result(g, s, lam, vertex_mode=False):
                    _fail(failures, "witness", text, "lambda witness", "invalid")
                if not verify_packing_result(gp, out.terminals, kap, vertex_mode=True):
                    _fail(failures, "witness", text, "kappa witness", "invalid")
                if lam.value != kap.value:
                    _fail(failures, "equivalence", text, lam.value, kap.value)
    return checked, failures


def _verify_r4(budget: VerifyBudget) -> tuple[int, list[Failure]]:
    checked = 0
    failures: list[Failure] = []
    for g in gen_connected_graphs(budget.max_n):
        if g.n < 3:
            continue
        for s in combinations(range(g.n), 3):
            for k in budget.ks:
                for l in budget.ls:
                    checked += 1
                    text = io.serialize_graph(g, s) + f"# params k={k} l={l}\n"
                    out = reductions.reduce_lambda3_to_lambdak(g, s, l, k)
                    gp = out.graph
                    if (
                        gp.n != g.n + (k - 3) * (l + 1)
                        or gp.m != g.m + 2 * l * (k - 3)
                        or len(out.terminals) != k
                    ):
                        _fail(failures, "size", text,
                              f"V={gp.n} E={gp.m} k={len(out.terminals)}",
                              f"V={g.n+(k-3)*(l+1)} E={g.m+2*l*(k-3)} k={k}")
                        continue
                    lhs = solver.decide_lambda_set(g, s, l)
                    rhs = solver.decide_lambda_set(gp, out.terminals, l)
                    if lhs != rhs:
                        _fail(failures, "equivalence", text, lhs, rhs)
    return checked, failures


def _verify_r5(budget: VerifyBudget) -> tuple[int, list[Failure]]:
    checked = 0
    failures: list[Failure] = []
    for phi in gen_cnf(budget.max_n, budget.max_m or 2, budget.seed, budget.samples):
        checked += 1
        text = io.serialize_cnf(phi)
        out = reductions.reduce_3sat_to_lambda2(phi)
        gp = out.graph
        if gp.n != 3 * phi.num_vars + 2 * phi.num_clauses + 2:
            _fail(failures, "size", text, f"V={gp.n}",
                  f"V={3*phi.num_vars+2*phi.num_clauses+2}")
            continue
        lhs = solver.decide_3sat(phi)
        rhs = solver.decide_lambda_set(gp, out.terminals, 2)
        if lhs != rhs:
            _fail(failures, "equivalence", text, lhs, rhs)
    return checked, failures


def _verify_r6(budget: VerifyBudget) -> tuple[int, list[Failure]]:
    checked = 0
    failures: list[Failure] = []
    for g in gen_connected_graphs(budget.max_n):
        if g.n < 2:
            continue
        for size in range(2, g.n + 1):
            for s in combinations(range(g.n), size):
                for l in budget.ls:
                    checked += 1
                    text = io.serialize_graph(g, s) + f"# params l={l}\n"
                    out = reductions.reduce_lambda2_to_lambdal(g, s, l)
                    gp = out.graph
                    k = len(s)
                    degs = all(gp.degree(p) == l for p in out.terminals)
                    if (
                        gp.n != g.n + 3 * k + l - 2
                        or gp.m != g.m + 4 * k + k * (l - 2)
                        or not degs
                    ):
                        _fail(failures, "size", text, f"V={gp.n} E={gp.m} degs_ok={degs}",
                              f"V={g.n+3*k+l-2} E={g.m+4*k+k*(l-2)}")
                        continue
                    lhs = solver.decide_lambda_set(g, s, 2)
                    rhs = solver.decide_lambda_set(gp, out.terminals, l)
                    if lhs != rhs:
                        _fail(failures, "equivalence", text, lhs, rhs)
    return checked, failures


_HARNESSES = {
    "R1": _verify_r1,
    "R2": _verify_r2,
    "R3": _verify_r3,
    "R4": _verify_r4,
    "R5": _verify_r5,
    "R6": _verify_r6,
}


def verify_reduction(name: str, budget: VerifyBudget | None = None) -> VerificationReport:
    """Certify one reduction against its brute-force oracles.  Unknown
    names raise GraphError; budgets beyond the generator guards raise
    GuardError."""
    if name not in _HARNESSES:
        raise GraphError(f"unknown reduction {name!r}; expected one of {REDUCTION_NAMES}")
    if budget is None:
        budget = DEFAULT_BUDGETS[name]
    start = time.perf_counter()
    checked, failures = _HARNESSES[name](budget)
    elapsed = time.perf_counter() - start
    failures.sort(key=lambda f: (f.instance, f.kind))
    return VerificationReport(name, budget, checked, tuple(failures), elapsed)
