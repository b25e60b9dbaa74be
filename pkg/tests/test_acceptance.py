"""One test per acceptance criterion; each prints a PASS or FAIL line with its runtime."""

from __future__ import annotations

import contextlib
import itertools
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, random_element
from qcd.classify import acceptance_grid, default_grid, enumerate_qc, enumerate_self_dual, verify_theorem
from qcd.cyclic import CyclicCode, cc_dual, cc_generator_matrix
from qcd.errors import EquivalenceViolation
from qcd.gf import field_from_order, field_make
from qcd.goursat import (
    qc_construct,
    qc_decompose,
    qc_generator_matrix,
    qc_is_consta_dihedral,
    qc_is_dihedral,
    qc_is_double_circulant,
    qc_is_principal,
    qc_is_self_dual,
    qc_two_generators,
)
from qcd.grouptalg import GroupAlgebraElement
from qcd.idem import primitive_idempotents
from qcd.matrix import MatrixF, all_words, mat_nullspace, random_words, reduce_against, rref_array, same_row_space, word_keys
from qcd.oracle import oracle_report, span_matrix
from qcd.text import parse_poly
from qcd.worked import F5_IDEMPOTENTS, example_f4, example_f5

# runtime bounds in seconds; criteria 1-4 and 7 are fixed by the acceptance list,
# 5, 6 and 8 have no stated bound and get a pinned ceiling here
BOUNDS = {1: 1.0, 2: 1.0, 3: 300.0, 4: 300.0, 5: 120.0, 6: 60.0, 7: 120.0, 8: 600.0}
RANDOM_TRIPLES = 1000
RANDOM_GENERATOR_SETS = 1000
EXHAUSTIVE_WORDS = 2**20
SAMPLED_MEMBERSHIPS = 10**4
INVARIANT_QS = (2, 3, 4, 5)
INVARIANT_MAX_N = 15


@contextlib.contextmanager
def criterion(k: int, title: str):
    start = time.perf_counter()
    info: dict[str, str] = {}
    try:
        yield info
    except BaseException:
        line = f"criterion {k} FAIL  {title}  ({time.perf_counter() - start:.2f}s)"
        ACCEPTANCE_LINES[k] = line
        print(line)
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < BOUNDS[k]
    extra = f"  {info['detail']}" if "detail" in info else ""
    line = f"criterion {k} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s < {BOUNDS[k]:.0f}s){extra}"
    ACCEPTANCE_LINES[k] = line
    print(line)
    assert ok, f"runtime {elapsed:.2f}s exceeds {BOUNDS[k]}s"


def test_criterion_1_f4_example():
    with criterion(1, "F4, n=3 worked example"):
        ex = example_f4()
        c1, c2 = ex.cases[0], ex.cases[1]
        i0, i1 = ex.index("e0"), ex.index("e1")
        assert c1.data.C1.support == c1.data.C2.support == {i1}
        assert c1.data.C12.support == {i0} and c1.data.g == ex.idempotents["e0"]
        G1 = qc_generator_matrix(qc_construct(c1.data))
        assert same_row_space(G1, c1.matrix)
        assert (qc_is_self_dual(c1.data), qc_is_dihedral(c1.data), qc_is_double_circulant(c1.data)) == (True, False, False)
        G2 = qc_generator_matrix(qc_construct(c2.data))
        assert same_row_space(G2, c2.matrix)
        assert (qc_is_self_dual(c2.data), qc_is_dihedral(c2.data), qc_is_double_circulant(c2.data)) == (True, True, False)


def test_criterion_2_f5_example():
    with criterion(2, "F5, n=4 worked example"):
        ex = example_f5()
        F, B = ex.basis.field, ex.basis
        listed = {parse_poly(F, 4, t) for t in F5_IDEMPOTENTS.values()}
        assert listed == set(B.idempotents)
        assert {e.values for e in B.idempotents} == {(4, 4, 4, 4), (4, 1, 4, 1), (4, 2, 1, 3), (4, 3, 1, 2)}
        want = [(True, False, False), (True, True, False), (True, True, True)]
        for case, w in zip(ex.cases, want):
            d = case.data
            assert (qc_is_self_dual(d), qc_is_consta_dihedral(d), qc_is_double_circulant(d)) == w
        G = qc_generator_matrix(qc_construct(ex.cases[2].data))
        g = ex.cases[2].data.g
        assert G.entries[:, :4].tolist() == MatrixF.identity(F, 4).tolist()
        assert G.entries[:, 4:].tolist() == g.circulant().tolist()


def test_criterion_3_oracle_sweep():
    with criterion(3, "predicates agree with the brute-force oracle") as info:
        codes = mismatches = 0
        for q, n in acceptance_grid():
            B = primitive_idempotents(field_from_order(q), n)
            F = B.field
            for d in enumerate_qc(B):
                codes += 1
                rep = oracle_report(span_matrix(F, n, qc_two_generators(d)), n)
                ok = (
                    rep.rank == d.dim
                    and qc_is_self_dual(d) == rep.self_dual
                    and qc_is_dihedral(d) == rep.y_closed
                    and qc_is_consta_dihedral(d) == rep.ytilde_closed
                    and qc_is_double_circulant(d) == (rep.double_circulant is not None)
                )
                mismatches += not ok
        info["detail"] = f"{codes} codes, {mismatches} mismatches"
        assert mismatches == 0


def test_criterion_4_classification():
    with criterion(4, "classification equivalences over the grid") as info:
        reports = {}
        for q, n in acceptance_grid():
            try:
                reports[q, n] = verify_theorem(primitive_idempotents(field_from_order(q), n))
            except EquivalenceViolation as exc:
                pytest.fail(f"q={q}, n={n}: {exc}")
        for key in [(4, 3), (5, 4)]:
            r = reports[key]
            assert r.exists and not any(r.criteria.values())
            w = r.witnesses["not_twisted_dihedral"]
            twisted = qc_is_dihedral if key[0] == 4 else qc_is_consta_dihedral
            assert qc_is_self_dual(w) and not twisted(w)
        r = reports[2, 3]
        assert all(r.criteria.values())
        assert r.counts["self_dual"] == r.counts["double_circulant"] > 0
        info["detail"] = f"{len(reports)} grid points"


def test_criterion_5_principal_codes_are_twisted():
    with criterion(5, "principal self-dual codes are (consta-)dihedral") as info:
        principal = bad = 0
        grid = default_grid()
        for q, n in grid:
            B = primitive_idempotents(field_from_order(q), n)
            twisted = qc_is_dihedral if B.field.p == 2 else qc_is_consta_dihedral
            for d in enumerate_self_dual(B):
                if qc_is_principal(d):
                    principal += 1
                    bad += not twisted(d)
        info["detail"] = f"{len(grid)} grid points, {principal} principal codes, {bad} counterexamples"
        assert principal > 0 and bad == 0


def test_criterion_6_existence_boundary():
    with criterion(6, "self-dual codes exist only when 4 | q - 1 in odd characteristic") as info:
        checked = []
        for q in (3, 7):
            for n in range(1, 8):
                if math.gcd(n, q) != 1:
                    continue
                B = primitive_idempotents(field_from_order(q), n)
                assert next(enumerate_self_dual(B), None) is None, (q, n)
                checked.append((q, n))
        assert next(enumerate_self_dual(primitive_idempotents(field_make(5), 4)), None) is not None
        info["detail"] = f"empty at {len(checked)} points, nonempty at q=5, n=4"


def _admissible(q: int):
    return [n for n in range(1, INVARIANT_MAX_N + 1) if math.gcd(n, q) == 1]


def test_criterion_7_algebra_invariants():
    with criterion(7, "algebra invariant suite") as info:
        rng = np.random.default_rng(7)
        bases = supports = 0
        for q in INVARIANT_QS:
            F = field_from_order(q)
            ns = _admissible(q)
            for _ in range(RANDOM_TRIPLES):
                n = int(rng.choice(ns))
                a, b, d = (random_element(F, n, rng) for _ in range(3))
                assert (a * b).sigma() == (b * a).sigma()
                assert a.inner(b) == (a * b.bar()).sigma()
                assert (d * a).inner(b) == a.inner(d.bar() * b)
                assert a.bar().circulant() == a.circulant().T
            for n in ns:
                B = primitive_idempotents(F, n)
                bases += 1
                E = B.idempotents
                one = GroupAlgebraElement.one(F, n)
                total = GroupAlgebraElement.zero(F, n)
                for i, ei in enumerate(E):
                    total = total + ei
                    for j, ej in enumerate(E):
                        assert ei * ej == (ei if i == j else GroupAlgebraElement.zero(F, n))
                assert total == one
                for r in range(len(B) + 1):
                    for s in itertools.combinations(range(len(B)), r):
                        C = CyclicCode.of(B, s)
                        G = cc_generator_matrix(C)
                        N = mat_nullspace(G) if G.rows else MatrixF.identity(F, n)
                        assert same_row_space(N, cc_generator_matrix(cc_dual(C)))
                        supports += 1
        info["detail"] = f"{bases} bases, {supports} supports"


def _random_gens(B, rng):
    """1 to 3 random pairs, each restricted to random sums of idempotents so all shapes occur."""
    F, n, m = B.field, B.n, len(B)
    gens = []
    for _ in range(int(rng.integers(1, 4))):
        pair = []
        for _ in range(2):
            s = [i for i in range(m) if rng.random() < 0.6]
            pair.append(random_element(F, n, rng) * B.sum_of(s))
        gens.append(tuple(pair))
    return gens


def _basis_rows(F, M):
    R, piv = rref_array(F, M)
    return R[: len(piv)], piv


def test_criterion_8_goursat_round_trip():
    with criterion(8, "Goursat round trip") as info:
        rng = np.random.default_rng(8)
        exhaustive = sampled = 0
        compared: set[bytes] = set()
        for q, n in acceptance_grid():
            B = primitive_idempotents(field_from_order(q), n)
            F = B.field
            for _ in range(RANDOM_GENERATOR_SETS):
                gens = _random_gens(B, rng)
                R1, p1 = _basis_rows(F, span_matrix(F, n, gens).entries)
                G2 = qc_generator_matrix(qc_construct(qc_decompose(gens, B)))
                R2, p2 = _basis_rows(F, G2.entries)
                assert len(p1) == len(p2)
                k = len(p1)
                if q**k <= EXHAUSTIVE_WORDS:
                    key = R1.tobytes() + b"|" + R2.tobytes() + bytes([q, n])
                    if key not in compared:
                        w1, w2 = word_keys(F, all_words(F, R1)), word_keys(F, all_words(F, R2))
                        assert np.array_equal(w1, w2)
                        compared.add(key)
                    exhaustive += 1
                else:
                    half = SAMPLED_MEMBERSHIPS // 2
                    assert not reduce_against(F, R2, p2, random_words(F, R1, half, rng)).any()
                    assert not reduce_against(F, R1, p1, random_words(F, R2, half, rng)).any()
                    sampled += 1
        info["detail"] = f"{exhaustive} exhaustive ({len(compared)} distinct), {sampled} sampled"
