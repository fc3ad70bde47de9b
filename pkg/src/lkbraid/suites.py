"""Self-check suites shared by ``lkbraid verify`` and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braid import BraidWord, free_reduce, full_twist_word, invert, oracle_is_trivial, random_word
from .forknoodle import apply_word_noodle, disc_model, pairing_details, standard_fork, standard_noodle
from .homology import (all_faces, boundary, boundary_unit_deviation, fox_vector, kernel_basis,
                       normalization_report, printed_boundary, relator, verify_rank)
from .laurent import LaurentPoly2
from .lkrep import generator_matrix, is_identity, is_scalar, represent


@dataclass
class SuiteResult:
    name: str
    ok: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"suite {self.name}: {'pass' if self.ok else 'FAIL'}"


def braid_relations(n_max: int) -> SuiteResult:
    bad = []
    for n in range(2, n_max + 1):
        for i in range(1, n - 1):
            lhs = represent(BraidWord(n, ((i, 1), (i + 1, 1), (i, 1))))
            rhs = represent(BraidWord(n, ((i + 1, 1), (i, 1), (i + 1, 1))))
            if lhs != rhs:
                bad.append(f"n={n} s{i} s{i + 1} s{i}")
        for i in range(1, n):
            for j in range(i + 2, n):
                a, b = generator_matrix(n, i), generator_matrix(n, j)
                if a @ b != b @ a:
                    bad.append(f"n={n} s{i} s{j} do not commute")
    return SuiteResult("braid_relations", not bad, bad)


def inverses(n_max: int) -> SuiteResult:
    bad = [f"n={n} i={i}" for n in range(2, n_max + 1) for i in range(1, n)
           if not (is_identity(generator_matrix(n, i, 1) @ generator_matrix(n, i, -1))
                   and is_identity(generator_matrix(n, i, -1) @ generator_matrix(n, i, 1)))]
    return SuiteResult("inverses", not bad, bad)


def full_twist(n_max: int) -> SuiteResult:
    details, ok = [], True
    for n in range(2, n_max + 1):
        lam = is_scalar(represent(full_twist_word(n)))
        expected = LaurentPoly2.monomial(2 * n, 2)
        good = lam == expected
        ok &= good
        details.append(f"n={n} scalar={lam if lam is not None else 'none'}")
    return SuiteResult("full_twist", ok, details)


def boundary_formulas(n_max: int) -> SuiteResult:
    bad, units = [], set()
    for j in range(1, n_max + 1):
        for k in range(j, n_max + 1):
            u = boundary_unit_deviation(j, k)
            if u is None:
                bad.append(f"r[{j},{k}] differs from the closed form by more than a unit")
            elif j < k and fox_vector(relator(j, k)) != printed_boundary(j, k):
                bad.append(f"r[{j},{k}] off by {u}")
            elif j == k:
                units.add(str(u))
    if len(units) > 1:
        bad.append(f"diagonal faces need different units: {sorted(units)}")
    details = bad or [f"diagonal unit {next(iter(units))}" if units else "no diagonal faces"]
    return SuiteResult("boundary", not bad, details)


def kernel(n_max: int, seed: int = 0) -> SuiteResult:
    bad, details = [], []
    for n in range(2, n_max + 1):
        basis = kernel_basis(n)
        if len(basis) != n * (n - 1) // 2:
            bad.append(f"n={n} basis size {len(basis)}")
        if any(not boundary(v).is_zero() for v in basis):
            bad.append(f"n={n} nonzero boundary")
        if not verify_rank(n, basis, trials=3, seed=seed):
            bad.append(f"n={n} rank check failed")
        rep = normalization_report(n)
        if not rep.consistent:
            bad.append(f"n={n} normalization inconsistent")
        details.append(f"n={n} size={len(basis)} faces={len(all_faces(n))}")
    return SuiteResult("kernel", not bad, bad or details)


def faithfulness_words(n: int, count: int, max_len: int, seed: int) -> list[BraidWord]:
    """Half trivial products u * invert(u) shuffled by conjugation, half random words."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        if k % 2 == 0:
            u = random_word(n, rng.randint(1, max_len // 2), rng.randrange(1 << 30))
            c = random_word(n, rng.randint(0, (max_len - 2 * len(u)) // 2), rng.randrange(1 << 30))
            out.append(c * u * invert(u) * invert(c))
        else:
            out.append(random_word(n, rng.randint(1, max_len), rng.randrange(1 << 30)))
    return out


def faithfulness(ns: Sequence[int], count: int, max_len: int, seed: int) -> SuiteResult:
    bad = []
    trivial = 0
    total = 0
    for n in ns:
        for w in faithfulness_words(n, count, max_len, seed + n):
            lk = is_identity(represent(w))
            oracle = oracle_is_trivial(w)
            trivial += oracle
            total += 1
            if lk != oracle:
                bad.append(f"n={n} word={w} lk={lk} oracle={oracle}")
    return SuiteResult("faithfulness", not bad, bad or [f"{total} words, {trivial} trivial"])


def sweep_words(n: int, count: int, max_len: int, seed: int) -> list[BraidWord]:
    """Distinct freely reduced words of length <= max_len, short ones first."""
    rng = random.Random(seed)
    seen: set[tuple] = set()
    out: list[BraidWord] = []
    attempts = 0
    while len(out) < count and attempts < 100 * count:
        # cycling on attempts, not on hits, so exhausted short lengths are skipped
        length = attempts % (max_len + 1)
        attempts += 1
        w = free_reduce(random_word(n, length, rng.randrange(1 << 30)))
        if w.letters in seen:
            continue
        seen.add(w.letters)
        out.append(w)
    return out


@dataclass
class SweepStats:
    cases: int = 0
    pairs: int = 0
    nonzero: int = 0
    key_lemma_failures: list[str] = field(default_factory=list)
    claim_a_violations: list[str] = field(default_factory=list)
    sign_violations: list[str] = field(default_factory=list)
    keyclaim_violations: list[str] = field(default_factory=list)

    def merge(self, other: "SweepStats") -> None:
        self.cases += other.cases
        self.pairs += other.pairs
        self.nonzero += other.nonzero
        for name in ("key_lemma_failures", "claim_a_violations", "sign_violations", "keyclaim_violations"):
            getattr(self, name).extend(getattr(other, name))


def pairing_sweep(n: int, words: Iterable[BraidWord]) -> SweepStats:
    """Pair every standard noodle with every standard fork image under each word."""
    model = disc_model(n)
    forks = [(j, k, standard_fork(model, j, k)) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    stats = SweepStats()
    for w in words:
        for i in range(1, n + 1):
            noodle = apply_word_noodle(model, standard_noodle(model, i), invert(w))
            for j, k, fork in forks:
                res = pairing_details(model, noodle, fork)
                tag = f"n={n} w=[{w}] N{i} F{j},{k}"
                stats.cases += 1
                stats.pairs += len(res.table)
                stats.nonzero += not res.value.is_zero()
                if res.value.is_zero() != (res.l == 0):
                    stats.key_lemma_failures.append(tag)
                stats.claim_a_violations += [f"{tag} ({a},{b})" for a, b in res.claim_a_violations]
                stats.sign_violations += [f"{tag} ({a},{b})" for a, b in res.sign_violations]
                stats.keyclaim_violations += [f"{tag} ({a},{b})" for a, b in res.keyclaim_violations]
    return stats


def pairing_claims(ns: Sequence[int], words_per_n: int, max_len: int, seed: int) -> SuiteResult:
    total = SweepStats()
    for n in ns:
        total.merge(pairing_sweep(n, sweep_words(n, words_per_n, max_len, seed)))
    bad = (total.key_lemma_failures + total.claim_a_violations + total.sign_violations
           + total.keyclaim_violations)
    return SuiteResult("pairing_claims", not bad,
                       bad or [f"{total.cases} configurations, {total.pairs} intersection pairs"])


def run_all(n_max: int, seed: int = 0) -> list[SuiteResult]:
    small = [n for n in (3, 4) if n <= n_max]
    return [
        braid_relations(n_max),
        inverses(n_max),
        full_twist(n_max),
        boundary_formulas(n_max),
        kernel(n_max, seed),
        faithfulness([n for n in range(2, min(n_max, 4) + 1)], 20, 8, seed),
        pairing_claims(small, 4, 3, seed) if small else SuiteResult("pairing_claims", True, ["skipped: n_max < 3"]),
    ]
