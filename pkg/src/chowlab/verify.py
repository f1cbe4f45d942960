"""Registry of identity checks, grouped into suites, with a JSON-ready report.

Each check takes max_n and returns (passed, detail). Checks clamp max_n to
their own limits, so a larger max_n never pushes them past a size cap.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from . import codes as C
from .chow import AUGMENTED, CHOW, fy_basis_augmented, fy_basis_general, fy_hilbert, monomial_from_sets
from .chow import augmented_general_as_flags
from .core.combinat import partitions
from .csp import cn_character_compare, csp_verify, family_j_range
from .eulerian import (binomial_eulerian, eulerian, q_binom_from_dperms, q_binom_from_extcodes,
                       q_binomial_eulerian, q_eulerian, q_eulerian_from_codes)
from .lattice import augmented_building_set, augmented_lattice, check_geometric, face_iso_check, is_building_set
from .lemmas import (dex_decorated_check, dex_perm_check, increasing_shuffle_check, macmahon_check,
                     shuffle_inv_check, shuffle_maj_check)
from .matroid import Matroid
from .stanley_reisner import independence_report, presentation
from .symfun import (codes_des_expansion, frobenius_codes, gf_recurrence_check, nps, q_nj_from_perms,
                     q_tilde_from_def, q_tilde_from_dperms, symh_to_qsym)

SUITES = ("chow", "codes", "eulerian", "symfun", "csp", "lattice", "stats")

Result = Tuple[bool, str]


@dataclass
class Check:
    key: str
    suite: str
    run: Callable[[int], Result]


REGISTRY: List[Check] = []


def check(key: str, suite: str):
    def deco(fn):
        REGISTRY.append(Check(key, suite, fn))
        return fn
    return deco


def _first_failure(items) -> Result:
    for ok, what in items:
        if not ok:
            return False, what
    return True, ""


# ---------------------------------------------------------------- chow

@check("fy_basis_examples", "chow")
def _fy_examples(max_n):
    a = fy_hilbert(Matroid.boolean(4), CHOW).dense()
    b = fy_hilbert(Matroid.boolean(3), AUGMENTED).dense()
    ok = a == [1, 11, 11, 1] and b == [1, 7, 7, 1]
    return ok, "" if ok else f"B4 chow {a}, B3 augmented {b}"


@check("hilbert_series_eulerian", "chow")
def _hilbert(max_n):
    def items():
        for n in range(1, min(max_n, 8) + 1):
            M = Matroid.boolean(n)
            yield fy_hilbert(M, CHOW) == eulerian(n), f"chow B{n}"
            yield fy_hilbert(M, AUGMENTED) == binomial_eulerian(n), f"augmented B{n}"
    return _first_failure(items())


def _sr_cases(max_n):
    for n in range(2, min(max_n, 4) + 1):
        yield Matroid.boolean(n), CHOW
    for n in range(2, min(max_n, 3) + 1):
        yield Matroid.boolean(n), AUGMENTED
    for n in (3, 4):
        if n <= max(max_n, 4):
            M = Matroid.uniform(2, n)
            yield M, CHOW
            yield M, AUGMENTED


@check("fy_basis_spans_presentation", "chow")
def _sr(max_n):
    def items():
        for M, mode in _sr_cases(max_n):
            pres = presentation(M, mode)
            top = M.rank(M.closure((1 << M.n) - 1))
            for k in range(top + 1):
                rep = independence_report(pres, k, mode)
                yield rep.ok, f"{M.label()} {mode} degree {k}: fy={rep.fy_count} quotient={rep.quotient_dim}"
    return _first_failure(items())


@check("augmented_is_chow_of_augmented_lattice", "chow")
def _aug_is_chow(max_n):
    def items():
        for M in (Matroid.boolean(2), Matroid.boolean(3), Matroid.uniform(2, 3), Matroid.uniform(2, 4)):
            L = augmented_lattice(M)
            G = augmented_building_set(M, L)
            yield check_geometric(L), f"{M.label()}: augmented lattice not geometric"
            yield is_building_set(L, G.members), f"{M.label()}: not a building set"
            got = augmented_general_as_flags(L, fy_basis_general(L, G))
            want = fy_basis_augmented(M)
            yield got.by_degree == want.by_degree, f"{M.label()}: bases differ"
    return _first_failure(items())


# ---------------------------------------------------------------- lattice

@check("face_lattice_isomorphism", "lattice")
def _faces(max_n):
    def items():
        for M in (Matroid.boolean(2), Matroid.boolean(3), Matroid.uniform(2, 3)):
            rep = face_iso_check(M)
            yield rep.passed, f"{M.label()}: {rep.counterexample}"
        rep = face_iso_check(Matroid.boolean(2))
        yield rep.nested_count == 11, f"B2 has {rep.nested_count} faces"
    return _first_failure(items())


# ---------------------------------------------------------------- codes

@check("bijection_worked_examples", "codes")
def _bij_examples(max_n):
    m = monomial_from_sets(8, [[1, 3], [1, 2, 3, 5], [1, 2, 3, 4, 5, 6, 8]], [1, 1, 2])
    u1 = monomial_from_sets(9, [[1, 4], [1, 2, 4, 7], [1, 2, 4, 5, 6, 7, 9]], [1, 1, 2], AUGMENTED)
    u2 = monomial_from_sets(9, [[1, 4], [1, 2, 4, 7], [1, 2, 4, 5, 6, 7, 9]], [2, 1, 2], AUGMENTED)
    got = [str(C.phi(m)), str(C.phi_tilde(u1)), str(C.phi_tilde(u2))]
    want = ["121'32'303'", "01∞0221'∞2'", "12∞1'332'∞3'"]
    return got == want, "" if got == want else f"got {got}"


@check("bijection_equivariance", "codes")
def _bij(max_n):
    def items():
        for n in range(1, min(max_n, 6) + 1):
            for mode in (CHOW, AUGMENTED):
                rep = C.equivariance_check(n, mode)
                yield rep.passed, f"n={n} {mode}: {rep.counterexample}"
    return _first_failure(items())


# ---------------------------------------------------------------- eulerian

@check("q_eulerian_from_codes", "eulerian")
def _q_codes(max_n):
    def items():
        for n in range(1, min(max_n, 7) + 1):
            a = q_eulerian(n)
            yield a == q_eulerian_from_codes(n, "inv") == q_eulerian_from_codes(n, "maj"), f"n={n}"
    return _first_failure(items())


@check("q_binomial_eulerian_from_extended_codes", "eulerian")
def _q_ext(max_n):
    def items():
        for n in range(1, min(max_n, 6) + 1):
            a = q_binomial_eulerian(n)
            ok = a == q_binom_from_extcodes(n, "inv") == q_binom_from_extcodes(n, "maj") == q_binom_from_dperms(n)
            yield ok, f"n={n}"
    return _first_failure(items())


# ---------------------------------------------------------------- symfun

@check("eulerian_qsym_from_codes", "symfun")
def _qsym_codes(max_n):
    def items():
        for n in range(1, min(max_n, 6) + 1):
            a = q_nj_from_perms(n)
            yield a == symh_to_qsym(frobenius_codes(n)) == codes_des_expansion(n), f"n={n}"
    return _first_failure(items())


@check("binomial_eulerian_qsym_from_extended_codes", "symfun")
def _qsym_ext(max_n):
    def items():
        for n in range(1, min(max_n, 5) + 1):
            H = frobenius_codes(n, extended=True)
            yield H == q_tilde_from_def(n), f"n={n}: definition"
            yield symh_to_qsym(H) == q_tilde_from_dperms(n), f"n={n}: decorated permutations"
    return _first_failure(items())


@check("eulerian_qsym_generating_function", "symfun")
def _gf(max_n):
    ok, bad = gf_recurrence_check(min(max_n, 6))
    return ok, "" if ok else f"fails at n={bad}"


@check("principal_specialization", "symfun")
def _ps(max_n):
    def items():
        for n in range(1, min(max_n, 6) + 1):
            yield nps(frobenius_codes(n)) == q_eulerian(n), f"n={n}"
            yield nps(q_nj_from_perms(n)) == q_eulerian(n), f"n={n} (F basis)"
        for n in range(1, min(max_n, 5) + 1):
            yield nps(frobenius_codes(n, extended=True)) == q_binomial_eulerian(n), f"extended n={n}"
    return _first_failure(items())


# ---------------------------------------------------------------- csp

def _csp_items(family, max_n, cap):
    for n in range(1, min(max_n, cap) + 1):
        for j in family_j_range(family, n):
            rep = csp_verify(family, n, j)
            yield rep.passed, f"{family} n={n} j={j}: fixed {rep.fixed_counts}"


@check("csp_codes", "csp")
def _csp_codes(max_n):
    return _first_failure(_csp_items("codes", max_n, 7))


@check("csp_extended_codes", "csp")
def _csp_ext(max_n):
    return _first_failure(_csp_items("extcodes", max_n, 6))


@check("csp_permutations_by_excedance", "csp")
def _csp_perm(max_n):
    return _first_failure(_csp_items("perms_exc", max_n, 7))


@check("csp_permutations_by_cycle_type", "csp")
def _csp_ct(max_n):
    def items():
        for n in range(1, min(max_n, 6) + 1):
            for lam in partitions(n):
                for j in range(n):
                    rep = csp_verify("perms_cycletype", n, j, lam)
                    yield rep.passed, f"n={n} lambda={lam} j={j}"
    return _first_failure(items())


@check("cyclic_characters_codes_vs_conjugation", "csp")
def _csp_char(max_n):
    def items():
        for n in range(1, min(max_n, 7) + 1):
            for j in range(n):
                rep = cn_character_compare(n, j)
                yield rep.passed, f"n={n} j={j}: {rep.codes_character} vs {rep.conj_character}"
    return _first_failure(items())


@check("experimental_csp_decorated_permutations", "csp")
def _csp_dperm(max_n):
    return _first_failure(_csp_items("dperms_conjecture", max_n, 6))


# ---------------------------------------------------------------- stats

@check("dex_permutations", "stats")
def _dex(max_n):
    return _first_failure((dex_perm_check(n).passed, f"n={n}") for n in range(1, min(max_n, 6) + 1))


@check("dex_decorated_permutations", "stats")
def _dexd(max_n):
    return _first_failure((dex_decorated_check(n).passed, f"n={n}") for n in range(1, min(max_n, 6) + 1))


def _lemma(fn, max_n):
    rep = fn(max_len=min(max_n, 7))
    return rep.passed, rep.counterexample


@check("macmahon_equidistribution", "stats")
def _mac(max_n):
    return _lemma(macmahon_check, max_n)


@check("increasing_shuffle", "stats")
def _inc(max_n):
    return _lemma(increasing_shuffle_check, max_n)


@check("shuffle_inv", "stats")
def _sinv(max_n):
    return _lemma(shuffle_inv_check, max_n)


@check("shuffle_maj", "stats")
def _smaj(max_n):
    return _lemma(shuffle_maj_check, max_n)


# ---------------------------------------------------------------- driver

@dataclass
class VerifyReport:
    suite: str
    max_n: int
    results: Dict[str, dict] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r["status"] == "pass" for r in self.results.values())

    def first_failure(self):
        for key in sorted(self.results):
            if self.results[key]["status"] != "pass":
                return key, self.results[key]["detail"]
        return None

    def to_json(self, timings: bool = False):
        res = {}
        for key in sorted(self.results):
            r = dict(self.results[key])
            if not timings:
                r.pop("seconds", None)
            res[key] = r
        return {"schema": "chowlab/verify/1", "suite": self.suite, "max_n": self.max_n,
                "passed": self.passed, "results": res}


def checks_for(suite: str) -> List[Check]:
    if suite == "none":
        return []
    if suite == "all":
        return list(REGISTRY)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [c for c in REGISTRY if c.suite == suite]


def run_suite(suite: str = "all", max_n: int = 5, stop_on_failure: bool = False) -> VerifyReport:
    rep = VerifyReport(suite, max_n)
    for c in sorted(checks_for(suite), key=lambda c: c.key):
        t0 = time.perf_counter()
        try:
            ok, detail = c.run(max_n)
        except Exception as exc:  # a crash inside a check is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rep.results[c.key] = {"suite": c.suite, "status": "pass" if ok else "fail", "detail": detail,
                              "seconds": round(time.perf_counter() - t0, 3)}
        if stop_on_failure and not ok:
            break
    return rep
