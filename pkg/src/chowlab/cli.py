"""Command-line entry point: chowlab <subcommand> [options]."""
from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
import warnings
from pathlib import Path
from typing import List, Optional

from . import __version__
from . import codes as C
from .chow import AUGMENTED, CHOW, fy_basis_augmented, fy_basis_matroid, hilbert_series
from .core.combinat import Partition, elements_of
from .core.poly import BiPoly, UniPoly
from .csp import FAMILIES, csp_verify
from .errors import InvalidArgument, SizeLimitError, caps_lifted, check_cap
from .eulerian import (binomial_eulerian, eulerian, q_binom_from_dperms, q_binom_from_extcodes,
                       q_binomial_eulerian, q_eulerian, q_eulerian_from_codes)
from .lattice import (augmented_building_set, augmented_lattice, check_geometric, face_iso_check,
                      flat_lattice, is_building_set, maximal_building_set)
from .matroid import Matroid, parse_matroid_spec
from .symfun import (QSymF, SymH, codes_des_expansion, frobenius_codes, h_to_p, q_nj_from_perms,
                     q_tilde_from_def, q_tilde_from_dperms, qsym_to_symh, recurrence_q, symh_to_qsym)
from .verify import SUITES, run_suite

log = logging.getLogger("chowlab")

EXIT_OK, EXIT_FAIL, EXIT_BAD_SPEC, EXIT_CAP = 0, 1, 2, 3


# ---------------------------------------------------------------- output helpers

class Output:
    """Collects one result in three renderings and writes the requested one."""

    def __init__(self, kind: str, data: dict, text: List[str], tsv: List[List] | None = None):
        self.data = {"schema": f"chowlab/{kind}/1", **data}
        self.text = text
        self.tsv = tsv

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
        if fmt == "tsv":
            rows = self.tsv if self.tsv is not None else [[line] for line in self.text]
            return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)
        return "".join(line + "\n" for line in self.text)


SCHEMA_DIR = Path(__file__).with_name("schemas")


def load_schema(kind: str) -> dict:
    """The JSON schema for the output of one subcommand."""
    with open(SCHEMA_DIR / f"{kind}.schema.json", encoding="utf-8") as fh:
        return json.load(fh)


def uni_json(p: UniPoly, var: str = "t") -> dict:
    return {"terms": [{var: e, "c": str(c)} for e, c in p.items()]}


def bi_json(p: BiPoly) -> dict:
    return {"terms": [{"q": q, "t": t, "c": str(c)} for (q, t), c in sorted(p.items(), key=lambda kv: (kv[0][1], kv[0][0]))]}


def bi_matrix(p: BiPoly) -> List[List]:
    """q-by-t coefficient matrix with a header row."""
    keys = [k for k, _ in p.items()]
    qmax = max((q for q, _ in keys), default=0)
    tmax = max((t for _, t in keys), default=0)
    rows = [["q\\t"] + [str(t) for t in range(tmax + 1)]]
    for q in range(qmax + 1):
        rows.append([str(q)] + [str(p[(q, t)]) for t in range(tmax + 1)])
    return rows


def _cap(n: int, args, what="n"):
    # an override warning is collected and logged once by main()
    check_cap(n, override=args.override, what=what)


def _matroid(args) -> Matroid:
    M = parse_matroid_spec(args.matroid)
    _cap(M.n, args, "ground set size")
    return M


# ---------------------------------------------------------------- fy

def cmd_fy(args) -> Output:
    M = _matroid(args)
    mode = AUGMENTED if args.augmented else CHOW
    basis = fy_basis_augmented(M) if args.augmented else fy_basis_matroid(M)
    degrees = [args.degree] if args.degree is not None else sorted(basis.by_degree)
    series = hilbert_series(basis)
    text, tsv, blocks = [], [["degree", "monomial"]], []
    for k in degrees:
        mons = basis[k]
        blocks.append({"degree": k, "monomials": [m.to_json() for m in mons]})
        text.append(f"# degree {k}: {len(mons)}")
        for m in mons:
            text.append(str(m))
            tsv.append([k, str(m)])
    text.append(f"hilbert: {series.to_str()}")
    data = {"matroid": M.to_json(), "mode": mode, "hilbert": series.dense(),
            "size": sum(len(b["monomials"]) for b in blocks), "basis": blocks}
    return Output("fy", data, text, tsv)


# ---------------------------------------------------------------- codes

def _code_row(c):
    return {"text": str(c), "index": C.index(c), "content": C.content(c).key(), **C.code_to_json(c)}


def cmd_codes(args) -> Output:
    _cap(args.n, args)
    pool = C.extended_codes(args.n, args.j, override=True) if args.extended else C.codes(args.n, args.j, override=True)
    text = [f"{c}\t{C.index(c)}" for c in pool]
    tsv = [["code", "index", "content"]] + [[str(c), C.index(c), C.content(c).key()] for c in pool]
    data = {"n": args.n, "extended": args.extended, "j": args.j, "count": len(pool),
            "codes": [_code_row(c) for c in pool]}
    return Output("codes", data, text + [f"count: {len(pool)}"], tsv)


# ---------------------------------------------------------------- bijection

def cmd_bijection(args) -> Output:
    if args.n > 8:
        raise SizeLimitError("bijection is limited to n <= 8")
    M = Matroid.boolean(args.n)
    if args.augmented:
        basis, fwd, mode = fy_basis_augmented(M), C.phi_tilde, AUGMENTED
    else:
        basis, fwd, mode = fy_basis_matroid(M), C.phi, CHOW
    degrees = [args.degree] if args.degree is not None else sorted(basis.by_degree)
    rows, text, tsv = [], [], [["degree", "monomial", "code"]]
    for k in degrees:
        for m in basis[k]:
            c = fwd(m)
            rows.append({"degree": k, "monomial": m.to_json(), "monomial_text": str(m),
                         "code": C.code_to_json(c), "code_text": str(c)})
            text.append(f"{m} <-> {c}")
            tsv.append([k, str(m), str(c)])
    data = {"n": args.n, "mode": mode, "rows": rows}
    if args.check:
        rep = C.equivariance_check(args.n, mode, all_perms=args.all_perms)
        data["check"] = rep.to_json()
        text.append(f"check: {'pass' if rep.passed else 'FAIL ' + rep.counterexample}")
        if not rep.passed:
            return Output("bijection", data, text, tsv), EXIT_FAIL
    return Output("bijection", data, text, tsv)


# ---------------------------------------------------------------- eulerian

EULERIAN_SOURCES = ("perms", "codes-inv", "codes-maj", "extcodes-inv", "extcodes-maj", "dperms")


def cmd_eulerian(args) -> Output:
    n = args.n
    _cap(n, args)
    if n < 1:
        raise InvalidArgument("n must be positive")
    binomial = args.binomial
    src = args.source
    if src in ("codes-inv", "codes-maj") and binomial:
        raise InvalidArgument(f"source {src} gives the Eulerian polynomial; drop --binomial")
    if src in ("extcodes-inv", "extcodes-maj", "dperms"):
        binomial = True
    if not args.q:
        p = binomial_eulerian(n) if binomial else eulerian(n)
        data = {"n": n, "binomial": binomial, "q": False, "polynomial": uni_json(p)}
        tsv = [["t", "c"]] + [[e, c] for e, c in p.items()]
        return Output("eulerian", data, [p.to_str()], tsv)
    if src == "perms":
        p = q_binomial_eulerian(n) if binomial else q_eulerian(n)
    elif src.startswith("codes"):
        p = q_eulerian_from_codes(n, src.split("-")[1])
    elif src.startswith("extcodes"):
        p = q_binom_from_extcodes(n, src.split("-")[1])
    else:
        p = q_binom_from_dperms(n)
    data = {"n": n, "binomial": binomial, "q": True, "source": src, "polynomial": bi_json(p)}
    return Output("eulerian", data, [p.to_str()], bi_matrix(p))


# ---------------------------------------------------------------- symfun

SYMFUN_SOURCES = {"Q": ("codes", "perms", "des", "recurrence"),
                  "Qtilde": ("codes", "dperms", "definition")}


def _symfun_value(fn: str, n: int, source: str):
    if source not in SYMFUN_SOURCES[fn]:
        raise InvalidArgument(f"source {source!r} not available for {fn}; use one of {SYMFUN_SOURCES[fn]}")
    if fn == "Q":
        if source == "codes":
            return frobenius_codes(n)
        if source == "perms":
            return q_nj_from_perms(n)
        if source == "des":
            return codes_des_expansion(n)
        return recurrence_q(n)
    if source == "codes":
        return frobenius_codes(n, extended=True)
    if source == "dperms":
        return q_tilde_from_dperms(n)
    return q_tilde_from_def(n)


def _t_filter(x, j):
    if j is None:
        return x
    return x.t_coeff(j) if isinstance(x, (QSymF, SymH)) else x


def cmd_symfun(args) -> Output:
    n = args.n
    _cap(n, args)
    if n < 1:
        raise InvalidArgument("n must be positive")
    val = _symfun_value(args.function, n, args.source)
    if args.basis == "F":
        val = val if isinstance(val, QSymF) else symh_to_qsym(val)
        val = _t_filter(val, args.j)
        obj = val.to_json()
        text = [f"F{elements_of(S)}\t{c.to_str()}" for S, c in val.items()]
        tsv = [["S", "t", "c"]] + [[",".join(map(str, t["S"])), t["t"], t["c"]] for t in obj["terms"]]
    else:
        H = val if isinstance(val, SymH) else qsym_to_symh(val)
        H = _t_filter(H, args.j)
        if args.basis == "h":
            obj = H.to_json()
            text = [f"h[{lam.key()}]\t{c.to_str()}" for lam, c in H.items()]
        else:
            P = h_to_p(H)
            obj = P.to_json()
            text = [f"p[{lam.key()}]\t{c.to_str()}" for lam, c in P.items()]
        tsv = [["lambda", "t", "c"]] + [[t["lambda"], t["t"], t["c"]] for t in obj["terms"]]
    data = {"function": args.function, "basis": args.basis, "source": args.source, "j": args.j,
            "value": obj}
    return Output("symfun", data, text, tsv)


# ---------------------------------------------------------------- csp

def cmd_csp(args) -> Output:
    lam = Partition.from_key(args.cycle_type) if args.cycle_type else None
    if args.family == "perms_cycletype" and lam is None:
        raise InvalidArgument("perms_cycletype needs --lambda")
    rep = csp_verify(args.family, args.n, args.j, lam, override=args.override)
    text = [f"{args.family} n={args.n} j={args.j}" + (f" lambda={lam.key()}" if lam else "")
            + (" (experimental)" if rep.experimental else ""),
            f"polynomial: {rep.polynomial.to_str()}"]
    tsv = [["r", "d", "fixed", "residue", "match"]]
    for row in rep.rows:
        res = " ".join(str(c) for c in row.poly_value.coeffs)
        text.append(f"r={row.r}\tfixed={row.fixed_count}\tresidue=[{res}]\t{'match' if row.match else 'MISMATCH'}")
        tsv.append([row.r, row.poly_value.d, row.fixed_count, res, row.match])
    text.append("pass" if rep.passed else "FAIL")
    out = Output("csp", rep.to_json(), text, tsv)
    return out if rep.passed else (out, EXIT_FAIL)


# ---------------------------------------------------------------- lattice

def cmd_lattice(args) -> Output:
    M = _matroid(args)
    if args.augmented:
        L = augmented_lattice(M)
        G = augmented_building_set(M, L)
    else:
        L = flat_lattice(M)
        G = maximal_building_set(L)
    geo = check_geometric(L)
    building = is_building_set(L, G.members, override=args.override)
    data = {"matroid": M.to_json(), "augmented": args.augmented, "size": L.size,
            "geometric": geo, "building_set": [L.names[g] for g in G.sorted()],
            "building_set_ok": building, "lattice": L.to_json()}
    text = [f"{M.label()} {'augmented ' if args.augmented else ''}lattice: {L.size} elements",
            f"geometric: {geo}", f"building set ({len(G.members)} elements): {building}"]
    if args.faces:
        rep = face_iso_check(M)
        data["faces"] = rep.to_json()
        text.append(f"faces: {rep.nested_count} nested sets, {rep.pair_count} compatible pairs, "
                    f"{'pass' if rep.passed else 'FAIL ' + rep.counterexample}")
    tsv = [["upper", "lower"]] + [list(e) for e in L.hasse()]
    ok = geo and building and (not args.faces or data["faces"]["passed"])
    out = Output("lattice", data, text, tsv)
    return out if ok else (out, EXIT_FAIL)


# ---------------------------------------------------------------- verify

def cmd_verify(args) -> Output:
    rep = run_suite(args.suite, args.max_n, stop_on_failure=args.fail_fast)
    data = rep.to_json(timings=args.timings)
    data.pop("schema")
    text = [f"{key}\t{r['status']}" + (f"\t{r['detail']}" if r["detail"] else "")
            for key, r in sorted(rep.results.items())]
    text.append("pass" if rep.passed else "FAIL")
    tsv = [["check", "suite", "status", "detail"]] + [[k, r["suite"], r["status"], r["detail"]]
                                                     for k, r in sorted(rep.results.items())]
    out = Output("verify", data, text, tsv)
    if not rep.passed:
        key, detail = rep.first_failure()
        print(f"first failure: {key}: {detail}", file=sys.stderr)
        return out, EXIT_FAIL
    return out


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "text"), default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--override", action="store_true", help="run past the size caps")

    p = argparse.ArgumentParser(prog="chowlab", description=__doc__)
    p.add_argument("--version", action="version", version=f"chowlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fy", parents=[common], help="FY monomial basis and Hilbert series")
    s.add_argument("--matroid", required=True, help="boolean:N, uniform:K:N, inline JSON or a JSON file")
    s.add_argument("--augmented", action="store_true")
    s.add_argument("--degree", type=int)
    s.set_defaults(func=cmd_fy)

    s = sub.add_parser("codes", parents=[common], help="list Stembridge or extended codes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--j", type=int, help="only codes of this index")
    s.add_argument("--extended", action="store_true")
    s.set_defaults(func=cmd_codes)

    s = sub.add_parser("bijection", parents=[common], help="monomial <-> code table")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--degree", type=int)
    s.add_argument("--augmented", action="store_true")
    s.add_argument("--check", action="store_true", help="run the bijectivity and equivariance check")
    s.add_argument("--all-perms", action="store_true", help="check equivariance for every permutation")
    s.set_defaults(func=cmd_bijection)

    s = sub.add_parser("eulerian", parents=[common], help="Eulerian polynomials and q-analogs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--binomial", action="store_true")
    s.add_argument("--q", action="store_true", help="the (q,t) version")
    s.add_argument("--source", choices=EULERIAN_SOURCES, default="perms")
    s.set_defaults(func=cmd_eulerian)

    s = sub.add_parser("symfun", parents=[common], help="Eulerian quasisymmetric functions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--function", choices=("Q", "Qtilde"), default="Q")
    s.add_argument("--basis", choices=("F", "h", "p"), default="h")
    s.add_argument("--source", default="codes")
    s.add_argument("--j", type=int, help="only the coefficient of t^j")
    s.set_defaults(func=cmd_symfun)

    s = sub.add_parser("csp", parents=[common], help="cyclic sieving report")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--lambda", dest="cycle_type", help="cycle type such as 3+1 (perms_cycletype)")
    s.set_defaults(func=cmd_csp)

    s = sub.add_parser("lattice", parents=[common], help="lattice of flats or augmented lattice")
    s.add_argument("--matroid", required=True)
    s.add_argument("--augmented", action="store_true")
    s.add_argument("--faces", action="store_true", help="also check nested sets against compatible pairs")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("verify", parents=[common], help="run identity checks")
    s.add_argument("--suite", choices=("all", "none") + SUITES, default="all")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--timings", action="store_true")
    s.add_argument("--fail-fast", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="chowlab: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    scope = caps_lifted() if args.override else contextlib.nullcontext()
    try:
        with scope, warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = args.func(args)
    except InvalidArgument as exc:
        print(f"chowlab: error: {exc}", file=sys.stderr)
        return EXIT_BAD_SPEC
    except SizeLimitError as exc:
        print(f"chowlab: size limit: {exc}", file=sys.stderr)
        return EXIT_CAP
    for message in dict.fromkeys(str(w.message) for w in caught):
        log.warning(message)
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    text = result.render(args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
