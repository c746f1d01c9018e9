"""Command-line front ends ``bi``, ``seeds`` and ``xbi``.

Parameters are always given in the order ``r1,r2,rho1,rho2`` as exact
rationals (``--params 1/7,1/11,1/3,1/5``).  Output is canonical JSON (sorted
keys, no timestamps) or CSV for matrices.  Exit codes: 0 when every requested
check passes, 1 on a failed check, 2 on bad input or an unmet precondition.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .bannai_ito import (BIParams, bi_eigenvalue, bi_grid, bi_weight, solve_bi_polynomial,
                         truncate, validate_genericity)
from .darboux import (build_seed, degree_set, expected_leading, tabulated_degrees,
                      verify_intertwining, xbi_family)
from .errors import (ConjugationMismatch, DegreeTableMismatch, DeterminantMismatch,
                     IdentityFailed, OrthogonalityFailed, ParityMismatch, RootCheckFailed,
                     SignMismatch, XBIError)
from .exact import format_rational
from .gauge import GAUGE_CLASSES, appendix_a_coefficients, conjugated_operator, gauge_class
from .multistep import build_chain, chain_eigenfunction, check_determinant, chain_intertwining
from .orthogonality import (exceptional_grid, exceptional_weight, gram_matrix,
                            predicted_null_indices, positivity_scan, sample_positivity,
                            truncation_exemptions)
from .variants import (CASES, variant_exceptional_operator, variant_operator, variant_spec,
                       variant_xbi)

DEFAULT_PARAMS = "1/7,1/11,1/3,1/5"

# failures of a requested check; everything else derived from XBIError is a precondition
_CHECK_FAILURES = (ConjugationMismatch, DegreeTableMismatch, DeterminantMismatch,
                   IdentityFailed, OrthogonalityFailed, RootCheckFailed, SignMismatch)


@dataclass
class RunConfig:
    command: str
    params: BIParams
    options: dict = field(default_factory=dict)
    output: str | None = None
    fmt: str = "json"
    strict: bool = False


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    table: list | None = None

    def check(self, name, passed, **detail):
        entry = {"check": name, "status": "pass" if passed else "fail"}
        entry.update(detail)
        self.checks.append(entry)
        return passed

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_json(self):
        return {"command": self.command, "ok": self.ok, "checks": self.checks, "data": self.data}


def _q(x):
    return format_rational(Fraction(x))


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def table_csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def emit_report(report: Report, output=None, fmt="json", stream=None) -> str:
    """Render ``report`` and write it to ``output`` (or ``stream``)."""
    if fmt == "csv":
        if report.table is None:
            raise ValueError(f"{report.command} has no tabular output; use --format json")
        text = table_csv(report.table)
    else:
        text = canonical_json(report.to_json())
    if output:
        path = Path(output)
        try:
            path.write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc.strerror}") from exc
    else:
        (stream or sys.stdout).write(text)
    return text


# -- argument plumbing -----------------------------------------------------------

def _params_arg(text):
    try:
        return BIParams.from_cli(text)
    except (ValueError, XBIError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _common(parser):
    parser.add_argument("--params", type=_params_arg, default=DEFAULT_PARAMS,
                        help="r1,r2,rho1,rho2 as exact rationals (default %(default)s)")
    parser.add_argument("--output", "-o", help="write the report here instead of stdout")
    parser.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    parser.add_argument("--strict", action="store_true",
                        help="treat every reported mismatch as a failure")


def _sub(subs, name, help_text):
    p = subs.add_parser(name, help=help_text)
    _common(p)
    return p


def _family_table(header, rows):
    return [header] + [[str(c) for c in r] for r in rows]


# -- bi --------------------------------------------------------------------------

def _bi_poly(cfg, rep):
    n = cfg.options["n"]
    P = solve_bi_polynomial(n, cfg.params)
    rep.data.update(n=n, eigenvalue=_q(bi_eigenvalue(n, cfg.params)), coefficients=P.to_json())
    rep.table = _family_table(["k", "coefficient"], enumerate(P.to_json()))


def _bi_grid(cfg, rep):
    p = cfg.params
    N = cfg.options["N"]
    if cfg.options["truncate"]:
        p = truncate(p, N)
    grid = bi_grid(N, p, cfg.options["mode"])
    w = bi_weight(grid, p)
    rep.data.update(params=p.to_json(), grid=grid.to_json(), weights=[_q(v) for v in w.values])
    rep.table = _family_table(["s", "x", "weight"],
                              ((s, _q(x), _q(v)) for s, (x, v) in
                               enumerate(zip(grid.points, w.values))))


def bi_parser():
    ap = argparse.ArgumentParser(prog="bi", description="Classical Bannai-Ito data")
    subs = ap.add_subparsers(dest="command", required=True)
    p = _sub(subs, "poly", "monic eigenpolynomial B_n")
    p.add_argument("--n", type=int, required=True)
    p = _sub(subs, "grid", "finite grid and weight")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--mode", choices=("odd", "even"))
    p.add_argument("--truncate", action="store_true",
                   help="impose the truncation relation for N before building the grid")
    return ap


# -- seeds -----------------------------------------------------------------------

def _seeds_show(cfg, rep):
    for d in cfg.options["d"] or GAUGE_CLASSES:
        g = gauge_class(d, cfg.params)
        conjugated_operator(d, cfg.params)
        rep.check("conjugation", True, d=d)
        rep.data[str(d)] = g.to_json()


def _seeds_appendix(cfg, rep):
    rows = []
    for d in GAUGE_CLASSES:
        for m in range(cfg.options["mmax"] + 1):
            for n in range(cfg.options["nmax"] + 1):
                try:
                    _, checks = appendix_a_coefficients((d, m), n, cfg.params)
                except ParityMismatch:
                    continue
                for case, (got, closed) in checks.items():
                    rep.check("closed form", got == closed, d=d, m=m, n=n, case=case,
                              value=_q(got))
                    rows.append((d, m, n, case, _q(got), _q(closed)))
    rep.table = _family_table(["d", "m", "n", "case", "computed", "closed"], rows)


def seeds_parser():
    ap = argparse.ArgumentParser(prog="seeds", description="Quasi-polynomial seed classes")
    subs = ap.add_subparsers(dest="command", required=True)
    p = _sub(subs, "show", "gauge class data")
    p.add_argument("--d", type=int, action="append", choices=GAUGE_CLASSES)
    p = _sub(subs, "verify-appendix", "closed forms of the degree coefficients")
    p.add_argument("--mmax", type=int, default=8)
    p.add_argument("--nmax", type=int, default=8)
    return ap


# -- xbi -------------------------------------------------------------------------

def _xbi_poly(cfg, rep):
    o = cfg.options
    seed = build_seed((o["d"], o["m"]), cfg.params)
    fam = xbi_family(seed.idx, o["n"], cfg.params)
    P = fam.polys.get(o["n"])
    rep.data.update(seed=seed.to_json(), n=o["n"], degree_set=fam.degree_set,
                    zero_indices=fam.zero_indices,
                    coefficients=None if P is None else P.to_json())
    if P is not None:
        deg, lead = expected_leading(seed, o["n"])
        rep.check("leading term", P.degree == deg and P.lead == lead,
                  degree=deg, leading=_q(lead))
        rep.table = _family_table(["k", "coefficient"], enumerate(P.to_json()))


def _xbi_degrees(cfg, rep):
    o = cfg.options
    got = degree_set((o["d"], o["m"]), o["nmax"], cfg.params)
    want = tabulated_degrees(o["d"], o["m"], o["nmax"])
    rep.check("degree table", got == want, degrees=got)
    rep.table = _family_table(["n", "degree"], enumerate(got))


def _verify_one(rep, d, m, p, nmax):
    seed = build_seed((d, m), p)
    r = verify_intertwining(seed, n_max=nmax, strict=False)
    for name, ok in r.checks.items():
        rep.check(name, ok, seed=str(seed.idx))


def _xbi_verify(cfg, rep):
    o = cfg.options
    if o["all"]:
        pairs = [(d, m) for d in GAUGE_CLASSES for m in range(o["mmax"] + 1)
                 if (d, m) not in ((1, 0), (4, 0), (2, 0))]
    else:
        if o["d"] is None or o["m"] is None:
            raise ValueError("give --d and --m, or --all")
        pairs = [(o["d"], o["m"])]
    for d, m in pairs:
        _verify_one(rep, d, m, cfg.params, o["nmax"])


def _xbi_gram(cfg, rep):
    o = cfg.options
    p = truncate(cfg.params, o["N"]) if o["truncate"] else cfg.params
    seed = build_seed((o["d"], o["m"]), p)
    grid = exceptional_grid(seed, o["N"])
    g = gram_matrix(seed, grid, exceptional_weight(seed, grid), o["nmax"], strict=False)
    rep.check("off-diagonal", not g.off_diagonal, entries=[list(e) for e in g.off_diagonal])
    rep.check("nonzero norms", not g.zero_norms, zero=g.zero_norms,
              predicted=predicted_null_indices(seed, g.indices))
    rep.data.update(params=p.to_json(), gram=g.to_json())
    rep.table = [["n\\m"] + g.indices] + [[n] + [_q(v) for v in row]
                                           for n, row in zip(g.indices, g.gram)]


def _xbi_positivity(cfg, rep):
    o = cfg.options
    if o["samples"]:
        reports = sample_positivity(o["d"], o["N"], o["samples"], seed=o["seed"])
    else:
        p = truncate(cfg.params, o["N"])
        if cfg.strict and not validate_genericity(p, o["N"], ignore=truncation_exemptions(o["N"])).ok:
            raise ValueError("parameters are not generic after truncation")
        reports = [positivity_scan(o["d"], o["N"], p)]
    rep.check("sign decomposition", True, samples=len(reports))
    pos = sum(r.all_positive for r in reports)
    epos = sum(r.E_positive for r in reports)
    if cfg.strict:
        rep.check("weight positive", pos == len(reports), positive=pos, total=len(reports))
    rep.data.update(weight_positive=pos, E_positive=epos, total=len(reports),
                    reports=[r.to_json() for r in reports[:o["keep"]]])


def _xbi_chain(cfg, rep):
    o = cfg.options
    state = build_chain(o["seeds"], cfg.params)
    m = o["m"]
    rec = chain_eigenfunction(state, m)
    rep.data.update(seeds=list(state.seeds), m=m, recursion=rec.to_json())
    if state.step >= 2:
        try:
            check_determinant(state, m)
            same = True
        except DeterminantMismatch:
            same = False
        rep.check("determinant equals recursion", same)
    rep.check("eigen-equation", (state.top.apply(rec) - bi_eigenvalue(m, cfg.params) * rec).is_zero())
    if o["intertwining"]:
        rep.check("intertwining", chain_intertwining(state))


def _xbi_variant(cfg, rep):
    o = cfg.options
    seed = build_seed((o["d"], o["m"]), cfg.params)
    v = variant_spec(o["case"], cfg.params)
    rep.check("alpha f1 + beta f2 constant", v.constant(cfg.params).is_constant())
    G = variant_operator(v, seed)
    rep.check("intertwining", True)
    P = variant_xbi(v, seed, o["n"])
    Ghat = variant_exceptional_operator(v, seed, max(o["n"], 8))
    lam = bi_eigenvalue(o["n"], cfg.params)
    rep.check("eigen-equation", (Ghat.apply(P) - lam * P).is_zero())
    rep.data.update(case=o["case"], seed=str(seed.idx), n=o["n"], coefficients=P.to_json())
    rep.table = _family_table(["k", "coefficient"], enumerate(P.to_json()))


def xbi_parser():
    ap = argparse.ArgumentParser(prog="xbi", description="Exceptional Bannai-Ito polynomials")
    subs = ap.add_subparsers(dest="command", required=True)

    def seeded(name, help_text, need_m=True):
        p = _sub(subs, name, help_text)
        p.add_argument("--d", type=int, required=need_m, choices=GAUGE_CLASSES)
        p.add_argument("--m", type=int, required=need_m)
        return p

    p = seeded("poly", "one exceptional polynomial")
    p.add_argument("--n", type=int, required=True)
    p = seeded("degrees", "degree sequence against the table")
    p.add_argument("--nmax", type=int, default=10)
    p = seeded("verify", "intertwining and eigen-equation checks", need_m=False)
    p.add_argument("--all", action="store_true")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--mmax", type=int, default=3)
    p = seeded("gram", "Gram matrix on the exceptional window")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--nmax", type=int)
    p.add_argument("--truncate", action="store_true")
    p = _sub(subs, "positivity", "weight sign scan (degree-1 seeds, odd N)")
    p.add_argument("--d", type=int, required=True, choices=GAUGE_CLASSES)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--samples", type=int, default=0,
                   help="random points of the sufficient region; 0 scans --params")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--keep", type=int, default=3, help="full reports kept in the output")
    p = _sub(subs, "chain", "multistep chain from classical seeds")
    p.add_argument("--seeds", type=_int_list, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--intertwining", action="store_true")
    p = seeded("variant", "alternative annihilator families")
    p.add_argument("--case", choices=CASES, required=True)
    p.add_argument("--n", type=int, required=True)
    return ap


_HANDLERS = {
    "bi": {"poly": _bi_poly, "grid": _bi_grid},
    "seeds": {"show": _seeds_show, "verify-appendix": _seeds_appendix},
    "xbi": {"poly": _xbi_poly, "degrees": _xbi_degrees, "verify": _xbi_verify,
            "gram": _xbi_gram, "positivity": _xbi_positivity, "chain": _xbi_chain,
            "variant": _xbi_variant},
}
_PARSERS = {"bi": bi_parser, "seeds": seeds_parser, "xbi": xbi_parser}


def parse_config(tool: str, argv) -> RunConfig:
    ns = vars(_PARSERS[tool]().parse_args(argv))
    cmd = ns.pop("command")
    return RunConfig(cmd, ns.pop("params"), output=ns.pop("output"), fmt=ns.pop("fmt"),
                     strict=ns.pop("strict"), options=ns)


def run(tool: str, cfg: RunConfig, stream=None, err=None) -> int:
    err = err or sys.stderr
    rep = Report(f"{tool} {cfg.command}")
    try:
        _HANDLERS[tool][cfg.command](cfg, rep)
    except _CHECK_FAILURES as exc:
        rep.check(type(exc).__name__, False, message=str(exc))
        emit_report(rep, cfg.output, "json", stream)
        return 1
    except (XBIError, ValueError) as exc:
        print(f"{tool}: error: {type(exc).__name__}: {exc}", file=err)
        return 2
    try:
        emit_report(rep, cfg.output, cfg.fmt, stream)
    except (OSError, ValueError) as exc:
        print(f"{tool}: error: {exc}", file=err)
        return 2
    return 0 if rep.ok else 1


def _main(tool, argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(tool, argv)
    except SystemExit as exc:
        return exc.code
    return run(tool, cfg)


def bi_main(argv=None):
    return _main("bi", argv)


def seeds_main(argv=None):
    return _main("seeds", argv)


def xbi_main(argv=None):
    return _main("xbi", argv)


if __name__ == "__main__":
    sys.exit(xbi_main())
