"""Command-line front end.

Every quantitative result of the library is reachable as CSV/JSON (and an
optional static SVG rendering): the spectrum, radial densities, entropy
curves, Schmidt eigenvalues with the power-law fit, natural-orbital fields,
the quasi-2D mapping, and a self-verification suite.

Output conventions: CSV has '#'-prefixed metadata lines (parameters, units,
normalization) before the header row, comma separators, LF endings, UTF-8;
floats are printed with 12 significant digits so identical invocations are
byte-identical.  Units are always a_ho for lengths and hbar*omega for
energies.  Exit codes: 0 success, 1 failed verification (verify only),
2 argument or I/O errors.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys

import numpy as np

from . import crosscheck, quasi2d, schmidt, spectrum
from .schmidt import BasisIndex
from .specfun import EULER_GAMMA, digamma, trigamma
from .wavefn import radial_density

_UNITS = "lengths in a_ho = sqrt(hbar/(m*omega)); energies in hbar*omega"


def _fmt(x) -> str:
    return format(float(x), ".12g")


def _round12(obj):
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return [_round12(float(v)) for v in obj]
    if isinstance(obj, (np.floating,)):
        return float(_fmt(float(obj)))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    return obj


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _emit(args, meta: dict, header: list[str], rows, json_extra: dict | None = None) -> None:
    """Render one result table in the selected format."""
    if args.format == "csv":
        buf = io.StringIO()
        buf.write(f"# units: {_UNITS}\n")
        for k, v in meta.items():
            buf.write(f"# {k} = {v if isinstance(v, str) else _fmt(v)}\n")
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) if not isinstance(v, (int, np.integer)) else str(int(v)) for v in row) + "\n")
        _write_text(args.out, buf.getvalue())
    else:
        doc = {"units": _UNITS}
        doc.update(_round12(meta))
        if json_extra:
            doc.update(_round12(json_extra))
        doc["columns"] = header
        doc["rows"] = [_round12([float(v) for v in row]) for row in rows]
        _write_text(args.out, json.dumps(doc, indent=1) + "\n")


def _svg_path(out: str) -> str:
    base, _ = os.path.splitext(out)
    return base + ".svg"


def _plot_lines(path: str, series, xlabel: str, ylabel: str, title: str, logy=False, logx=False) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5.0, 3.6))
    for label, x, y, style in series:
        ax.plot(x, y, style, label=label, ms=3.5, lw=1.2)
    if logy:
        ax.set_yscale("log")
    if logx:
        ax.set_xscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title, fontsize=10)
    if len(series) > 1:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def _plot_field(path: str, field, title: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(4.4, 3.8))
    e = field.extent
    im = ax.imshow(field.values.T, origin="lower", extent=(-e, e, -e, e), cmap="RdBu_r")
    fig.colorbar(im, ax=ax, shrink=0.85)
    ax.set_xlabel("x / a_ho")
    ax.set_ylabel("y / a_ho")
    ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def _cmd_spectrum_scan(args) -> int:
    sols = spectrum.spectrum_scan(args.ln_a_min, args.ln_a_max, args.steps, args.branches)
    rows = [(s.ln_a, s.branch, s.nu, s.energy) for s in sols]
    meta = {
        "subcommand": "spectrum-scan",
        "ln_a_min": args.ln_a_min,
        "ln_a_max": args.ln_a_max,
        "steps": args.steps,
        "branches": args.branches,
    }
    _emit(args, meta, ["ln_a", "branch", "nu", "energy"], rows)
    if args.plot:
        series = []
        for b in range(args.branches):
            pts = [(s.ln_a, s.nu) for s in sols if s.branch == b]
            series.append((f"branch {b}", [p[0] for p in pts], [p[1] for p in pts], "-"))
        _plot_lines(_svg_path(args.out), series, "ln(a)", "nu", "relative-motion spectrum")
    return 0


def _cmd_density(args) -> int:
    sol = spectrum.nu_of_ln_a(args.ln_a, args.branch)
    prof = radial_density(sol.nu, args.rho_max, args.points)
    meta = {
        "subcommand": "density",
        "ln_a": args.ln_a,
        "branch": args.branch,
        "nu": sol.nu,
        "energy": sol.energy,
        "normalization": "density = 2*pi*rho*|psi(rho)|^2, integrates to 1",
    }
    _emit(args, meta, ["rho", "density"], zip(prof.rho, prof.density))
    if args.plot:
        _plot_lines(
            _svg_path(args.out),
            [(f"ln a = {args.ln_a:g}", prof.rho, prof.density, "-")],
            "rho / a_ho",
            "2 pi rho |psi|^2",
            f"radial density, branch {args.branch}",
        )
    return 0


def _cmd_entropy(args) -> int:
    sol = spectrum.nu_of_ln_a(args.ln_a, args.branch)
    dec = schmidt.schmidt_decompose(sol.nu, args.nmax, renormalize=args.renormalize)
    top = dec.lambdas[:20]
    meta = {
        "subcommand": "entropy",
        "ln_a": args.ln_a,
        "branch": args.branch,
        "nmax": args.nmax,
        "renormalize": str(bool(args.renormalize)).lower(),
        "nu": sol.nu,
        "energy": sol.energy,
        "entropy": dec.entropy,
        "deficit": dec.deficit,
    }
    extra = {"lambdas": list(map(float, top))}
    _emit(args, meta, ["k", "lambda"], [(k, v) for k, v in enumerate(top)], json_extra=extra)
    if args.plot:
        _plot_lines(
            _svg_path(args.out),
            [("lambda", np.arange(1, top.size + 1), top, "o-")],
            "n",
            "lambda_n",
            f"Schmidt coefficients at ln a = {args.ln_a:g}",
            logy=True,
        )
    return 0


def _cmd_entropy_scan(args) -> int:
    if args.steps < 2:
        raise SystemExit("entropy-scan needs steps >= 2")
    grid = np.linspace(args.ln_a_min, args.ln_a_max, args.steps)
    rows = []
    for x in grid:
        sol = spectrum.nu_of_ln_a(float(x), args.branch)
        dec = schmidt.schmidt_decompose(sol.nu, args.nmax)
        rows.append((float(x), sol.nu, dec.entropy, dec.deficit))
    meta = {
        "subcommand": "entropy-scan",
        "branch": args.branch,
        "nmax": args.nmax,
        "deficit_note": "entropies are raw (not renormalized); deficit column reports 1-sum(lambda^2)",
    }
    _emit(args, meta, ["ln_a", "nu", "entropy", "deficit"], rows)
    if args.plot:
        _plot_lines(
            _svg_path(args.out),
            [(f"branch {args.branch}", [r[0] for r in rows], [r[2] for r in rows], "o-")],
            "ln(a)",
            "von Neumann entropy",
            "entanglement vs scattering length",
        )
    return 0


def _cmd_eigenvalues(args) -> int:
    sol = spectrum.nu_of_ln_a(args.ln_a, args.branch)
    dec = schmidt.schmidt_decompose(sol.nu, args.nmax)
    top = dec.lambdas[: args.top]
    meta = {
        "subcommand": "eigenvalues",
        "ln_a": args.ln_a,
        "branch": args.branch,
        "nmax": args.nmax,
        "nu": sol.nu,
    }
    extra: dict = {}
    if args.fit:
        try:
            alpha, beta = schmidt.power_law_fit(dec.lambdas)
            meta["fit_alpha"] = alpha
            meta["fit_beta"] = beta
            extra = {"fit": {"alpha": alpha, "beta": beta}}
        except ValueError as exc:
            meta["fit_note"] = f"fit rejected: {exc}"
            extra = {"fit": None}
    rows = [(k + 1, v) for k, v in enumerate(top)]
    _emit(args, meta, ["n", "lambda"], rows, json_extra=extra)
    if args.plot:
        series = [("lambda_n", [r[0] for r in rows], [r[1] for r in rows], "o")]
        if "fit_alpha" in meta:
            n = np.arange(1, len(rows) + 1, dtype=float)
            series.append(("fit", n, meta["fit_alpha"] * n ** meta["fit_beta"], "--"))
        _plot_lines(
            _svg_path(args.out), series, "n", "lambda_n",
            f"eigenvalue decay at ln a = {args.ln_a:g}", logy=True, logx=True,
        )
    return 0


def _cmd_orbitals(args) -> int:
    if args.out is None:
        raise SystemExit("orbitals writes one file per orbital and requires --out PREFIX")
    sol = spectrum.nu_of_ln_a(args.ln_a, args.branch)
    dec = schmidt.schmidt_decompose(sol.nu, args.nmax)
    grid = np.linspace(-args.extent, args.extent, args.grid)
    for k in range(args.top):
        field = schmidt.schmidt_orbital(dec, k, args.extent, args.grid)
        path = f"{args.out}_orb{k}.{args.format}"
        meta = {
            "subcommand": "orbitals",
            "ln_a": args.ln_a,
            "branch": args.branch,
            "nmax": args.nmax,
            "orbital": k,
            "lambda": dec.lambdas[k],
            "lz_squared": schmidt.angular_momentum_sq(dec, k),
            "extent": args.extent,
            "grid": args.grid,
        }
        rows = [
            (grid[i], grid[j], field.values[i, j])
            for i in range(args.grid)
            for j in range(args.grid)
        ]
        sub = argparse.Namespace(format=args.format, out=path)
        _emit(sub, meta, ["x", "y", "value"], rows)
        if args.plot:
            _plot_field(
                f"{args.out}_orb{k}.svg",
                field,
                f"orbital {k}, lambda = {dec.lambdas[k]:.4f}",
            )
    return 0


def _cmd_quasi2d(args) -> int:
    if args.ratio is not None:
        ratios = [args.ratio]
    else:
        if args.ratio_min is None or args.ratio_max is None or args.steps is None:
            raise SystemExit("quasi2d needs --ratio or all of --ratio-min/--ratio-max/--steps")
        ratios = list(np.linspace(args.ratio_min, args.ratio_max, args.steps))
    meta = {
        "subcommand": "quasi2d",
        "eta": args.eta,
        "tight_confinement_constant": quasi2d.TIGHT_CONFINEMENT_CONSTANT,
        "critical_ln_a_eff": quasi2d.critical_ln_a_eff(args.eta),
    }
    if args.entropy:
        meta["branch"] = args.branch
        meta["nmax"] = args.nmax
        rows = quasi2d.quasi2d_entropy_curve(args.eta, ratios, args.branch, args.nmax)
        _emit(args, meta, ["az_over_a3d", "ln_a_eff", "entropy"], rows)
        if args.plot:
            _plot_lines(
                _svg_path(args.out),
                [(f"eta = {args.eta:g}", [r[1] for r in rows], [r[2] for r in rows], "D")],
                "ln(a_eff)",
                "von Neumann entropy",
                f"quasi-2D overlay, branch {args.branch}",
            )
    else:
        rows = [
            (r, quasi2d.ln_a_eff_scaled(quasi2d.Quasi2DParams(eta=args.eta, az_over_a3d=r)))
            for r in ratios
        ]
        _emit(args, meta, ["az_over_a3d", "ln_a_eff"], rows)
        if args.plot:
            _plot_lines(
                _svg_path(args.out),
                [(f"eta = {args.eta:g}", [r[0] for r in rows], [r[1] for r in rows], "-")],
                "a_z / a_3d",
                "ln(a_eff)",
                "quasi-2D effective scattering length",
            )
    return 0


def _verify_checks(fast: bool):
    """(name, callable) pairs; each callable returns (ok, detail)."""

    def digamma_anchors():
        g = EULER_GAMMA
        errs = [
            abs(digamma(1.0) + g),
            abs(digamma(0.5) + g + 2.0 * math.log(2.0)),
            abs(digamma(-0.5) - (2.0 - g - 2.0 * math.log(2.0))),
        ]
        return max(errs) < 1e-12, f"max closed-form error {max(errs):.2e}"

    def spectrum_roundtrip():
        worst = 0.0
        for b in range(3):
            for x in np.linspace(-4, 4, 9):
                s = spectrum.nu_of_ln_a(float(x), b)
                worst = max(worst, abs(spectrum.ln_a_of_nu(s.nu) - x))
        anchor = 1.5 * math.log(2.0) - 0.5 * EULER_GAMMA
        worst_anchor = max(
            abs(spectrum.nu_of_ln_a(anchor, 0).nu + 0.5),
            abs(spectrum.nu_of_ln_a(anchor - 1.0, 1).nu - 0.5),
        )
        ok = worst < 1e-10 and worst_anchor < 1e-10
        return ok, f"roundtrip {worst:.2e}, anchors {worst_anchor:.2e}"

    def overlap_anchor():
        nu = spectrum.nu_of_ln_a(-0.5359, 0).nu
        c = schmidt.coefficient_matrix(nu, 4)
        closed = 1.0 / ((-nu) * math.sqrt(trigamma(-nu)))
        oracle = crosscheck.basis_overlap(nu, BasisIndex(0, 0), BasisIndex(0, 0))
        err = max(abs(c.entries[0, 0] - closed), abs(c.entries[0, 0] - oracle))
        return err < 1e-4, f"C00 vs closed/oracle {err:.2e}"

    def kernel_vs_matrix():
        points = [0.0] if fast else [-0.5359, 0.0]
        nodes = 160 if fast else 320
        worst = 0.0
        for x in points:
            nu = spectrum.nu_of_ln_a(x, 0).nu
            law = crosscheck.kernel_schmidt(nu, m_max=24, radial_nodes=nodes)
            cart = schmidt.schmidt_decompose(nu, 60)
            worst = max(worst, float(np.max(np.abs(law.lambdas[:10] - cart.lambdas[:10]))))
        return worst < 1e-3, f"top-10 coefficient mismatch {worst:.2e}"

    def quasi2d_critical():
        err = abs(quasi2d.critical_ln_a_eff(20.0) - (-0.7597))
        return err < 1e-3, f"critical value error {err:.2e}"

    return [
        ("digamma closed forms", digamma_anchors),
        ("spectrum round trip + anchors", spectrum_roundtrip),
        ("coefficient vs overlap oracle", overlap_anchor),
        ("kernel vs matrix Schmidt", kernel_vs_matrix),
        ("quasi-2D critical value", quasi2d_critical),
    ]


def _cmd_verify(args) -> int:
    use_color = sys.stdout.isatty() and not os.environ.get("NO_COLOR")
    green = "\x1b[32m" if use_color else ""
    red = "\x1b[31m" if use_color else ""
    reset = "\x1b[0m" if use_color else ""
    failures = 0
    for name, check in _verify_checks(args.fast):
        try:
            ok, detail = check()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        status = f"{green}PASS{reset}" if ok else f"{red}FAIL{reset}"
        print(f"{status}  {name:32s} {detail}")
        failures += 0 if ok else 1
    print(f"{len(_verify_checks(args.fast)) - failures} passed, {failures} failed")
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pairtrap2d",
        description="Spectrum and pair entanglement of two contact-interacting bosons in a 2D trap.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_output(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output file (default: stdout)")
        sp.add_argument("--plot", action="store_true", help="also write an SVG next to --out")

    s = sub.add_parser("spectrum-scan", help="nu(ln a) on the lowest branches")
    s.add_argument("--ln-a-min", type=float, required=True)
    s.add_argument("--ln-a-max", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--branches", type=int, required=True)
    add_output(s)
    s.set_defaults(func=_cmd_spectrum_scan)

    s = sub.add_parser("density", help="radial density of one level")
    s.add_argument("--ln-a", type=float, required=True)
    s.add_argument("--branch", type=int, default=0)
    s.add_argument("--rho-max", type=float, default=5.0)
    s.add_argument("--points", type=int, default=400)
    add_output(s)
    s.set_defaults(func=_cmd_density)

    s = sub.add_parser("entropy", help="entropy and Schmidt coefficients at one point")
    s.add_argument("--ln-a", type=float, required=True)
    s.add_argument("--branch", type=int, default=0)
    s.add_argument("--nmax", type=int, default=60)
    s.add_argument("--renormalize", action="store_true")
    add_output(s)
    s.set_defaults(func=_cmd_entropy)

    s = sub.add_parser("entropy-scan", help="entropy across a scattering-length range")
    s.add_argument("--ln-a-min", type=float, required=True)
    s.add_argument("--ln-a-max", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--branch", type=int, default=0)
    s.add_argument("--nmax", type=int, default=60)
    add_output(s)
    s.set_defaults(func=_cmd_entropy_scan)

    s = sub.add_parser("eigenvalues", help="leading Schmidt coefficients and power-law fit")
    s.add_argument("--ln-a", type=float, required=True)
    s.add_argument("--branch", type=int, default=0)
    s.add_argument("--nmax", type=int, default=60)
    s.add_argument("--top", type=int, default=20)
    s.add_argument("--fit", action="store_true")
    add_output(s)
    s.set_defaults(func=_cmd_eigenvalues)

    s = sub.add_parser("orbitals", help="natural-orbital fields, one file per orbital")
    s.add_argument("--ln-a", type=float, required=True)
    s.add_argument("--branch", type=int, default=0)
    s.add_argument("--nmax", type=int, default=60)
    s.add_argument("--top", type=int, default=4)
    s.add_argument("--extent", type=float, default=4.0)
    s.add_argument("--grid", type=int, default=101)
    add_output(s)
    s.set_defaults(func=_cmd_orbitals)

    s = sub.add_parser("quasi2d", help="quasi-2D mapping and optional entropy overlay")
    s.add_argument("--eta", type=float, required=True)
    s.add_argument("--ratio", type=float, default=None, help="a_z / a_3d")
    s.add_argument("--ratio-min", type=float, default=None)
    s.add_argument("--ratio-max", type=float, default=None)
    s.add_argument("--steps", type=int, default=None)
    s.add_argument("--entropy", action="store_true")
    s.add_argument("--branch", type=int, default=1)
    s.add_argument("--nmax", type=int, default=60)
    add_output(s)
    s.set_defaults(func=_cmd_quasi2d)

    s = sub.add_parser("verify", help="run the numerical cross-check suite")
    s.add_argument("--fast", action="store_true")
    s.set_defaults(func=_cmd_verify)

    return p


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if getattr(args, "plot", False) and getattr(args, "out", None) is None:
        print("error: --plot requires --out", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except SystemExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
