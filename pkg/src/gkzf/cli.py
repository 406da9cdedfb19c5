"""File-driven front end: parse problem files, run the pipeline, emit reports.

Problem files use a line-oriented key/value grammar with a version header;
rationals are written p/q so nothing is ever parsed through floating point.
Reports come in a human-readable text form and a JSON form with canonical
polynomial strings; both are byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .apolar import (
    HomIdeal,
    dual_basis,
    dual_dimensions,
    shift_factor_ideal,
    support_pair_ideal,
)
from .errors import (
    DegreeCapReached,
    GkzError,
    NonGenericWeight,
    PoleAtOrigin,
    SpecError,
)
from .exponents import (
    default_check_window,
    default_window,
    fake_exponents,
    lattice_window,
    negative_support,
    pole_free_criterion,
    select_perturbation_basis,
    support_analysis,
)
from .logseries import (
    apply_binomial,
    apply_euler,
    binomial_interior_residual,
    frobenius_solutions,
    is_log_free,
)
from .pairs import (
    embedded_pairs,
    facet_volume,
    is_unimodular,
    parameter_in_core,
    standard_pairs,
    top_pairs,
    triangulation,
)
from .poly import pert_ring, weight_order
from .toric import ConfigMatrix, initial_data, toric_ideal

HEADER = "gkz-problem v1"
COMMANDS = (
    "toric",
    "initial",
    "pairs",
    "triangulation",
    "exponents",
    "solve",
    "verify",
)


# ---------------------------------------------------------------------------
# problem files


@dataclass
class ProblemSpec:
    matrix: tuple
    weight: tuple
    beta_terms: tuple  # per entry: (constant, ((symbol, coeff), ...))
    params: dict
    window: int | None = None
    check_window: int | None = None
    dual_cap: int | None = None
    beta_line: int = 0

    def beta(self, overrides=None):
        values = dict(self.params)
        if overrides:
            values.update(overrides)
        out = []
        for const, syms in self.beta_terms:
            total = const
            for name, coeff in syms:
                if name not in values:
                    raise SpecError(
                        f"parameter '{name}' has no value; set it in the file "
                        f"or pass --param {name}=p/q",
                        self.beta_line,
                    )
                total += coeff * values[name]
            out.append(total)
        return tuple(out)


def _parse_rational(tok, line, col):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"expected a rational p/q, got '{tok}'", line, col)


def _parse_beta_entry(tok, line, col):
    """constant plus symbol terms: 1/2, c, -c, 2*c, c-1/2, -3/2+2*c ..."""
    const = Fraction(0)
    syms = []
    i = 0
    start = 0
    pieces = []
    sign = 1
    if tok and tok[0] in "+-":
        sign = -1 if tok[0] == "-" else 1
        i = start = 1
    while i <= len(tok):
        if i == len(tok) or tok[i] in "+-":
            if i == start:
                raise SpecError(f"malformed expression '{tok}'", line, col)
            pieces.append((sign, tok[start:i]))
            if i < len(tok):
                sign = -1 if tok[i] == "-" else 1
            start = i + 1
        i += 1
    for sign, piece in pieces:
        if "*" in piece:
            coeff_s, _, name = piece.partition("*")
            coeff = _parse_rational(coeff_s, line, col)
            if not name.isidentifier():
                raise SpecError(f"bad parameter name '{name}'", line, col)
            syms.append((name, sign * coeff))
        elif piece.isidentifier():
            syms.append((piece, Fraction(sign)))
        else:
            const += sign * _parse_rational(piece, line, col)
    return const, tuple(syms)


def parse_problem(text):
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise SpecError(f"first line must be '{HEADER}'", 1, 1)
    matrix = None
    weight = None
    beta_terms = None
    beta_line = 0
    params = {}
    options = {}
    i = 1
    while i < len(lines):
        lineno = i + 1
        raw = lines[i]
        line = raw.strip()
        i += 1
        if not line or line.startswith("#"):
            continue
        if line == "matrix:":
            rows = []
            while i < len(lines):
                lineno = i + 1
                row_line = lines[i].strip()
                i += 1
                if row_line == "end":
                    break
                if not row_line or row_line.startswith("#"):
                    continue
                row = []
                for col, tok in enumerate(row_line.split(), start=1):
                    try:
                        row.append(int(tok))
                    except ValueError:
                        raise SpecError(
                            f"matrix entries must be integers, got '{tok}'",
                            lineno,
                            col,
                        )
                rows.append(tuple(row))
            else:
                raise SpecError("matrix block not closed with 'end'", lineno)
            if not rows:
                raise SpecError("empty matrix block", lineno)
            if len({len(r) for r in rows}) != 1:
                raise SpecError("matrix rows have unequal lengths", lineno)
            matrix = tuple(rows)
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise SpecError(f"expected 'key: value', got '{line}'", lineno)
        key = key.strip()
        rest = rest.strip()
        if key == "weight":
            weight = tuple(
                _parse_rational(tok, lineno, c + 1)
                for c, tok in enumerate(rest.split())
            )
        elif key == "beta":
            beta_terms = tuple(
                _parse_beta_entry(tok, lineno, c + 1)
                for c, tok in enumerate(rest.split())
            )
            beta_line = lineno
        elif key == "param":
            name, sep2, val = rest.partition("=")
            name = name.strip()
            if not sep2 or not name.isidentifier():
                raise SpecError("expected 'param: name = p/q'", lineno)
            params[name] = _parse_rational(val.strip(), lineno, 1)
        elif key in ("window", "check_window", "dual_cap"):
            try:
                options[key] = int(rest)
            except ValueError:
                raise SpecError(f"{key} must be an integer", lineno)
        else:
            raise SpecError(f"unknown key '{key}'", lineno)
    if matrix is None:
        raise SpecError("missing matrix block", len(lines))
    if weight is None:
        raise SpecError("missing 'weight:' line", len(lines))
    if beta_terms is None:
        raise SpecError("missing 'beta:' line", len(lines))
    n = len(matrix[0])
    if len(weight) != n:
        raise SpecError(f"weight has {len(weight)} entries, matrix has {n} columns")
    if len(beta_terms) != len(matrix):
        raise SpecError(
            f"beta has {len(beta_terms)} entries, matrix has {len(matrix)} rows"
        )
    return ProblemSpec(
        matrix,
        weight,
        beta_terms,
        params,
        options.get("window"),
        options.get("check_window"),
        options.get("dual_cap"),
        beta_line,
    )


# ---------------------------------------------------------------------------
# pipeline


@dataclass
class Pipeline:
    """Everything the commands need, computed lazily in dependency order."""

    spec: ProblemSpec
    overrides: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict)

    def config(self):
        if "config" not in self._cache:
            self._cache["config"] = ConfigMatrix.from_rows(self.spec.matrix)
        return self._cache["config"]

    def beta(self):
        return self.spec.beta(self.overrides.get("params"))

    def toric(self):
        if "toric" not in self._cache:
            self._cache["toric"] = toric_ideal(self.config())
        return self._cache["toric"]

    def initial(self):
        if "initial" not in self._cache:
            self._cache["initial"] = initial_data(self.config(), self.spec.weight)
        return self._cache["initial"]

    def pairs(self):
        if "pairs" not in self._cache:
            ini, _ = self.initial()
            self._cache["pairs"] = standard_pairs(ini)
        return self._cache["pairs"]

    def triangulation(self):
        if "tri" not in self._cache:
            self._cache["tri"] = triangulation(self.pairs(), self.config())
        return self._cache["tri"]

    def exponents(self):
        if "exps" not in self._cache:
            self._cache["exps"] = fake_exponents(
                self.config(), self.beta(), self.pairs()
            )
        return self._cache["exps"]

    def g_vectors(self):
        _, bins = self.initial()
        return [b.vector for b in bins]

    def windows(self):
        g = self.g_vectors()
        window = self.overrides.get("window") or self.spec.window or default_window(g)
        check = (
            self.overrides.get("check_window")
            or self.spec.check_window
            or max(default_check_window(g), window)
        )
        if check < window:
            check = window
        return window, check

    def dual_cap(self):
        cap = self.overrides.get("dual_cap")
        if cap is None:
            cap = self.spec.dual_cap
        if cap is not None:
            return cap
        tri = self.triangulation()
        config = self.config()
        vols = [facet_volume(config, f) for f in tri.facets]
        return max(sum(vols), 1)


def _rat(x):
    return str(Fraction(x))


def _fmt_exponent_vector(v):
    return [str(x) for x in v]


def _fmt_monomial(m, prefix="d"):
    parts = [
        f"{prefix}{j + 1}" + (f"^{e}" if e > 1 else "")
        for j, e in enumerate(m)
        if e
    ]
    return "*".join(parts) if parts else "1"


def _fmt_power_product(exponents):
    parts = []
    for j, e in enumerate(exponents):
        e = Fraction(e)
        if not e:
            continue
        if e == 1:
            parts.append(f"x{j + 1}")
        elif e.denominator == 1 and e > 0:
            parts.append(f"x{j + 1}^{e}")
        else:
            parts.append(f"x{j + 1}^({e})")
    return "*".join(parts) if parts else "1"


def _indices(s):
    return [j + 1 for j in sorted(s)]


def cmd_toric(pipe):
    gb = pipe.toric()
    return {
        "command": "toric",
        "variables": pipe.config().n,
        "generators": [g.render(gb.order) for g in gb.generators],
    }


def cmd_initial(pipe):
    ini, bins = pipe.initial()
    order = weight_order(pipe.spec.weight)
    return {
        "command": "initial",
        "weight": [_rat(x) for x in pipe.spec.weight],
        "initial_generators": [_fmt_monomial(m) for m in ini.generators],
        "binomials": [
            {
                "polynomial": b.poly(pipe.toric().ring).render(order),
                "vector": list(b.vector),
            }
            for b in bins
        ],
    }


def cmd_pairs(pipe):
    pairs = pipe.pairs()
    tops = set(top_pairs(pairs))
    return {
        "command": "pairs",
        "count": len(pairs),
        "top_count": len(tops),
        "embedded_count": len(embedded_pairs(pairs)),
        "pairs": [
            {
                "pattern": p.pattern(),
                "offset": list(p.offset),
                "free": _indices(p.free),
                "top": p in tops,
            }
            for p in pairs
        ],
    }


def cmd_triangulation(pipe):
    tri = pipe.triangulation()
    config = pipe.config()
    unimod = is_unimodular(tri, config)
    return {
        "command": "triangulation",
        "faces": [[j + 1 for j in f] for f in tri.faces],
        "facets": [[j + 1 for j in f] for f in tri.facets],
        "common_indices": _indices(tri.common),
        "core_indices": _indices(tri.core),
        "facet_volumes": [facet_volume(config, f) for f in tri.facets],
        "unimodular": unimod,
        "beta": [_rat(b) for b in pipe.beta()],
        "beta_in_core": parameter_in_core(pipe.beta(), tri, config),
    }


def cmd_exponents(pipe):
    tri = pipe.triangulation()
    return {
        "command": "exponents",
        "beta": [_rat(b) for b in pipe.beta()],
        "exponents": [
            {
                "v": _fmt_exponent_vector(fe.v),
                "multiplicity": fe.multiplicity,
                "negative_support": _indices(negative_support(fe.v)),
                "criterion": pole_free_criterion(fe, tri),
                "pairs": [p.pattern() for p in fe.supporting],
            }
            for fe in pipe.exponents()
        ],
    }


def _solve_exponent(pipe, fe, basis, window, check, cap):
    tri = pipe.triangulation()
    gvecs = pipe.g_vectors()
    crit = pole_free_criterion(fe, tri)
    analysis = support_analysis(
        fe.v, basis, gvecs, pipe.spec.weight, window, check, crit
    )
    pb = shift_factor_ideal(basis, analysis.new_neg_sets)
    info = {
        "v": _fmt_exponent_vector(fe.v),
        "multiplicity": fe.multiplicity,
        "negative_support": _indices(analysis.base_negs),
        "criterion": crit,
        "common_negs": _indices(analysis.common),
        "common_negs_windowed": _indices(analysis.common_windowed),
        "lattice_points": len(analysis.series_lattice),
    }
    if crit:
        ideal = pb
        clearing_indices = frozenset()
        info["path"] = "criterion"
        info["hypothesis_verified"] = True
        info["clearing"] = "1"
    else:
        ideal, clearing_poly = support_pair_ideal(analysis, basis)
        clearing_indices = analysis.base_negs - analysis.common
        hypothesis = ideal.equals(
            HomIdeal(ideal.ring, [clearing_poly * g for g in pb.generators])
        )
        info["path"] = "general"
        info["hypothesis_verified"] = hypothesis
        info["clearing"] = clearing_poly.render()
    duals = dual_basis(ideal, cap)
    solutions, skipped = frobenius_solutions(
        fe.v,
        basis,
        analysis.series_lattice,
        duals,
        clearing_indices=clearing_indices,
        skip_poles=not crit,
    )
    info["dual_dimensions"] = list(dual_dimensions(duals))
    info["duals"] = [{"degree": d.degree, "operator": d.render()} for d in duals]
    info["skipped_shifts"] = [list(u) for u in skipped]
    info["solutions"] = [
        {
            "operator": d.render(),
            "terms": [
                {
                    "shift": list(u),
                    "exponent": _fmt_power_product(
                        tuple(Fraction(a) + b for a, b in zip(fe.v, u))
                    ),
                    "coefficient": p.render(),
                }
                for u, p in sorted(sol.terms.items())
                if not p.is_zero()
            ],
        }
        for d, sol in zip(duals, solutions)
    ]
    return info, analysis, duals, solutions


def cmd_solve(pipe):
    window, check = pipe.windows()
    cap = pipe.dual_cap()
    basis = select_perturbation_basis(
        pipe.g_vectors(), pipe.config(), pipe.spec.weight
    )
    report = {
        "command": "solve",
        "beta": [_rat(b) for b in pipe.beta()],
        "window": window,
        "check_window": check,
        "dual_cap": cap,
        "basis": {
            "vectors": [list(v) for v in basis.vectors],
            "fallback": basis.fallback,
            "perturbation_forms": [
                basis.row_form(j).to_poly(pert_ring(basis.h)).render()
                for j in range(basis.n)
            ],
        },
        "exponents": [],
    }
    for fe in pipe.exponents():
        info, _, _, _ = _solve_exponent(pipe, fe, basis, window, check, cap)
        report["exponents"].append(info)
    return report


def cmd_verify(pipe, reference=None):
    window, check = pipe.windows()
    cap = pipe.dual_cap()
    config = pipe.config()
    beta = pipe.beta()
    gvecs = pipe.g_vectors()
    basis = select_perturbation_basis(gvecs, config, pipe.spec.weight)
    win_points = lattice_window(basis, window)
    all_pass = True
    exponents = []
    for fe in pipe.exponents():
        info, analysis, duals, solutions = _solve_exponent(
            pipe, fe, basis, window, check, cap
        )
        checks = {
            "euler_annihilation": True,
            "toric_interior_annihilation": True,
            "first_solution_log_free": True,
            "count_equals_dual_dimension": len(solutions) == len(duals),
        }
        for sol in solutions:
            for row, b in zip(config.rows, beta):
                if not apply_euler(sol, row, b).is_zero():
                    checks["euler_annihilation"] = False
            for g in gvecs:
                if binomial_interior_residual(sol, g, win_points):
                    checks["toric_interior_annihilation"] = False
        if solutions and not is_log_free(solutions[0]):
            checks["first_solution_log_free"] = False
        passed = all(checks.values())
        all_pass = all_pass and passed
        exponents.append(
            {
                "v": info["v"],
                "path": info["path"],
                "hypothesis_verified": info["hypothesis_verified"],
                "solutions": len(solutions),
                "checks": checks,
                "passed": passed,
            }
        )
    report = {
        "command": "verify",
        "window": window,
        "all_passed": all_pass,
        "exponents": exponents,
    }
    if reference is not None:
        solve_now = cmd_solve(pipe)
        report["solve_output_matches"] = reference == solve_now
        report["all_passed"] = report["all_passed"] and report["solve_output_matches"]
    return report


# ---------------------------------------------------------------------------
# rendering


def render_text(report, out):
    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            out.write(f"{pad}{key}:\n")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{pad}{key}:\n")
            for item in value:
                out.write(f"{pad}  -\n")
                for k, v in item.items():
                    emit(k, v, indent + 2)
        elif isinstance(value, list):
            out.write(f"{pad}{key}: {_fmt_list(value)}\n")
        else:
            out.write(f"{pad}{key}: {value}\n")

    def _fmt_list(xs):
        return "[" + ", ".join(_fmt_scalar(x) for x in xs) + "]"

    def _fmt_scalar(x):
        if isinstance(x, list):
            return _fmt_list(x)
        return str(x)

    for key, value in report.items():
        emit(key, value)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="gkzf",
        description=(
            "Exact bases of logarithmic series solutions of A-hypergeometric "
            "systems by Frobenius's method"
        ),
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("spec_file")
    parser.add_argument("--window", type=int, default=None)
    parser.add_argument("--check-window", type=int, default=None)
    parser.add_argument("--dual-cap", type=int, default=None)
    parser.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=P/Q",
        help="instantiate a symbolic parameter (repeatable)",
    )
    parser.add_argument(
        "--format", choices=("text", "json-like"), default="text"
    )
    parser.add_argument(
        "--solutions",
        default=None,
        help="verify only: previously saved JSON solve output to re-ingest",
    )
    args = parser.parse_args(argv)

    try:
        with open(args.spec_file, encoding="utf-8") as fh:
            spec = parse_problem(fh.read())
        overrides = {}
        params = {}
        for item in args.param:
            name, sep, val = item.partition("=")
            if not sep:
                raise SpecError(f"--param expects NAME=P/Q, got '{item}'")
            try:
                params[name.strip()] = Fraction(val.strip())
            except (ValueError, ZeroDivisionError):
                raise SpecError(f"--param value '{val}' is not a rational")
        if params:
            overrides["params"] = params
        if args.window is not None:
            overrides["window"] = args.window
        if args.check_window is not None:
            overrides["check_window"] = args.check_window
        if args.dual_cap is not None:
            overrides["dual_cap"] = args.dual_cap
        pipe = Pipeline(spec, overrides)
        if args.command == "toric":
            report = cmd_toric(pipe)
        elif args.command == "initial":
            report = cmd_initial(pipe)
        elif args.command == "pairs":
            report = cmd_pairs(pipe)
        elif args.command == "triangulation":
            report = cmd_triangulation(pipe)
        elif args.command == "exponents":
            report = cmd_exponents(pipe)
        elif args.command == "solve":
            report = cmd_solve(pipe)
        else:
            reference = None
            if args.solutions:
                with open(args.solutions, encoding="utf-8") as fh:
                    reference = json.load(fh)
            report = cmd_verify(pipe, reference)
    except NonGenericWeight as e:
        print(f"error: non-generic weight: {e}", file=sys.stderr)
        return 2
    except PoleAtOrigin as e:
        print(f"error: pole at the origin: {e}", file=sys.stderr)
        return 3
    except DegreeCapReached as e:
        print(f"error: degree cap reached: {e}", file=sys.stderr)
        return 4
    except (GkzError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    if args.format == "json-like":
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        render_text(report, sys.stdout)
    if args.command == "verify" and not report["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
