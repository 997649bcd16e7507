"""Command-line driver.

Subcommands::

    conductor-workbench examples <name>
    conductor-workbench conductor <file> --torus <name> --method <m|all>
    conductor-workbench complex <file> --name <n>
    conductor-workbench artin <file> --lattice <l> --filtration <f>

with a global ``--precision N`` override.  Exit codes: 0 success, 1 mismatch
or validation error, 2 precision exhausted.  Output is JSON with sorted keys,
so identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .complexes import BoundedComplex, complex_chi, complex_gamma, cohomology_lengths
from .conductor import (ConductorReport, ResolutionSpec, InducedTorusSpec,
                        additivity_defect, conductor_from_resolution,
                        conductor_induced_artin, conductor_induced_discriminant,
                        conductor_induced_liecoker, frac_str, gamma_defect)
from .errors import PrecisionError, ValidationError, WorkbenchError
from .galois import (GLattice, artin_conductor, additivity_from_formula,
                     isogeny_invariance_check, torus_conductor_formula)
from .generators import random_generically_exact_complex
from .linalg import DVRMatrix
from .series import BaseDVR
from .smith import smith_normal_form
from .workbench import Workbench, load_workbench_file
from . import worked_examples as wx

EXAMPLE_NAMES = ("lemma-4.3", "lemma-4.4", "corollary-4.5", "artin-crosscheck", "gamma-chi")


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2))
    sys.stdout.write("\n")


class _Check:
    """Accumulates expected-vs-computed lines for a canned example run."""

    def __init__(self):
        self.rows = []

    def add(self, label, expected, computed):
        exp = frac_str(expected) if isinstance(expected, (int, Fraction)) else expected
        comp = frac_str(computed) if isinstance(computed, (int, Fraction)) else computed
        self.rows.append({"label": label, "expected": exp,
                          "computed": comp, "pass": exp == comp})

    def report(self, name):
        return {
            "example": name,
            "checks": self.rows,
            "pass": all(r["pass"] for r in self.rows),
        }


def _example_quadratic_family(precision):
    """The quadratic family: c(T_i) = i by discriminant and by resolution."""
    base = wx.standard_base(precision)
    trivial = None
    checks = _Check()
    for i in (1, 2, 3, 4):
        Ki = wx.quadratic_family_extension(base, i)
        rep = conductor_induced_discriminant(Ki)
        checks.add(f"c(Res K{i}) discriminant", Fraction(i), rep.value)
        if trivial is None:
            from .algebras import trivial_extension
            trivial = trivial_extension(base)
        res = ResolutionSpec(inner=InducedTorusSpec(trivial, "Gm"),
                             outer=InducedTorusSpec(Ki),
                             name=f"T{i}",
                             exactness_note=("assumed: the sequence of models of "
                                             "0 -> Gm -> Res Gm -> T -> 0 is exact"))
        checks.add(f"c(T{i}) resolution", Fraction(i), conductor_from_resolution(res).value)
    return checks.report("lemma-4.3")


def _example_compositum(precision):
    """The quartic compositum: cokernel length 12 with factors {2,4,6}, c = 6."""
    data = wx.quartic_counterexample(precision)
    checks = _Check()
    lie = conductor_induced_liecoker(data.L)
    checks.add("cokernel length over L", "12", str(lie.witnesses["cokernel_length"]))
    checks.add("composition factor lengths", "[2, 4, 6]",
               str(lie.witnesses["composition_factor_lengths"]))
    checks.add("c(Res L) lie-coker", Fraction(6), lie.value)
    checks.add("c(Res L) discriminant", Fraction(6),
               conductor_induced_discriminant(data.L).value)
    return checks.report("lemma-4.4")


def _example_counterexample(precision):
    """Direct path vs formula path on the quartic data, in one run."""
    data = wx.quartic_counterexample(precision)
    checks = _Check()
    cF = conductor_induced_discriminant(data.F).value
    checks.add("c(Res F)", Fraction(2), cF)
    cT = conductor_from_resolution(data.resolution).value
    checks.add("c(T) = c(Res L) - c(Res F)", Fraction(4), cT)
    c1 = conductor_induced_discriminant(data.K1).value
    c2 = conductor_induced_discriminant(data.K2).value
    checks.add("direct additivity defect c(T)-c(T2)-c(T1)", Fraction(1),
               additivity_defect(c2, cT, c1))
    checks.add("direct conductor of T", Fraction(4), cT)
    checks.add("direct conductor of isogenous T1 x T2", Fraction(3), c1 + c2)
    filt = data.filtrations["wild-two-steps"]
    checks.add("formula additivity defect", Fraction(0),
               additivity_from_formula(data.sub_lattice, data.character_lattice,
                                       data.quotient_lattice, filt,
                                       data.injection, data.surjection))
    checks.add("formula isogeny invariance", "True",
               str(isogeny_invariance_check(
                   data.character_lattice,
                   data.sub_lattice.direct_sum(data.quotient_lattice),
                   data.product_embedding, filt)))
    return checks.report("corollary-4.5")


def _example_artin_crosscheck(precision):
    """Filtration formula vs discriminant vs Lie cokernel on generated extensions."""
    checks = _Check()
    pool = wx.generated_extension_pool(min(precision, 24))
    for E in pool[:4] + pool[8:12] + pool[-4:]:
        a = conductor_induced_artin(E).value
        d = conductor_induced_discriminant(E).value
        l = conductor_induced_liecoker(E).value
        checks.add(f"{E.name}: artin vs disc", a, d)
        checks.add(f"{E.name}: artin vs lie-coker", a, l)
    from .galois import FiniteGroup, RamificationData
    C2 = FiniteGroup.cyclic(2)
    reg = GLattice.regular(C2)
    wildf = RamificationData(C2, [(0, 1), (0, 1), (0,)])
    tamef = RamificationData(C2, [(0, 1), (0,)])
    checks.add("a(Z[C2]) wild two-step", Fraction(2), artin_conductor(reg, wildf))
    checks.add("c formula wild", Fraction(1), torus_conductor_formula(reg, wildf))
    checks.add("a(Z[C2]) tame", Fraction(1), artin_conductor(reg, tamef))
    checks.add("c formula tame", Fraction(1, 2), torus_conductor_formula(reg, tamef))
    return checks.report("artin-crosscheck")


def _example_gamma_chi(precision):
    """chi = gamma on the shipped complexes, a seeded random batch, and over O_L."""
    checks = _Check()
    base = wx.standard_base(precision)

    def m(ring, rows):
        ents = tuple(x for row in rows for x in row)
        return DVRMatrix(ring, len(rows), len(rows[0]) if rows else 0, ents)

    p = base.pi()
    two = BoundedComplex(base, (2, 2), (m(base, [[p, base.one()], [base.zero(), p]]),))
    checks.add("two-term chi", Fraction(2), Fraction(complex_chi(two)))
    checks.add("two-term gamma", Fraction(2), Fraction(complex_gamma(two)))
    three = BoundedComplex(base, (1, 2, 1),
                           (m(base, [[p], [base.zero()]]), m(base, [[base.zero(), p]])))
    checks.add("three-term lengths", "(0, 1, 1)", str(cohomology_lengths(three)))
    checks.add("three-term chi", Fraction(0), Fraction(complex_chi(three)))
    checks.add("three-term gamma", Fraction(0), Fraction(complex_gamma(three)))
    split = BoundedComplex(base, (1, 2, 1),
                           (m(base, [[base.one()], [base.zero()]]),
                            m(base, [[base.zero(), base.one()]])))
    checks.add("split exact chi = gamma", Fraction(0),
               Fraction(complex_chi(split) - complex_gamma(split)))

    data = wx.quartic_counterexample(precision)
    L = data.L
    zL, oL, piL = L.zero(), L.one(), L.algebra.from_base(base.pi())
    CL = BoundedComplex(L, (1, 2, 1), (m(L, [[piL], [zL]]), m(L, [[zL, oL]])))
    CK = BoundedComplex(base, (1, 2, 1),
                        (m(base, [[base.one()], [base.zero()]]),
                         m(base, [[base.zero(), base.one()]])))
    checks.add("gamma over O_L (1/e normalized defect)", Fraction(1),
               gamma_defect(CK, CL, L.e))

    rng = random.Random(20240)
    for k in range(10):
        C = random_generically_exact_complex(base, rng)
        checks.add(f"random complex {k}: chi - gamma", Fraction(0),
                   Fraction(complex_chi(C) - complex_gamma(C)))
    return checks.report("gamma-chi")


_EXAMPLES = {
    "lemma-4.3": _example_quadratic_family,
    "lemma-4.4": _example_compositum,
    "corollary-4.5": _example_counterexample,
    "artin-crosscheck": _example_artin_crosscheck,
    "gamma-chi": _example_gamma_chi,
}


def cmd_examples(args) -> int:
    runner = _EXAMPLES.get(args.name)
    if runner is None:
        raise ValidationError(
            f"unknown example {args.name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
    report = runner(args.precision or 32)
    _emit(report)
    return 0 if report["pass"] else 1


def _conductor_methods(wb: Workbench, spec, method: str):
    results = []
    if isinstance(spec, ResolutionSpec):
        if method not in ("all", "resolution"):
            raise ValidationError(
                f"torus {spec.name!r} is a resolution; only the resolution method applies")
        results.append(conductor_from_resolution(spec))
        return results
    E = spec.extension
    if method in ("discriminant", "all"):
        results.append(conductor_induced_discriminant(E))
    if method in ("lie-coker", "all"):
        results.append(conductor_induced_liecoker(E))
    if method == "artin-formula":
        results.append(conductor_induced_artin(E))
    elif method == "all" and E.f == 1:
        try:
            results.append(conductor_induced_artin(E))
        except (ValidationError, PrecisionError):
            pass  # not totally ramified Galois monogenic; formula does not apply
    if not results:
        raise ValidationError(f"method {method!r} does not apply to torus {spec.name!r}")
    return results


def cmd_conductor(args) -> int:
    wb = load_workbench_file(args.file, args.precision)
    if args.torus not in wb.tori:
        raise ValidationError(f"unknown torus {args.torus!r}", path="tori")
    spec = wb.tori[args.torus]
    results = _conductor_methods(wb, spec, args.method)
    values = {frac_str(r.value) for r in results}
    agree = len(values) == 1
    report = {
        "request": {"command": "conductor", "torus": args.torus,
                    "method": args.method, "precision": wb.base.precision},
        "results": [r.to_json() for r in results],
        "agreement": agree,
        "warnings": sorted({note for r in results for note in r.assumptions}),
    }
    _emit(report)
    return 0 if agree else 1


def cmd_complex(args) -> int:
    wb = load_workbench_file(args.file, args.precision)
    if args.name not in wb.complexes:
        raise ValidationError(f"unknown complex {args.name!r}", path="complexes")
    C = wb.complexes[args.name]
    lengths = cohomology_lengths(C)
    chi = complex_chi(C)
    gamma = complex_gamma(C)
    report = {
        "request": {"command": "complex", "name": args.name,
                    "precision": wb.base.precision},
        "cohomology_lengths": list(lengths),
        "chi": chi,
        "gamma": gamma,
        "chi_equals_gamma": chi == gamma,
    }
    _emit(report)
    return 0 if chi == gamma else 1


def cmd_artin(args) -> int:
    wb = load_workbench_file(args.file, args.precision)
    if args.lattice not in wb.lattices:
        raise ValidationError(f"unknown lattice {args.lattice!r}", path="galois.lattices")
    if args.filtration not in wb.filtrations:
        raise ValidationError(f"unknown filtration {args.filtration!r}",
                              path="galois.filtrations")
    L = wb.lattices[args.lattice]
    R = wb.filtrations[args.filtration]
    a = artin_conductor(L, R)
    report = {
        "request": {"command": "artin", "lattice": args.lattice,
                    "filtration": args.filtration, "precision": wb.base.precision},
        "artin_conductor": frac_str(a),
        "half": frac_str(a / 2),
    }
    _emit(report)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conductor-workbench",
                     description="Exact base-change-conductor computations")
    parser.add_argument("--precision", type=int, default=None,
                        help="override the working pi-adic precision")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("examples", help="run a named built-in example suite")
    p.add_argument("name", choices=EXAMPLE_NAMES)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("conductor", help="compute a base change conductor")
    p.add_argument("file")
    p.add_argument("--torus", required=True)
    p.add_argument("--method", default="all",
                   choices=("discriminant", "lie-coker", "artin-formula",
                            "resolution", "all"))
    p.set_defaults(func=cmd_conductor)

    p = sub.add_parser("complex", help="chi, gamma and cohomology lengths")
    p.add_argument("file")
    p.add_argument("--name", required=True)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("artin", help="Artin conductor of a lattice with filtration")
    p.add_argument("file")
    p.add_argument("--lattice", required=True)
    p.add_argument("--filtration", required=True)
    p.set_defaults(func=cmd_artin)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PrecisionError as exc:
        hint = f" (a precision of {exc.needed} may suffice)" if exc.needed else ""
        sys.stderr.write(f"precision exhausted: {exc}{hint}\n")
        return 2
    except WorkbenchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
