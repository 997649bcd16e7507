"""Base change conductors of induced tori, resolutions, and defect invariants.

The conductor of an induced torus is computed two independent ways: half the
valuation of the discriminant of the extension, and the normalized length of
the cokernel of the embeddings matrix (the Lie-lattice method).  Conductors of
non-induced tori are only derived through resolutions by induced tori, whose
exactness is an input assumption carried on the spec, or through the Artin
conductor formula (valid over perfect residue fields).

Normalization: c uses the 1/e prefactor throughout.  For totally ramified
splitting extensions this agrees with 1/[L:K]; where the two differ (residue
degree > 1) every computation here follows the 1/e convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import ExtensionData, discriminant_of_algebra, embeddings_matrix
from .complexes import BoundedComplex, complex_gamma
from .errors import PrecisionError, ValidationError
from .galois import GLattice, artin_conductor, ramification_filtration_from_extension
from .smith import INFINITE, smith_normal_form


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ConductorReport:
    """A conductor value with its method tag and intermediate witnesses."""

    value: Fraction
    method: str  # discriminant | lie-coker | artin-formula | resolution
    witnesses: dict = field(default_factory=dict)
    assumptions: tuple = ()

    def __post_init__(self):
        if self.value < 0:
            raise ValidationError("conductor values are nonnegative")

    def to_json(self) -> dict:
        return {
            "value": frac_str(self.value),
            "method": self.method,
            "witnesses": dict(self.witnesses),
            "assumptions": list(self.assumptions),
        }


@dataclass(frozen=True)
class InducedTorusSpec:
    """The torus Res_{L/K} G_m for a validated extension."""

    extension: ExtensionData
    name: str = ""


@dataclass(frozen=True)
class ResolutionSpec:
    """A resolution 0 -> Res_F -> Res_L -> T -> 0 by induced tori.

    ``exactness_note`` records why the induced sequence of models is exact;
    this is an assumption about the input, not something the package proves.
    The optional character-lattice witness only has its rank checked.
    """

    inner: InducedTorusSpec
    outer: InducedTorusSpec
    name: str = "T"
    exactness_note: str = "assumed: induced sequence of models is exact"
    witness_lattice: GLattice | None = None

    def __post_init__(self):
        if self.witness_lattice is not None:
            expected = self.outer.extension.rank - self.inner.extension.rank
            if self.witness_lattice.rank != expected:
                raise ValidationError(
                    f"witness lattice rank {self.witness_lattice.rank} does not match "
                    f"[outer:K] - [inner:K] = {expected}")


def conductor_induced_discriminant(E: ExtensionData) -> ConductorReport:
    """c(Res_{E/K} G_m) = (1/2) v_K(disc E)."""
    disc = discriminant_of_algebra(E.algebra)
    v = disc.valuation()
    if v is None:
        raise PrecisionError(
            f"discriminant of {E.name} vanishes at working precision "
            f"{E.base.precision}; increase it", needed=E.base.precision + 1)
    return ConductorReport(
        Fraction(v, 2), "discriminant",
        witnesses={"discriminant_valuation": v},
        assumptions=E.assumption_notes)


def conductor_induced_liecoker(E: ExtensionData, M: ExtensionData | None = None) -> ConductorReport:
    """c from the cokernel of O_E tensor O_M -> O_M^n, normalized by 1/e_{M/K}.

    M must split E (contain the images of all embeddings); by default M = E,
    which works whenever E is its own splitting ring.
    """
    M = E if M is None else M
    mat = embeddings_matrix(E, M)
    ed = smith_normal_form(mat)
    if ed.zero_block:
        if ed.zero_block_exact:
            raise ValidationError(
                f"{M.name} does not split {E.name}: embeddings matrix is singular")
        raise PrecisionError("cokernel length is ambiguous at working precision")
    length = ed.total()
    factors = sorted(v for v in ed.valuations if v)
    return ConductorReport(
        Fraction(length, M.e), "lie-coker",
        witnesses={
            "cokernel_length": length,
            "composition_factor_lengths": factors,
            "normalizing_e": M.e,
            "split_in": M.name,
        },
        assumptions=E.assumption_notes + (M.assumption_notes if M is not E else ()))


def conductor_induced_artin(E: ExtensionData) -> ConductorReport:
    """c via the conductor formula on the regular lattice of Gal(E/K).

    Only applies to totally ramified Galois monogenic extensions, where the
    classical lower-numbered filtration is defined; over imperfect residue
    fields with f > 1 this method must not be used (and refuses to run).
    """
    group, filtration = ramification_filtration_from_extension(E)
    a = artin_conductor(GLattice.regular(group), filtration)
    return ConductorReport(
        a / 2, "artin-formula",
        witnesses={
            "artin_conductor": frac_str(a),
            "filtration_sizes": [len(s) for s in filtration.chain],
        },
        assumptions=E.assumption_notes)


def conductor_from_resolution(spec: ResolutionSpec) -> ConductorReport:
    """c(T) = c(Res_outer) - c(Res_inner), both via the discriminant method."""
    outer = conductor_induced_discriminant(spec.outer.extension)
    inner = conductor_induced_discriminant(spec.inner.extension)
    value = outer.value - inner.value
    return ConductorReport(
        value, "resolution",
        witnesses={
            "outer": {"name": spec.outer.extension.name, "value": frac_str(outer.value)},
            "inner": {"name": spec.inner.extension.name, "value": frac_str(inner.value)},
        },
        assumptions=(spec.exactness_note,) + outer.assumptions + inner.assumptions)


def additivity_defect(c_sub, c_total, c_quotient) -> Fraction:
    """c(total) - c(sub) - c(quotient) for a sequence 0 -> sub -> total -> quotient -> 0."""
    return Fraction(c_total) - Fraction(c_sub) - Fraction(c_quotient)


def gamma_defect(CK: BoundedComplex, CL: BoundedComplex, e: int) -> Fraction:
    """(1/e) gamma(CL) - gamma(CK).

    When CK and CL are the Lie-lattice complexes of a sequence of models
    before and after base change, this equals the additivity defect of the
    conductors; the complexes are taken as input rather than derived.
    """
    if e < 1:
        raise ValidationError("normalization index e must be positive")
    return Fraction(complex_gamma(CL), e) - complex_gamma(CK)
