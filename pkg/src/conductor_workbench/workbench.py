"""JSON input format: deserialize rings, extensions, tori, complexes, lattices.

Ring elements are written as expression strings in the uniformizer ``pi``, the
coefficient variable (when the field has one) and the extension generators in
scope, using ``+ - * ^`` (or ``**``), integer literals and parentheses.  The
structural shape of an input file is validated against the JSON schema shipped
at ``schema/workbench-input.schema.json``; everything semantic (monicity, root
checks, e*f, rank consistency) is validated by the constructors.
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field

from .algebras import ExtensionData, RingMap, monogenic_algebra, tower_algebra
from .complexes import BoundedComplex
from .conductor import InducedTorusSpec, ResolutionSpec
from .errors import ValidationError
from .fields import PrimeField, RationalFunctionField
from .galois import FiniteGroup, GLattice, RamificationData
from .linalg import DVRMatrix
from .series import BaseDVR


def parse_expression(text: str, env: dict, path: str = "expression"):
    """Evaluate an element expression in the given name environment.

    Supported syntax: names from ``env``, nonnegative integer literals,
    ``+ - * ^ **`` and parentheses.  ``^`` is accepted as exponentiation.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValidationError(f"cannot parse {text!r}: {exc.msg}", path=path) from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int):
                return node.value
            raise ValidationError(f"only integer literals allowed, got {node.value!r}",
                                  path=path)
        if isinstance(node, ast.Name):
            try:
                return env[node.id]
            except KeyError:
                known = ", ".join(sorted(env))
                raise ValidationError(
                    f"unknown symbol {node.id!r} (in scope: {known})", path=path) from None
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base_v = ev(node.left)
                exp = ev(node.right)
                if not isinstance(exp, int) or exp < 0:
                    raise ValidationError("exponents must be nonnegative integers",
                                          path=path)
                return base_v ** exp
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            raise ValidationError("only + - * ^ are allowed", path=path)
        raise ValidationError(f"unsupported syntax {ast.dump(node)[:40]}", path=path)

    return ev(tree)


def _base_env(base: BaseDVR):
    env = {base.symbol: base.pi()}
    if isinstance(base.field, RationalFunctionField):
        env[base.field.var] = base.from_field(base.field.t)
    return env


def _algebra_env(algebra, base: BaseDVR):
    env = {base.symbol: algebra.from_base(base.pi())}
    if isinstance(base.field, RationalFunctionField):
        env[base.field.var] = algebra.from_base(base.from_field(base.field.t))
    for k, (name, _) in enumerate(algebra.generators):
        env[name] = algebra.generator_element(k)
    return env


@dataclass
class Workbench:
    base: BaseDVR
    extensions: dict = field(default_factory=dict)
    tori: dict = field(default_factory=dict)
    complexes: dict = field(default_factory=dict)
    groups: dict = field(default_factory=dict)
    lattices: dict = field(default_factory=dict)
    filtrations: dict = field(default_factory=dict)

    def ring_handle(self, name: str):
        if name == "base":
            return self.base
        if name in self.extensions:
            return self.extensions[name]
        raise ValidationError(f"unknown ring {name!r}", path="complexes.ring")


def _build_base(spec: dict, precision_override=None) -> BaseDVR:
    p = spec["characteristic"]
    kind = spec.get("coefficient_field", "prime")
    precision = precision_override or spec.get("precision", 32)
    if kind == "prime":
        fieldobj = PrimeField(p)
    elif kind == "rational-function":
        fieldobj = RationalFunctionField(p, spec.get("variable", "t"))
    else:
        raise ValidationError(f"unknown coefficient field kind {kind!r}", path="base")
    return BaseDVR(fieldobj, precision)


def _build_extension(name, spec, wb: Workbench, building, raw):
    if name in wb.extensions:
        return wb.extensions[name]
    if name in building:
        raise ValidationError(f"extension {name!r} is part of a reference cycle",
                              path=f"extensions.{name}.over")
    building.add(name)
    path = f"extensions.{name}"
    over = spec.get("over")
    base = wb.base
    if over is None:
        parent_ext = None
        coeff_env = _base_env(base)
    else:
        if over not in raw:
            raise ValidationError(f"unknown parent extension {over!r}", path=f"{path}.over")
        parent_ext = _build_extension(over, raw[over], wb, building, raw)
        coeff_env = _algebra_env(parent_ext.algebra, base)

    gen = spec["generator"]
    coeffs = [parse_expression(c, coeff_env, f"{path}.polynomial[{i}]") if isinstance(c, str)
              else c for i, c in enumerate(spec["polynomial"])]
    if parent_ext is None:
        coeffs = [base.from_int(c) if isinstance(c, int) else c for c in coeffs]
        algebra = monogenic_algebra(base, coeffs, gen)
    else:
        algebra = tower_algebra(parent_ext.algebra,
                                [parent_ext.algebra.coerce(c) for c in coeffs], gen)

    env = _algebra_env(algebra, base)
    uniformizer = algebra.coerce(
        parse_expression(spec["uniformizer"], env, f"{path}.uniformizer"))
    embeddings = []
    for k, images in enumerate(spec["embeddings"]):
        if len(images) != len(algebra.generators):
            raise ValidationError(
                f"embedding {k} must list one image per generator "
                f"({len(algebra.generators)} expected)", path=f"{path}.embeddings[{k}]")
        parsed = [algebra.coerce(parse_expression(im, env, f"{path}.embeddings[{k}][{g}]"))
                  for g, im in enumerate(images)]
        embeddings.append(RingMap(algebra, algebra, parsed))
    notes = tuple(spec.get("notes", ()))
    if spec.get("assume_maximal", True):
        notes = notes + ("assumed: the presented order is the full valuation ring",)
    ext = ExtensionData(algebra, uniformizer, spec["e"], spec["f"], embeddings,
                        name=name, tower_base=parent_ext,
                        assume_maximal=spec.get("assume_maximal", True),
                        assumption_notes=notes)
    building.discard(name)
    wb.extensions[name] = ext
    return ext


def _build_complex(name, spec, wb: Workbench) -> BoundedComplex:
    path = f"complexes.{name}"
    ring = wb.ring_handle(spec.get("ring", "base"))
    if isinstance(ring, BaseDVR):
        env = _base_env(ring)

        def coerce(x):
            return ring.from_int(x) if isinstance(x, int) else x
    else:
        env = _algebra_env(ring.algebra, ring.base)

        def coerce(x):
            return ring.algebra.coerce(x)
    ranks = tuple(spec["ranks"])
    diffs = []
    for d, rows in enumerate(spec["differentials"]):
        want = (ranks[d + 1], ranks[d])
        if len(rows) != want[0] or any(len(r) != want[1] for r in rows):
            raise ValidationError(f"differential {d} must be {want[0]}x{want[1]}",
                                  path=f"{path}.differentials[{d}]")
        parsed = [[coerce(parse_expression(x, env, f"{path}.differentials[{d}]"))
                   for x in row] for row in rows]
        entries = tuple(x for row in parsed for x in row)
        diffs.append(DVRMatrix(ring, want[0], want[1], entries))
    return BoundedComplex(ring, ranks, tuple(diffs), spec.get("first_degree", 1))


def _build_torus(name, spec, wb: Workbench):
    path = f"tori.{name}"
    kind = spec["kind"]

    def ext(key):
        ref = spec[key]
        if ref not in wb.extensions:
            raise ValidationError(f"unknown extension {ref!r}", path=f"{path}.{key}")
        return wb.extensions[ref]

    if kind == "induced":
        return InducedTorusSpec(ext("extension"), name)
    if kind == "resolution":
        witness = None
        if "witness_lattice" in spec:
            ref = spec["witness_lattice"]
            if ref not in wb.lattices:
                raise ValidationError(f"unknown lattice {ref!r}",
                                      path=f"{path}.witness_lattice")
            witness = wb.lattices[ref]
        return ResolutionSpec(
            inner=InducedTorusSpec(ext("inner")),
            outer=InducedTorusSpec(ext("outer")),
            name=name,
            exactness_note=spec.get(
                "exactness_note", "assumed: induced sequence of models is exact"),
            witness_lattice=witness)
    raise ValidationError(f"unknown torus kind {kind!r}", path=f"{path}.kind")


def load_workbench(data: dict, precision_override=None) -> Workbench:
    """Build every object in an input document; raises ValidationError with a
    path to the offending field on bad input."""
    validate_against_schema(data)
    wb = Workbench(base=_build_base(data["base"], precision_override))
    raw_ext = data.get("extensions", {})
    building = set()
    for name in raw_ext:
        _build_extension(name, raw_ext[name], wb, building, raw_ext)
    for name, spec in data.get("galois", {}).get("groups", {}).items():
        wb.groups[name] = FiniteGroup(spec["table"], spec.get("element_names"))
    for name, spec in data.get("galois", {}).get("lattices", {}).items():
        group = wb.groups.get(spec["group"])
        if group is None:
            raise ValidationError(f"unknown group {spec['group']!r}",
                                  path=f"galois.lattices.{name}.group")
        mats = spec["matrices"]
        rank = len(mats[0]) if mats else 0
        wb.lattices[name] = GLattice(group, rank, mats)
    for name, spec in data.get("galois", {}).get("filtrations", {}).items():
        group = wb.groups.get(spec["group"])
        if group is None:
            raise ValidationError(f"unknown group {spec['group']!r}",
                                  path=f"galois.filtrations.{name}.group")
        wb.filtrations[name] = RamificationData(group, spec["chain"])
    for name, spec in data.get("tori", {}).items():
        wb.tori[name] = _build_torus(name, spec, wb)
    for name, spec in data.get("complexes", {}).items():
        wb.complexes[name] = _build_complex(name, spec, wb)
    return wb


def load_workbench_file(path: str, precision_override=None) -> Workbench:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}", path=path) from None
    return load_workbench(data, precision_override)


def validate_against_schema(data: dict):
    import jsonschema
    from importlib import resources

    schema_text = resources.files("conductor_workbench").joinpath(
        "schema/workbench-input.schema.json").read_text(encoding="utf-8")
    schema = json.loads(schema_text)
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = ".".join(str(p) for p in first.absolute_path) or "(document root)"
        raise ValidationError(first.message, path=where)
