"""Command line front end: ``infdef <verb> [options]``.

Exit status 0 on success, 1 on a domain error (structured error printed),
2 on a usage error.  ``--json`` switches to JSON output; rationals are
always printed as ``p/q`` strings.
"""

import argparse
import json
import sys

from .artin import (
    FiniteKAlgebra,
    algebra_from_quotient,
    factor_small_extension,
    fibered_product,
    morphism_from_images,
    residue_map,
)
from .exceptions import InfdefError
from .field import field_from_string
from .hyperdef import (
    DeformationOverA,
    glue_deformations,
    ks_class,
    lift_deformation,
    miniversal_family,
    mu_generators,
    specialize_family,
    tjurina,
)
from .poly import parse_poly
from .projcoh import (
    chi_normal_p3,
    coh_dim,
    curve_moduli_dim,
    delta_surjective,
    hypersurface_report,
)


class UsageError(Exception):
    pass


def _split_names(text):
    if text is None:
        return ()
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    if len(set(names)) != len(names):
        raise UsageError(f"duplicate variable names in {text!r}")
    return names


def _split_polys(text, variables, field):
    if not text:
        return []
    return [parse_poly(s, variables, field) for s in text.split(",") if s.strip()]


def _field(args):
    return field_from_string(args.field)


def _vars(args):
    names = _split_names(args.vars)
    if not names:
        raise UsageError("--vars is required")
    return names


def _algebra(prefix, args, field):
    """Algebra ``k[<prefix>-vars]/(<prefix>-ideal)``; ``k`` when no variables are given."""
    names = _split_names(getattr(args, f"{prefix}_vars"))
    if not names:
        return FiniteKAlgebra.ground(field)
    gens = _split_polys(getattr(args, f"{prefix}_ideal"), names, field)
    return algebra_from_quotient(names, gens, field)


def _element(algebra, text, field):
    if algebra.presentation is None:
        return [field(text)]
    names = algebra.presentation[0]
    return algebra.coordinates_of_polynomial(parse_poly(text, names, field))


def _map(source, target, images_text, field):
    """Morphism given by images of the source's variables (default: all to zero)."""
    if source.presentation is None:
        return morphism_from_images(source, target, [])
    names = source.presentation[0]
    if images_text is None:
        if target.dimension == 1:
            return residue_map(source)
        texts = ["0"] * len(names)
    else:
        texts = [s for s in images_text.split(",")]
    if len(texts) != len(names):
        raise UsageError(f"expected {len(names)} images, got {len(texts)}")
    return morphism_from_images(source, target, [_element(target, t, field) for t in texts])


def _fmt(field, values):
    return [field.format(v) for v in values]


# -- verb handlers: each returns (json_payload, text) -------------------------


def cmd_tjurina(args):
    field, names = _field(args), _vars(args)
    td = tjurina(parse_poly(args.polynomial, names, field))
    labels = td.basis_labels()
    return (
        {"tjurina": td.tjurina_number, "basis": labels},
        f"tjurina: {td.tjurina_number}\nbasis: {', '.join(labels) if labels else '(empty)'}",
    )


def cmd_ks_class(args):
    field, names = _field(args), _vars(args)
    td = tjurina(parse_poly(args.polynomial, names, field))
    coords = ks_class(td, parse_poly(args.g, names, field))
    return (
        {"basis": td.basis_labels(), "coordinates": _fmt(field, coords)},
        f"basis: {', '.join(td.basis_labels())}\ncoordinates: {', '.join(_fmt(field, coords))}",
    )


def cmd_miniversal(args):
    field, names = _field(args), _vars(args)
    mf = miniversal_family(tjurina(parse_poly(args.polynomial, names, field)))
    payload = mf.to_dict()
    text = f"family: {payload['family']}\nparameters: {', '.join(mf.parameters)}\n"
    text += "kodaira_spencer:\n" + "\n".join("  " + " ".join(row) for row in payload["kodaira_spencer"])
    return payload, text.rstrip()


def _deformation_payload(d):
    payload = d.to_dict()
    text = f"deformation: {d.format()}\nbase: {list(d.base.labels)} (order {d.base.order})"
    return payload, text


def cmd_specialize(args):
    field, names = _field(args), _vars(args)
    mf = miniversal_family(tjurina(parse_poly(args.polynomial, names, field)))
    base = _algebra("base", args, field)
    texts = [s for s in args.assign.split(",")] if args.assign else []
    values = [_element(base, t, field) for t in texts]
    return _deformation_payload(specialize_family(mf, base, values))


def cmd_lift(args):
    field, names = _field(args), _vars(args)
    base = _algebra("base", args, field)
    ext_source = _algebra("ext", args, field)
    if ext_source.presentation is None:
        raise UsageError("--ext-vars/--ext-ideal must present the larger algebra")
    ext = _map(ext_source, base, args.images or ",".join(ext_source.presentation[0]), field)
    d = _deformation_in(args.deformation, names, base, field)
    return _deformation_payload(lift_deformation(d, ext))


def _deformation_in(text, names, base, field):
    if base.presentation is None:
        return DeformationOverA(base, [parse_poly(text, names, field)])
    allvars = tuple(names) + tuple(base.presentation[0])
    return DeformationOverA.from_polynomial(parse_poly(text, allvars, field), names, base)


def cmd_glue(args):
    field, names = _field(args), _vars(args)
    a1, a2 = _algebra("left", args, field), _algebra("right", args, field)
    a = _algebra("base", args, field)
    p = _map(a1, a, args.left_images, field)
    q = _map(a2, a, args.right_images, field)
    d1 = _deformation_in(args.left, names, a1, field)
    d2 = _deformation_in(args.right, names, a2, field)
    glued, _ = glue_deformations(d1, d2, p, q)
    return _deformation_payload(glued)


def cmd_mu(args):
    field, names = _field(args), _vars(args)
    gens = [parse_poly(s, names, field) for s in args.generators]
    mu = mu_generators(gens, names)
    return {"mu": mu}, str(mu)


def _algebra_payload(alg):
    return alg.to_dict(), f"dimension: {alg.dimension}\norder: {alg.order}\nbasis: {', '.join(alg.labels)}"


def cmd_algebra(args):
    field, names = _field(args), _vars(args)
    gens = [parse_poly(s, names, field) for s in args.generators]
    return _algebra_payload(algebra_from_quotient(names, gens, field))


def cmd_fprod(args):
    field = _field(args)
    a1, a2 = _algebra("left", args, field), _algebra("right", args, field)
    a = _algebra("base", args, field)
    fp = fibered_product(_map(a1, a, args.left_images, field), _map(a2, a, args.right_images, field))
    payload = {
        "algebra": fp.algebra.to_dict(),
        "first_projection": fp.first.to_dict(),
        "second_projection": fp.second.to_dict(),
    }
    return payload, _algebra_payload(fp.algebra)[1]


def cmd_factor_ext(args):
    field, names = _field(args), _vars(args)
    gens = [parse_poly(s, names, field) for s in args.generators]
    source = algebra_from_quotient(names, gens, field)
    target = _algebra("target", args, field)
    phi = _map(source, target, args.images, field)
    chain = factor_small_extension(phi)
    steps = [
        {"source_basis": list(s.source.labels), "target_basis": list(s.target.labels),
         "matrix": s.to_dict()["matrix"]}
        for s in chain
    ]
    text = f"length: {len(chain)}\n" + "\n".join(
        f"  {s.source.dimension} -> {s.target.dimension}: {list(s.target.labels)}" for s in chain
    )
    return {"length": len(chain), "steps": steps}, text.rstrip()


def cmd_cohomology(args):
    methods = ["formula", "cech"] if args.method == "both" else [args.method]
    out = {m: coh_dim(args.n, args.d, args.q, method=m) for m in methods}
    if len(out) == 1:
        value = next(iter(out.values()))
        return {"n": args.n, "d": args.d, "q": args.q, "dimension": value}, str(value)
    return {"n": args.n, "d": args.d, "q": args.q, **out}, "\n".join(f"{k}: {v}" for k, v in out.items())


def cmd_delta(args):
    methods = ["closed_form", "linear_algebra"] if args.method == "both" else [args.method]
    out = {m: delta_surjective(args.n, args.d, m) for m in methods}
    return out, "\n".join(f"{k}: {str(v).lower()}" for k, v in out.items())


def cmd_hypersurface_report(args):
    rep = hypersurface_report(args.n, args.d)
    payload = rep.to_dict()
    text = "\n".join(f"{k}: {v}" for k, v in payload.items() if k != "citations")
    return payload, text


def cmd_curve_moduli(args):
    value = curve_moduli_dim(args.genus)
    return {"genus": args.genus, "dimension": value}, str(value)


def cmd_chi_normal(args):
    res = chi_normal_p3(args.d, args.genus)
    payload = {"d": args.d, "genus": args.genus, **res.to_dict()}
    return payload, f"{res.total} = {res.four_chi_o1} - {res.chi_o} - {res.chi_t}"


# -- parser -------------------------------------------------------------------


def _method_choices(*choices):
    return list(choices) + (["both"] if len(choices) == 2 else [])


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--field", default="Q", help="Q (default) or Fp:<p>")

    ring = argparse.ArgumentParser(add_help=False, parents=[common])
    ring.add_argument("--vars", required=True, help="comma-separated variable list")

    def algebra_flags(p, prefix, what):
        p.add_argument(f"--{prefix}-vars", help=f"variables presenting {what}")
        p.add_argument(f"--{prefix}-ideal", help=f"comma-separated ideal generators of {what}")

    parser = argparse.ArgumentParser(prog="infdef", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    p = sub.add_parser("tjurina", parents=[ring], help="Tjurina number and basis")
    p.add_argument("polynomial")
    p.set_defaults(handler=cmd_tjurina)

    p = sub.add_parser("ks-class", parents=[ring], help="Kodaira–Spencer class of f + eps*g")
    p.add_argument("polynomial")
    p.add_argument("g")
    p.set_defaults(handler=cmd_ks_class)

    p = sub.add_parser("miniversal", parents=[ring], help="miniversal family")
    p.add_argument("polynomial")
    p.set_defaults(handler=cmd_miniversal)

    p = sub.add_parser("specialize", parents=[ring], help="pull back the miniversal family")
    p.add_argument("polynomial")
    algebra_flags(p, "base", "the target algebra")
    p.add_argument("--assign", help="comma-separated parameter values (polynomials in base vars)")
    p.set_defaults(handler=cmd_specialize)

    p = sub.add_parser("lift", parents=[ring], help="lift along a small extension")
    p.add_argument("deformation", help="polynomial in --vars and --base-vars")
    algebra_flags(p, "base", "the current base A")
    algebra_flags(p, "ext", "the extension A'")
    p.add_argument("--images", help="images of the ext variables in A (default: same names)")
    p.set_defaults(handler=cmd_lift)

    p = sub.add_parser("glue", parents=[ring], help="glue two deformations over a fibered product")
    p.add_argument("left")
    p.add_argument("right")
    for prefix, what in (("left", "A'"), ("right", "A''"), ("base", "A (default k)")):
        algebra_flags(p, prefix, what)
    p.add_argument("--left-images", help="images of the left variables in A")
    p.add_argument("--right-images", help="images of the right variables in A")
    p.set_defaults(handler=cmd_glue)

    p = sub.add_parser("mu", parents=[ring], help="minimal number of generators of an ideal")
    p.add_argument("generators", nargs="*")
    p.set_defaults(handler=cmd_mu)

    p = sub.add_parser("algebra", parents=[ring], help="structure constants of k[x]/I")
    p.add_argument("generators", nargs="+")
    p.set_defaults(handler=cmd_algebra)

    p = sub.add_parser("fprod", parents=[common], help="fibered product A' x_A A''")
    for prefix, what in (("left", "A'"), ("right", "A''"), ("base", "A (default k)")):
        algebra_flags(p, prefix, what)
    p.add_argument("--left-images", help="images of the left variables in A")
    p.add_argument("--right-images", help="images of the right variables in A")
    p.set_defaults(handler=cmd_fprod)

    p = sub.add_parser("factor-ext", parents=[ring], help="factor a surjection into tiny extensions")
    p.add_argument("generators", nargs="+", help="ideal of the source algebra")
    algebra_flags(p, "target", "the target (default k)")
    p.add_argument("--images", help="images of the source variables in the target")
    p.set_defaults(handler=cmd_factor_ext)

    p = sub.add_parser("cohomology", parents=[common], help="dim H^q(P^n, O(d))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=_method_choices("formula", "cech"), default="formula")
    p.set_defaults(handler=cmd_cohomology)

    p = sub.add_parser("delta", parents=[common], help="surjectivity of delta for hypersurfaces")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument(
        "--method", choices=_method_choices("closed_form", "linear_algebra"), default="closed_form"
    )
    p.set_defaults(handler=cmd_delta)

    p = sub.add_parser("hypersurface-report", parents=[common], help="Hilbert-scheme diagnostics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_hypersurface_report)

    p = sub.add_parser("curve-moduli", parents=[common], help="moduli dimension of genus-g curves")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(handler=cmd_curve_moduli)

    p = sub.add_parser("chi-normal", parents=[common], help="chi of the normal sheaf of a space curve")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(handler=cmd_chi_normal)

    return parser


def run(argv, stdout=None, stderr=None):
    """Execute one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload, text = args.handler(args)
    except UsageError as exc:
        print(f"infdef: usage error: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        kind = exc.kind if isinstance(exc, InfdefError) else "invalid-input"
        error = {"error": {"kind": kind, "message": str(exc)}}
        if args.json:
            print(json.dumps(error, indent=2), file=stdout)
        else:
            print(f"error [{kind}]: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
