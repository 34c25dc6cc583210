"""Command-line front end.

Subcommands: check, nf, casimir, star, reduce, relations, verify, repcheck.
Exit codes: 0 on success, 1 when a verification fails, 2 on input errors.
Output is deterministic for identical inputs and options; --json switches to
a machine-readable report.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import liealg, orbit as orbitmod, tdo, uea
from .commpoly import CommPoly, MonomialOrder, normal_form
from .exprs import (
    ExprSyntaxError,
    UnknownIdentifierError,
    format_commpoly,
    format_orbit_element,
    format_uelement,
    parse_ast,
    parse_commutative,
    parse_noncommutative,
)
from .liealg import LieAlgebra, jacobi_check, load_algebra
from .orbit import (
    OrbitAlgebra,
    OrbitSpec,
    build_orbit_algebra,
    invariant_subalgebra_demo,
    reduce_mod_ideal,
    relations_table,
    so21_invariant_generators,
    verify_deformation,
    verify_so21_table,
)
from .scalar import GaussRat, HPoly

OK, VERIFY_FAILED, INPUT_ERROR = 0, 1, 2


# ---------------------------------------------------------------------------
# orbit presets
# ---------------------------------------------------------------------------

def _preset_orbit(name: str, numeric: bool) -> OrbitSpec:
    algebra = liealg.PRESETS[name]()
    inv = algebra.invariants
    if name == "sl2":
        if numeric:
            return OrbitSpec(algebra, inv, (GaussRat(1),), witness=(1, 0, 0))
        c0 = CommPoly.variable(0, 1)
        return OrbitSpec(algebra, inv, (c0,), central=("c0",), witness=(1, 0, 0))
    if name == "su2":
        if numeric:
            return OrbitSpec(algebra, inv, (GaussRat(-4),), witness=(0, 0, 1))
        c = -(CommPoly.variable(0, 1) ** 2)
        return OrbitSpec(algebra, inv, (c,), central=("a",), witness=(0, 0, 1))
    if name == "so21":
        if numeric:
            return OrbitSpec(algebra, inv, (HPoly((4, -1)),), witness=(1, 0, 0))
        a_sq = CommPoly.variable(0, 2) ** 2
        c1h = CommPoly(2, {(0, 1): HPoly.h(1, -1)})
        return OrbitSpec(algebra, inv, (a_sq + c1h,), central=("a", "c1"), witness=(1, 0, 0))
    raise KeyError(name)


def _preset_order(name: str, base: LieAlgebra) -> MonomialOrder | None:
    # the noncompact preset eliminates Ft^2 so the basis is {g^m et^n ft^(0|1)}
    if name == "so21":
        return MonomialOrder((2, 1, 0))
    return None


def _collect_central(exprs, labels):
    central = []
    for text in exprs:
        stack = [parse_ast(text)]
        while stack:
            node = stack.pop(0)
            if node[0] == "name":
                nm = node[1]
                if nm in labels or nm.startswith("x_"):
                    raise ValueError(
                        f"orbit constants may use only central symbols, not {nm!r}"
                    )
                if nm not in central:
                    central.append(nm)
            else:
                stack.extend(x for x in node[1:] if isinstance(x, tuple))
    return tuple(central)


def load_orbit(source, numeric: bool = False):
    """Orbit from a preset name or a JSON file.

    File schema: {algebra: <path|preset|dict>, constants: [{i, c: [expr, ...]}],
    order: {precedence: [...]}, map: "standard"|"symmetric"}; each entry of
    ``c`` is the coefficient of the matching power of h and may mention
    central symbols.
    """
    if isinstance(source, str) and source in liealg.PRESETS:
        spec = _preset_orbit(source, numeric)
        order = _preset_order(source, spec.algebra)
        return build_orbit_algebra(spec, order), "standard"
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            source = json.load(fh)
    if not isinstance(source, dict):
        raise TypeError("expected an orbit preset name, file path, or dict")

    algebra = load_algebra(source["algebra"])
    entries = sorted(source["constants"], key=lambda e: e.get("i", 1))
    if len(entries) != len(algebra.invariants):
        raise ValueError("need one constants entry per declared invariant")
    all_exprs = [c for e in entries for c in e["c"]]
    central = _collect_central(all_exprs, algebra.labels)

    constants = []
    for e in entries:
        total = CommPoly.zero(len(central))
        for k, text in enumerate(e["c"]):
            coeff = parse_commutative(text, (), central)
            total = total + coeff.scale(HPoly.h(k))
        constants.append(total)

    witness = source.get("regular_witness")
    spec = OrbitSpec(
        algebra,
        algebra.invariants,
        tuple(constants),
        central=central,
        witness=[GaussRat.parse(str(x)) for x in witness] if witness else None,
    )
    order = None
    if source.get("order", {}).get("precedence"):
        prec = [algebra.label_index(x) if isinstance(x, str) else x
                for x in source["order"]["precedence"]]
        order = MonomialOrder(tuple(prec))
    return build_orbit_algebra(spec, order), source.get("map", "standard")


# ---------------------------------------------------------------------------
# session plumbing
# ---------------------------------------------------------------------------

class Session:
    def __init__(self, args):
        self.args = args
        self.orbit = None
        self.map = args.map
        if args.orbit:
            self.orbit, default_map = load_orbit(args.orbit, numeric=args.numeric)
            if args.map is None:
                self.map = default_map
            if args.order:
                prec = tuple(
                    self.orbit.base.label_index(x.strip())
                    for x in args.order.split(",")
                )
                self.orbit = build_orbit_algebra(self.orbit.spec, MonomialOrder(prec))
        if args.algebra:
            self.algebra = load_algebra(args.algebra)
        elif self.orbit is not None:
            self.algebra = self.orbit.base
        else:
            self.algebra = None
        if self.map is None:
            self.map = "standard"

    def need_algebra(self) -> LieAlgebra:
        if self.algebra is None:
            raise ValueError("this command needs --algebra or --orbit")
        return self.algebra

    def need_orbit(self) -> OrbitAlgebra:
        if self.orbit is None:
            raise ValueError("this command needs --orbit")
        return self.orbit


def _emit(args, lines, payload, code):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_check(session, args):
    algebra = session.need_algebra()
    lines, payload = [], {"algebra": algebra.name}
    ok = True

    bad = jacobi_check(algebra)
    payload["jacobi_violations"] = len(bad)
    lines.append(f"jacobi: {'ok' if not bad else f'{len(bad)} violation(s)'}")
    ok = ok and not bad

    inv_ok = []
    from .commpoly import is_invariant

    for k, p in enumerate(algebra.invariants):
        good = is_invariant(p, algebra)
        inv_ok.append(good)
        lines.append(f"invariant {k + 1}: {'ok' if good else 'NOT invariant'}")
    payload["invariants_ok"] = all(inv_ok) if inv_ok else None
    ok = ok and all(inv_ok)

    if algebra.regular_witness is not None:
        regular = liealg.is_regular(algebra, algebra.regular_witness)
        payload["witness_regular"] = regular
        lines.append(f"witness point regular: {'yes' if regular else 'NO'}")
        ok = ok and regular

    payload["ok"] = ok
    lines.append("check: ok" if ok else "check: FAILED")
    return _emit(args, lines, payload, OK if ok else VERIFY_FAILED)


def cmd_nf(session, args):
    algebra = session.orbit.algebra if session.orbit else session.need_algebra()
    u = parse_noncommutative(args.expr, algebra)
    text = format_uelement(u, algebra.labels)
    return _emit(args, [text], {"normal_form": text}, OK)


def cmd_casimir(session, args):
    algebra = session.need_algebra()
    lines, items = [], []
    ok = True
    for k, p in enumerate(algebra.invariants):
        sym = uea.symmetrize(p, algebra)
        central = uea.is_central(sym, algebra)
        ok = ok and central
        text = format_uelement(sym, algebra.labels)
        lines.append(f"Sym(p_{k + 1}) = {text}")
        lines.append(f"  central: {'yes' if central else 'NO'}")
        items.append({"element": text, "central": central})
    if not algebra.invariants:
        lines.append("no invariants declared")
    return _emit(args, lines, {"casimirs": items, "ok": ok}, OK if ok else VERIFY_FAILED)


def cmd_star(session, args):
    orb = session.need_orbit()
    labels = orb.base.labels
    f = parse_commutative(args.f, labels, orb.central)
    g = parse_commutative(args.g, labels, orb.central)
    result = orbitmod.star(f, g, orb, session.map)
    text = format_orbit_element(result)
    return _emit(args, [text], {"star": text}, OK)


def cmd_reduce(session, args):
    orb = session.need_orbit()
    u = parse_noncommutative(args.expr, orb.algebra)
    result = reduce_mod_ideal(u, orb)
    text = format_orbit_element(result)
    return _emit(args, [text], {"reduced": text}, OK)


def _expression_text(row):
    parts = []
    for q, name in row.expression:
        from .exprs import _coeff_prefix

        sign, ctext = _coeff_prefix(q)
        term = f"{ctext}*{name}" if ctext else name
        if not parts:
            parts.append(term if sign > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if sign > 0 else '-'} {term}")
    text = " ".join(parts) if parts else ""
    if not row.remainder.is_zero:
        rem = format_orbit_element(row.remainder)
        text = f"{text} + [{rem}]" if text else f"[{rem}]"
    return text or "0"


def cmd_relations(session, args):
    if args.preset != "so21":
        raise ValueError("relation tables are defined for the so21 preset")
    if session.orbit is not None and session.orbit.base.name == "so21":
        orb = session.orbit
    else:
        orb, _ = load_orbit("so21", numeric=args.numeric)

    report = invariant_subalgebra_demo(orb, liealg.sheet_swap())
    lines = []
    for name, fixed in report.generator_invariance:
        lines.append(f"automorphism fixes {name}: {'yes' if fixed else 'NO'}")
    for label, good in report.classical_relations:
        lines.append(f"classical {label}: {'ok' if good else 'FAILED'}")
    lines.append("")
    for row in report.table:
        lines.append(f"{row.name} = {_expression_text(row)}")
    lines.append("")
    for v in report.quantum_relations:
        if v.holds:
            lines.append(f"verify {v.label}: ok")
        else:
            lines.append(f"verify {v.label}: MISMATCH"
                         + (" (expected for the tabulated form)" if not v.must_hold else ""))
            lines.append(f"  transcript: {v.transcript}")
    ok = report.ok
    lines.append("relations: ok" if ok else "relations: FAILED")
    payload = {
        "generators_fixed": dict(report.generator_invariance),
        "classical": dict(report.classical_relations),
        "table": {row.name: _expression_text(row) for row in report.table},
        "verified": {v.label: v.holds for v in report.quantum_relations},
        "ok": ok,
    }
    return _emit(args, lines, payload, OK if ok else VERIFY_FAILED)


def cmd_verify(session, args):
    if session.orbit is not None:
        orb = session.orbit
    else:
        raise ValueError("verify needs --orbit")
    degree = args.sub_max_degree if args.sub_max_degree is not None else args.max_degree
    report = verify_deformation(orb, degree, map=session.map)
    lines = [report.summary()]
    for v in report.violations[:20]:
        lines.append(f"  {v}")
    payload = {
        "max_degree": report.max_degree,
        "pairs": report.pairs_checked,
        "triples": report.triples_checked,
        "violations": [str(v) for v in report.violations],
        "ok": report.ok,
    }
    return _emit(args, lines, payload, OK if report.ok else VERIFY_FAILED)


def cmd_repcheck(session, args):
    hbar = GaussRat.parse(args.sub_hbar if args.sub_hbar is not None else args.hbar)
    rows = tdo.representation_table(args.max_m, hbar)
    lines = [f"{'m':>3} {'dim':>4} {'casimir':>10} {'rescaled':>12} ok"]
    ok = True
    for m, dim, scalar, rescaled, good in rows:
        ok = ok and good
        lines.append(f"{m:>3} {dim:>4} {str(scalar):>10} {str(rescaled):>12} {'ok' if good else 'FAIL'}")
    # joint faithfulness is only claimed for degrees the included blocks span
    degree = min(3, args.max_m)
    words, rank = tdo.aggregate_injectivity_rank(degree, args.max_m)
    injective = words == rank
    ok = ok and injective
    lines.append(
        f"joint representation rank (degree <= {degree}) {rank}/{words}: "
        f"{'ok' if injective else 'FAIL'}"
    )
    payload = {
        "hbar": str(hbar),
        "rows": [
            {"m": m, "dim": dim, "casimir": str(s), "rescaled": str(r), "ok": good}
            for m, dim, s, r, good in rows
        ],
        "injective": injective,
        "ok": ok,
    }
    return _emit(args, lines, payload, OK if ok else VERIFY_FAILED)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbistar",
        description="Exact star products on regular coadjoint orbits.",
    )
    parser.add_argument("--algebra", help="preset name (sl2, su2, so21) or JSON file")
    parser.add_argument("--orbit", help="orbit preset name or JSON file")
    parser.add_argument("--order", help="comma-separated generator precedence")
    parser.add_argument("--map", choices=["standard", "symmetric"], default=None)
    parser.add_argument("--max-degree", type=int, default=3)
    parser.add_argument("--hbar", default="1")
    parser.add_argument("--numeric", action="store_true",
                        help="use numeric constants for preset orbits")
    parser.add_argument("--json", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", help="Jacobi, invariance and regularity checks")
    p = sub.add_parser("nf", help="PBW normal form of a noncommutative expression")
    p.add_argument("expr")
    sub.add_parser("casimir", help="symmetrized invariants and centrality")
    p = sub.add_parser("star", help="star product of two polynomials")
    p.add_argument("f")
    p.add_argument("g")
    p = sub.add_parser("reduce", help="reduce an expression modulo the orbit ideal")
    p.add_argument("expr")
    p = sub.add_parser("relations", help="invariant-subalgebra relation table")
    p.add_argument("preset", nargs="?", default="so21")
    p = sub.add_parser("verify", help="deformation-axiom suite")
    p.add_argument("--max-degree", dest="sub_max_degree", type=int, default=None)
    p = sub.add_parser("repcheck", help="differential-operator representation table")
    p.add_argument("--max-m", type=int, default=8)
    p.add_argument("--hbar", dest="sub_hbar", default=None)

    return parser


_HANDLERS = {
    "check": cmd_check,
    "nf": cmd_nf,
    "casimir": cmd_casimir,
    "star": cmd_star,
    "reduce": cmd_reduce,
    "relations": cmd_relations,
    "verify": cmd_verify,
    "repcheck": cmd_repcheck,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        session = Session(args)
        code = _HANDLERS[args.command](session, args)
    except (ExprSyntaxError, UnknownIdentifierError) as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR
    except (OSError, KeyError, TypeError, ValueError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
