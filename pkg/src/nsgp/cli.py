"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 numerator not stable, 4 enumeration
cap exceeded, 1 anything else. Errors are reported on stderr as a single
``error[<code>]: <message>`` line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import complex as cx
from .dissonance import dissonance_report
from .errors import NsgpError, SingleGenerator, ValidationError
from .factorization import DEFAULT_CAP, InvariantId, factorizations, generator_gap_gcd, invariant_table
from .gluing import GluingSpec, augmented_gluing_formula, glue, harmonic_gluing_violations, hilbert_gluing_check
from .hilbert import (
    NumeratorForm,
    NumeratorReport,
    default_trunc,
    numerator_apery,
    numerator_chi,
    numerator_chi_f,
    numerator_chihat_f,
    numerator_second_difference,
    one_minus_t_form,
    twogen_closed_forms,
)
from .semigroup import NumericalSemigroup

INVARIANTS = [i.value for i in InvariantId]
FORMS = [f.value for f in NumeratorForm]


@dataclass
class CliConfig:
    generators: list[int]
    trunc: int | None
    window: int | None
    invariant: InvariantId | None
    form: NumeratorForm | None
    output: str
    enumeration_cap: int


def _gens(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _config(args: argparse.Namespace) -> CliConfig:
    trunc = args.trunc
    if trunc is None and os.environ.get("NSGP_TRUNC"):
        trunc = int(os.environ["NSGP_TRUNC"])
    inv = getattr(args, "invariant", None)
    form = getattr(args, "form", None)
    return CliConfig(
        generators=getattr(args, "gens", []),
        trunc=trunc,
        window=args.window,
        invariant=InvariantId(inv) if inv else None,
        form=NumeratorForm(form) if form else None,
        output="json" if args.json else "text",
        enumeration_cap=args.cap,
    )


def _emit(cfg: CliConfig, payload: dict, text: str) -> None:
    print(json.dumps(payload) if cfg.output == "json" else text)


def _emit_numerator(cfg: CliConfig, rep: NumeratorReport) -> None:
    _emit(cfg, rep.to_json(), str(rep.poly))
    if cfg.output == "text":
        denom = "".join(f"(1 - t^{e})" for e in rep.denominator)
        state = "stable" if rep.stable else "NOT stable"
        print(f"# {rep.form.value} numerator over {denom}, certified to {rep.certified_to}, {state}", file=sys.stderr)


def cmd_info(cfg: CliConfig) -> int:
    s = NumericalSemigroup(cfg.generators)
    ap = sorted(s.apery(s.multiplicity))
    try:
        gap_gcd: int | None = generator_gap_gcd(s)
    except SingleGenerator:
        gap_gcd = None
    payload = {
        "generators": list(s.generators),
        "minimal": s.is_minimal,
        "minimal_generators": list(s.minimal_generators),
        "frobenius": s.frobenius,
        "apery": ap,
        "generator_gap_gcd": gap_gcd,
    }
    text = "\n".join(
        [
            f"generators: {','.join(map(str, s.generators))}",
            f"minimal: {'yes' if s.is_minimal else 'no (minimal: ' + ','.join(map(str, s.minimal_generators)) + ')'}",
            f"frobenius: {s.frobenius}",
            f"apery({s.multiplicity}): {{{', '.join(map(str, ap))}}}",
            f"generator_gap_gcd: {gap_gcd if gap_gcd is not None else 'n/a'}",
        ]
    )
    _emit(cfg, payload, text)
    return 0


def cmd_hilbert(cfg: CliConfig, p: int | None) -> int:
    s = NumericalSemigroup(cfg.generators)
    form = cfg.form or NumeratorForm.CHI
    if form is NumeratorForm.APERY:
        rep = numerator_apery(s, p or s.multiplicity)
    elif form is NumeratorForm.CHI:
        rep = numerator_chi(s, cfg.trunc, cfg.window)
    elif form is NumeratorForm.ONE_MINUS_T:
        rep = one_minus_t_form(s)
    else:
        raise ValidationError(f"form {form.value!r} applies to augmented series; use 'augmented'")
    _emit_numerator(cfg, rep)
    return 0


def cmd_augmented(cfg: CliConfig, p: int | None) -> int:
    s = NumericalSemigroup(cfg.generators)
    f = cfg.invariant or InvariantId.MAX_LEN
    form = cfg.form or NumeratorForm.CHIHAT
    if form is NumeratorForm.CHI:
        rep = numerator_chi_f(s, f, cfg.trunc, cfg.window, cfg.enumeration_cap)
    elif form is NumeratorForm.CHIHAT:
        rep = numerator_chihat_f(s, f, cfg.trunc, cfg.window, cfg.enumeration_cap)
    elif form is NumeratorForm.SECOND_DIFFERENCE:
        rep = numerator_second_difference(s, f, p or s.multiplicity, cfg.trunc, cfg.window, cfg.enumeration_cap)
    elif form is NumeratorForm.CLOSED_2GEN:
        rep = twogen_closed_forms(s, f)
    else:
        raise ValidationError(f"form {form.value!r} applies to the plain Hilbert series; use 'hilbert'")
    _emit_numerator(cfg, rep)
    return 0


def cmd_dissonance(cfg: CliConfig) -> int:
    s = NumericalSemigroup(cfg.generators)
    f = cfg.invariant or InvariantId.MAX_LEN
    rep = dissonance_report(s, f, cfg.trunc, cfg.window)
    print(json.dumps(rep.to_json()))
    return 0


def cmd_complex(cfg: CliConfig, n: int) -> int:
    s = NumericalSemigroup(cfg.generators)
    delta = cx.divisor_complex(s, n)
    faces = delta.face_generators()
    payload: dict = {"n": n, "faces": [list(f) for f in faces], "chi": cx.euler_char(delta)}
    lines = [
        "faces: " + (", ".join("{" + ", ".join(map(str, f)) + "}" for f in faces) or "none"),
        f"chi: {payload['chi']}",
    ]
    if cfg.invariant is not None:
        table = invariant_table(s, cfg.invariant, max(n, 0), cfg.enumeration_cap)
        payload["invariant"] = cfg.invariant.value
        payload["chi_f"] = cx.weighted_euler(delta, table)
        payload["chihat_f"] = cx.augmented_euler(delta, table)
        lines += [f"chi_{cfg.invariant.value}: {payload['chi_f']}", f"chihat_{cfg.invariant.value}: {payload['chihat_f']}"]
    _emit(cfg, payload, "\n".join(lines))
    return 0


def cmd_factor(cfg: CliConfig, n: int) -> int:
    s = NumericalSemigroup(cfg.generators)
    zs = factorizations(s, n, cfg.enumeration_cap)
    payload = {"n": n, "factorizations": [list(a) for a in zs], "lengths": sorted({sum(a) for a in zs})}
    _emit(cfg, payload, "\n".join(f"({', '.join(map(str, a))})  length {sum(a)}" for a in zs) or "none")
    return 0


def cmd_glue(cfg: CliConfig, s1: list[int], s2: list[int], d1: int, d2: int) -> int:
    spec = GluingSpec(NumericalSemigroup(s1), NumericalSemigroup(s2), d1, d2)
    s, validity = glue(spec)
    trunc = cfg.trunc if cfg.trunc is not None else default_trunc(s)
    payload: dict = {
        "generators": list(s.generators),
        "validity": validity.to_json(),
        "valid": validity.valid,
        "hilbert_identity": hilbert_gluing_check(spec, trunc).to_json(),
    }
    lines = [f"generators: {','.join(map(str, s.generators))}"]
    lines += [f"{k}: {v}" for k, v in validity.to_json().items()]
    h = payload["hilbert_identity"]
    lines.append(f"hilbert identity to {trunc}: {'pass' if h['passed'] else 'FAIL at ' + str(h['first_mismatch'])}")
    invariants = [cfg.invariant] if cfg.invariant else [InvariantId.MAX_LEN, InvariantId.MIN_LEN]
    for f in invariants:
        bad = harmonic_gluing_violations(spec, f, trunc)
        _, check = augmented_gluing_formula(spec, f, trunc)
        payload[f"{f.value}_harmonic"] = {"harmonic": not bad, "violations": len(bad), "first_violation": bad[0] if bad else None}
        payload[f"{f.value}_formula"] = check.to_json()
        lines.append(f"{f.value}-harmonic gluing to {trunc}: {'yes' if not bad else f'no ({len(bad)} violations, first {bad[0]})'}")
        lines.append(f"{f.value} gluing formula: {'pass' if check else 'FAIL at ' + str(check.first_mismatch)}")
    _emit(cfg, payload, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, help="truncation degree N (default from the semigroup, or NSGP_TRUNC)")
    common.add_argument("--window", type=int, help="stability window W (default n_1*n_k)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="factorization enumeration cap")

    parser = argparse.ArgumentParser(prog="nsgp", description="Augmented Hilbert series of numerical semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="generators, Frobenius number, Apery set")
    p.add_argument("gens", type=_gens)

    p = sub.add_parser("hilbert", parents=[common], help="numerators of the Hilbert series")
    p.add_argument("gens", type=_gens)
    p.add_argument("--form", choices=FORMS, default="chi")
    p.add_argument("--p", type=int, help="element for the Apery form (default n_1)")

    p = sub.add_parser("augmented", parents=[common], help="numerators of an augmented Hilbert series")
    p.add_argument("gens", type=_gens)
    p.add_argument("--invariant", choices=INVARIANTS, default="max")
    p.add_argument("--form", choices=FORMS, default="chihat")
    p.add_argument("--p", type=int, help="shift for the second-difference form (default n_1)")

    p = sub.add_parser("dissonance", parents=[common], help="dissonance point of max/min length")
    p.add_argument("gens", type=_gens)
    p.add_argument("--invariant", choices=INVARIANTS, default="max")

    p = sub.add_parser("complex", parents=[common], help="squarefree divisor complex of an element")
    p.add_argument("gens", type=_gens)
    p.add_argument("n", type=int)
    p.add_argument("--invariant", choices=INVARIANTS)

    p = sub.add_parser("factor", parents=[common], help="list the factorizations of an element")
    p.add_argument("gens", type=_gens)
    p.add_argument("n", type=int)

    p = sub.add_parser("glue", parents=[common], help="glue d1*S1 + d2*S2 and check the gluing identities")
    p.add_argument("s1", type=_gens)
    p.add_argument("s2", type=_gens)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--invariant", choices=["max", "min"])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "dissonance" and cfg.invariant not in (InvariantId.MAX_LEN, InvariantId.MIN_LEN):
            raise ValidationError(
                f"dissonance points are defined for max/min length only, not {cfg.invariant.value!r}"
            )
        if args.command == "info":
            return cmd_info(cfg)
        if args.command == "hilbert":
            return cmd_hilbert(cfg, args.p)
        if args.command == "augmented":
            return cmd_augmented(cfg, args.p)
        if args.command == "dissonance":
            return cmd_dissonance(cfg)
        if args.command == "complex":
            return cmd_complex(cfg, args.n)
        if args.command == "factor":
            return cmd_factor(cfg, args.n)
        return cmd_glue(cfg, args.s1, args.s2, args.d1, args.d2)
    except NsgpError as e:
        print(f"error[{e.code}]: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        print(f"error[invalid]: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
