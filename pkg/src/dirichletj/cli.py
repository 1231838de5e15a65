"""Command-line surface: tables, JSON emitters, and verification suites.

Every subcommand is deterministic: identical arguments produce
byte-identical JSON (wall time is reported only in text output).  The
``verify`` subcommand runs the acceptance sweeps; its exit code is 0
exactly when no case failed (findings do not fail a suite: they mark
reported-only checks, like the full-ideal Eisenstein congruence).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Optional

from . import bernoulli, characters, dedekind, eisenstein, homotopy
from .characters import DirichletCharacter, character_from_index, char_inv, enumerate_characters
from .cyclotomic import (
    count_irreducible_factors_mod_p,
    cyclotomic_poly,
    factorize,
    is_prime,
    padic_splitting,
    quotient_group,
    render_cyc,
)
from .homotopy import AbelianGroupExpr
from .padic import PAdicCharacterData, e2_page, quotient_oracle, quotient_oracle_2

SCHEMA = 1


@dataclass
class RunReport:
    """Aggregated result of one verification sweep."""

    suite: str
    params: dict
    run: int = 0
    passed: int = 0
    failed: int = 0
    findings: int = 0
    first_counterexample: Optional[dict] = None
    wall_time: float = 0.0
    _failures: list = dc_field(default_factory=list)

    def record(self, case_params: tuple, status: str, payload: Optional[dict] = None) -> None:
        self.run += 1
        if status == "pass":
            self.passed += 1
        elif status == "finding":
            self.findings += 1
        else:
            self.failed += 1
            self._failures.append((case_params, payload or {}))

    def finalize(self) -> "RunReport":
        assert self.passed + self.failed + self.findings == self.run
        if self._failures:
            self._failures.sort(key=lambda item: item[0])
            params, payload = self._failures[0]
            self.first_counterexample = {"case": list(params), **payload}
        return self

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "params": self.params,
            "run": self.run,
            "passed": self.passed,
            "failed": self.failed,
            "findings": self.findings,
            "first_counterexample": self.first_counterexample,
        }

    def text(self) -> str:
        status = "PASS" if self.failed == 0 else "FAIL"
        line = (
            f"{status} {self.suite}: {self.passed}/{self.run} passed, "
            f"{self.failed} failed, {self.findings} findings ({self.wall_time:.2f}s)"
        )
        if self.first_counterexample is not None:
            line += f"\n  first counterexample: {json.dumps(self.first_counterexample, sort_keys=True)}"
        return line


# ---------------------------------------------------------------------------
# Verification suites


def _primitive_characters(N: int) -> list[DirichletCharacter]:
    return [chi for chi in enumerate_characters(N) if characters.is_primitive(chi) and not chi.is_trivial()]


def suite_von_staudt(max_k: int = 30) -> RunReport:
    report = RunReport("von-staudt", {"max_k": max_k})
    start = time.perf_counter()
    for row in bernoulli.verify_von_staudt(max_k):
        report.record(
            (row["k"],),
            "pass" if row["ok"] else "fail",
            {"denominator": row["denominator"], "expected": row["expected"]},
        )
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_carlitz(conductors: Iterable[int] = (3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27), max_k: int = 20) -> RunReport:
    report = RunReport("carlitz", {"conductors": list(conductors), "max_k": max_k})
    start = time.perf_counter()
    for N in conductors:
        for chi in _primitive_characters(N):
            sign = characters.parity(chi)
            for k in range(1, max_k + 1):
                if (-1) ** k != sign:
                    continue
                row = bernoulli.verify_carlitz(chi, k)
                report.record((N, chi.index(), k), "pass" if row["ok"] else "fail", {"case_kind": row["case"]})
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_gbn_theorem(
    max_modulus: int = 16,
    max_weight: int = 12,
    moduli: Iterable[int] = (3, 4, 5, 7, 11, 13),
    moduli_invert2: Iterable[int] = (9, 25, 27),
) -> RunReport:
    """Dual-pipeline B_{k,chi} equality plus the denominator/homotopy comparison."""
    report = RunReport(
        "gbn-theorem",
        {
            "max_modulus": max_modulus,
            "max_weight": max_weight,
            "moduli": list(moduli),
            "moduli_invert2": list(moduli_invert2),
        },
    )
    start = time.perf_counter()
    for N in range(1, max_modulus + 1):
        for chi in enumerate_characters(N):
            for k in range(0, max_weight + 1):
                try:
                    bernoulli.gbn(chi, k)  # asserts both pipelines agree
                    report.record((0, N, chi.index(), k), "pass")
                except AssertionError as exc:
                    report.record((0, N, chi.index(), k), "fail", {"error": str(exc)})
    for extra2, group in ((False, moduli), (True, moduli_invert2)):
        for N in group:
            for chi in _primitive_characters(N):
                sign = characters.parity(chi)
                ell = characters.ell_of_chi(chi)
                inverted = set() if ell == 1 else {ell}
                if extra2:
                    inverted.add(2)
                for k in range(-max_weight, max_weight + 1):
                    if k == 0 or (-1) ** k != sign:
                        continue
                    ideal = bernoulli.denom_ideal(char_inv(chi), abs(k))
                    arithmetic = homotopy.invert_primes(quotient_group(ideal), inverted)
                    topological = homotopy.pi_jn_chi(chi, 2 * k - 1, inverted)
                    ok = arithmetic == topological
                    report.record(
                        (1, N, chi.index(), k),
                        "pass" if ok else "fail",
                        {"arithmetic": arithmetic.render(), "homotopy": topological.render()},
                    )
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_e2_oracle(
    primes: Iterable[int] = (3, 5, 7),
    v_range: Iterable[int] = (2, 3),
    t_min: int = -10,
    t_max: int = 10,
    max_nprime: int = 30,
    max_split_p: int = 13,
) -> RunReport:
    """SNF oracle vs closed forms, plus the cyclotomic splitting counts."""
    report = RunReport(
        "e2-oracle",
        {"primes": list(primes), "v_range": list(v_range), "t_min": t_min, "t_max": t_max,
         "max_nprime": max_nprime, "max_split_p": max_split_p},
    )
    start = time.perf_counter()
    for p in primes:
        for v in v_range:
            for a in range(p - 1):
                data = PAdicCharacterData(p=p, v=v, tame=a)
                for t in range(t_min, t_max + 1):
                    got = quotient_oracle(p, v, a, t)
                    expected = AbelianGroupExpr.cyclic(p) if (t - a) % (p - 1) == 0 else AbelianGroupExpr.zero()
                    page = e2_page(data, 1, 2 * t)
                    ok = got == expected and page == got
                    report.record(
                        (0, p, v, a, t),
                        "pass" if ok else "fail",
                        {"oracle": got.render(), "closed_form": expected.render(), "e2": page.render()},
                    )
    for v in (3, 4):
        for t in range(-5, 6):
            got = quotient_oracle_2(v, t)
            ok = got == AbelianGroupExpr.cyclic(2)
            report.record((1, 2, v, 0, t), "pass" if ok else "fail", {"oracle": got.render()})
    for n_prime in range(1, max_nprime + 1):
        for p in range(2, max_split_p + 1):
            if not is_prime(p) or n_prime % p == 0:
                continue
            counted = len(padic_splitting(n_prime, p))
            brute = count_irreducible_factors_mod_p(cyclotomic_poly(n_prime), p) if n_prime > 1 else 1
            report.record(
                (2, p, 0, 0, n_prime),
                "pass" if counted == brute else "fail",
                {"splitting": counted, "factor_count": brute},
            )
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_consistency(max_conductor: int = 27, i_min: int = -8, i_max: int = 24) -> RunReport:
    """Direct tables vs p-completion assembly for every primitive character."""
    report = RunReport("consistency", {"max_conductor": max_conductor, "i_min": i_min, "i_max": i_max})
    start = time.perf_counter()
    for N in range(3, max_conductor + 1):
        for chi in _primitive_characters(N):
            for i in range(i_min, i_max + 1):
                direct, assembled = homotopy.pi_jn_chi_paths(chi, i)
                ok = direct == assembled
                report.record(
                    (N, chi.index(), i),
                    "pass" if ok else "fail",
                    {"direct": direct.render(), "assembled": assembled.render()},
                )
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_duality_dirichlet(
    odd_primes: Iterable[int] = (3, 5, 7),
    odd_vs: Iterable[int] = (1, 2),
    two_vs: Iterable[int] = (2, 3, 4),
    t_min: int = -20,
    t_max: int = 20,
) -> RunReport:
    report = RunReport(
        "duality-dirichlet",
        {"odd_primes": list(odd_primes), "odd_vs": list(odd_vs), "two_vs": list(two_vs),
         "t_min": t_min, "t_max": t_max},
    )
    start = time.perf_counter()
    for p in odd_primes:
        for v in odd_vs:
            for chi in _primitive_characters(p**v):
                for row in homotopy.check_duality_dirichlet(chi, v, range(t_min, t_max + 1)):
                    report.record(
                        (p, v, chi.index(), row["t"]),
                        "pass" if row["ok"] else "fail",
                        {"lhs": row["lhs"], "rhs": row["rhs"]},
                    )
    for v in two_vs:
        for chi in _primitive_characters(2**v):
            for row in homotopy.check_duality_dirichlet(chi, v, range(t_min, t_max + 1)):
                report.record(
                    (2, v, chi.index(), row["t"]),
                    "pass" if row["ok"] else "fail",
                    {"lhs": row["lhs"], "rhs": row["rhs"]},
                )
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_duality_jn(
    strict_levels: Iterable[int] = (4, 8, 12),
    lax_levels: Iterable[int] = (1, 3, 5),
    t_min: int = -10,
    t_max: int = 10,
) -> RunReport:
    report = RunReport(
        "duality-jn",
        {"strict_levels": list(strict_levels), "lax_levels": list(lax_levels), "t_min": t_min, "t_max": t_max},
    )
    start = time.perf_counter()
    for N in list(strict_levels) + list(lax_levels):
        for row in homotopy.check_duality_JN(N, range(t_min, t_max + 1)):
            payload = {"lhs": row["lhs"], "rhs": row["rhs"]}
            if "note" in row:
                payload["note"] = row["note"]
            report.record((N, row["t"]), "pass" if row["ok"] else "fail", payload)
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_eisenstein(
    conductors: Iterable[int] = (1, 3, 4, 5, 7),
    max_k: int = 9,
    max_classical_weight: int = 20,
    n_max: int = 200,
) -> RunReport:
    report = RunReport(
        "eisenstein",
        {"conductors": list(conductors), "max_k": max_k,
         "max_classical_weight": max_classical_weight, "n_max": n_max},
    )
    start = time.perf_counter()
    for N in conductors:
        if N == 1:
            chis = [character_from_index(1, 0)]
            weights = range(2, max_classical_weight + 1, 2)
        else:
            chis = _primitive_characters(N)
            weights = range(1, max_k + 1)
        for chi in chis:
            sign = characters.parity(chi)
            for k in weights:
                if (-1) ** k != sign:
                    continue
                result = eisenstein.congruence_check(chi, k, n_max)
                if result["mandatory_failures"]:
                    report.record((N, chi.index(), k), "fail", {"mandatory_failures": result["mandatory_failures"]})
                elif result["full_findings"]:
                    report.record((N, chi.index(), k), "finding", {"full_findings": result["full_findings"]})
                else:
                    report.record((N, chi.index(), k), "pass")
    report.wall_time = time.perf_counter() - start
    return report.finalize()


def suite_dedekind_jk(ts: Iterable[int] = (1, 2, 3)) -> RunReport:
    cases = [(5, (4,)), (7, (6,)), (8, (7,)), (1, ())]
    report = RunReport("dedekind-jk", {"cases": [[N, list(g)] for N, g in cases], "ts": list(ts)})
    start = time.perf_counter()
    for N, gens in cases:
        spec = dedekind.AbelianFieldSpec(N, tuple(gens))
        for t in ts:
            row = dedekind.verify_jk(spec, t)
            report.record(
                (N, t),
                "pass" if row["ok"] else "fail",
                {"zeta": row["zeta_value"], "arithmetic": row["arithmetic_side"], "homotopy": row["homotopy_side"]},
            )
    report.wall_time = time.perf_counter() - start
    return report.finalize()


SUITES: dict[str, Callable[[], RunReport]] = {
    "von-staudt": suite_von_staudt,
    "carlitz": suite_carlitz,
    "gbn-theorem": suite_gbn_theorem,
    "duality-dirichlet": suite_duality_dirichlet,
    "duality-jn": suite_duality_jn,
    "e2-oracle": suite_e2_oracle,
    "consistency": suite_consistency,
    "eisenstein": suite_eisenstein,
    "dedekind-jk": suite_dedekind_jk,
}


# ---------------------------------------------------------------------------
# Subcommands


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def cmd_chars(args) -> int:
    chis = enumerate_characters(args.modulus)
    rows = [characters.display(chi) for chi in chis]
    if args.json:
        print(json.dumps({"schema": SCHEMA, "modulus": args.modulus, "characters": rows}, sort_keys=True))
        return 0
    print(f"characters mod {args.modulus} ({len(rows)} total)")
    print(f"{'name':>8} {'conductor':>9} {'order':>5} {'parity':>6} {'primitive':>9}  exponents")
    for row in rows:
        name = f"{row['modulus']}:{row['index']}"
        print(
            f"{name:>8} {row['conductor']:>9} {row['order']:>5} {row['parity']:>+6d} "
            f"{str(row['primitive']):>9}  {row['exponents']}"
        )
    return 0


def cmd_bern(args) -> int:
    chi = character_from_index(args.modulus, args.index)
    k = args.weight
    b = bernoulli.gbn(chi, k)
    lv = bernoulli.l_value(chi, 1 - k)
    ideal = bernoulli.denom_ideal(characters.primitivize(chi), k)
    diag = ideal.basis.diagonal()
    quot = quotient_group(ideal)
    from .exactalg import smith_normal_form

    snf_diag = smith_normal_form(ideal.basis)[0].diagonal()
    payload = {
        "B": render_cyc(b),
        "L(1-k)": render_cyc(lv),
        "cyclotomic_n": chi.order(),  # "z" in the value strings is a primitive n-th root
        "weight": k,
        "character": characters.display(chi),
        "denominator_ideal_diagonal": list(diag),
        "denominator_ideal_snf": list(snf_diag),
        "quotient": quot.render(),
    }
    text = (
        f"chi = {args.modulus}:{args.index}, k = {k}\n"
        f"  B_(k,chi)        = {payload['B']}\n"
        f"  L(1-k; chi)      = {payload['L(1-k)']}\n"
        f"  denominator SNF  = {snf_diag}\n"
        f"  quotient group   = {payload['quotient']}"
    )
    _emit(args, payload, text)
    return 0


def _degree_table(fn, lo: int, hi: int) -> list[tuple[int, str]]:
    return [(i, fn(i).render()) for i in range(lo, hi + 1)]


def cmd_homotopy(args) -> int:
    lo, hi = args.degree_from, args.degree_to
    if args.target == "j":
        rows = _degree_table(homotopy.pi_J, lo, hi)
        title = "pi_i(J)"
    elif args.target == "jn":
        rows = _degree_table(lambda i: homotopy.pi_JN(args.level, i), lo, hi)
        title = f"pi_i(J({args.level}))"
    elif args.target == "k1":
        rows = _degree_table(lambda i: homotopy.pi_K1(args.prime, i), lo, hi)
        title = f"pi_i(S_K(1), p={args.prime})"
    elif args.target == "k1pv":
        rows = _degree_table(lambda i: homotopy.pi_K1_pv(args.prime, args.level_exp, i), lo, hi)
        title = f"pi_i(S_K(1)({args.prime}^{args.level_exp}))"
    elif args.target == "exotic":
        rows = _degree_table(homotopy.pi_exotic, lo, hi)
        title = "pi_i(exotic K(1)-local sphere, p=2)"
    elif args.target == "chi":
        chi = character_from_index(args.modulus, args.index)
        loc = set(args.invert or [])
        rows = _degree_table(lambda i: homotopy.pi_jn_chi(chi, i, loc), lo, hi)
        title = f"pi_i(J({args.modulus})^(chi {args.modulus}:{args.index}))" + (
            f"[1/{sorted(loc)}]" if loc else ""
        )
    elif args.target == "jk":
        gens = tuple(args.subgroup or [])
        rows = _degree_table(
            lambda i: homotopy.pi_JK(args.modulus, gens, i, invert_G=args.invert_order), lo, hi
        )
        title = f"pi_i(J(K)), N={args.modulus}, H=<{','.join(map(str, gens))}>"
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError
    if args.json:
        print(
            json.dumps(
                {"schema": SCHEMA, "table": {str(i): s for i, s in rows}, "title": title},
                sort_keys=True,
            )
        )
        return 0
    print(title)
    for i, s in rows:
        print(f"  {i:>4}  {s}")
    return 0


def cmd_e2(args) -> int:
    data = PAdicCharacterData(p=args.prime, v=args.level_exp, tame=args.tame)
    entries = []
    for s in range(0, args.smax + 1):
        for t in range(args.tmin, args.tmax + 1):
            if args.prime != 2 and t % 2:
                continue
            g = e2_page(data, s, t)
            if not g.is_zero():
                entries.append((s, t, g.render()))
    if args.json:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "prime": args.prime,
                    "v": args.level_exp,
                    "tame": args.tame,
                    "entries": [{"s": s, "t": t, "group": g} for s, t, g in entries],
                },
                sort_keys=True,
            )
        )
        return 0
    print(f"E2 page, p={args.prime}, v={args.level_exp}, tame={args.tame}")
    for s in range(args.smax, -1, -1):
        cells = []
        for t in range(args.tmin, args.tmax + 1):
            if args.prime != 2 and t % 2:
                continue
            hit = next((g for ss, tt, g in entries if ss == s and tt == t), ".")
            cells.append(f"{hit:>10}")
        print(f"s={s:>2} " + " ".join(cells))
    t_labels = [t for t in range(args.tmin, args.tmax + 1) if args.prime == 2 or t % 2 == 0]
    print("  t: " + " ".join(f"{t:>10}" for t in t_labels))
    return 0


def cmd_eisenstein(args) -> int:
    chi = character_from_index(args.modulus, args.index)
    result = eisenstein.congruence_check(chi, args.weight, args.nmax)
    coeffs = eisenstein.eisenstein_coeffs(chi, args.weight, min(args.nmax, args.show_coeffs))
    payload = {
        "character": characters.display(chi),
        "weight": args.weight,
        "cyclotomic_n": chi.order(),
        "ideal_index": result["ideal_index"],
        "mandatory_failures": result["mandatory_failures"],
        "full_findings": result["full_findings"],
        "ok": result["ok"],
        "coefficients": [render_cyc(c) for c in coeffs],
    }
    lines = [
        f"E_(k,chi), chi = {args.modulus}:{args.index}, k = {args.weight}, n <= {args.nmax}",
        f"  denominator-ideal index: {result['ideal_index']}",
        f"  mandatory (conductor-primary) failures: {result['mandatory_failures']}",
        f"  full-ideal findings: {result['full_findings']}",
        "  leading coefficients: " + ", ".join(payload["coefficients"]),
    ]
    _emit(args, payload, "\n".join(lines))
    return 0 if result["ok"] else 1


def cmd_dedekind(args) -> int:
    spec = dedekind.AbelianFieldSpec(args.modulus, tuple(args.subgroup or []))
    value = dedekind.zeta_special_value(spec, 1 - args.weight)
    payload = {
        "modulus": args.modulus,
        "subgroup": sorted(spec.subgroup()),
        "totally_real": dedekind.is_totally_real(spec),
        "weight": args.weight,
        "zeta(1-k)": str(value),
        "characters": len(dedekind.field_characters(spec)),
    }
    if args.verify_t is not None:
        row = dedekind.verify_jk(spec, args.verify_t)
        payload["verify_jk"] = row
    text = (
        f"K inside Q(zeta_{args.modulus}), H = {payload['subgroup']}\n"
        f"  totally real: {payload['totally_real']}\n"
        f"  zeta_K(1-{args.weight}) = {value}"
    )
    if args.verify_t is not None:
        row = payload["verify_jk"]
        text += (
            f"\n  verify t={args.verify_t}: arithmetic {row['arithmetic_side']}"
            f" vs homotopy {row['homotopy_side']} -> {'ok' if row['ok'] else 'MISMATCH'}"
        )
    _emit(args, payload, text)
    if args.verify_t is not None and not payload["verify_jk"]["ok"]:
        return 1
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        fn = SUITES[name]
        kwargs = {}
        if name == "von-staudt" and args.max is not None:
            kwargs["max_k"] = args.max
        if name == "carlitz" and args.max is not None:
            kwargs["max_k"] = args.max
        if name == "gbn-theorem":
            if args.max_weight is not None:
                kwargs["max_weight"] = args.max_weight
            if args.primes is not None:
                kwargs["moduli"] = args.primes
        reports.append(fn(**kwargs))
    failed = sum(r.failed for r in reports)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "reports": [r.to_json() for r in reports]}, sort_keys=True))
    else:
        for r in reports:
            print(r.text())
        total_run = sum(r.run for r in reports)
        total_findings = sum(r.findings for r in reports)
        print(f"total: {total_run} cases, {failed} failed, {total_findings} findings")
    return 0 if failed == 0 else 1


# ---------------------------------------------------------------------------
# Argument parsing


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirichletj", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_chars = sub.add_parser("chars", help="enumerate Dirichlet characters")
    chars_sub = p_chars.add_subparsers(dest="chars_command", required=True)
    p_list = chars_sub.add_parser("list")
    p_list.add_argument("--modulus", type=int, required=True)
    p_list.add_argument("--json", action="store_true")
    p_list.set_defaults(fn=cmd_chars)

    p_bern = sub.add_parser("bern", help="generalized Bernoulli numbers and L-values")
    p_bern.add_argument("--modulus", type=int, required=True)
    p_bern.add_argument("--index", type=int, required=True)
    p_bern.add_argument("--weight", type=int, required=True)
    p_bern.add_argument("--json", action="store_true")
    p_bern.set_defaults(fn=cmd_bern)

    p_h = sub.add_parser("homotopy", help="homotopy-group tables")
    p_h.add_argument("target", choices=["j", "jn", "k1", "k1pv", "exotic", "chi", "jk"])
    p_h.add_argument("--from", dest="degree_from", type=int, default=-4)
    p_h.add_argument("--to", dest="degree_to", type=int, default=12)
    p_h.add_argument("--level", type=int, default=1)
    p_h.add_argument("--prime", type=int, default=3)
    p_h.add_argument("--level-exp", type=int, default=1)
    p_h.add_argument("--modulus", type=int, default=4)
    p_h.add_argument("--index", type=int, default=1)
    p_h.add_argument("--invert", type=_int_list, default=None, help="comma-separated primes to invert")
    p_h.add_argument("--subgroup", type=_int_list, default=None, help="comma-separated unit generators")
    p_h.add_argument("--invert-order", action="store_true")
    p_h.add_argument("--json", action="store_true")
    p_h.set_defaults(fn=cmd_homotopy)

    p_e2 = sub.add_parser("e2", help="E2 pages of the eigen spectral sequences")
    p_e2.add_argument("--prime", type=int, required=True)
    p_e2.add_argument("--level-exp", type=int, default=1)
    p_e2.add_argument("--tame", type=int, default=0)
    p_e2.add_argument("--smax", type=int, default=2)
    p_e2.add_argument("--tmin", type=int, default=-8)
    p_e2.add_argument("--tmax", type=int, default=8)
    p_e2.add_argument("--json", action="store_true")
    p_e2.set_defaults(fn=cmd_e2)

    p_eis = sub.add_parser("eisenstein", help="q-expansion coefficients and congruences")
    p_eis.add_argument("--modulus", type=int, required=True)
    p_eis.add_argument("--index", type=int, required=True)
    p_eis.add_argument("--weight", type=int, required=True)
    p_eis.add_argument("--nmax", type=int, default=50)
    p_eis.add_argument("--show-coeffs", type=int, default=8)
    p_eis.add_argument("--json", action="store_true")
    p_eis.set_defaults(fn=cmd_eisenstein)

    p_ded = sub.add_parser("dedekind", help="Dedekind zeta special values")
    p_ded.add_argument("--modulus", type=int, required=True)
    p_ded.add_argument("--subgroup", type=_int_list, default=None)
    p_ded.add_argument("--weight", type=int, default=2)
    p_ded.add_argument("--verify-t", type=int, default=None)
    p_ded.add_argument("--json", action="store_true")
    p_ded.set_defaults(fn=cmd_dedekind)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", choices=list(SUITES) + ["all"])
    p_verify.add_argument("--max", type=int, default=None)
    p_verify.add_argument("--max-weight", type=int, default=None)
    p_verify.add_argument("--primes", type=_int_list, default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
