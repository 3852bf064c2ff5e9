"""Invariant suites runnable from the CLI and the service.

Each check returns a CheckResult; run_selftest collects them all.  The
acceptance test suite runs the same material at its full stated ranges; the
selftest scales with max_n so it stays interactive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Tuple

from . import counting, spin, symbols
from .gf2 import characters
from .partitions import count_p, count_p2, enumerate_bipartitions, enumerate_partitions
from .springer import FAMILIES, GroupCase, correspondence, cuspidal_datum, springer_inverse
from .symbols import DefectSet, SymbolParams
from .unipotent import a_space, c_sequence, enumerate_marked


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _all_params() -> List[SymbolParams]:
    out = []
    for rho in (0, 4):
        for s in (0, 1, 2):
            if s == 0:
                out.append(SymbolParams(rho, s, DefectSet.ODD_POSITIVE))
            else:
                out.append(SymbolParams(rho, s, DefectSet.EVEN))
                out.append(SymbolParams(rho, s, DefectSet.ODD))
    return out


def _class_params() -> List[SymbolParams]:
    return [
        SymbolParams(4, 0, DefectSet.ODD_POSITIVE),
        SymbolParams(4, 1, DefectSet.EVEN),
        SymbolParams(4, 1, DefectSet.ODD),
        SymbolParams(4, 2, DefectSet.EVEN),
        SymbolParams(4, 2, DefectSet.ODD),
    ]


def check_partition_counts(max_n: int) -> CheckResult:
    cases = 0
    for n in range(0, 41):
        if count_p2(n) != sum(count_p(k) * count_p(n - k) for k in range(n + 1)):
            return CheckResult("partition_counts", False, f"convolution fails at {n}")
        cases += 1
    for n in range(-2, min(max_n, 10) + 1):
        if len(enumerate_partitions(n)) != count_p(n):
            return CheckResult("partition_counts", False, f"p({n}) enumeration")
        if len(enumerate_bipartitions(n)) != count_p2(n):
            return CheckResult("partition_counts", False, f"p2({n}) enumeration")
        cases += 1
    return CheckResult("partition_counts", True, f"{cases} checks")


def check_symbol_oracle(max_n: int) -> CheckResult:
    cases = 0
    n_top = min(max_n, 6)
    for params in _all_params():
        if params.defects is DefectSet.ODD and params.s > 0:
            continue  # per-defect enumeration does not depend on the defect set
        for n in range(0, n_top + 1):
            for d in range(-4, 5):
                fast = sorted(map(str, symbols.enumerate_symbols(params, n, d)))
                slow = sorted(map(str, symbols.brute_force_symbols(params, n, d)))
                if fast != slow:
                    return CheckResult(
                        "symbol_oracle", False, f"mismatch at {params}, n={n}, d={d}"
                    )
                cases += 1
    return CheckResult("symbol_oracle", True, f"{cases} blocks")


def check_symbol_cardinalities(max_n: int) -> CheckResult:
    cases = 0
    for params in _all_params():
        for n in range(0, max_n + 1):
            for d in range(-7, 8):
                got = len(symbols.enumerate_symbols(params, n, d))
                want = count_p2(n - symbols.n_min(params, d))
                if got != want:
                    return CheckResult(
                        "symbol_cardinalities",
                        False,
                        f"|block| != p2 at {params}, n={n}, d={d}",
                    )
                cases += 1
    return CheckResult("symbol_cardinalities", True, f"{cases} blocks")


def check_shift_and_staircase(max_n: int) -> CheckResult:
    cases = 0
    for params in _class_params():
        for n in range(0, max_n + 1):
            for sym in symbols.enumerate_family(params, n):
                n0, d0 = symbols.validate(params, sym)
                shifted = symbols.shift(params, sym)
                if symbols.validate(params, shifted) != (n0, d0):
                    return CheckResult("shift_staircase", False, f"shift broke {sym}")
                if symbols.normal_form(params, shifted) != sym:
                    return CheckResult("shift_staircase", False, f"normal_form {sym}")
                d, bp = symbols.staircase_from_symbol(params, sym)
                if symbols.staircase_to_symbol(params, d, bp) != sym:
                    return CheckResult("shift_staircase", False, f"staircase {sym}")
                cases += 1
    return CheckResult("shift_staircase", True, f"{cases} symbols")


def check_class_structure(max_n: int) -> CheckResult:
    cases = 0
    for params in _class_params():
        for n in range(0, max_n + 1):
            for cls in symbols.similarity_classes(params, n):
                if len(cls.members) != 2 ** cls.dimension:
                    return CheckResult(
                        "class_structure", False, f"|class| != 2^dim at {cls.members}"
                    )
                ranks = {symbols.validate(params, mem)[0] for mem in cls.members}
                if ranks != {n}:
                    return CheckResult("class_structure", False, f"rank varies: {ranks}")
                for bits, member in zip(characters(cls.space), cls.members):
                    if symbols.class_vector(cls, member) != bits:
                        return CheckResult(
                            "class_structure", False, f"vector mismatch at {member}"
                        )
                    if symbols.class_member(cls, bits) != member:
                        return CheckResult(
                            "class_structure", False, f"member mismatch at {bits}"
                        )
                cases += 1
    return CheckResult("class_structure", True, f"{cases} classes")


def check_springer_bijections(max_n: int) -> CheckResult:
    cases = 0
    top = min(max_n, 8)
    for family in FAMILIES:
        for n in range(0, top + 1):
            case = GroupCase(family, n)
            rows = correspondence(case)
            syms = [row[2] for row in rows]
            if len(set(syms)) != len(syms):
                return CheckResult("springer_bijections", False, f"not injective: {case}")
            target = (
                set(symbols.enumerate_family(case.params, case.symbol_rank))
                if case.symbol_rank >= 0
                else set()
            )
            if set(syms) != target:
                return CheckResult("springer_bijections", False, f"image wrong: {case}")
            for mp, chi, sym, label in rows:
                if springer_inverse(case, label) != (mp, chi):
                    return CheckResult(
                        "springer_bijections", False, f"roundtrip at {mp} in {case}"
                    )
            cases += len(rows)
    return CheckResult("springer_bijections", True, f"{cases} pairs over 4 families")


def check_basis_coherence(max_n: int) -> CheckResult:
    cases = 0
    top = min(max_n, 8)
    for family in FAMILIES:
        for n in range(0, top + 1):
            case = GroupCase(family, n)
            for mp in enumerate_marked(case.kind, case.total):
                space = a_space(case.kind, mp)
                c = c_sequence(case.kind, mp)
                sym = symbols.Symbol(c[0::2], c[1::2])
                cls = symbols.class_of(case.params, case.symbol_rank, sym)
                proper = sum(1 for iv in cls.intervals if iv.proper)
                if proper != len(space.canonical_basis):
                    return CheckResult(
                        "basis_coherence", False, f"{mp} in {case}: {proper} vs basis"
                    )
                cases += 1
    return CheckResult("basis_coherence", True, f"{cases} marked partitions")


def check_census(max_n: int) -> CheckResult:
    for m in range(0, 41):
        if not counting.census_a_identity(m):
            return CheckResult("census", False, f"closed form != p(m) at {m}")
    top = min(max_n, 10)
    for m in range(0, top + 1):
        if not counting.census_a(m, with_enumeration=True).agree:
            return CheckResult("census", False, f"family a mismatch at {m}")
        if not counting.census_d(m, with_enumeration=True).agree:
            return CheckResult("census", False, f"family d mismatch at {m}")
    if not all(r.agree for r in counting.sporadic_checks()):
        return CheckResult("census", False, "sporadic constants")
    return CheckResult("census", True, f"identity to 40, enumeration to {top}")


def check_cuspidal(max_n: int) -> CheckResult:
    for m in range(3, 14):
        if counting.cuspidal_predicate("a", m) != counting.cuspidal_exists("a", m):
            return CheckResult("cuspidal", False, f"family a disagrees at {m}")
        datum = cuspidal_datum(counting.case_for_size("a", m))
        if datum is not None and not counting.is_a_cuspidal_shape(datum[0].parts):
            return CheckResult("cuspidal", False, f"family a shape at {m}")
    for m in range(4, 14):
        if counting.cuspidal_predicate("d", m) != counting.cuspidal_exists("d", m):
            return CheckResult("cuspidal", False, f"family d disagrees at {m}")
        datum = cuspidal_datum(counting.case_for_size("d", m))
        if datum is not None and not counting.is_d_cuspidal_shape(datum[0].parts):
            return CheckResult("cuspidal", False, f"family d shape at {m}")
    return CheckResult("cuspidal", True, "sizes a:3..13, d:4..13")


def check_spin(max_n: int) -> CheckResult:
    top = max(12, 2 * max_n)
    cases = 0
    for n in range(0, top + 1):
        seen = set()
        for parts in spin.enumerate_xn(n):
            t, bp = spin.spin_springer(parts)
            if (t - n) % 4 != 0:
                return CheckResult("spin", False, f"t parity at {parts}")
            marked = spin.modify(parts)
            a_vals = [e.value for e in marked if e.mark == "a"]
            b_vals = [e.value for e in marked if e.mark == "b"]
            if a_vals != sorted(a_vals) or b_vals != sorted(b_vals):
                return CheckResult("spin", False, f"marked order at {parts}")
            if any(v < 0 for v in a_vals + b_vals):
                return CheckResult("spin", False, f"negative entry at {parts}")
            if sum(a_vals) + sum(b_vals) != spin.weyl_rank(n, t):
                return CheckResult("spin", False, f"sum identity at {parts}")
            if (t, bp) in seen:
                return CheckResult("spin", False, f"collision at {parts}")
            seen.add((t, bp))
            cases += 1
        expected = sum(
            count_p2(spin.weyl_rank(n, t))
            for t in range(-n - 4, n + 5)
            if (t - n) % 4 == 0 and spin.weyl_rank(n, t) >= 0
        )
        if len(seen) != expected:
            return CheckResult("spin", False, f"cardinality at n={n}")
    return CheckResult("spin", True, f"{cases} partitions, n <= {top}")


def check_sporadic_constants(max_n: int) -> CheckResult:
    reports = counting.sporadic_checks()
    ok = (
        reports[0].formula_count == 7
        and reports[0].enumeration_count == 1 + 6
        and reports[1].formula_count == 28
        and reports[1].enumeration_count == 1 + 2 + 25
        and all(r.agree for r in reports)
    )
    return CheckResult("sporadic_constants", ok, "7 = 1+6, 28 = 1+2+25")


_CHECKS: Tuple[Callable[[int], CheckResult], ...] = (
    check_partition_counts,
    check_symbol_oracle,
    check_symbol_cardinalities,
    check_shift_and_staircase,
    check_class_structure,
    check_springer_bijections,
    check_basis_coherence,
    check_census,
    check_cuspidal,
    check_spin,
    check_sporadic_constants,
)


def run_selftest(max_n: int = 6) -> Tuple[bool, List[CheckResult]]:
    results = [check(max_n) for check in _CHECKS]
    return all(r.ok for r in results), results
