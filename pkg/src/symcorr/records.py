"""Plain-dict record builders shared by the CLI and the HTTP service.

Every record is a JSON-ready dict with a fixed key order, so output is
byte-deterministic whichever front end produced it.
"""

from __future__ import annotations

from typing import Dict, List

from . import counting, selftest, spin, symbols
from .gf2 import bits_to_str, str_to_bits
from .partitions import format_bipartition, format_partition, parse_partition
from .springer import GroupCase, correspondence, springer_map, to_symbol
from .symbols import DefectSet, SimilarityClass, SymbolParams
from .unipotent import format_marked, parse_marked, validate_marked


def make_params(rho: int, s: int, defects: str) -> SymbolParams:
    return SymbolParams(rho, s, DefectSet(defects))


def symbol_records(params: SymbolParams, n: int) -> List[Dict]:
    out = []
    for sym in symbols.enumerate_family(params, n):
        rank, d = symbols.validate(params, sym)
        out.append({"symbol": str(sym), "n": rank, "defect": d})
    return out


def class_record(cls: SimilarityClass) -> Dict:
    return {
        "params": {
            "rho": cls.params.rho,
            "s": cls.params.s,
            "defects": cls.params.defects.value,
        },
        "n": cls.n,
        "members": [str(m) for m in cls.members],
        "intervals": [
            {"entries": list(iv.entries), "proper": iv.proper} for iv in cls.intervals
        ],
        "dim": cls.dimension,
    }


def class_records(params: SymbolParams, n: int) -> List[Dict]:
    return [class_record(cls) for cls in symbols.similarity_classes(params, n)]


def _mapping_record(case: GroupCase, mp, chi, sym, label) -> Dict:
    return {
        "case": case.family,
        "n": case.n,
        "class": format_marked(mp),
        "char": bits_to_str(chi),
        "symbol": str(sym),
        "defect": label.defect,
        "bipartition": format_bipartition(label.bipartition),
    }


def springer_record(case_name: str, n: int, class_text: str, char_text: str) -> Dict:
    case = GroupCase(case_name, n)
    mp = parse_marked(class_text)
    validate_marked(case.kind, case.total, mp)
    chi = str_to_bits(char_text)
    sym = to_symbol(case, mp, chi)
    label = springer_map(case, mp, chi)
    return _mapping_record(case, mp, chi, sym, label)


def springer_table_records(case_name: str, n: int) -> List[Dict]:
    case = GroupCase(case_name, n)
    return [
        _mapping_record(case, mp, chi, sym, label)
        for mp, chi, sym, label in correspondence(case)
    ]


def _spin_record(n: int, parts) -> Dict:
    t, bp = spin.spin_springer(parts)
    return {
        "n": n,
        "partition": format_partition(parts),
        "t": t,
        "alpha": format_partition(bp[0]),
        "beta": format_partition(bp[1]),
        "bipartition": format_bipartition(bp),
        "weyl_rank": spin.weyl_rank(n, t),
    }


def spin_record(n: int, partition_text: str) -> Dict:
    parts = parse_partition(partition_text)
    if sum(parts) != n:
        raise ValueError(f"partition sums to {sum(parts)}, expected n={n}")
    return _spin_record(n, parts)


def spin_table_records(n: int) -> List[Dict]:
    return [_spin_record(n, parts) for parts in spin.enumerate_xn(n)]


def _census_record(report: counting.CensusReport) -> Dict:
    return {
        "family": report.family,
        "m": report.m,
        "formula_count": report.formula_count,
        "enumeration_count": report.enumeration_count,
        "agree": report.agree,
    }


def count_records(family: str, m: int) -> List[Dict]:
    if family == "a":
        return [_census_record(counting.census_a(m))]
    if family == "d":
        return [_census_record(counting.census_d(m))]
    if family == "sporadic":
        return [_census_record(r) for r in counting.sporadic_checks()]
    raise ValueError(f"unknown family {family!r}; pick from a, d, sporadic")


def selftest_records(max_n: int) -> Dict:
    ok, results = selftest.run_selftest(max_n)
    return {
        "ok": ok,
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
    }
