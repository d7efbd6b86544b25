"""Report assembly and rendering.

One ReportDocument per analyzed presentation; the JSON rendering is the
machine format (schema-versioned, byte-identical for identical inputs: the
timing field is carried as null there and only printed in the text format).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Optional

from .catalog import CatalogEntry, expected_matches
from .cealg import Representation, build_operators, with_coefficients
from .superalg import LefschetzReport, full_report, verify_relations

SCHEMA_VERSION = 1

_KIND_SHORT = {
    "isomorphism": "Isomorphism",
    "surjection-only": "Surjection",
    "injection-only": "Injection",
    "neither": "Neither",
    "zero-map": "0",
}


@dataclass
class ReportDocument:
    name: str
    signature: str
    omega: str
    dim: int
    betti: list[int]
    maps: list[dict]
    s_degree: Optional[int]
    weak_degree: Optional[int]
    weak_degree_literal: Optional[int]
    ddelta: dict[int, tuple[bool, bool, bool]]
    brylinski: dict[int, tuple[bool, bool]]
    dee_deebar: bool
    dee_deebar_literal: bool
    consistent: bool
    relation_violations: list[str]
    suspect: bool = False
    notes: str = ""
    expected: Optional[list[str]] = None
    mismatches: int = 0
    timing: Optional[float] = None

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "signature": self.signature,
            "omega": self.omega,
            "dim": self.dim,
            "betti": self.betti,
            "maps": self.maps,
            "s_degree": self.s_degree,
            "weak_degree": self.weak_degree,
            "weak_degree_literal": self.weak_degree_literal,
            "ddelta": {str(w): list(flags) for w, flags in sorted(self.ddelta.items())},
            "brylinski": {str(w): {"surjective": flags[0], "isomorphism": flags[1]}
                          for w, flags in sorted(self.brylinski.items())},
            "dee_deebar": self.dee_deebar,
            "dee_deebar_literal": self.dee_deebar_literal,
            "consistent": self.consistent,
            "relation_violations": self.relation_violations,
            "suspect": self.suspect,
            "notes": self.notes,
            "expected": self.expected,
            "mismatches": self.mismatches,
            "timing": None,
        }

    def to_text(self) -> str:
        lines = []
        lines.append(f"{self.name}: {self.signature}  omega = {self.omega}")
        lines.append(f"  betti (by form degree): {', '.join(str(b) for b in self.betti)}")
        for entry in self.maps:
            k = entry["k"]
            label = _KIND_SHORT[entry["kind"]]
            extra = f" rank {entry['rank']} ({entry['source_dim']} -> {entry['target_dim']})"
            exp = ""
            if entry.get("expected") is not None:
                exp = f"  expected {entry['expected']}: " + \
                      ("MATCH" if entry["match"] else "MISMATCH")
            lines.append(f"  [L]^{k}: {label}{extra}{exp}")
        lines.append(f"  s-degree: {_opt(self.s_degree)}   weak degree: {_opt(self.weak_degree)}"
                     + ("" if self.weak_degree == self.weak_degree_literal
                        else f"   (literal-typo reading: {_opt(self.weak_degree_literal)})"))
        dd_all = all(all(t) for t in self.ddelta.values())
        bry_all = all(t[1] for t in self.brylinski.values())
        lines.append(f"  d-delta-lemma: {_yn(dd_all)}   Brylinski iso everywhere: {_yn(bry_all)}   "
                     f"dee-deebar-lemma: {_yn(self.dee_deebar)}")
        bad_dd = [str(w) for w, t in sorted(self.ddelta.items()) if not all(t)]
        if bad_dd:
            lines.append(f"  d-delta triple equality fails at weights: {', '.join(bad_dd)}")
        bad_bry = [str(w) for w, t in sorted(self.brylinski.items()) if not t[1]]
        if bad_bry:
            lines.append(f"  Brylinski map not iso at weights: {', '.join(bad_bry)}")
        lines.append(f"  four-way equivalence consistent: {_yn(self.consistent)}")
        if self.relation_violations:
            lines.append("  RELATION VIOLATIONS: " + "; ".join(self.relation_violations))
        if self.suspect:
            lines.append(f"  suspect entry: {self.notes}")
        if self.timing is not None:
            lines.append(f"  elapsed: {self.timing:.3f}s")
        return "\n".join(lines)


def _opt(x) -> str:
    return "-" if x is None else str(x)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def analyze_entry(entry: CatalogEntry, rep: Optional[Representation] = None) -> ReportDocument:
    """Full pipeline for one entry: parse, validate, build, report."""
    t0 = time.perf_counter()
    pres, struct = entry.parse()
    if rep is not None:
        module = with_coefficients(struct, pres, rep)
    else:
        module = build_operators(struct, pres)
    violations = [str(v) for v in verify_relations(module)]
    lef: LefschetzReport = full_report(module)
    maps = []
    mismatches = 0
    for k in range(1, struct.m + 1):
        verdict = lef.lefschetz_maps[k]
        item = {
            "k": k,
            "kind": verdict.kind,
            "rank": verdict.rank,
            "source_dim": verdict.source_dim,
            "target_dim": verdict.target_dim,
        }
        if entry.expected is not None and k - 1 < len(entry.expected):
            word = entry.expected[k - 1]
            item["expected"] = word
            item["match"] = expected_matches(word, verdict.kind)
            if not item["match"]:
                mismatches += 1
        maps.append(item)
    betti_list = [lef.betti[k - struct.m] for k in range(pres.dim + 1)]
    return ReportDocument(
        name=entry.name,
        signature=entry.signature,
        omega=entry.omega,
        dim=pres.dim,
        betti=betti_list,
        maps=maps,
        s_degree=lef.s_lefschetz,
        weak_degree=lef.weak_degree,
        weak_degree_literal=lef.weak_degree_literal,
        ddelta=lef.ddelta,
        brylinski=lef.brylinski,
        dee_deebar=lef.dee_deebar,
        dee_deebar_literal=lef.dee_deebar_literal,
        consistent=lef.consistent,
        relation_violations=violations,
        suspect=entry.suspect,
        notes=entry.notes,
        expected=entry.expected,
        mismatches=mismatches,
        timing=time.perf_counter() - t0,
    )


def documents_to_json(docs: list[ReportDocument]) -> str:
    payload = {
        "schema": SCHEMA_VERSION,
        "reports": [d.to_json_dict() for d in docs],
        "non_suspect_mismatches": sum(d.mismatches for d in docs if not d.suspect),
    }
    return json.dumps(payload, indent=2, sort_keys=False)


def table_text(docs: list[ReportDocument]) -> str:
    """One row per entry: computed map kinds, expected, match column."""
    lines = []
    header = (f"{'name':14s} {'signature':28s} {'omega':16s} "
              f"{'computed [L]^k':36s} {'expected':18s} {'s':>2s}  status")
    lines.append(header)
    lines.append("-" * len(header))
    for d in docs:
        comp = "/".join(_KIND_SHORT[mp["kind"]] for mp in d.maps)
        exp = "/".join(d.expected) if d.expected else "-"
        if d.relation_violations:
            status = "INVALID"
        elif d.expected is None:
            status = "computed"
        elif d.mismatches == 0:
            status = "MATCH"
        else:
            status = f"MISMATCH({d.mismatches})"
        if d.suspect:
            status += " [suspect]"
        lines.append(f"{d.name:14s} {d.signature:28s} {d.omega:16s} "
                     f"{comp:36s} {exp:18s} {_opt(d.s_degree):>2s}  {status}")
    mism = sum(d.mismatches for d in docs if not d.suspect)
    lines.append("")
    lines.append(f"rows: {len(docs)}   non-suspect mismatches: {mism}")
    return "\n".join(lines)
