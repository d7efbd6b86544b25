"""Built-in datasets and user catalog files.

The builtin catalog carries the 26 six-dimensional symplectic nilmanifold
classes (two of them flagged suspect: one symplectic form and one signature
are misprinted in the source table; the stored corrections validate but the
rows stay out of hard acceptance), the Kodaira-Thurston four-manifold's
invariant-form presentation, abelian baselines, and the nonabelian
two-dimensional algebra.

User files are JSON: {"entries": [{"name": ..., "signature": ...,
"omega": ..., "expected": ["yes"|"no"|"iso"|"surj"|"neither"|"zero", ...],
"suspect": bool, "notes": ...}, ...]}; "expected" lists one verdict per
Lefschetz power k = 1..m and may be omitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .cealg import (
    LiePresentation,
    ParseError,
    SymplecticStructure,
    ValidationError,
    check_d_squared,
    check_symplectic,
    parse_form,
    parse_signature,
)

EXPECTED_WORDS = ("yes", "no", "iso", "surj", "neither", "zero")

# expected word -> predicate over Verdict.kind
_WORD_MATCH = {
    "yes": lambda kind: kind == "isomorphism",
    "iso": lambda kind: kind == "isomorphism",
    "no": lambda kind: kind != "isomorphism",
    "surj": lambda kind: kind == "surjection-only",
    "neither": lambda kind: kind == "neither",
    "zero": lambda kind: kind == "zero-map",
}


def expected_matches(word: str, kind: str) -> bool:
    return _WORD_MATCH[word.lower()](kind)


@dataclass
class CatalogEntry:
    name: str
    signature: str
    omega: str
    expected: Optional[list[str]] = None
    suspect: bool = False
    notes: str = ""
    group: str = "user"

    def parse(self) -> tuple[LiePresentation, SymplecticStructure]:
        pres = parse_signature(self.signature)
        bad = check_d_squared(pres)
        if bad:
            raise ValidationError(
                f"{self.name}: d^2 != 0 on generator(s) {bad}")
        struct = check_symplectic(pres, parse_form(self.omega, pres.dim))
        return pres, struct

    def validate(self) -> Optional[str]:
        """None if the entry builds, the failure message otherwise."""
        try:
            self.parse()
            return None
        except (ParseError, ValidationError) as exc:
            return str(exc)


# Six-dimensional nilmanifold classes: (signature, omega, [L] iso?, [L]^2 iso?).
# [L]^3 is expected to be an isomorphism on every row.  The two suspect rows
# carry their presumed corrections; notes record the printed original.
_NIL6_ROWS = [
    ("(0,0,12,13,14,15)", "16+34-25", "no", "no", False, ""),
    ("(0,0,12,13,14,23+15)", "16+24+34-25", "no", "no", False,
     "symplectic form printed as '16+24+34-26', which is not closed for this "
     "class (d omega = e1e2e4 - e1e2e5); -25 is the unique single-digit "
     "repair that closes, and it is nondegenerate"),
    ("(0,0,12,13,23,14)", "15+24+34-26", "yes", "no", False, ""),
    ("(0,0,12,13,23,14-25)", "15+24-35+16", "yes", "no", False, ""),
    ("(0,0,12,13,23,14+25)", "15+24+35+16", "yes", "no", False, ""),
    ("(0,0,12,13,14+23,24+15)", "16+2x34-25", "no", "no", False, ""),
    ("(0,0,0,12,13,14+23)", "16-2x34-25", "no", "no", False, ""),
    ("(0,0,0,12,13,24)", "26+14+35", "no", "no", False, ""),
    ("(0,0,0,12,13,14)", "16+24+35", "no", "no", False, ""),
    ("(0,0,0,12,13,23)", "15+24+36", "no", "no", False, ""),
    ("(0,0,0,12,14,15+23)", "13+26-45", "no", "no", False, ""),
    ("(0,0,0,12,14,15+23+24)", "13+26-45", "no", "no", True,
     "signature printed with five entries '(0,0,0,12,14+15+23+24)'; "
     "stored as the six-entry class it abbreviates"),
    ("(0,0,0,12,14,15+24)", "13+26-45", "no", "no", False, ""),
    ("(0,0,0,12,14,15)", "13+26-45", "no", "no", False, ""),
    ("(0,0,0,12,14,13+42)", "15+26+34", "no", "no", False, ""),
    ("(0,0,0,12,14,23+24)", "16-34+25", "no", "no", False, ""),
    ("(0,0,0,12,14-23,15+34)", "16+35+24", "no", "no", False,
     "signature printed as '(0,0,0,12,14,15+34)', which violates the Jacobi "
     "identity (d^2 e6 = -e1e2e3); restoring the -23 term of d e5 gives the "
     "standard class, and the printed symplectic form is closed exactly for "
     "the restored signature"),
    ("(0,0,0,12,14+23,13+42)", "15+2x26+34", "no", "no", False, ""),
    ("(0,0,0,0,12,15)", "16+25+34", "no", "no", False, ""),
    ("(0,0,0,0,12,14+25)", "13+26+45", "no", "no", False, ""),
    ("(0,0,0,0,12,14+23)", "13+26+45", "no", "no", True,
     "symplectic form printed as '3+26+45', not a 2-form; stored as 13+26+45 "
     "(closed and nondegenerate for this class)"),
    ("(0,0,0,0,12,34)", "15+36+24", "no", "no", False, ""),
    ("(0,0,0,0,12,13)", "16+25+34", "no", "no", False, ""),
    ("(0,0,0,0,13+42,14+23)", "16+25+34", "no", "no", False, ""),
    ("(0,0,0,0,0,12)", "16+23+45", "no", "no", False, ""),
    ("(0,0,0,0,0,0)", "12+34+56", "yes", "yes", False, ""),
]


def builtin_entries() -> list[CatalogEntry]:
    entries = []
    for idx, (sig, omega, l1, l2, suspect, note) in enumerate(_NIL6_ROWS, 1):
        entries.append(CatalogEntry(
            name=f"nil6-{idx:02d}",
            signature=sig,
            omega=omega,
            expected=[l1, l2, "yes"],
            suspect=suspect,
            notes=note,
            group="table2",
        ))
    entries.append(CatalogEntry(
        name="kt4",
        signature="(0,0,0,23)",
        omega="12+34",
        expected=["neither", "iso"],
        notes="Kodaira-Thurston: coframe e4 = dx4 + x2 dx3 gives "
              "d e4 = dx2∧dx3 = e2∧e3, all other coframe differentials zero; "
              "omega = e1∧e2 + e3∧e4",
        group="kt4",
    ))
    entries.append(CatalogEntry(
        name="abelian2", signature="(0,0)", omega="12",
        expected=["iso"], group="baseline",
    ))
    entries.append(CatalogEntry(
        name="abelian4", signature="(0,0,0,0)", omega="12+34",
        expected=["iso", "iso"], group="baseline",
    ))
    entries.append(CatalogEntry(
        name="abelian6", signature="(0,0,0,0,0,0)", omega="12+34+56",
        expected=["iso", "iso", "iso"], group="baseline",
    ))
    entries.append(CatalogEntry(
        name="nonabelian2", signature="(0,12)", omega="12",
        expected=["zero"],
        notes="the non-Lefschetz half of the two-dimensional dichotomy",
        group="baseline",
    ))
    return entries


def table2_entries() -> list[CatalogEntry]:
    return [e for e in builtin_entries() if e.group == "table2"]


def load_file(path: str, lenient: bool = False) -> list[CatalogEntry]:
    """Parse and validate a JSON catalog.

    With lenient=True a semantically invalid entry is kept but marked
    suspect (with the failure in its notes) instead of raising.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ValidationError(f"{path}: expected a top-level object with an 'entries' list")
    out = []
    for pos, raw in enumerate(doc["entries"], 1):
        if not isinstance(raw, dict):
            raise ValidationError(f"{path}: entry #{pos} is not an object")
        try:
            entry = CatalogEntry(
                name=str(raw.get("name", f"entry-{pos}")),
                signature=raw["signature"],
                omega=raw["omega"],
                expected=list(raw["expected"]) if raw.get("expected") is not None else None,
                suspect=bool(raw.get("suspect", False)),
                notes=str(raw.get("notes", "")),
                group="user",
            )
        except KeyError as exc:
            raise ValidationError(f"{path}: entry #{pos} is missing field {exc}")
        if entry.expected is not None:
            for word in entry.expected:
                if str(word).lower() not in EXPECTED_WORDS:
                    raise ValidationError(
                        f"{path}: entry {entry.name!r}: unknown expected verdict {word!r} "
                        f"(use one of {', '.join(EXPECTED_WORDS)})")
            entry.expected = [str(w).lower() for w in entry.expected]
        failure = entry.validate()
        if failure is not None:
            if lenient:
                entry.suspect = True
                entry.notes = (entry.notes + "; " if entry.notes else "") + f"validation failed: {failure}"
            else:
                raise ValidationError(f"{path}: entry {entry.name!r}: {failure}")
        out.append(entry)
    return out
