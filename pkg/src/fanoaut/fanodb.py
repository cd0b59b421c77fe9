"""Table of smooth Fano threefold families and their connected automorphism groups.

The rows live in ``data/families.tsv``.  Loading parses every group
expression, recomputes derived flags and rejects inconsistent rows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from .lieclassify import GroupExpr, Trivial, expected_signature, parse_group

# number of deformation families for each Picard rank
FAMILIES_PER_RANK = {1: 17, 2: 36, 3: 31, 4: 13, 5: 3, 6: 1, 7: 1, 8: 1, 9: 1, 10: 1}
CLASSES = ("always", "sometimes", "never")


class DatabaseError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FamilyId:
    rank: int
    index: int

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        m = re.fullmatch(r"\s*(\d+)\.(\d+)\s*", text)
        if not m:
            raise DatabaseError(f"malformed family id {text!r}")
        fid = cls(int(m.group(1)), int(m.group(2)))
        if not 1 <= fid.index <= FAMILIES_PER_RANK.get(fid.rank, 0):
            raise DatabaseError(f"no family {text.strip()} in the classification")
        return fid

    def __str__(self) -> str:
        return f"{self.rank}.{self.index}"


@dataclass(frozen=True)
class Member:
    group: GroupExpr
    family_dim: int
    note: str

    def __str__(self) -> str:
        return f"{self.group} ({self.note})"


@dataclass
class FanoFamily:
    id: FamilyId
    description: str
    infinity_class: str
    generic_aut0: GroupExpr
    exceptional_members: list
    anchor: str
    degree: Optional[int] = None
    h12_note: Optional[str] = None
    moduli_note: Optional[str] = None
    model_refs: list = field(default_factory=list)
    discrepancy: bool = False
    ke_obstructed: bool = False

    def groups(self) -> list[GroupExpr]:
        return [self.generic_aut0] + [m.group for m in self.exceptional_members]

    def as_dict(self) -> dict:
        return {
            "id": str(self.id),
            "description": self.description,
            "infinity_class": self.infinity_class,
            "generic_aut0": str(self.generic_aut0),
            "exceptional_members": [
                {"group": str(m.group), "family_dim": m.family_dim, "note": m.note} for m in self.exceptional_members
            ],
            "degree": self.degree,
            "h12": self.h12_note,
            "moduli": self.moduli_note,
            "models": self.model_refs,
            "discrepancy": self.discrepancy,
            "ke_obstructed": self.ke_obstructed,
            "anchor": self.anchor,
        }


def _split_members(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == ";" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [s.strip() for s in out if s.strip()]


def _parse_flags(text: str) -> dict:
    flags: dict = {}
    if text.strip() in ("", "-"):
        return flags
    for tok in text.split(","):
        tok = tok.strip()
        key, _, val = tok.partition("=")
        if key in flags:
            raise DatabaseError(f"duplicate flag {key}")
        flags[key] = val if val else True
    return flags


def is_nonreductive(e: GroupExpr) -> bool:
    return expected_signature(e).reductive is False


def parse_row(line: str, lineno: int = 0) -> FanoFamily:
    cols = line.rstrip("\n").split("\t")
    if len(cols) != 7:
        raise DatabaseError(f"line {lineno}: expected 7 tab-separated fields, got {len(cols)}")
    fid_s, cls_s, gen_s, mem_s, flag_s, anchor, desc = cols
    fid = FamilyId.parse(fid_s)
    if cls_s not in CLASSES:
        raise DatabaseError(f"line {lineno}: unknown class {cls_s!r}")
    try:
        generic = parse_group(gen_s)
        members = []
        if mem_s.strip() != "-":
            for m in _split_members(mem_s):
                parts = [p.strip() for p in m.split("|")]
                if len(parts) != 3:
                    raise DatabaseError(f"line {lineno}: member {m!r} needs expr|family_dim|note")
                members.append(Member(parse_group(parts[0]), int(parts[1]), parts[2]))
    except ValueError as exc:
        raise DatabaseError(f"line {lineno} ({fid}): {exc}") from None
    flags = _parse_flags(flag_s)
    known = {"ke_obstructed", "discrepancy", "h12", "degree", "moduli", "models"}
    unknown = set(flags) - known
    if unknown:
        raise DatabaseError(f"line {lineno}: unknown flags {sorted(unknown)}")
    fam = FanoFamily(
        id=fid,
        description="" if desc.strip() == "-" else desc.strip(),
        infinity_class=cls_s,
        generic_aut0=generic,
        exceptional_members=members,
        anchor=anchor.strip(),
        degree=int(flags["degree"]) if "degree" in flags else None,
        h12_note=flags.get("h12"),
        moduli_note=flags.get("moduli"),
        model_refs=flags["models"].split("|") if "models" in flags else [],
        discrepancy="discrepancy" in flags,
        ke_obstructed=bool(flags.get("ke_obstructed", False)),
    )
    _check_row(fam, lineno)
    return fam


def _check_row(f: FanoFamily, lineno: int) -> None:
    trivial = isinstance(f.generic_aut0, Trivial)
    where = f"line {lineno} ({f.id})"
    if f.infinity_class == "always" and trivial:
        raise DatabaseError(f"{where}: always-infinite family with trivial generic group")
    if f.infinity_class == "sometimes" and (not trivial or not f.exceptional_members):
        raise DatabaseError(f"{where}: sometimes-infinite family needs a finite generic group and special members")
    if f.infinity_class == "never" and (not trivial or f.exceptional_members):
        raise DatabaseError(f"{where}: never-infinite family lists an infinite group")
    if any(isinstance(m.group, Trivial) for m in f.exceptional_members):
        raise DatabaseError(f"{where}: exceptional members must have infinite groups")
    # a non-reductive Aut0 rules out a Kahler-Einstein metric, so the flag is determined by the groups
    derived = any(is_nonreductive(g) for g in f.groups())
    if derived != f.ke_obstructed:
        raise DatabaseError(f"{where}: ke_obstructed flag is {f.ke_obstructed} but the groups say {derived}")


class FanoDB:
    def __init__(self, families: list[FanoFamily]):
        self.families = sorted(families, key=lambda f: f.id)
        self._by_id = {}
        for f in self.families:
            if f.id in self._by_id:
                raise DatabaseError(f"duplicate family {f.id}")
            self._by_id[f.id] = f
        missing = [f"{r}.{i}" for r, n in FAMILIES_PER_RANK.items() for i in range(1, n + 1)
                   if FamilyId(r, i) not in self._by_id]
        if missing:
            raise DatabaseError(f"families missing from the table: {', '.join(missing)}")

    def lookup(self, fid: str | FamilyId) -> FanoFamily:
        key = fid if isinstance(fid, FamilyId) else FamilyId.parse(fid)
        return self._by_id[key]

    def _ids(self, pred) -> list[str]:
        return [str(f.id) for f in self.families if pred(f)]

    def infinite_always(self) -> list[str]:
        return self._ids(lambda f: f.infinity_class == "always")

    def infinite_sometimes(self) -> list[str]:
        return self._ids(lambda f: f.infinity_class == "sometimes")

    def never_infinite(self) -> list[str]:
        return self._ids(lambda f: f.infinity_class == "never")

    def nonreductive_always(self) -> list[str]:
        return self._ids(lambda f: f.infinity_class == "always" and is_nonreductive(f.generic_aut0))

    def ke_obstructed(self) -> list[str]:
        return self._ids(lambda f: f.ke_obstructed)

    def h12_infinite(self) -> list[str]:
        return self._ids(lambda f: f.h12_note is not None and f.infinity_class != "never")

    def discrepancies(self) -> list[str]:
        return self._ids(lambda f: f.discrepancy)

    def model_refs(self) -> list[tuple[str, str]]:
        return [(str(f.id), ref) for f in self.families for ref in f.model_refs]


def parse_model_ref(ref: str) -> tuple[str, dict]:
    m = re.fullmatch(r"([A-Za-z0-9_]+)(?:\((.*)\))?", ref.strip())
    if not m:
        raise DatabaseError(f"malformed model reference {ref!r}")
    params = {}
    if m.group(2):
        for part in m.group(2).split(","):
            k, _, v = part.partition("=")
            params[k.strip()] = Fraction(v.strip())
    return m.group(1), params


def parse_text(text: str) -> FanoDB:
    fams = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fams.append(parse_row(line, lineno))
    return FanoDB(fams)


@lru_cache(maxsize=1)
def _embedded_text() -> str:
    return resources.files("fanoaut").joinpath("data/families.tsv").read_text(encoding="utf-8")


def load(path: str | None = None) -> FanoDB:
    if path is None:
        return parse_text(_embedded_text())
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())


def check_models(db: FanoDB) -> list[tuple[str, str, bool, str]]:
    """Run every referenced catalog case; its signature must match the generic group or a listed member."""
    from .catalog import build, compute
    from .lieclassify import match, signature

    out = []
    for fid, ref in db.model_refs():
        name, params = parse_model_ref(ref)
        sig = signature(compute(build(name, params)))
        hits = [str(g) for g in db.lookup(fid).groups() if match(sig, g).ok]
        out.append((fid, ref, bool(hits), hits[0] if hits else str(sig)))
    return out
