"""Structured morphological tags and the mapping from UD feature strings.

Tags are semicolon-joined bundles of uppercase slot values, e.g. ``N;ACC;PL``
for a plural noun in the accusative. The slot order is pinned as
POS;CASE;NUMBER;GENDER;PERSON;TENSE;MOOD;STRENGTH with unset slots omitted;
lexicon files must use the same order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidTagError, UnsupportedPosError

POS_VALUES = ("N", "PROPN", "ADJ", "V")
CASES = ("NOM", "GEN", "DAT", "ACC", "INS", "LOC", "VOC")
NUMBERS = ("SG", "PL")
GENDERS = ("MASC", "FEM", "NEUT")
PERSONS = ("1", "2", "3")
TENSES = ("PST", "PRS", "FUT")
MOODS = ("IND", "COND", "IMP", "SBJV")
STRENGTHS = ("STRONG", "WEAK", "MIXED")

NOMINAL_POS = frozenset({"N", "PROPN", "ADJ"})

# Slot name -> admissible values, in the pinned formatting order (after POS).
_SLOTS = (
    ("case", frozenset(CASES)),
    ("number", frozenset(NUMBERS)),
    ("gender", frozenset(GENDERS)),
    ("person", frozenset(PERSONS)),
    ("tense", frozenset(TENSES)),
    ("mood", frozenset(MOODS)),
    ("strength", frozenset(STRENGTHS)),
)


@dataclass(frozen=True)
class MorphTag:
    """A (possibly partial) morphological tag; unset slots are None."""

    pos: str
    case: str | None = None
    number: str | None = None
    gender: str | None = None
    person: str | None = None
    tense: str | None = None
    mood: str | None = None
    strength: str | None = None

    def __post_init__(self):
        if self.pos not in POS_VALUES:
            raise InvalidTagError(f"unknown POS {self.pos!r}")
        for name, values in _SLOTS:
            value = getattr(self, name)
            if value is not None and value not in values:
                raise InvalidTagError(f"bad value {value!r} for slot {name}")
        nominal = self.pos in NOMINAL_POS
        if (self.case or self.gender) and not nominal:
            raise InvalidTagError(f"case/gender not licensed for POS {self.pos}")
        if (self.person or self.tense or self.mood) and self.pos != "V":
            raise InvalidTagError(f"person/tense/mood not licensed for POS {self.pos}")
        if self.strength and self.pos != "ADJ":
            raise InvalidTagError("strength only licensed for ADJ")


def format_unimorph(tag: MorphTag) -> str:
    """Render a tag in the pinned semicolon format, omitting unset slots."""
    parts = [tag.pos]
    for name, _ in _SLOTS:
        value = getattr(tag, name)
        if value is not None:
            parts.append(value)
    return ";".join(parts)


def parse_unimorph(text: str) -> MorphTag:
    """Inverse of :func:`format_unimorph`; rejects unknown or out-of-order slots."""
    parts = text.split(";")
    if not parts or parts[0] not in POS_VALUES:
        raise InvalidTagError(f"tag must start with a POS value: {text!r}")
    fields: dict[str, str] = {}
    slot_idx = 0
    for token in parts[1:]:
        matched = None
        for idx in range(slot_idx, len(_SLOTS)):
            name, values = _SLOTS[idx]
            if token in values:
                matched = (idx, name)
                break
        if matched is None:
            raise InvalidTagError(f"unknown or out-of-order slot value {token!r} in {text!r}")
        slot_idx = matched[0] + 1
        fields[matched[1]] = token
    return MorphTag(pos=parts[0], **fields)


_UPOS_TO_POS = {
    "NOUN": "N",
    "PROPN": "PROPN",
    "ADJ": "ADJ",
    "VERB": "V",
    "AUX": "V",
}

# UD feature values -> tag slot values. Values not listed here (including
# ambiguous multi-valued ones such as "Acc,Nom") leave the slot unset.
_UD_TENSE = {"Past": "PST", "Pres": "PRS", "Fut": "FUT"}
_UD_MOOD = {"Ind": "IND", "Cnd": "COND", "Imp": "IMP", "Sub": "SBJV"}
_UD_NUMBER = {"Sing": "SG", "Plur": "PL"}
_UD_PERSON = {"1": "1", "2": "2", "3": "3"}


def tag_from_ud_feats(upos: str, feats: dict[str, str]) -> MorphTag:
    """Build a partial tag from a UD POS tag and feature dict.

    Only features licensed for the mapped POS are carried over; everything
    else stays unset so that downstream inference can fill the gaps.
    """
    pos = _UPOS_TO_POS.get(upos)
    if pos is None:
        raise UnsupportedPosError(f"cannot map UPOS {upos!r} to a supported POS")
    number = _UD_NUMBER.get(feats.get("Number", ""))
    if pos == "V":
        return MorphTag(
            pos=pos,
            number=number,
            person=_UD_PERSON.get(feats.get("Person", "")),
            tense=_UD_TENSE.get(feats.get("Tense", "")),
            mood=_UD_MOOD.get(feats.get("Mood", "")),
        )
    return MorphTag(pos=pos, number=number)
