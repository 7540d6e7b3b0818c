"""Braid words in the Artin generators of B3 and B4.

Words are free-group words: no braid relations are applied, only adjacent
letters with the same generator index are merged.  Equality of braids is
decided downstream through the Burau representation.

>>> w = parse_word("s2^-2 s1 s2^-1", 3)
>>> w.letters
((2, -2), (1, 1), (2, -1))
>>> str(inverse(w))
's2 s1^-1 s2^2'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError, WordSyntaxError

SUPPORTED_STRANDS = (3, 4)

Letter = tuple[int, int]


def _canonical(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[list[int]] = []
    for index, power in letters:
        if power == 0:
            continue
        if out and out[-1][0] == index:
            out[-1][1] += power
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([index, power])
    return tuple((i, p) for i, p in out)


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_1, ..., sigma_{strands-1}, stored in canonical form.

    ``letters`` is a tuple of ``(index, power)`` pairs with nonzero powers and
    no two consecutive pairs sharing an index.
    """

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands not in SUPPORTED_STRANDS:
            raise PreconditionError(
                f"unsupported strand count {self.strands}; expected 3 or 4")
        for index, _ in self.letters:
            if not 1 <= index < self.strands:
                raise PreconditionError(
                    f"generator index {index} out of range for B{self.strands}")
        object.__setattr__(self, "letters", _canonical(self.letters))

    def __len__(self) -> int:
        return sum(abs(p) for _, p in self.letters)

    def __str__(self) -> str:
        return print_word(self)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.strands, self.letters * k)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def uses_only(self, *indices: int) -> bool:
        return all(i in indices for i, _ in self.letters)

    def embed(self, strands: int) -> BraidWord:
        """The same letters viewed in a braid group with more strands."""
        if strands < self.strands:
            raise PreconditionError("can only embed into a larger braid group")
        return BraidWord(strands, self.letters)

    def expanded(self) -> list[int]:
        """Signed generator indices, one per unit letter (e.g. s1^-2 -> [-1, -1])."""
        out = []
        for index, power in self.letters:
            sign = 1 if power > 0 else -1
            out.extend([sign * index] * abs(power))
        return out


_TOKEN = re.compile(r"s(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse ``"s1 s2^-1 ..."`` into a canonical :class:`BraidWord`.

    The empty string (or ``"e"``) is the identity word.
    """
    if strands not in SUPPORTED_STRANDS:
        raise PreconditionError(
            f"unsupported strand count {strands}; expected 3 or 4")
    letters = []
    stripped = text.strip()
    if stripped in ("", "e", "1"):
        return BraidWord(strands)
    for m in re.finditer(r"\S+", text):
        token = m.group()
        tm = _TOKEN.fullmatch(token)
        if tm is None:
            raise WordSyntaxError(f"cannot parse token {token!r}", m.start())
        index = int(tm.group(1))
        power = int(tm.group(2)) if tm.group(2) is not None else 1
        if not 1 <= index < strands:
            raise WordSyntaxError(
                f"token {token!r}: generator index {index} out of range "
                f"for B{strands} (allowed 1..{strands - 1})", m.start())
        if power == 0:
            raise WordSyntaxError(f"token {token!r} has zero exponent", m.start())
        letters.append((index, power))
    return BraidWord(strands, tuple(letters))


def print_word(w: BraidWord) -> str:
    if w.is_empty:
        return "e"
    return " ".join(f"s{i}" if p == 1 else f"s{i}^{p}" for i, p in w.letters)


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.strands != v.strands:
        raise PreconditionError(
            f"strand-count mismatch: B{u.strands} vs B{v.strands}")
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple((i, -p) for i, p in reversed(u.letters)))


def exponent_sum(u: BraidWord) -> int:
    return sum(p for _, p in u.letters)


def sigma(index: int, strands: int, power: int = 1) -> BraidWord:
    return BraidWord(strands, ((index, power),))


def _xy_word(text: str, x: BraidWord, y: BraidWord) -> BraidWord:
    """Expand a word like ``"x^-1 y^2"`` in the two letters x, y."""
    out = BraidWord(x.strands)
    for token in text.split():
        name, _, exp = token.partition("^")
        base = {"x": x, "y": y}[name]
        out = out * base ** (int(exp) if exp else 1)
    return out


OMEGA1 = "x^-1 y^2 x^-1 y x y x^2 y^-2 x^-1 y^-3"
OMEGA2 = "y^-1 x y^-2 x y^-1 x^-1 y^-1 x^-2 y^2 x y^2"

_NEEDS = {"a1": 3, "a2": 3, "center3": 3,
          "x4": 4, "y4": 4, "omega1": 4, "omega2": 4}


def named_word(name: str, strands: int) -> BraidWord:
    """Words with a fixed role in the classification.

    ``a1 = s1^-1 s2`` and ``a2 = s2 s1^-1`` generate the free normal subgroup of
    B3, ``center3 = (s1 s2)^3`` generates its center; ``x4 = s1 s3^-1``,
    ``y4 = s2 x4 s2^-1`` and the kernel pair ``omega1``, ``omega2`` live in B4
    and are returned already expanded into sigma letters.
    """
    if name not in _NEEDS:
        raise PreconditionError(
            f"unknown word name {name!r}; choose from {sorted(_NEEDS)}")
    if _NEEDS[name] != strands:
        raise PreconditionError(
            f"{name} lives in B{_NEEDS[name]}, not B{strands}")
    if name == "a1":
        return BraidWord(3, ((1, -1), (2, 1)))
    if name == "a2":
        return BraidWord(3, ((2, 1), (1, -1)))
    if name == "center3":
        return BraidWord(3, ((1, 1), (2, 1)) * 3)
    x = BraidWord(4, ((1, 1), (3, -1)))
    y = sigma(2, 4) * x * sigma(2, 4, -1)
    if name == "x4":
        return x
    if name == "y4":
        return y
    return _xy_word(OMEGA1 if name == "omega1" else OMEGA2, x, y)
