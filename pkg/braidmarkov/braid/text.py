from __future__ import annotations

import re

from ..errors import BraidParseError
from .word import BraidWord, Generator

_HEADER = re.compile(r"^\s*B(\d+)\s*:(.*)$", re.DOTALL)
_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


def parse_word(text: str) -> BraidWord:
    """Parse `B<n>: s<i> s<j>^-1 ...`; the strand header is mandatory."""
    m = _HEADER.match(text)
    if not m:
        raise BraidParseError(text, "expected header 'B<n>:'")
    strands = int(m.group(1))
    if strands < 1:
        raise BraidParseError(text, "braid index must be >= 1")
    letters = []
    for pos, token in enumerate(m.group(2).split()):
        tm = _TOKEN.match(token)
        if not tm:
            raise BraidParseError(text, f"bad token {token!r}", pos)
        index = int(tm.group(1))
        if not 1 <= index <= strands - 1:
            raise BraidParseError(text, f"s{index} out of range for B{strands}", pos)
        letters.append(Generator(index, -1 if tm.group(2) else 1))
    return BraidWord(strands, tuple(letters))


def format_word(a: BraidWord) -> str:
    tokens = [f"s{g.index}" + ("^-1" if g.sign < 0 else "") for g in a.letters]
    return f"B{a.strands}:" + "".join(f" {t}" for t in tokens)
