"""
Textual class notation.

    ((4^6,-5^3)^P,1^9,1^9)/9

Each top-level entry is one block: `1^n` for the constant block, otherwise a
parenthesised list of numerators with optional `^count`, followed by `^P`
(all coordinate permutations). The trailing `/n` is the common denominator.
Unicode minus signs and superscript digits are accepted on input.
"""
import re
from typing import List

from core.exceptions import DomainError

from .patterns import BlockPattern, CandidateClass

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹ᴾ−", "0123456789P-")
_SUPERSCRIPT_DIGITS = set("⁰¹²³⁴⁵⁶⁷⁸⁹")
_ENTRY = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def _normalize_text(text: str) -> str:
    out = []
    in_power = False
    for ch in text.strip():
        if ch in _SUPERSCRIPT_DIGITS and not in_power:
            out.append("^")
            in_power = True
        elif ch not in _SUPERSCRIPT_DIGITS:
            in_power = False
        if ch == "ᴾ":
            out.append("^")
        out.append(ch)
    return "".join(out).translate(_SUPERSCRIPTS).replace(" ", "")


def _split_top_level(body: str) -> List[str]:
    parts, depth, current = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DomainError(f"unbalanced parentheses in {body!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise DomainError(f"unbalanced parentheses in {body!r}")
    parts.append("".join(current))
    return parts


def _expand_entries(text: str) -> List[int]:
    nums = []
    for entry in text.split(","):
        match = _ENTRY.match(entry)
        if not match:
            raise DomainError(f"cannot parse block entry {entry!r}")
        value, count = int(match.group(1)), int(match.group(2) or 1)
        nums.extend([value] * count)
    return nums


def parse_block(text: str, n: int) -> BlockPattern:
    if text.startswith("(") and (text.endswith(")^P") or text.endswith(")")):
        inner = text[1:-3] if text.endswith("^P") else text[1:-1]
        return BlockPattern.from_numerators(n, _expand_entries(inner))
    return BlockPattern.from_numerators(n, _expand_entries(text))


def parse_class(text: str) -> CandidateClass:
    """
    Parse a class written as "((4^6,-5^3)^P,1^9,1^9)/9".

    Raises:
        DomainError: malformed notation or blocks inconsistent with n
    """
    normalized = _normalize_text(text)
    body, sep, denominator = normalized.rpartition("/")
    if not sep or not denominator.isdigit():
        raise DomainError(f"class notation {text!r} lacks a /n suffix")
    if not (body.startswith("(") and body.endswith(")")):
        raise DomainError(f"class notation {text!r} must be parenthesised")
    n = int(denominator)
    blocks = [parse_block(part, n) for part in _split_top_level(body[1:-1])]
    return CandidateClass.of(blocks)


def format_block(block: BlockPattern) -> str:
    if block.is_constant:
        return f"1^{block.n}"
    entries = [
        f"{value}^{count}" if count > 1 else f"{value}"
        for value, count in zip(block.values(), block.mults)
        if count
    ]
    return "(" + ",".join(entries) + ")^P"


def format_class(X: CandidateClass) -> str:
    """Inverse of parse_class"""
    return "(" + ",".join(format_block(block) for block in X.blocks) + f")/{X.n}"
