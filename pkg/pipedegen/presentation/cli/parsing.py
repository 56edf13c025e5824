"""
PipeDegen – Parsing de argumentos de la CLI
============================================
Conjuntos de pares, selectores de partición, firmas y pesos.

SELECTOR DE O:
    "none" | "empty"      → O = ∅
    "all"  | "full"       → O = P∖A
    "0x…"                 → bitmask hexadecimal sobre P∖A (orden canónico)
    "(1,2),(2,3)"         → lista explícita de elementos
"""

from __future__ import annotations

import re

from pipedegen.domain.exceptions.domain_errors import ParseError
from pipedegen.domain.value_objects.oc_partition import OCPartition

_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_INTS = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """'(1,2),(2,3)' → [(1,2),(2,3)]; '' o 'none' → []."""
    stripped = text.strip()
    if stripped.lower() in ("", "none", "empty"):
        return []
    pairs = [(int(a), int(b)) for a, b in _PAIR.findall(stripped)]
    leftover = _PAIR.sub("", stripped).replace(",", "").strip()
    if not pairs or leftover:
        raise ParseError(f"lista de pares mal formada: {text!r}", text=text)
    return pairs


def parse_order_part(text: str, n: int) -> OCPartition:
    stripped = text.strip().lower()
    if stripped in ("none", "empty"):
        return OCPartition.empty(n)
    if stripped in ("all", "full"):
        return OCPartition.full(n)
    if stripped.startswith("0x"):
        return OCPartition.from_hex(n, stripped)
    return OCPartition.from_elements(n, parse_pairs(text))


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    if not _INTS.match(text):
        raise ParseError(f"{what} mal formada: {text!r}", text=text)
    return tuple(int(x) for x in text.split(","))


def parse_signature(text: str) -> tuple[int, ...]:
    """'1,2,3' → (1,2,3), ordenada y sin repetidos."""
    return tuple(sorted(set(parse_ints(text, "firma"))))


def parse_weight(text: str) -> tuple[int, ...]:
    """Coeficientes (a_1, …, a_{n−1}) en la base de pesos fundamentales."""
    return parse_ints(text, "peso")


def parse_weights(text: str) -> tuple[tuple[int, ...], ...]:
    """'1,0,0;0,1,0' → ((1,0,0),(0,1,0)); '' → ()."""
    return tuple(parse_weight(chunk) for chunk in text.split(";") if chunk.strip())
