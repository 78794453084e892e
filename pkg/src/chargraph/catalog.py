"""Bundled degree-set data for named groups, plus formula-based degree sets
for the PSL2 families.

The catalog ships as a versioned JSON file (``data/degree_catalog_v1.json``),
an array of ``{"name", "order", "degrees", "source"}`` records.  Records are
validated at load time, not trusted: each degree set must contain 1, every
degree must divide the order, and the order's prime support must cover the
degrees' primes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import CatalogError, DomainError
from .numtheory import is_prime, prime_power, prime_support

DATA_FILE = "degree_catalog_v1.json"

# name identification between bundled records (used when a statement about
# the catalog is up to isomorphism rather than up to record name)
ISOMORPHIC_TO = {"PSL3(2)": "PSL2(7)"}


@dataclass(frozen=True)
class GroupRecord:
    name: str
    degrees: tuple[int, ...]
    order: int | None
    source: str


def degree_set(values) -> tuple[int, ...]:
    """Normalize and validate a degree set: sorted, distinct, contains 1."""
    vals = sorted(set(int(v) for v in values))
    if not vals or vals[0] < 1:
        raise DomainError("degree set must consist of positive integers")
    if vals[0] != 1:
        raise DomainError("degree set must contain 1")
    return tuple(vals)


def _iter_json_array(text: str):
    """Yield (record, line_number) from a JSON array, tracking source lines."""
    decoder = json.JSONDecoder()
    pos = text.index("[") + 1
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            return
        obj, end = decoder.raw_decode(text, pos)
        yield obj, text.count("\n", 0, pos) + 1
        pos = end


def _validate_record(raw: dict, line: int) -> GroupRecord:
    def bad(msg: str):
        return CatalogError(f"{DATA_FILE}:{line}: {msg}")

    for key in ("name", "degrees", "source"):
        if key not in raw:
            raise bad(f"missing field {key!r}")
    name = raw["name"]
    try:
        degrees = degree_set(raw["degrees"])
    except DomainError as exc:
        raise bad(f"record {name!r}: {exc}") from exc
    order = raw.get("order")
    if order is not None:
        if not isinstance(order, int) or order < 1:
            raise bad(f"record {name!r}: order must be a positive integer")
        for d in degrees:
            if order % d:
                raise bad(f"record {name!r}: degree {d} does not divide order {order}")
        covered = set(prime_support(order))
        used = set()
        for d in degrees:
            if d > 1:
                used.update(prime_support(d))
        if not used <= covered:
            raise bad(f"record {name!r}: degree primes {sorted(used - covered)} outside order")
    if raw["source"] not in ("ATLAS-data", "formula"):
        raise bad(f"record {name!r}: unknown source tag {raw['source']!r}")
    return GroupRecord(name, degrees, order, raw["source"])


def load_catalog_text(text: str) -> dict[str, GroupRecord]:
    """Parse and validate catalog JSON; errors carry the offending line."""
    records = {}
    for raw, line in _iter_json_array(text):
        rec = _validate_record(raw, line)
        if rec.name in records:
            raise CatalogError(f"{DATA_FILE}:{line}: duplicate record {rec.name!r}")
        records[rec.name] = rec
    return records


@lru_cache(maxsize=1)
def load_catalog() -> dict[str, GroupRecord]:
    text = resources.files("chargraph.data").joinpath(DATA_FILE).read_text()
    return load_catalog_text(text)


def lookup(name: str) -> GroupRecord:
    """The bundled record for a group name."""
    cat = load_catalog()
    if name not in cat:
        known = ", ".join(sorted(cat))
        raise CatalogError(f"unknown group {name!r}; available: {known}")
    return cat[name]


def group_names() -> list[str]:
    return sorted(load_catalog())


def groups_with_pi_size(k: int) -> list[str]:
    """Names of catalog entries whose order has exactly k prime divisors."""
    out = []
    for name in group_names():
        rec = load_catalog()[name]
        if rec.order is not None and len(prime_support(rec.order)) == k:
            out.append(name)
    return out


def cd_psl2(q: int) -> tuple[int, ...]:
    """Character degrees of PSL2(q), q >= 4 a prime power.

    Even q: {1, q-1, q, q+1}.  Odd q > 5: those plus (q+eps)/2 where
    4 | q-eps.  q = 5 is the one exception (PSL2(5) = PSL2(4) = A5).
    """
    pp = prime_power(q) if q >= 4 else None
    if pp is None:
        raise DomainError(f"cd_psl2: q must be a prime power >= 4, got {q}")
    if q == 5:
        return (1, 3, 4, 5)
    if q % 2 == 0:
        return degree_set((1, q - 1, q, q + 1))
    eps = 1 if q % 4 == 1 else -1
    return degree_set((1, q - 1, q, q + 1, (q + eps) // 2))


def cd_aut_psl2_even(p: int) -> tuple[int, ...]:
    """Character degrees of Aut(PSL2(2^p)) for odd prime p:
    {1, q-1, q, (q-1)p, (q+1)p} with q = 2^p."""
    if not is_prime(p):
        raise DomainError(f"cd_aut_psl2_even: p must be prime, got {p}")
    if p == 2:
        # Aut(PSL2(4)) = S5 breaks the generic formula
        raise DomainError("cd_aut_psl2_even: p must be an odd prime (p=2 is exceptional)")
    if 1 << p >= 1 << 62:
        raise DomainError(f"cd_aut_psl2_even: 2^{p} exceeds the 64-bit cap")
    q = 1 << p
    return degree_set((1, q - 1, q, (q - 1) * p, (q + 1) * p))


def cd_direct_product(a, b) -> tuple[int, ...]:
    """Degree set of a direct product: all pairwise products."""
    xs, ys = degree_set(a), degree_set(b)
    return tuple(sorted({x * y for x in xs for y in ys}))
