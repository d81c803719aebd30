"""JSON / TSV serialization with a fixed canonical ordering.

Partitions serialize as JSON arrays of decreasing integers; coefficient
vectors as {"degree": n, "coeffs": [[partition, coeff], ...]} with keys in
graded-lex order.  TSV cells render partitions as hyphen-joined parts.
"""
from __future__ import annotations

import json

from .partitions import CylProfile, Partition, grlex_key
from .schur import CoeffVector


def sorted_items(coeffs: CoeffVector) -> list[tuple[Partition, int]]:
    return sorted(coeffs.items(), key=lambda kv: grlex_key(kv[0]))


def coeffs_to_json(coeffs: CoeffVector) -> list[list]:
    return [[list(lam), c] for lam, c in sorted_items(coeffs)]


def vector_payload(degree: int, coeffs: CoeffVector) -> dict:
    return {"degree": degree, "coeffs": coeffs_to_json(coeffs)}


def fusion_payload(p: CylProfile, degree: int, coeffs: CoeffVector) -> dict:
    return {"N": p.rank, "L": p.level, "degree": degree,
            "coeffs": coeffs_to_json(coeffs)}


def profile_payload(p: CylProfile) -> dict:
    return {"N": p.rank, "L": p.level}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def partition_tsv(lam: Partition | None) -> str:
    if lam is None:
        return ""
    return "-".join(str(x) for x in lam)


def parse_partition_arg(text: str | None) -> Partition:
    """Parse a comma-separated CLI partition; empty or missing means empty."""
    from .partitions import make_partition

    if text is None or text.strip() == "":
        return ()
    return make_partition(int(x) for x in text.split(","))
