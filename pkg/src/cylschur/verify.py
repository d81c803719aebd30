"""Identity verification over parameter grids, with machine-readable reports.

Each check computes a left and right side through independent code paths and
records exact equality.  The scan enumerates every bounded skew shape,
weight, and Pieri instance up to the configured degree in a fixed canonical
order, so identical configurations always produce the same record sequence.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .fusion import fusion_product, verify_pieri
from .partitions import (
    CylProfile,
    Partition,
    SkewShape,
    enumerate_nl_partitions,
    grlex_key,
    is_nl_cylindric,
    is_nl_partition,
    partitions_of,
    sub_partitions,
)
from .schur import CoeffVector, cylindric_schur, vec_add
from .serialize import coeffs_to_json, partition_tsv
from .tableaux import Weight, count_cyl_tableaux

TSV_COLUMNS = ("N", "L", "lam", "mu", "alpha", "check", "status",
               "elapsed_ms", "lhs", "rhs")


@dataclass
class VerificationReport:
    profile: CylProfile
    check: str               # theorem1 | prop1 | pieri
    lam: Partition
    mu: Partition
    alpha: Weight | None
    status: str              # pass | fail
    lhs: object
    rhs: object
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_record(self, verbose: bool = False) -> dict:
        rec = {
            "N": self.profile.rank,
            "L": self.profile.level,
            "lam": list(self.lam),
            "mu": list(self.mu),
            "alpha": list(self.alpha) if self.alpha is not None else None,
            "check": self.check,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
        }
        if verbose or not self.passed:
            rec["lhs"] = _payload(self.lhs)
            rec["rhs"] = _payload(self.rhs)
        return rec

    def to_tsv(self, verbose: bool = False) -> str:
        import json

        show = verbose or not self.passed
        cells = [
            str(self.profile.rank),
            str(self.profile.level),
            partition_tsv(self.lam),
            partition_tsv(self.mu),
            partition_tsv(self.alpha) if self.alpha is not None else "",
            self.check,
            self.status,
            str(self.elapsed_ms),
            json.dumps(_payload(self.lhs)) if show else "",
            json.dumps(_payload(self.rhs)) if show else "",
        ]
        return "\t".join(cells)


def _payload(side):
    if isinstance(side, dict):
        return coeffs_to_json(side)
    return side


@dataclass
class ScanConfig:
    n_max: int
    l_max: int
    deg_max: int
    out: str | None = None
    fmt: str = "json"
    jobs: int = 1

    def __post_init__(self):
        if self.n_max < 1 or self.l_max < 1 or self.deg_max < 0:
            raise ValueError("scan bounds must be positive (deg_max >= 0)")
        if self.fmt not in ("json", "tsv"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.jobs < 0:
            raise ValueError("jobs must be >= 0 (0 = auto)")


def verify_theorem1(p: CylProfile, shape: SkewShape) -> VerificationReport:
    """Skew expansion check: skew function vs structure-constant combination."""
    if not is_nl_cylindric(p, shape):
        raise ValueError(
            f"shape {shape.outer}/{shape.inner} is not ({p.rank},{p.level})-cylindric"
        )
    t0 = time.perf_counter()
    lhs = cylindric_schur(p, shape)
    rhs: CoeffVector = {}
    for nu in enumerate_nl_partitions(p, shape.size()):
        d = fusion_product(p, shape.inner, nu).get(shape.outer, 0)
        if d:
            vec_add(rhs, cylindric_schur(p, SkewShape(nu, ())), d)
    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerificationReport(
        profile=p, check="theorem1", lam=shape.outer, mu=shape.inner,
        alpha=None, status="pass" if lhs == rhs else "fail",
        lhs=lhs, rhs=rhs, elapsed_ms=elapsed,
    )


def verify_proposition1(p: CylProfile, lam: Partition, mu: Partition,
                        alpha: Weight) -> VerificationReport:
    """Coefficient identity: skew count vs structure-constant weighted sum."""
    shape = SkewShape(lam, mu)
    if not is_nl_cylindric(p, shape):
        raise ValueError(
            f"shape {lam}/{mu} is not ({p.rank},{p.level})-cylindric"
        )
    t0 = time.perf_counter()
    lhs = count_cyl_tableaux(p, shape, alpha)
    rhs = 0
    for nu in enumerate_nl_partitions(p, shape.size()):
        d = fusion_product(p, mu, nu).get(lam, 0)
        if d:
            rhs += d * count_cyl_tableaux(p, SkewShape(nu, ()), alpha)
    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerificationReport(
        profile=p, check="prop1", lam=lam, mu=mu, alpha=alpha,
        status="pass" if lhs == rhs else "fail",
        lhs=lhs, rhs=rhs, elapsed_ms=elapsed,
    )


def verify_pieri_report(p: CylProfile, eta: Partition, k: int) -> VerificationReport:
    from .fusion import build_degree_quotient, reduce_vector
    from .partitions import horizontal_strip_extensions
    from .schur import classical_strip_extensions

    if not is_nl_partition(p, eta):
        raise ValueError(f"partition {eta} is not ({p.rank},{p.level})-bounded")
    if not 0 <= k <= p.level:
        raise ValueError(f"k={k} outside [0, {p.level}]")
    t0 = time.perf_counter()
    product = {rho: 1 for rho in classical_strip_extensions(eta, k, p.rank)}
    lhs = reduce_vector(p, sum(eta) + k, product)
    rhs = {rho: 1 for rho in horizontal_strip_extensions(p, eta, k)}
    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerificationReport(
        profile=p, check="pieri", lam=eta, mu=(), alpha=(k,),
        status="pass" if lhs == rhs else "fail",
        lhs=lhs, rhs=rhs, elapsed_ms=elapsed,
    )


# ---------------------------------------------------------------------------
# scan

def iter_scan_instances(config: ScanConfig) -> Iterator[tuple]:
    """Instance descriptors in canonical emission order.

    Each descriptor is (check, N, L, args...); the order is profiles in
    (rank, level) lex order, then shapes graded-lex by outer and inner,
    theorem before the shape's weight instances, Pieri instances last.
    """
    for n_rank in range(1, config.n_max + 1):
        for level in range(1, config.l_max + 1):
            p = CylProfile(n_rank, level)
            for size in range(config.deg_max + 1):
                for lam in enumerate_nl_partitions(p, size):
                    for mu in sub_partitions(lam):
                        if not is_nl_partition(p, mu):
                            continue
                        yield ("theorem1", n_rank, level, lam, mu)
                        deg = size - sum(mu)
                        for alpha in sorted(partitions_of(deg), key=grlex_key):
                            yield ("prop1", n_rank, level, lam, mu, alpha)
            for size in range(config.deg_max + 1):
                for eta in enumerate_nl_partitions(p, size):
                    for k in range(0, min(level, config.deg_max - size) + 1):
                        yield ("pieri", n_rank, level, eta, k)


def run_instance(desc: tuple) -> VerificationReport:
    check, n_rank, level, *args = desc
    p = CylProfile(n_rank, level)
    if check == "theorem1":
        lam, mu = args
        return verify_theorem1(p, SkewShape(lam, mu))
    if check == "prop1":
        lam, mu, alpha = args
        return verify_proposition1(p, lam, mu, alpha)
    if check == "pieri":
        eta, k = args
        return verify_pieri_report(p, eta, k)
    raise ValueError(f"unknown check {check!r}")


def scan(config: ScanConfig) -> Iterator[VerificationReport]:
    """Run every instance in the configured grid, in canonical order."""
    instances = list(iter_scan_instances(config))
    if config.jobs == 1:
        for desc in instances:
            yield run_instance(desc)
        return
    import os

    workers = config.jobs or os.cpu_count() or 1
    if workers <= 1 or len(instances) < 2:
        for desc in instances:
            yield run_instance(desc)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(instances) // (workers * 8))
        yield from pool.map(run_instance, instances, chunksize=chunk)


def export_fusion_table(p: CylProfile, deg_max: int, path: str) -> dict:
    """Write all nonzero structure constants up to total degree deg_max.

    JSON-lines output, one record per nonzero coefficient, graded-lex
    ordered by (mu, nu, lambda).  Returns a summary with counts.
    """
    from .serialize import dumps

    pairs = 0
    records = 0
    with open(path, "w") as fh:
        for total in range(deg_max + 1):
            for a in range(total + 1):
                for mu in enumerate_nl_partitions(p, a):
                    for nu in enumerate_nl_partitions(p, total - a):
                        pairs += 1
                        prod = fusion_product(p, mu, nu)
                        for lam, d in sorted(prod.items(),
                                             key=lambda kv: grlex_key(kv[0])):
                            fh.write(dumps({"mu": list(mu), "nu": list(nu),
                                            "lambda": list(lam), "d": d}) + "\n")
                            records += 1
    return {"pairs": pairs, "records": records, "path": path}
